//! Binomial edge ideals of finite simple graphs.
//!
//! For a graph `G` on `1..=n` the binomial edge ideal `J_G` is generated by
//! the quadrics `x_i y_j - x_j y_i`, one per edge, in the polynomial ring
//! `K[x_1..x_n, y_1..y_n]`. This crate decides when `S/J_G` is a Koszul
//! algebra for the graph classes where that is known, and backs those
//! decisions with an exact computer-algebra engine:
//!
//! * [`graph`]: graphs, chordality, claws, closed labelings, gluing.
//! * [`complex`]: clique complexes, free vertices, leaf orders and the
//!   block decomposition of a complex of dimension at most two.
//! * [`classify`]: necessary conditions, the leaf-order sufficient
//!   condition and the full classification when cliques have at most
//!   three vertices.
//! * [`poly`]: polynomials over prime fields or the rationals, monomial
//!   orders, Buchberger's algorithm, Hilbert series.
//! * [`resolution`]: truncated minimal graded free resolutions, Betti and
//!   Tor tables, cycle syzygies.
//! * [`corpus`] and [`report`]: the built-in graph corpus and JSON reports
//!   used by the `bei` command line tool.

pub mod classify;
pub mod cli;
pub mod complex;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod poly;
pub mod report;
pub mod resolution;

pub use error::{Error, Result};
pub use graph::{Graph, Labeling};
