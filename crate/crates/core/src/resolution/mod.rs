//! Truncated minimal graded free resolutions over polynomial rings and
//! their quotients by binomial edge ideals.

pub mod algebra;
pub mod linalg;
pub mod resolve;
pub mod syzygy;
pub mod tables;

pub use algebra::{GradedAlgebra, MultiDegree};
pub use resolve::{Resolution, DEFAULT_GUARD};
pub use syzygy::{cycle_syzygy, CycleSyzygy, SyzygyReport};
pub use tables::{
    betti_table_over_s, euler_check_over_s, euler_check_tor, lemma12_test,
    module_resolution_over_a, tensor_convolution_check, tor_table, Convolution, GradedTable,
    Lemma12, ResolutionOptions, TableKind,
};
