//! Polynomials over prime fields and the rationals, monomial orders,
//! Gröbner bases and Hilbert series.

pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod monomial;
pub mod polynomial;

pub use field::{Field, PrimeField, Rationals, DEFAULT_PRIME};
pub use groebner::{buchberger, is_groebner_basis, is_quadratic_gb, GroebnerBasis};
pub use hilbert::{hilbert_series, hilbert_series_of_monomials, DEFAULT_HILBERT_DEGREE};
pub use monomial::{parse_var, var_name, Monomial, MonomialOrder, OrderKind};
pub use polynomial::{binomial_edge_ideal, Polynomial, Ring};
