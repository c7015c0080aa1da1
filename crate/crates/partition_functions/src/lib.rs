//! Dimer partition functions as exact Laurent polynomials.
//!
//! Sums over the perfect matchings with a fixed boundary value are assembled
//! as Laurent polynomials whose exponents are K-theory classes. Weighted
//! matching counts give a boundary-measurement vector, checked against the
//! three-term Plücker relations with exact rational arithmetic.

pub mod error;
pub mod formulas;
pub mod measurement;
pub mod poly;

pub use error::PartitionError;
pub use formulas::{
    ms_formula_black, ms_formula_white, ms_formula_white_v2, musp_twist_expression,
};
pub use measurement::{
    boundary_measurement, check_plucker_relations, random_weights, unit_weights, weights_from_map,
    PluckerReport, PluckerVector,
};
pub use poly::{specialize, Basis, Exponent, LaurentPoly};
