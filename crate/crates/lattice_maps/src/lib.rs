//! The matching lattice of a dimer model and its map to K-theory.
//!
//! The matching lattice consists of integer functions on arrows with the same
//! sum around every face. It contains the indicators of perfect matchings, and
//! the map `η` sends it to the lattice spanned by the classes of the
//! indecomposable projectives. This crate computes a basis of the lattice, the
//! matrix of `η`, the exchange-type matrix `β`, and checks unimodularity and
//! exactness of the cluster ensemble sequence with exact integer arithmetic.

pub mod error;
pub mod lattice;
pub mod linalg;
pub mod maps;

pub use error::LatticeError;
pub use lattice::{lattice_basis, lattice_point_of_matching, IntegerMatrix, KClass, LatticePoint};
pub use maps::{
    beta_column, beta_matrix, check_cluster_ensemble, eta, eta_inverse_basis, eta_matrix,
    eta_unchecked, is_eta_unimodular, EnsembleReport, EtaMatrix,
};
