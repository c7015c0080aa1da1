//! The projective resolution of a perfect matching module, one graded piece at a time.
//!
//! The degree-`d` part of the resolution at vertex `i` is the reduced cochain
//! complex of the cells of the merged complex whose heads lie in the reachable
//! set `S(μ, i, d)`: the vertices with a path to `i` of matching-degree `d`.
//! This crate builds those finite complexes, checks them for exactness with
//! exact rational ranks, and implements the rotation that lowers `d` by one.

pub mod complex;
pub mod error;
pub mod reach;
pub mod rotate;

pub use complex::{
    check_resolution, graded_piece, merged_complex_data, GradedComplexPiece, MergedComplex,
    MergedFace, PieceFailure, ResolutionReport,
};
pub use error::ResolutionError;
pub use reach::{reachable_set, saturation, ReachableSet};
pub use rotate::rotate_matching;
