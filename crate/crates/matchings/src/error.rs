use dimer_core::{format_subset, Subset};
use strands::StrandError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatchingError {
    #[error("{} is not the boundary value of any matching", format_subset(.0))]
    NotInPositroid(Subset),
    #[error("boundary values differ: {} versus {}", format_subset(.0), format_subset(.1))]
    BoundaryMismatch(Subset, Subset),
    #[error("subset {} has {got} elements, expected {expected}", format_subset(.subset))]
    WrongSize {
        subset: Subset,
        expected: usize,
        got: usize,
    },
    #[error("vertex {0} is a boundary vertex")]
    NotInternal(u32),
    #[error("arrow set is not a perfect matching: face {0} contains {1} of its arrows")]
    NotAMatching(u32, usize),
    #[error("unknown arrow id {0}")]
    UnknownArrow(u32),
    #[error("height integration does not close on arrow {0}")]
    HeightInconsistent(u32),
    #[error(transparent)]
    Strands(#[from] StrandError),
}
