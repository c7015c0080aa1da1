use dimer_core::{format_subset, Color, Subset};
use thiserror::Error;

use crate::poly::Basis;

#[derive(Debug, Error)]
pub enum PartitionError {
    #[error("the model is not {}-standardised", .0.as_str())]
    NotStandardised(Color),
    #[error("subset {} has {got} elements, expected {expected}", format_subset(.subset))]
    WrongSize {
        subset: Subset,
        expected: usize,
        got: usize,
    },
    #[error("{} is not the boundary value of any matching", format_subset(.0))]
    NotInPositroid(Subset),
    #[error("polynomials over different bases ({0:?} and {1:?})")]
    BasisMismatch(Basis, Basis),
    #[error("no value assigned to basis element {0}")]
    MissingValue(usize),
    #[error("zero assigned to basis element {0}")]
    ZeroValue(usize),
    #[error("weight of arrow {0} is not positive")]
    NonPositiveWeight(u32),
    #[error("no weight given for arrow {0}")]
    MissingWeight(u32),
    #[error("unknown arrow id {0}")]
    UnknownArrow(u32),
    #[error("vector entries are not exactly the {k}-subsets of 1..{n}")]
    BadKeys { k: usize, n: usize },
}
