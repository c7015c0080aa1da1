use thiserror::Error;

use crate::validate::ModelReport;

/// A document whose id references cannot even be resolved.
///
/// These are distinct from axiom failures: a structurally broken model has no
/// meaningful [`ModelReport`].
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum StructuralError {
    #[error("duplicate {kind} id {id}")]
    DuplicateId { kind: &'static str, id: u32 },
    #[error("arrow {arrow} references unknown vertex {vertex}")]
    UnknownVertex { arrow: u32, vertex: u32 },
    #[error("face {face} references unknown arrow {arrow}")]
    UnknownArrow { face: u32, arrow: u32 },
    #[error("face {face} has an empty boundary cycle")]
    EmptyFace { face: u32 },
    #[error(
        "face {face} does not close up: head of arrow {arrow} is not the tail of arrow {next}"
    )]
    OpenCycle { face: u32, arrow: u32, next: u32 },
}

#[derive(Debug, Error)]
pub enum DimerError {
    #[error("structural error: {0}")]
    Structural(#[from] StructuralError),
    #[error("model fails the dimer axioms: {}", .0.summary())]
    Invalid(Box<ModelReport>),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("invalid argument: {0}")]
    Argument(String),
}
