use dimer_core::Color;
use matchings::MatchingError;
use strands::StrandError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum KClassError {
    #[error(transparent)]
    Strands(#[from] StrandError),
    #[error("the arrows selected for vertex {vertex} do not form a perfect matching: {source}")]
    NotAMatching {
        vertex: String,
        source: MatchingError,
    },
    #[error("vertex {0} cannot reach every vertex by directed paths")]
    Unreachable(String),
    #[error("the model is not {}-standardised", .0.as_str())]
    NotStandardised(Color),
    #[error("the model is neither white- nor black-standardised")]
    Unstandardised,
}
