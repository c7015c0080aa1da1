use thiserror::Error;

#[derive(Debug, Error)]
pub enum ResolutionError {
    #[error("rotation needs degree at least 1")]
    DegreeZero,
    #[error("rotation at vertex {vertex}, degree {degree} does not give a perfect matching")]
    NotAMatching { vertex: String, degree: u32 },
}
