use thiserror::Error;

/// Anything that stops a subcommand before it can produce a report.
#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Dimer(#[from] dimer_core::DimerError),
    #[error(transparent)]
    Strands(#[from] strands::StrandError),
    #[error(transparent)]
    Matching(#[from] matchings::MatchingError),
    #[error(transparent)]
    Lattice(#[from] lattice_maps::LatticeError),
    #[error(transparent)]
    KClass(#[from] kclass_weights::KClassError),
    #[error(transparent)]
    Partition(#[from] partition_functions::PartitionError),
    #[error(transparent)]
    Resolution(#[from] resolution::ResolutionError),
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("i/o error on {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    /// A short machine-readable category for JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Dimer(dimer_core::DimerError::Structural(_)) => "structural",
            CliError::Dimer(dimer_core::DimerError::Invalid(_)) => "invalid_model",
            CliError::Dimer(dimer_core::DimerError::Parse { .. }) => "parse",
            CliError::Dimer(dimer_core::DimerError::Io { .. }) | CliError::Io { .. } => "io",
            CliError::Dimer(dimer_core::DimerError::Argument(_)) | CliError::Argument(_) => {
                "argument"
            }
            CliError::Strands(_) => "strands",
            CliError::Matching(_) => "matching",
            CliError::Lattice(_) => "lattice",
            CliError::KClass(_) => "kclass",
            CliError::Partition(_) => "partition",
            CliError::Resolution(_) => "resolution",
        }
    }
}
