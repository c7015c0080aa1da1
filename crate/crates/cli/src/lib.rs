//! Library side of the `dimer` tool: input resolution, the command
//! implementations, and the verification suite.

pub mod checks;
pub mod commands;
pub mod error;
pub mod input;
pub mod verify;

pub use error::CliError;
pub use verify::{verify, VerificationReport};

/// Version of the JSON report layout printed by every subcommand.
pub const SCHEMA_VERSION: u32 = 1;
