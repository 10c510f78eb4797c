//! Front end for `bellsim`: figure data, parameter sweeps, threshold queries
//! and the oracle cross-check report.
//!
//! Output is deterministic. Grid points are evaluated on a worker pool but
//! rows are always written in grid order.

pub mod config;
pub mod figures;
pub mod sweep;
pub mod threshold;
pub mod validate;

use thiserror::Error;

/// Failure of a command, mapped onto the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error("numerical failure: {0}")]
    Numerical(#[from] bellsim_core::Error),

    #[error("numerical failure: {0}")]
    Invariant(String),

    #[error("{context}: {source}")]
    Io { context: String, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io { .. } => exit::CONFIG,
            CliError::Numerical(_) | CliError::Invariant(_) => exit::NUMERICAL,
        }
    }

    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }
}

pub mod exit {
    pub const OK: i32 = 0;
    pub const CONFIG: i32 = 2;
    pub const NUMERICAL: i32 = 3;
    pub const UNKNOWN_COMMAND: i32 = 4;
}
