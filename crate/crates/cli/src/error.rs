//! CLI failures and their process exit codes.

use std::fmt;

/// Exit status for a successful run.
pub const EXIT_OK: u8 = 0;
/// Exit status when a verified property fails.
pub const EXIT_VIOLATION: u8 = 1;
/// Exit status for unusable input (bad flags, literals, descriptors, paths).
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug)]
pub enum CliError {
    /// Invalid input; exit status 2.
    Input(String),
    /// The engine detected an internal disagreement; exit status 1.
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Inconsistent(_) => EXIT_VIOLATION,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "invalid input: {msg}"),
            CliError::Inconsistent(msg) => write!(f, "property violation: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<bruhat_core::Error> for CliError {
    fn from(e: bruhat_core::Error) -> Self {
        match e {
            bruhat_core::Error::Inconsistent(msg) => CliError::Inconsistent(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}
