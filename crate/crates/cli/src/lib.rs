//! Command-line front end: parses systems and element literals, runs the
//! engine and renders JSON, DOT and plain-text tables.

pub mod args;
pub mod commands;
pub mod descriptor;
pub mod dto;
pub mod error;
pub mod render;
pub mod scope;

pub use commands::{execute, run, Output};
pub use error::{CliError, EXIT_INPUT, EXIT_OK, EXIT_VIOLATION};
