//! Command-line front end for `gorpoints`: reads points files, runs one
//! subcommand and writes a single JSON document to standard output.

pub mod commands;
pub mod error;
pub mod input;
pub mod report;

pub use commands::{execute, run, Cli, Command};
pub use error::CliError;
