//! Command-line front end: instance files, subcommands and JSON output.

pub mod commands;
pub mod instance;
