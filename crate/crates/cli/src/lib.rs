//! Command-line front end: workspace files, commands and reports.

pub mod commands;
pub mod table;
pub mod workspace;

pub use commands::{run, Cli, CliError, Command, Report};
pub use workspace::{InputError, Workspace};
