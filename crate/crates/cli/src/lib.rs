pub mod amplitudes;
pub mod cli;
pub mod commands;
pub mod config;
pub mod csv;
pub mod error;
pub mod svg;

pub use cli::Cli;
pub use commands::{run, Outcome};
pub use error::CliError;
