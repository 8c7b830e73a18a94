use std::io;
use std::path::PathBuf;

use djc::{StateError, SweepError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}:{line}:{column}: {message}")]
    Parse {
        path: String,
        line: usize,
        column: usize,
        message: String,
    },
    #[error("config {path}: {message}")]
    Config { path: String, message: String },
    #[error("invalid state: {0}")]
    State(#[from] StateError),
    #[error(transparent)]
    Sweep(#[from] SweepError),
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(io::Error) -> Self {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }
}
