use std::io;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed invocation; exit code 2.
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Domain(#[from] weylorb::Error),

    #[error("i/o: {0}")]
    Io(#[from] io::Error),

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}
