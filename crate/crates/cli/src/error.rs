use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },

    #[error("{0}")]
    Core(#[from] evifuse::Error),

    #[error("{0}")]
    Invalid(String),
}

impl CliError {
    /// 3 for total contradiction, 2 for everything else.
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Core(evifuse::Error::TotalContradiction { .. })
            | Self::Core(evifuse::Error::FullConflict) => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
