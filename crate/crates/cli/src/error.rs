use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {message}", path.display())]
    Input { path: PathBuf, message: String },

    #[error(transparent)]
    Lab(#[from] entropy_lab::Error),

    #[error("{0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            _ => 2,
        }
    }

    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
        let path = path.into();
        move |source| CliError::Io { path, source }
    }

    pub fn input(path: impl Into<PathBuf>, err: impl std::fmt::Display) -> CliError {
        CliError::Input {
            path: path.into(),
            message: err.to_string(),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
