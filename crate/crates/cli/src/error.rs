use std::path::PathBuf;

use thiserror::Error;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const USAGE: i32 = 1;
    pub const RESOURCE: i32 = 2;
    pub const INVALID_INPUT: i32 = 3;
    pub const VERIFY_FAILED: i32 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}: malformed JSON: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{path}: {message}")]
    Format { path: PathBuf, message: String },
    #[error(transparent)]
    Core(#[from] bargmann_core::Error),
    #[error("{0} claim(s) failed")]
    VerifyFailed(usize),
}

impl CliError {
    pub fn format(path: impl Into<PathBuf>, message: impl Into<String>) -> Self {
        CliError::Format {
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Core(e) if e.is_resource_limit() => exit::RESOURCE,
            CliError::VerifyFailed(_) => exit::VERIFY_FAILED,
            _ => exit::INVALID_INPUT,
        }
    }

    /// Extra guidance printed after the message.
    pub fn hint(&self) -> Option<&'static str> {
        match self {
            CliError::Core(bargmann_core::Error::ResourceLimit { what, .. }) if what.starts_with("facet") => {
                Some("full facet enumeration is gated for this size; check individual inequalities with `bargmann witness --ineq`")
            }
            CliError::Core(e) if e.is_resource_limit() => {
                Some("restrict the scenario to fewer letters or raise --cap")
            }
            _ => None,
        }
    }
}

pub type Result<T, E = CliError> = std::result::Result<T, E>;
