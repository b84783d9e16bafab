use std::path::PathBuf;

use hyperlap::ErrorKind;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("{path}: line {line}: {message}")]
    Data { path: PathBuf, line: usize, message: String },

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("stratification: {0}")]
    Stratification(String),

    #[error(transparent)]
    Core(#[from] hyperlap::Error),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: path.into(), source }
    }

    /// 1 configuration, 2 data, 3 numerical failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Stratification(_) => 1,
            CliError::Data { .. } | CliError::Io { .. } => 2,
            CliError::Core(e) => match e.kind() {
                ErrorKind::Config => 1,
                ErrorKind::Data => 2,
                ErrorKind::Numerical => 3,
            },
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        let line = e.position().map_or(0, |p| p.line() as usize);
        CliError::Data {
            path: PathBuf::new(),
            line,
            message: e.to_string(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_follow_error_kind() {
        assert_eq!(CliError::Config("x".into()).exit_code(), 1);
        assert_eq!(CliError::Stratification("x".into()).exit_code(), 1);
        assert_eq!(CliError::from(hyperlap::Error::InvalidParameter("mu".into())).exit_code(), 1);
        assert_eq!(CliError::from(hyperlap::Error::InvalidData("nan".into())).exit_code(), 2);
        assert_eq!(CliError::from(hyperlap::Error::NotPositiveDefinite).exit_code(), 3);
        let rank = hyperlap::Error::Rank { requested: 3, available: 1, null_dim: 2 };
        assert_eq!(CliError::from(rank).exit_code(), 3);
    }
}
