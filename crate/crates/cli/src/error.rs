use std::io;
use std::path::PathBuf;

use specbound::{GraphError, MatrixError, OracleError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: io::Error },
    #[error("invalid JSON in {path}: {source}")]
    Json {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error("{path}: {source}")]
    Graph { path: PathBuf, source: GraphError },
    #[error(transparent)]
    Family(GraphError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// `3` for a row-sum method applied to a matrix without constant row
    /// sum, `1` for everything else.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Matrix(MatrixError::NonConstantRowSum { .. }) => 3,
            _ => 1,
        }
    }
}
