use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric at ({row}, {col})")]
    NotSymmetric { row: usize, col: usize },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("non-finite value in {stage}")]
    NonFinite { stage: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown relation `{0}`")]
    UnknownRelation(String),

    #[error("unknown entity prefix in `{0}`")]
    UnknownEntityPrefix(String),

    #[error("unknown node `{0}`")]
    UnknownNode(String),

    #[error("{path}: {count} malformed line(s), first at line {first_line}: {first_error}")]
    MalformedInput {
        path: PathBuf,
        count: usize,
        first_line: usize,
        first_error: String,
    },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("corrupt file {path}: {reason}")]
    CorruptFile { path: PathBuf, reason: String },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }
}
