//! Crate-wide error type.

use std::path::PathBuf;

/// Errors produced by any stage of the feature-selection pipeline.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("pgm format error: {0}")]
    PgmFormat(String),

    #[error("dimension mismatch: {left_width}x{left_height} vs {right_width}x{right_height}")]
    DimensionMismatch {
        left_width: usize,
        left_height: usize,
        right_width: usize,
        right_height: usize,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("no valid pixel pairs: the mask selects too few pixels to form a matrix")]
    EmptyMatrix,

    #[error("csv error in {path}{}: {msg}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Csv {
        path: PathBuf,
        line: Option<u64>,
        msg: String,
    },

    #[error("unknown attribute '{0}'")]
    UnknownAttribute(String),

    #[error("unknown column '{0}'")]
    UnknownColumn(String),

    #[error("empty table")]
    EmptyTable,

    #[error("dunn index undefined: every cluster is a singleton")]
    UndefinedIndex,

    #[error("object '{id}': {source}")]
    Object {
        id: String,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
