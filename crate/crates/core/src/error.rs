use thiserror::Error;

/// Errors raised while loading documents or preparing a run.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unresolved reference(s): {}", .0.join("; "))]
    Reference(Vec<String>),

    #[error("invalid document: {}", .0.join("; "))]
    Validation(Vec<String>),

    #[error("inconsistent clause annotation: {0}")]
    ClauseAnnotation(String),

    #[error("record refers to unknown markable `{0}`")]
    UnknownMarkable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse {
            line: err.line(),
            column: err.column(),
            message: err.to_string(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
