use thiserror::Error;

/// Errors produced while building, parsing or loading algebraic objects.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("arity mismatch: expected {expected} exponent(s), found {found}")]
    Arity { expected: usize, found: usize },

    #[error("zero denominator in rational literal")]
    ZeroDenominator,

    #[error("configuration error: {0}")]
    Config(String),

    #[error("malformed JSON: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
