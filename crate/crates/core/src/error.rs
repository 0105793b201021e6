use thiserror::Error;

/// Errors reported by the engine and its text front ends.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot specialize at s = 0")]
    ZeroSpecialization,

    #[error("invalid specialization point {0}: must be a rational other than 0, 1, -1")]
    InvalidSpecialization(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("arity mismatch: {0}")]
    Arity(String),

    #[error("unknown suite `{name}`; available suites: {available}")]
    UnknownSuite { name: String, available: String },

    #[error("{0}")]
    Invalid(String),

    #[error("cache i/o: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
