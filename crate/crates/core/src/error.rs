use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    /// Matrix shapes do not fit the requested operation.
    #[error("dimension error: {0}")]
    Dimension(String),
    /// An argument is outside the documented range or refers to something unknown.
    #[error("argument error: {0}")]
    Argument(String),
    /// A weight variable is missing or a value is not strictly positive.
    #[error("specialization error: {0}")]
    Specialization(String),
    /// The input is well formed but outside what the algorithms support (non-APC, infinite homology).
    #[error("unsupported input: {0}")]
    Unsupported(String),
    /// An identity that must hold for valid input did not.
    #[error("invariant violation: {0}")]
    InvariantViolation(String),
    /// Malformed JSON document.
    #[error("format error: {0}")]
    Format(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
