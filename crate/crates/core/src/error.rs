use thiserror::Error;

/// Errors raised by constructors, transforms and file handling.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid modulus {modulus:#x} for degree {m}: {reason}")]
    InvalidModulus {
        m: u32,
        modulus: u64,
        reason: &'static str,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("group of order 2^{k} exceeds the bound 2^{max} for n = {n}")]
    BoundViolation { k: u32, max: u32, n: u32 },

    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),

    #[error("input {index} is not bent")]
    NotBent { index: usize },

    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::PreconditionViolation(msg.into())
}
