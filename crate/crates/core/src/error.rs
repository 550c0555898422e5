use thiserror::Error;

/// Errors raised by constructors and exact computations.
///
/// Verification failures are never errors; they are recorded in a
/// [`VerificationReport`](crate::report::VerificationReport).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("N must be odd and > 1 (got {0})")]
    InvalidOrder(i64),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is not convolution-nilpotent: {0}")]
    NotNilpotent(String),
    #[error("basis element {0} is not grouplike")]
    NotGrouplike(usize),
    #[error("antipode equations have no solution: {0}")]
    AntipodeUnsolvable(String),
    #[error("defining relation failed: {0}")]
    RelationFailed(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
