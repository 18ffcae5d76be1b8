//! Error type shared across the crate.

use std::fmt;

/// Errors reported by the exact solvers and constructors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Matrix or vector dimensions do not match the operation.
    DimensionMismatch(String),
    /// A matrix expected to be Hermitian is not.
    NotHermitian(String),
    /// A quantity expected to be real has a nonzero imaginary part.
    NotReal(String),
    /// A generalized eigenvalue is not rational, so the normal form does not
    /// exist over `ℚ`.
    NotRepresentableOverQ(String),
    /// A supplied point violates a precondition (e.g. not interior to the cone).
    InvalidPoint(String),
    /// Constructor parameters violate a stated constraint.
    InvalidParameter(String),
    /// No positive-definite combination was found within the search budget.
    SearchBudgetExhausted { budget: usize },
    /// A symbolic operation produced a polynomial of unexpected degree.
    DegreeOverflow(String),
    /// An internal consistency check failed.
    Internal(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::NotHermitian(msg) => write!(f, "matrix is not Hermitian: {msg}"),
            Error::NotReal(msg) => write!(f, "value is not real: {msg}"),
            Error::NotRepresentableOverQ(msg) => {
                write!(f, "not representable over the rationals: {msg}")
            }
            Error::InvalidPoint(msg) => write!(f, "invalid point: {msg}"),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::SearchBudgetExhausted { budget } => {
                write!(f, "no positive-definite combination within budget {budget}")
            }
            Error::DegreeOverflow(msg) => write!(f, "polynomial degree overflow: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
