//! Library-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{numerator} is not divisible by {denominator}")]
    NotDivisible {
        numerator: String,
        denominator: String,
    },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("invalid pair: {0}")]
    InvalidPair(String),
    #[error("charge flavor mismatch: {0}")]
    FlavorMismatch(String),
    #[error("truncation too small: {0}")]
    TruncationTooSmall(String),
    #[error("infeasible family key: {0}")]
    InfeasibleKey(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("symbol is not simple: {0}")]
    NotSimple(String),
    #[error("multipartition is not cylindrical: {0}")]
    NotCylindrical(String),
    #[error("schedule failure: {0}")]
    ScheduleFailure(String),
    #[error("triangularity failure: {0}")]
    TriangularityFailure(String),
    #[error("negative multiplicity: {0}")]
    NegativeMultiplicity(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Failures that indicate a broken computation rather than bad input.
    pub fn is_computational(&self) -> bool {
        matches!(
            self,
            Error::NotDivisible { .. }
                | Error::ScheduleFailure(_)
                | Error::TriangularityFailure(_)
                | Error::DivisionByZero
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
