use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not invertible modulo {0}")]
    NotInvertible(String),
    #[error("order of the zero function is +infinity")]
    OrderOfZero,
    #[error("degenerate curve: 27*g3^2 - g2^3 = 0")]
    DegenerateCurve,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("q has non-constant coefficients; pass --assume-hypothesis to proceed conditionally")]
    HypothesisNotAssured,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
