use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    /// A rational function was evaluated where its denominator vanishes.
    #[error("pole: {0}")]
    Pole(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
    #[error("truncation error: degree {degree} exceeds bound {bound}")]
    Truncation { degree: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
