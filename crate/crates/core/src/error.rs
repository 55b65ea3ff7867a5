use thiserror::Error;

use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("k must be a positive integer")]
    ZeroK,

    #[error("division by zero")]
    DivisionByZero,

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("recurrence coefficient c_{n} is not available (table has {len} entries)")]
    OutOfRange { n: usize, len: usize },

    #[error("recurrence coefficient c_{n} = {value} is outside (0,1)")]
    InvalidCoefficient { n: usize, value: Rational },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("horizon {horizon} is too small: {needed}")]
    HorizonTooSmall { horizon: usize, needed: String },

    #[error("internal consistency violated: {first} and {second} disagree at horizon {horizon}")]
    InternalConsistency {
        first: String,
        second: String,
        horizon: usize,
    },

    #[error("{0}")]
    Internal(String),

    #[error("config error at {path}: {message}")]
    Config { path: String, message: String },

    #[error("parse error: {0}")]
    Parse(String),
}
