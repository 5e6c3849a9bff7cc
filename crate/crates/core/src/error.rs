use thiserror::Error;

use std::fmt::Display;

use crate::ExactInt;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("singular matrix: determinant is {det}")]
    Singular { det: String },

    /// `binom(i+y, 1+y)` vanished in the determinant product formula.
    #[error("vanishing divisor binom({i}+y, 1+y) at i={i} (y={y})")]
    VanishingDivisor { i: i64, y: i64 },

    #[error("kernel for k={k} is not a nonnegative integer vector: [{}]", .solution.join(", "))]
    ConjectureViolation { k: usize, solution: Vec<String> },

    /// Two counting routes disagreed.
    #[error("inconsistent {what}: {left} vs {right}")]
    Inconsistent {
        what: String,
        left: ExactInt,
        right: ExactInt,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn singular(det: &impl Display) -> Self {
        Error::Singular {
            det: det.to_string(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
