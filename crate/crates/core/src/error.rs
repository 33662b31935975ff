use thiserror::Error;

use crate::grading::RODegree;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },

    #[error("exponent overflow at column {column}")]
    ExponentOverflow { column: usize },

    #[error("generator index {index} exceeds the configured bound {bound}")]
    BoundExceeded { index: usize, bound: usize },

    #[error("zero element has no degree")]
    ZeroElement,

    #[error("inhomogeneous element: terms in degrees {}", format_degrees(.0))]
    Inhomogeneous(Vec<RODegree>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("window resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("unconfirmed inf: {0}")]
    Unconfirmed(String),

    #[error("{0}")]
    Invalid(String),
}

fn format_degrees(degrees: &[RODegree]) -> String {
    degrees
        .iter()
        .map(|d| d.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
