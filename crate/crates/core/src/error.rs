use thiserror::Error;

use crate::compactum::Violation;

/// Syntax error in ordinal notation; `position` is a byte offset into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("NotALimit: {0} is not a limit ordinal")]
    NotALimit(String),

    #[error("UnsupportedSchematic: derivative of a fundamental-sequence tail is not representable")]
    UnsupportedSchematic,

    #[error("NotFinite: tree has an infinite tail; truncate it first")]
    NotFinite,

    #[error("DegenerateInterval: need a < b, got ({a}, {b}]")]
    DegenerateInterval { a: String, b: String },

    #[error("NotDyadic: {0} is not a dyadic rational")]
    NotDyadic(String),

    #[error("InvalidTree: {}", format_violations(.0))]
    InvalidTree(Vec<Violation>),

    #[error("invalid JSON: {0}")]
    Json(String),

    #[error("NotRealizable: {0}")]
    NotRealizable(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
