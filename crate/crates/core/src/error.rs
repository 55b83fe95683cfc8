//! Error types shared across the engine.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BbeError {
    /// A scalar strategy fell outside its interval, or a simplex weight
    /// vector failed validation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Structural validation of a game, belief, or configuration failed.
    #[error("validation error: {0}")]
    Validation(String),

    /// Expression source could not be parsed.
    #[error("syntax error at line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },

    /// Expression evaluation hit an undefined operation.
    #[error("evaluation error: {0}")]
    Eval(String),

    /// An operation requires a game class the classifier did not produce.
    #[error("unsupported game class: {0}")]
    UnsupportedClass(String),

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A construction refused its target, with the failing margin.
    #[error("construction refused: {reason} (margin {margin})")]
    Refusal { reason: String, margin: f64 },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, BbeError>;
