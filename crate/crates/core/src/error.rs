use thiserror::Error;

use crate::pcmatrix::ValidationReport;

/// Errors produced by parsing, validation and the ranking solvers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A field could not be tokenized. Positions are 1-based.
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    /// The matrix is not square, has fewer than two alternatives, or the
    /// label list does not match the row count.
    #[error("shape error: {0}")]
    Shape(String),

    /// A numeral was syntactically fine but zero, negative or non-finite.
    #[error("value error at line {line}, column {column}: {message}")]
    Value {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("index {index} out of range for {len} alternatives")]
    Index { index: usize, len: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is numerically singular (pivot column {pivot_col})")]
    SingularMatrix { pivot_col: usize },

    #[error("matrix is not positive definite (pivot column {pivot_col})")]
    NotPositiveDefinite { pivot_col: usize },

    #[error("matrix has a negative entry at ({row}, {col})")]
    NegativeEntry { row: usize, col: usize },

    #[error("power iteration did not converge after {iterations} iterations (residual {residual:e})")]
    NoConvergence { iterations: usize, residual: f64 },

    /// Vertex index sets (0-based) of every connected component.
    #[error("disconnected comparison graph: {} components", components.len())]
    DisconnectedGraph { components: Vec<Vec<usize>> },

    #[error("invalid comparison matrix:\n{0}")]
    InvalidMatrix(ValidationReport),

    #[error("operation requires a complete matrix")]
    IncompleteInput,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
