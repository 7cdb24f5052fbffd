use thiserror::Error;

/// Library-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes do not line up (non-square determinant input, mismatched
    /// matrix sums, and so on).
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A 1-based row or column index set points outside the matrix.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A Hankel spec needs `2n - 1` terms to fill an `n`-square matrix.
    #[error("sequence too short: need {need} terms, got {got}")]
    SequenceTooShort { need: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),

    /// Determinant of a large matrix whose pivot structure forces cofactor
    /// expansion; refused instead of silently going exponential.
    #[error("unsupported structure: {0}")]
    UnsupportedStructure(String),

    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The interval-arithmetic precision ladder was exhausted without
    /// resolving a sign.
    #[error("precision exhausted: {0}")]
    Precision(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
