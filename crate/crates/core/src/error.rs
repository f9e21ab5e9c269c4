//! Error type shared across the toolkit.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("{name} must be positive (got {value})")]
    NonPositive { name: &'static str, value: f64 },

    #[error("singular system in {context}: no usable pivot for column {index}")]
    Singular {
        context: &'static str,
        index: usize,
    },

    #[error("degenerate channel: {0}")]
    DegenerateChannel(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("table format: {0}")]
    TableFormat(String),

    #[error("no finite perfect matching; unmatchable users: {0:?}")]
    InfeasibleMatching(Vec<usize>),

    #[error("missing table: {0}")]
    MissingTable(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
