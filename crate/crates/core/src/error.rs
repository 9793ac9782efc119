use std::fmt;

use thiserror::Error;

/// Position-tagged failure from one of the line-oriented text formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    /// Shifts a single-line error so it points into a multi-line document.
    pub(crate) fn at_line(mut self, line: usize, column_offset: usize) -> Self {
        self.line = line;
        self.column += column_offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at {0}")]
    Parse(#[from] ParseError),

    #[error("invalid range set: {0}")]
    InvalidRangeSet(String),

    #[error("value {value} is not in the range set {range}")]
    ValueOutsideRange { value: String, range: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("range sets differ: {0} vs {1}")]
    RangeMismatch(String, String),

    #[error("carriers differ: {0}")]
    CarrierMismatch(String),

    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration budget exceeded: {needed} candidates requested, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
