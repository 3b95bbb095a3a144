use thiserror::Error;

/// Errors produced by the structural analysis library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// An operation was requested outside its domain of validity, e.g. a
    /// one-dimensional decomposition of a jump set spanning two dimensions.
    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// An exploration window was larger than the configured state budget.
    #[error("exploration budget exceeded: window holds {volume} states, budget is {budget}")]
    BudgetExceeded { volume: u128, budget: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub fn not_applicable(msg: impl Into<String>) -> Self {
        Error::NotApplicable(msg.into())
    }
}
