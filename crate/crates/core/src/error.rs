use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// A certificate document could not be parsed.
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    /// A certificate parsed but violates an invariant.
    #[error("validation error{}: {message}", index.map(|i| format!(" in signature {i}")).unwrap_or_default())]
    Validation {
        index: Option<usize>,
        message: String,
    },

    /// A search ran out of node budget before it could decide.
    #[error("search budget of {0} nodes exhausted")]
    BudgetExhausted(u64),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
