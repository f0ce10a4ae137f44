use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-contract input.
    #[error("input error: {0}")]
    Input(String),

    /// A configured search or enumeration budget was exhausted.
    #[error("resource limit reached: {what} (reached {reached})")]
    Resource { what: String, reached: u64 },

    /// Exact chromatic search ran out of budget; carries the best bracket found.
    #[error("chromatic search budget exhausted after {nodes} nodes: {lower} <= chi <= {upper}")]
    ChromaticBudget { lower: usize, upper: usize, nodes: u64 },

    /// An identification produced a loop or a multi-edge.
    #[error("generation error: {0}")]
    Generation(String),

    /// Parsing a text artifact failed.
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An internal consistency check failed.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
