use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The input exceeds a documented size limit of the called routine.
    #[error("capability exceeded: {what} (limit {limit}, got {got})")]
    Capability {
        what: &'static str,
        limit: usize,
        got: usize,
    },

    #[error("time budget of {0} s exceeded")]
    BudgetExceeded(u64),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// An internal invariant failed. Always a bug, never a valid outcome.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
