use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A construction that the theory allows to fail over small fields did fail.
    #[error("construction failed: {0}")]
    Construction(String),

    /// The input module has no consistent p-permutation structure.
    #[error("structure error: {0}")]
    Structure(String),

    /// Signals an upstream bug: an invariant that must hold was violated.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("parse error in {source_name} line {line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }

    pub(crate) fn pre(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
