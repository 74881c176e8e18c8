use thiserror::Error;

/// Errors surfaced by every layer of the crate.
#[derive(Debug, Error)]
pub enum Error {
    /// The input violates a precondition (bad partition, parity, shape...).
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A configured enumeration or solver budget was exceeded.
    #[error("budget exceeded: {0}")]
    Resource(String),
    /// The polynomial system is degenerate (positive dimensional, no eliminant,
    /// non-squarefree where squarefree is required).
    #[error("degenerate system: {0}")]
    Degenerate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
