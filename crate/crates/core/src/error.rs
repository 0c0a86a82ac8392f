use thiserror::Error;

/// Errors raised across the crate.
///
/// The variants follow the failure classes the command line maps onto exit
/// codes: bad input is a usage problem, capacity errors mean a guard refused
/// an expensive computation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("checkpoint error: {0}")]
    Checkpoint(String),

    #[error("fixture inconsistency: {0}")]
    Fixture(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
