use thiserror::Error;

/// Failure modes shared by every numerical routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FraxError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("unstable: {0}")]
    Unstable(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, FraxError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(FraxError::Domain(msg.into()))
}

pub(crate) fn nonconv<T>(msg: impl Into<String>) -> Result<T> {
    Err(FraxError::NonConvergence(msg.into()))
}
