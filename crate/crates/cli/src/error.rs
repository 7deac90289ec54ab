use std::path::PathBuf;

use frax_core::FraxError;

/// Everything that ends a run, mapped onto the exit-code contract.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Numeric(String),
    Statistical(String),
    VerifyFailed(String),
    Io { path: Option<PathBuf>, source: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Numeric(_) | CliError::Io { .. } => 3,
            CliError::Statistical(_) => 4,
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io { path: Some(path.into()), source }
    }

    /// Domain errors are parameter mistakes; the rest are numerical.
    pub fn at(t: f64, e: FraxError) -> Self {
        match e {
            FraxError::Domain(m) => CliError::Usage(format!("t={t}: {m}")),
            e => CliError::Numeric(format!("t={t}: {e}")),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Numeric(m) => write!(f, "numerical failure: {m}"),
            CliError::Statistical(m) => write!(f, "statistical check failed: {m}"),
            CliError::VerifyFailed(m) => write!(f, "verification failed: {m}"),
            CliError::Io { path: Some(p), source } => write!(f, "{}: {source}", p.display()),
            CliError::Io { path: None, source } => write!(f, "{source}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<FraxError> for CliError {
    fn from(e: FraxError) -> Self {
        match e {
            FraxError::Domain(m) => CliError::Usage(m),
            e => CliError::Numeric(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
