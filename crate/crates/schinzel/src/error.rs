use thiserror::Error;

pub type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("bound exceeded: {0}")]
    Bound(String),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 usage, 2 bound exceeded, 3 invariant violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) | CliError::Json(_) => 1,
            CliError::Bound(_) => 2,
            CliError::Invariant(_) => 3,
        }
    }
}

impl From<schinzel_core::Error> for CliError {
    fn from(e: schinzel_core::Error) -> Self {
        use schinzel_core::Error as E;
        let msg = e.to_string();
        match e {
            E::OrderBoundExceeded { .. } | E::BruteForceBound { .. } => CliError::Bound(msg),
            E::NoSolution(_) => CliError::Invariant(msg),
            _ => CliError::Usage(msg),
        }
    }
}
