use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("oracle mismatch: {0}")]
    OracleMismatch(String),
    #[error("oracle refused: {0}")]
    GuardRail(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::OracleMismatch(_) => 3,
            CliError::GuardRail(_) => 4,
        }
    }
}

impl From<polya::Error> for CliError {
    fn from(e: polya::Error) -> Self {
        match e {
            polya::Error::GuardRail(msg) => CliError::GuardRail(msg),
            other => CliError::Input(other.to_string()),
        }
    }
}
