use std::process::ExitCode;

use surgeon_core::Error;

/// Failure classes, each with its own exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("no monic span")]
    NoSpan,
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::NoSpan => 4,
            CliError::Budget(_) => 5,
        })
    }

    /// Prefixes the message with where the failure happened.
    pub fn context(self, at: &str) -> Self {
        match self {
            CliError::Io(m) => CliError::Io(format!("{at}: {m}")),
            CliError::Parse(m) => CliError::Parse(format!("{at}: {m}")),
            CliError::Precondition(m) => CliError::Precondition(format!("{at}: {m}")),
            other => other,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            Error::NoLogicals => CliError::Precondition("no logicals".into()),
            other => CliError::Precondition(other.to_string()),
        }
    }
}
