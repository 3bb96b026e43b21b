//! Batch interface to `endocomm`: instance files, reports, the survey and
//! the verification harness.

pub mod instance;
pub mod report;
pub mod suites;
pub mod survey;
pub mod verify;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid instance: {0}")]
    Spec(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error(transparent)]
    Lib(#[from] endocomm::Error),
    #[error("{0} theorem violation(s)")]
    Violation(usize),
}

impl CliError {
    /// 1 for usage, parse and i/o errors, 2 for exceeded bounds, 3 for
    /// theorem violations.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(endocomm::Error::BoundExceeded { .. }) => 2,
            CliError::Lib(endocomm::Error::EquivalenceViolation(_)) | CliError::Violation(_) => 3,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
