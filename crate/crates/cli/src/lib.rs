//! Front end for `uqf`: the subcommands and the survey driver.

pub mod commands;
pub mod survey;

use uqf::Error;

/// Failure with the process exit code it maps to.
#[derive(Debug)]
pub enum CliError {
    Core(Error),
    BadInput(String),
    Theorem(String),
    Partial(usize),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_verification_failure() => 1,
            CliError::Core(Error::CutoffTooSmall { .. }) => 4,
            CliError::Core(_) => 2,
            CliError::BadInput(_) => 2,
            CliError::Theorem(_) => 1,
            CliError::Partial(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::BadInput(e) => write!(f, "{e}"),
            CliError::Theorem(e) => write!(f, "verification failed: {e}"),
            CliError::Partial(n) => write!(f, "{n} survey rows failed"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

