use lrm_core::scheme13::IllegalCodeword;
use lrm_core::Error;

/// An error tagged with the documented exit code of its failure class:
/// 1 parse or shape, 2 tied window, 3 not realizable / illegal codeword,
/// 4 budget exhaustion, 5 validation failure.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }

    pub fn validation(message: impl Into<String>) -> Self {
        Self {
            code: 5,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::TiedWindow { .. } => 2,
            Error::NotRealizable
            | Error::InconsistentOverlap { .. }
            | Error::SuccessionViolation { .. } => 3,
            Error::Budget(_) => 4,
            Error::CountMismatch { .. } => 5,
            _ => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<IllegalCodeword> for CliError {
    fn from(e: IllegalCodeword) -> Self {
        Self {
            code: 3,
            message: e.to_string(),
        }
    }
}
