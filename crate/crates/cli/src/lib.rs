//! The `discdeg` commands as library functions returning their output.
//!
//! The binary only parses arguments, prints, and maps [`Failure`] to an exit
//! code.

pub mod compute;
pub mod symbolic;
pub mod verify;

use std::fmt;

use discdeg_core::Error;

/// Why a command did not succeed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Malformed request or invalid profile. Exit code 2.
    Usage(String),
    /// A check disagreed or an exact identity broke. Exit code 1.
    Verification(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) | Failure::Verification(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidProfile(_) | Error::Domain(_) => Failure::Usage(e.to_string()),
            Error::InvariantViolation(_) | Error::Capacity(_) => {
                Failure::Verification(e.to_string())
            }
        }
    }
}
