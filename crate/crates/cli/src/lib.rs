//! Command-line front end for `genlaguerre`.
//!
//! Exit codes are shared by every subcommand: 0 success, 1 verification
//! failure, 2 usage or parameter error.

pub mod args;
pub mod bench;
pub mod commands;
pub mod verify;

use std::io;

use thiserror::Error;

pub use args::{Cli, Command, Format};
pub use commands::{run, CoeffRecord};
pub use verify::{run_verify, FaultInjection, VerifyConfig, VerifyReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Library(#[from] genlaguerre::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Library(_) => EXIT_USAGE,
            // Broken pipes and the like; still not a verification verdict.
            CliError::Io(_) | CliError::Json(_) => EXIT_USAGE,
        }
    }
}
