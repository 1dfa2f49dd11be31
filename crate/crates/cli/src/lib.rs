//! Batch front-end: structured JSON configs in, deterministic CSV or
//! human-readable tables out, covering every bound, the witness scan, the
//! GKP budget planner and the GKP fidelity curves.

pub mod commands;
pub mod config;
pub mod output;

use thiserror::Error;

/// Process exit codes: 0 success, 2 validation error, 3 invariant violation
/// (witness domination failure), 4 numeric failure.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("validation error: {0}")]
    Validation(String),

    #[error("invariant violation: {0}")]
    Invariant(String),

    #[error("numeric failure: {0}")]
    Numeric(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Invariant(_) => 3,
            CliError::Numeric(_) => 4,
        }
    }
}

pub fn validation<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Validation(e.to_string())
}

pub fn numeric<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Numeric(e.to_string())
}
