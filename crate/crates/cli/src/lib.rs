//! Verification suites behind the `sklyanin` binary.
//!
//! Each suite runs a group of exact checks and returns one [`CheckReport`]
//! per check. Suites run on scoped threads; the combined report is sorted
//! by suite name, so output is identical from run to run apart from timings.

pub mod config;
pub mod report;
pub mod suites;

use std::thread;

use thiserror::Error;

pub use config::{AlgebraChoice, RunConfig, Suite};
pub use report::{CheckReport, Status};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("arithmetic error: {0}")]
    Arithmetic(String),
    #[error("cannot write report: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Exit status for the error: 2 for bad input, 3 for internal failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Arithmetic(_) => 3,
        }
    }
}

macro_rules! arithmetic_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Arithmetic(e.to_string())
            }
        }
    )*};
}

arithmetic_from!(
    sklyanin_core::FieldError,
    sklyanin_core::ncalg::AlgebraError,
    sklyanin_core::pointscheme::PointError,
    sklyanin_core::gradedmod::ModuleError
);

/// Runs the selected suites concurrently and returns all reports sorted by
/// suite name.
pub fn run(config: &RunConfig) -> Result<Vec<CheckReport>, CliError> {
    let suites = config.expanded_suites();
    let results: Vec<Result<Vec<CheckReport>, CliError>> = thread::scope(|s| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&suite| s.spawn(move || suites::run_suite(suite, config)))
            .collect();
        handles
            .into_iter()
            .map(|h| {
                h.join()
                    .unwrap_or_else(|_| Err(CliError::Arithmetic("suite panicked".into())))
            })
            .collect()
    });
    let mut reports = Vec::new();
    for r in results {
        reports.extend(r?);
    }
    reports.sort_by(|a, b| a.suite().cmp(b.suite()));
    Ok(reports)
}

/// 0 when nothing failed, 1 otherwise.
pub fn exit_code(reports: &[CheckReport]) -> i32 {
    if reports.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}
