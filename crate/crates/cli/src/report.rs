use std::time::Instant;

use serde::Serialize;
use serde_json::Value;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Holds only under a hypothesis the checks cannot certify.
    Assumption,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub status: Status,
    pub details: Value,
    pub ms: u128,
}

impl CheckReport {
    /// The part of `name` before the first `/`.
    pub fn suite(&self) -> &str {
        self.name.split('/').next().unwrap_or(&self.name)
    }
}

/// Times `f` and wraps its outcome.
pub fn timed(
    name: impl Into<String>,
    f: impl FnOnce() -> Result<(Status, Value), CliError>,
) -> Result<CheckReport, CliError> {
    let start = Instant::now();
    let (status, details) = f()?;
    Ok(CheckReport {
        name: name.into(),
        status,
        details,
        ms: start.elapsed().as_millis(),
    })
}
