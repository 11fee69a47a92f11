//! One module per suite. Every check returns a status and a JSON details
//! object that names the field it computed in.

mod algebra;
mod modules;
mod points;
mod symmetry;

use serde_json::{json, Value};
use sklyanin_core::FieldSpec;

use crate::config::{RunConfig, Suite};
use crate::report::CheckReport;
use crate::CliError;

pub fn run_suite(suite: Suite, config: &RunConfig) -> Result<Vec<CheckReport>, CliError> {
    match suite {
        Suite::Relations => algebra::relations(config),
        Suite::Hilbert => algebra::hilbert(config),
        Suite::Center => algebra::center(config),
        Suite::Nilpotent => algebra::nilpotent(config),
        Suite::Points => points::points(config),
        Suite::Modules => modules::modules(config),
        Suite::Isomorphisms => symmetry::isomorphisms(config),
        Suite::All => {
            let mut out = Vec::new();
            for s in Suite::EACH {
                out.extend(run_suite(s, config)?);
            }
            Ok(out)
        }
    }
}

/// Details common to every check, extended with `extra`.
fn details(config: &RunConfig, spec: &FieldSpec, extra: Value) -> Value {
    let mut v = json!({
        "params": config.params.to_json(),
        "field": spec.to_json(),
    });
    if let (Value::Object(base), Value::Object(more)) = (&mut v, extra) {
        base.extend(more);
    }
    v
}

fn strings<T: ToString>(items: impl IntoIterator<Item = T>) -> Vec<String> {
    items.into_iter().map(|x| x.to_string()).collect()
}
