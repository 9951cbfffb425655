pub mod align;
pub mod bench;
pub mod events;
pub mod lis;
pub mod segment;

use std::fs;
use std::path::Path;

use serde_json::Value;

use crate::args::Common;
use crate::engine::{ops_json, Choice, Outcome};
use crate::error::{CliError, CliResult};
use crate::json;

/// Semiring from `--semiring`, or `default`.
pub(crate) fn choice(common: &Common, default: Choice) -> CliResult<Choice> {
    match &common.semiring {
        Some(name) => name.parse(),
        None => Ok(default),
    }
}

/// Assemble the result document. The witness is present iff the semiring
/// is tupled.
pub(crate) fn document<L>(
    command: &str,
    config: Value,
    choice: Choice,
    outcome: &Outcome<L>,
    label: impl Fn(&L) -> Value,
    extra: Vec<(&str, Value)>,
) -> Value {
    let mut pairs = vec![
        ("command", Value::from(command)),
        ("config", config),
        ("semiring", Value::from(choice.to_string())),
        ("result", outcome.result.clone()),
        ("op_counts", ops_json(&outcome.ops)),
        ("wall_time_ms", json::float(outcome.wall_ms)),
        ("oracle", outcome.oracle.to_json()),
    ];
    if let Some(w) = &outcome.witness {
        pairs.push(("witness", Value::Array(w.iter().map(label).collect())));
    }
    pairs.extend(extra);
    json::object(pairs)
}

/// Write a CSV table; cells are already formatted.
pub(crate) fn write_table(path: &Path, header: &[&str], rows: &[Vec<String>]) -> CliResult<()> {
    let mut text = header.join(",");
    text.push('\n');
    for row in rows {
        text.push_str(&row.join(","));
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

pub(crate) fn path_json(p: &Path) -> Value {
    Value::from(p.display().to_string())
}
