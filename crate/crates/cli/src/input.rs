//! Reading series, probability lists and symbol sequences.
//!
//! Numeric files hold one value per line. Lines starting with `#` and
//! blank lines are skipped; `header` skips the first line. A trailing
//! comma-separated field list is not accepted: the file must have a single
//! column.

use std::fs;
use std::path::Path;

use crate::error::{CliError, CliResult};

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))
}

/// Parse a single-column numeric file.
pub fn parse_column(text: &str, header: bool, origin: &str) -> CliResult<Vec<f64>> {
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate().skip(header as usize) {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let x: f64 = line
            .parse()
            .map_err(|_| CliError::Data(format!("{origin}:{}: not a number: {line:?}", k + 1)))?;
        if !x.is_finite() {
            return Err(CliError::Data(format!(
                "{origin}:{}: value is not finite",
                k + 1
            )));
        }
        out.push(x);
    }
    Ok(out)
}

pub fn read_column(path: &Path, header: bool) -> CliResult<Vec<f64>> {
    parse_column(&read(path)?, header, &path.display().to_string())
}

/// Probabilities, each in `[0, 1]`.
pub fn read_probabilities(path: &Path, header: bool) -> CliResult<Vec<f64>> {
    let text = read(path)?;
    let origin = path.display().to_string();
    let p = parse_column(&text, header, &origin)?;
    if let Some(k) = p.iter().position(|x| !(0.0..=1.0).contains(x)) {
        return Err(CliError::Data(format!(
            "{origin}: probability {} (entry {}) is outside [0, 1]",
            p[k],
            k + 1
        )));
    }
    Ok(p)
}

/// A symbol sequence: one symbol per character (whitespace ignored), or
/// whitespace-separated tokens.
pub fn parse_symbols(text: &str, tokens: bool) -> Vec<String> {
    if tokens {
        text.split_whitespace().map(str::to_owned).collect()
    } else {
        text.chars()
            .filter(|c| !c.is_whitespace())
            .map(String::from)
            .collect()
    }
}

pub fn read_symbols(path: &Path, tokens: bool) -> CliResult<Vec<String>> {
    Ok(parse_symbols(&read(path)?, tokens))
}
