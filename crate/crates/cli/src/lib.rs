//! Command-line front end for the `semiring-dp` library.
//!
//! [`run`] parses arguments, dispatches to a subcommand and writes the
//! canonical JSON document; it returns the process exit code.

pub mod args;
pub mod commands;
pub mod engine;
pub mod error;
pub mod input;
pub mod json;

use std::ffi::OsString;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;
use serde_json::Value;

use crate::args::{Cli, Command};
use crate::error::{CliError, CliResult};

/// Run a parsed command and return its document.
pub fn dispatch(command: &Command) -> CliResult<Value> {
    match command {
        Command::Segment(a) => commands::segment::run(a),
        Command::Align(a) => commands::align::run(a),
        Command::Events(a) => commands::events::run(a),
        Command::Lis(a) => commands::lis::run(a),
        Command::Bench(a) => commands::bench::run(a),
    }
}

fn out_path(command: &Command) -> Option<&std::path::Path> {
    let common = match command {
        Command::Segment(a) => &a.common,
        Command::Align(a) => &a.common,
        Command::Events(a) => &a.common,
        Command::Lis(a) => &a.common,
        Command::Bench(a) => &a.common,
    };
    common.out.as_deref()
}

/// Parse `args` (including the program name), run, and write the document
/// to `--out` or `stdout`. Diagnostics go to `stderr`.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    0
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    1
                }
            };
        }
    };
    match execute(&cli.command, stdout) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(command: &Command, stdout: &mut dyn Write) -> CliResult<()> {
    let doc = dispatch(command)?;
    let mut text = json::to_canonical_string(&doc);
    text.push('\n');
    match out_path(command) {
        Some(path) => std::fs::write(path, &text)
            .map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?,
        None => stdout
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Data(format!("stdout: {e}")))?,
    }
    if doc["oracle"]["status"] == "fail" {
        let reason = doc["oracle"]["reason"].as_str().unwrap_or_default();
        return Err(CliError::Oracle(reason.to_owned()));
    }
    Ok(())
}
