use std::fs;
use std::io::Write;

use serde_json::{json, Value};

use crate::Cli;

pub enum Failure {
    /// Bad input: exit code 2.
    Usage(String),
    /// The computation could not be completed: exit code 1.
    Compute(String),
}

pub type CliResult<T> = Result<T, Failure>;

/// What a command produced: text lines, a JSON payload, and whether the
/// checks it ran passed.
pub struct Report {
    pub command: &'static str,
    pub ok: bool,
    pub text: Vec<String>,
    pub json: Value,
}

impl Report {
    pub fn new(command: &'static str, text: Vec<String>, json: Value) -> Self {
        Report {
            command,
            ok: true,
            text,
            json,
        }
    }

    pub fn with_ok(mut self, ok: bool) -> Self {
        self.ok = ok;
        self
    }
}

/// Marks a source position under the offending input.
pub fn caret(input: &str, column: usize) -> String {
    format!("  {input}\n  {}^", " ".repeat(column.saturating_sub(1)))
}

pub fn usage_error(input: &str, e: z2steenrod::Error) -> Failure {
    match e {
        z2steenrod::Error::Syntax { column, .. }
        | z2steenrod::Error::ExponentOverflow { column } => {
            Failure::Usage(format!("{e}\n{}", caret(input, column)))
        }
        _ => Failure::Usage(e.to_string()),
    }
}

pub fn compute_error(e: z2steenrod::Error) -> Failure {
    Failure::Compute(e.to_string())
}

pub fn emit(cli: &Cli, report: &Report) -> std::io::Result<()> {
    let body = if cli.json {
        let doc = json!({ "schema": 1, "command": report.command, "ok": report.ok, "result": report.json });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable report");
        s.push('\n');
        s
    } else {
        let mut s = report.text.join("\n");
        s.push('\n');
        s
    };
    match &cli.out {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}
