//! Report envelope, rendering and the round-trip check every report passes
//! before it is written.

use std::fmt::Debug;
use std::path::Path;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::args::Format;
use crate::error::CliError;

/// Settings shared by every command.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: String,
    pub inputs: Vec<String>,
    pub tol: f64,
    pub seed: u64,
    pub format: Format,
}

/// What a command prints: its name, the run settings that shaped the result,
/// an overall verdict and the command-specific report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Envelope<T> {
    pub command: String,
    pub version: String,
    pub inputs: Vec<String>,
    pub tol: f64,
    pub seed: u64,
    pub pass: bool,
    pub report: T,
}

pub trait Report: Serialize + DeserializeOwned + PartialEq + Debug {
    fn pass(&self) -> bool;

    /// Human-readable reasons for a failed verdict.
    fn failures(&self) -> Vec<String> {
        Vec::new()
    }

    /// A natural CSV table, when the report has one.
    fn table(&self) -> Option<String> {
        None
    }

    fn pretty(&self) -> String;
}

pub struct Rendered {
    pub text: String,
    pub pass: bool,
    pub failures: Vec<String>,
}

/// Serializes `report`, re-parses it with unknown fields denied and checks
/// that the parse reproduces both the value and the bytes.
pub fn round_trip<T: Report>(envelope: &Envelope<T>) -> Result<String, CliError> {
    let json = serde_json::to_string_pretty(envelope).map_err(|e| CliError::Internal(e.to_string()))? + "\n";
    let back: Envelope<T> = serde_json::from_str(&json)
        .map_err(|e| CliError::Internal(format!("report does not parse back: {e}")))?;
    if &back != envelope {
        return Err(CliError::Internal("report changed in a JSON round trip".into()));
    }
    let again = serde_json::to_string_pretty(&back).map_err(|e| CliError::Internal(e.to_string()))? + "\n";
    if again != json {
        return Err(CliError::Internal("report bytes changed in a JSON round trip".into()));
    }
    Ok(json)
}

pub fn render<T: Report>(config: &RunConfig, report: T) -> Result<Rendered, CliError> {
    let pass = report.pass();
    let failures = report.failures();
    let envelope = Envelope {
        command: config.command.clone(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        inputs: config.inputs.clone(),
        tol: config.tol,
        seed: config.seed,
        pass,
        report,
    };
    let json = round_trip(&envelope)?;
    let text = match config.format {
        Format::Json => json,
        Format::Csv => match envelope.report.table() {
            Some(table) => table,
            None => {
                let value: Value = serde_json::from_str(&json).map_err(|e| CliError::Internal(e.to_string()))?;
                flatten_csv(&value)
            }
        },
        Format::Pretty => {
            let verdict = if pass { "PASS" } else { "FAIL" };
            let mut text = format!("modnet {}: {verdict}\n", config.command);
            text.push_str(&envelope.report.pretty());
            if !text.ends_with('\n') {
                text.push('\n');
            }
            text
        }
    };
    Ok(Rendered { text, pass, failures })
}

/// `key,value` lines for every leaf, keys joined with `.` and array indices.
pub fn flatten_csv(value: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(map) => {
                for (k, child) in map {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, child, out);
                }
            }
            Value::Array(items) => {
                for (i, child) in items.iter().enumerate() {
                    walk(&format!("{prefix}.{i}"), child, out);
                }
            }
            Value::String(s) => out.push_str(&format!("{prefix},{}\n", csv_field(s))),
            other => out.push_str(&format!("{prefix},{other}\n")),
        }
    }
    let mut out = String::from("key,value\n");
    walk("", value, &mut out);
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn write_output(text: &str, out: Option<&Path>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Residual formatting used by the pretty printers.
pub fn sci(x: f64) -> String {
    format!("{x:.3e}")
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}
