//! Number formatting and file writing shared by the subcommands.

use std::fs;
use std::path::Path;

use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::Settings;
use crate::error::CliError;

/// 17 significant digits, `inf`/`-inf`/`nan` for non-finite values.
/// Negative zero prints as zero.
pub fn fmt_f64(x: f64) -> String {
    if x == 0.0 {
        "0.0000000000000000e0".into()
    } else if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 { "inf".into() } else { "-inf".into() }
    } else {
        format!("{x:.16e}")
    }
}

/// JSON number with 17 significant digits; JSON has no infinities, so
/// non-finite values become `null`.
pub fn json_num(x: f64) -> Box<RawValue> {
    let text = if x.is_finite() { fmt_f64(x) } else { "null".into() };
    RawValue::from_string(text).expect("formatted float is valid JSON")
}

#[derive(Serialize)]
pub struct Metadata {
    pub version: &'static str,
    pub seed: u64,
    pub tolerance: Box<RawValue>,
}

impl Metadata {
    pub fn new(s: &Settings) -> Self {
        Self { version: env!("CARGO_PKG_VERSION"), seed: s.seed, tolerance: json_num(s.tol) }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display())))
}

pub fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

/// Quoted only when needed; values here are names and numbers.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
