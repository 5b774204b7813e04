use gvpoly::exact::Scalar;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::{CliError, Command, Options, EXIT_MISMATCH, EXIT_OK};

/// Result of a command before it is wrapped into a report.
pub struct Output {
    pub results: Value,
    pub warnings: Vec<String>,
    /// Failed internal cross-checks; any entry makes the exit code 3.
    pub mismatches: Vec<String>,
}

impl Output {
    pub fn new(results: Value) -> Self {
        Output { results, warnings: Vec::new(), mismatches: Vec::new() }
    }
}

/// The JSON document printed by every command. Object keys are sorted, so
/// identical inputs and flags give identical bytes.
pub struct Report {
    pub exit_code: u8,
    value: Map<String, Value>,
}

/// SHA-256 of the single input, or of the newline-joined per-file digests
/// when there are several.
pub fn input_digest(inputs: &[Vec<u8>]) -> String {
    let each: Vec<String> = inputs.iter().map(|b| hex::encode(Sha256::digest(b))).collect();
    match each.len() {
        1 => each[0].clone(),
        _ => hex::encode(Sha256::digest(each.join("\n").as_bytes())),
    }
}

impl Report {
    pub fn new(command: Command, inputs: &[Vec<u8>], options: &Options) -> Self {
        let mut opts = Map::new();
        for (k, v) in [("h", &options.h), ("q", &options.q), ("v", &options.v)] {
            if let Some(s) = v {
                opts.insert(k.into(), json!(s));
            }
        }
        if command == Command::Bkkcheck {
            opts.insert("samples".into(), json!(options.samples));
            opts.insert("seed".into(), json!(options.seed));
        }
        let mut value = Map::new();
        value.insert("command".into(), json!(command.name()));
        value.insert("options".into(), Value::Object(opts));
        value.insert("input_digest".into(), json!(input_digest(inputs)));
        value.insert("results".into(), Value::Null);
        value.insert("warnings".into(), json!([]));
        Report { exit_code: EXIT_OK, value }
    }

    pub fn finish(&mut self, out: Output) {
        self.value.insert("results".into(), out.results);
        self.value.insert("warnings".into(), json!(out.warnings));
        if !out.mismatches.is_empty() {
            self.exit_code = EXIT_MISMATCH;
            self.value.insert("mismatches".into(), json!(out.mismatches));
        }
    }

    pub fn fail(&mut self, e: CliError) {
        self.exit_code = e.exit_code();
        let mut err = Map::new();
        err.insert("kind".into(), json!(e.kind()));
        err.insert("message".into(), json!(e.to_string()));
        if let CliError::Validation(issues) = &e {
            err.insert("issues".into(), json!(issues));
        }
        self.value.insert("error".into(), Value::Object(err));
    }

    pub fn value(&self) -> &Map<String, Value> {
        &self.value
    }

    pub fn render(&self, compact: bool) -> String {
        let v = Value::Object(self.value.clone());
        let s = if compact { serde_json::to_string(&v) } else { serde_json::to_string_pretty(&v) };
        s.expect("JSON values always serialize")
    }
}

pub fn rat(x: &Scalar) -> Value {
    json!(x.to_string())
}

pub fn rats(v: &[Scalar]) -> Value {
    Value::Array(v.iter().map(rat).collect())
}

/// 1-based face as a JSON array.
pub fn face(f: &[usize]) -> Value {
    json!(f.iter().map(|v| v + 1).collect::<Vec<_>>())
}
