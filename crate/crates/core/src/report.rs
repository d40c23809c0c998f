//! The JSON report envelope shared by the library sweeps and the CLI.

use serde::Serialize;
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub details: Value,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool, details: Value) -> Self {
        Self {
            name: name.into(),
            pass,
            details,
        }
    }

    pub fn bare(name: impl Into<String>, pass: bool) -> Self {
        Self::new(name, pass, Value::Null)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub inputs: Value,
    pub outputs: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>, inputs: Value) -> Self {
        Self {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            inputs,
            outputs: json!({}),
            checks: Vec::new(),
        }
    }

    pub fn with_outputs(mut self, outputs: Value) -> Self {
        self.outputs = outputs;
        self
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    /// Canonical JSON: object keys sorted, two-space indentation.
    pub fn to_json(&self) -> String {
        // serde_json's default map is ordered, so round-tripping through Value sorts keys.
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}
