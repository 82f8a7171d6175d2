//! The machine-readable record every command produces.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// A known divergence between a computed value and a published one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyFlag {
    pub id: String,
    pub note: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verification {
    pub passed: bool,
    pub checks: Vec<Check>,
}

impl Verification {
    pub fn push(&mut self, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(Check {
            name: name.into(),
            passed,
            detail,
        });
        self.passed = self.checks.iter().all(|c| c.passed);
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<Vec<String>>,
    pub inputs: BTreeMap<String, Value>,
    pub outputs: BTreeMap<String, Value>,
    pub citations: Vec<String>,
    pub discrepancy_flags: Vec<DiscrepancyFlag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<Verification>,
}

impl Report {
    pub fn new(command: &[&str]) -> Self {
        Self {
            command: command.iter().map(|s| s.to_string()).collect(),
            ring: None,
            inputs: BTreeMap::new(),
            outputs: BTreeMap::new(),
            citations: Vec::new(),
            discrepancy_flags: Vec::new(),
            verification: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn output(&mut self, key: &str, value: impl Into<Value>) {
        self.outputs.insert(key.to_string(), value.into());
    }

    pub fn cite(&mut self, tags: &[&str]) {
        self.citations.extend(tags.iter().map(|s| s.to_string()));
    }

    pub fn flag(&mut self, id: &str, note: impl Into<String>) {
        self.discrepancy_flags.push(DiscrepancyFlag {
            id: id.to_string(),
            note: note.into(),
        });
    }

    pub fn verification_failed(&self) -> bool {
        self.verification.as_ref().is_some_and(|v| !v.passed)
    }

    /// Looks up a dotted path such as `t_i.pretty` under `outputs`.
    pub fn lookup(&self, path: &str) -> Option<&Value> {
        let mut parts = path.split('.');
        let mut cur = self.outputs.get(parts.next()?)?;
        for p in parts {
            cur = match cur {
                Value::Object(m) => m.get(p)?,
                Value::Array(a) => a.get(p.parse::<usize>().ok()?)?,
                _ => return None,
            };
        }
        Some(cur)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are always serializable")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command: {}", self.command.join(" "));
        if let Some(ring) = &self.ring {
            let _ = writeln!(s, "ring: Q[{}]", ring.join(", "));
        }
        for (k, v) in &self.inputs {
            let _ = writeln!(s, "input {k}: {}", render(v));
        }
        for (k, v) in &self.outputs {
            let _ = writeln!(s, "{k}: {}", render(v));
        }
        if !self.citations.is_empty() {
            let _ = writeln!(s, "citations: {}", self.citations.join(", "));
        }
        for f in &self.discrepancy_flags {
            let _ = writeln!(s, "discrepancy [{}]: {}", f.id, f.note);
        }
        if let Some(v) = &self.verification {
            let _ = writeln!(s, "verification: {}", if v.passed { "passed" } else { "FAILED" });
            for c in &v.checks {
                let mark = if c.passed { "ok" } else { "FAIL" };
                match &c.detail {
                    Some(d) => {
                        let _ = writeln!(s, "  [{mark}] {} ({d})", c.name);
                    }
                    None => {
                        let _ = writeln!(s, "  [{mark}] {}", c.name);
                    }
                }
            }
        }
        s
    }
}

/// Modules render as their `pretty` field, strings without quotes.
fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Object(m) if m.contains_key("pretty") => render(&m["pretty"]),
        Value::Array(items) if items.iter().all(|i| !i.is_object()) => {
            let parts: Vec<String> = items.iter().map(render).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}
