//! The JSON envelope every command emits, plus the `--pretty` renderer.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Error,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorInfo {
    pub code: String,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportEnvelope {
    pub command: String,
    pub inputs: Value,
    pub results: Value,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<ErrorInfo>,
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const VIOLATION: i32 = 1;
    pub const INPUT: i32 = 2;
}

pub const VIOLATION_CODE: &str = "property-violation";

/// An envelope together with the exit code it implies.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: ReportEnvelope,
    pub exit_code: i32,
}

impl Outcome {
    pub fn ok(command: &str, inputs: Value, results: Value) -> Self {
        Outcome {
            report: ReportEnvelope {
                command: command.to_string(),
                inputs,
                results,
                status: Status::Ok,
                error: None,
            },
            exit_code: exit::OK,
        }
    }

    pub fn failed(command: &str, inputs: Value, err: &cm2_core::Error) -> Self {
        let exit_code = if err.is_internal() {
            exit::VIOLATION
        } else {
            exit::INPUT
        };
        Outcome {
            report: ReportEnvelope {
                command: command.to_string(),
                inputs,
                results: Value::Object(Map::new()),
                status: Status::Error,
                error: Some(ErrorInfo {
                    code: err.code().to_string(),
                    message: err.to_string(),
                }),
            },
            exit_code,
        }
    }

    /// A completed computation whose results contradict an expected property.
    pub fn violation(command: &str, inputs: Value, results: Value, message: String) -> Self {
        Outcome {
            report: ReportEnvelope {
                command: command.to_string(),
                inputs,
                results,
                status: Status::Error,
                error: Some(ErrorInfo {
                    code: VIOLATION_CODE.to_string(),
                    message,
                }),
            },
            exit_code: exit::VIOLATION,
        }
    }
}

impl ReportEnvelope {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("envelope is always serializable");
        s.push('\n');
        s
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    /// Indented `key: value` text.
    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command: {}", self.command);
        let status = match self.status {
            Status::Ok => "ok",
            Status::Error => "error",
        };
        let _ = writeln!(out, "status: {status}");
        if let Some(e) = &self.error {
            let _ = writeln!(out, "error: [{}] {}", e.code, e.message);
        }
        for (name, value) in [("inputs", &self.inputs), ("results", &self.results)] {
            if value.as_object().is_some_and(|m| m.is_empty()) {
                continue;
            }
            let _ = writeln!(out, "{name}:");
            render(&mut out, value, 1);
        }
        out
    }
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(format!(
                "[{}]",
                items
                    .iter()
                    .filter_map(scalar)
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        }
        _ => None,
    }
}

fn render(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(out, item, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        // one line per flat object keeps row tables readable
                        let line = item.as_object().and_then(|m| {
                            m.iter()
                                .map(|(k, x)| scalar(x).map(|s| format!("{k}={s}")))
                                .collect::<Option<Vec<_>>>()
                        });
                        match line {
                            Some(fields) => {
                                let _ = writeln!(out, "{pad}- {}", fields.join(" "));
                            }
                            None => {
                                let _ = writeln!(out, "{pad}-");
                                render(out, item, depth + 1);
                            }
                        }
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other).unwrap_or_default());
        }
    }
}
