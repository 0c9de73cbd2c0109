//! Output envelope and deterministic rendering.
//!
//! Payloads are serialized to a JSON value first and every real is rounded
//! to 12 significant digits there, so the text and JSON forms print the same
//! numbers.

use serde::Serialize;
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

/// Rounds to 12 significant digits; `-0` becomes `0`.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn round_value(value: Value) -> Value {
    match value {
        Value::Number(n) if n.is_f64() => {
            let x = round12(n.as_f64().unwrap_or(f64::NAN));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_value).collect()),
        Value::Object(map) => Value::Object(map.into_iter().map(|(k, v)| (k, round_value(v))).collect()),
        other => other,
    }
}

pub fn render<P: Serialize>(command: &str, input_digest: Option<&str>, payload: &P, format: Format) -> String {
    let payload = round_value(serde_json::to_value(payload).expect("payload serializes"));
    match format {
        Format::Json => {
            let envelope = json!({
                "command": command,
                "input_digest": input_digest,
                "payload": payload,
            });
            let mut out = serde_json::to_string_pretty(&envelope).expect("envelope serializes");
            out.push('\n');
            out
        }
        Format::Text => {
            let mut out = format!("command: {command}\n");
            out.push_str(&format!("input: {}\n", input_digest.unwrap_or("-")));
            if let Value::Object(map) = &payload {
                write_map(&mut out, map, 0);
            }
            out
        }
    }
}

fn scalar(value: &Value) -> Option<String> {
    match value {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        _ => None,
    }
}

fn is_flat(items: &[Value]) -> bool {
    items.iter().all(|v| scalar(v).is_some())
}

fn write_map(out: &mut String, map: &Map<String, Value>, indent: usize) {
    let pad = "  ".repeat(indent);
    for (key, value) in map {
        match value {
            Value::Object(inner) => {
                out.push_str(&format!("{pad}{key}:\n"));
                write_map(out, inner, indent + 1);
            }
            Value::Array(items) if is_flat(items) => {
                let joined: Vec<String> = items.iter().filter_map(scalar).collect();
                out.push_str(&format!("{pad}{key}: [{}]\n", joined.join(", ")));
            }
            Value::Array(items) => {
                out.push_str(&format!("{pad}{key}:\n"));
                for item in items {
                    match item {
                        Value::Object(inner) => {
                            out.push_str(&format!("{pad}  -\n"));
                            write_map(out, inner, indent + 2);
                        }
                        other => {
                            let text = scalar(other).unwrap_or_else(|| other.to_string());
                            out.push_str(&format!("{pad}  - {text}\n"));
                        }
                    }
                }
            }
            other => out.push_str(&format!("{pad}{key}: {}\n", scalar(other).unwrap_or_default())),
        }
    }
}
