//! Text rendering of an envelope. Every JSON leaf appears verbatim as a
//! `key: value` line, so both formats carry the same data.

use std::fmt::Write;

use serde_json::Value;

use super::OutputEnvelope;

pub fn text(env: &OutputEnvelope) -> String {
    let value = serde_json::to_value(env).expect("envelope serializes");
    let mut out = String::new();
    if let Value::Object(map) = &value {
        for (k, v) in map {
            entry(&mut out, 0, k, v);
        }
    }
    out
}

fn entry(out: &mut String, depth: usize, key: &str, v: &Value) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) if !map.is_empty() => {
            let _ = writeln!(out, "{pad}{key}:");
            for (k, x) in map {
                entry(out, depth + 1, k, x);
            }
        }
        Value::Array(items) if items.iter().any(is_compound) => {
            let _ = writeln!(out, "{pad}{key}:");
            for (n, x) in items.iter().enumerate() {
                entry(out, depth + 1, &format!("[{n}]"), x);
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{key}: {}", scalar(v));
        }
    }
}

fn is_compound(v: &Value) -> bool {
    matches!(v, Value::Object(m) if !m.is_empty()) || matches!(v, Value::Array(a) if !a.is_empty())
}

/// Flat values: strings unquoted (the empty string as `""`), flat arrays as
/// `[x, y]`, empty containers as `{}`/`[]`.
pub(super) fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) if s.is_empty() => "\"\"".into(),
        Value::String(s) => s.clone(),
        Value::Null => "null".into(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        Value::Object(_) => "{}".into(),
        other => other.to_string(),
    }
}
