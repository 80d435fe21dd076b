//! Rendering of JSON reports as compact JSON or as indented text.

use serde_json::Value;

pub fn json(report: &Value) -> String {
    serde_json::to_string(report).expect("reports serialize")
}

/// One `key: value` line per field. Lists of strings (polynomials,
/// monomials) get one indented line per entry; other lists stay inline.
pub fn text(report: &Value) -> String {
    let mut out = String::new();
    write_object(report, 0, &mut out);
    out
}

fn write_object(v: &Value, indent: usize, out: &mut String) {
    let Value::Object(map) = v else {
        out.push_str(&format!("{}{}\n", pad(indent), scalar(v)));
        return;
    };
    for (key, value) in map {
        match value {
            Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_string) => {
                out.push_str(&format!("{}{key}:\n", pad(indent)));
                for item in items {
                    out.push_str(&format!("{}{}\n", pad(indent + 1), scalar(item)));
                }
            }
            Value::Array(items) if items.iter().any(Value::is_array) => {
                out.push_str(&format!("{}{key}:\n", pad(indent)));
                for item in items {
                    out.push_str(&format!("{}{}\n", pad(indent + 1), scalar(item)));
                }
            }
            Value::Object(_) => {
                out.push_str(&format!("{}{key}:\n", pad(indent)));
                write_object(value, indent + 1, out);
            }
            _ => out.push_str(&format!("{}{key}: {}\n", pad(indent), scalar(value))),
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

fn pad(indent: usize) -> String {
    "  ".repeat(indent)
}
