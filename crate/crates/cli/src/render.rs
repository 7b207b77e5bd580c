//! Plain-text view of a command result, derived from the same JSON value
//! as `--json` so both modes always agree.

use std::io::{self, Write};

use serde_json::Value;

pub fn text(result: &Value, out: &mut dyn Write) -> io::Result<()> {
    match result {
        Value::Object(map) => {
            for (k, v) in map {
                field(k, v, 0, out)?;
            }
            Ok(())
        }
        other => writeln!(out, "{}", scalar(other)),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::Null => "-".into(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn has_objects(items: &[Value]) -> bool {
    items.iter().any(Value::is_object)
}

fn field(key: &str, v: &Value, indent: usize, out: &mut dyn Write) -> io::Result<()> {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            writeln!(out, "{pad}{key}:")?;
            for (k, v) in map {
                field(k, v, indent + 2, out)?;
            }
        }
        Value::Array(items) if has_objects(items) => {
            writeln!(out, "{pad}{key}:")?;
            for item in items {
                match item {
                    Value::Object(map) => {
                        writeln!(out, "{pad}  -")?;
                        for (k, v) in map {
                            field(k, v, indent + 4, out)?;
                        }
                    }
                    other => writeln!(out, "{pad}  - {}", scalar(other))?,
                }
            }
        }
        Value::Array(items) if items.iter().any(Value::is_array) => {
            writeln!(out, "{pad}{key}:")?;
            for item in items {
                writeln!(out, "{pad}  {item}")?;
            }
        }
        other => writeln!(out, "{pad}{key}: {}", scalar(other))?,
    }
    Ok(())
}
