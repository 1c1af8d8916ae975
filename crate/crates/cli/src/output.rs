use hankel_core::cfrac::XPoly;
use hankel_core::Scalar;
use serde_json::{Map, Value};

use crate::args::Format;

/// Integers that fit `i64` become JSON numbers; every other value is its text
/// form, which parses back to the same [`Scalar`].
pub fn scalar(s: &Scalar) -> Value {
    match s.as_i64() {
        Some(n) => Value::from(n),
        None => Value::String(s.to_string()),
    }
}

pub fn scalars<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> Value {
    Value::Array(values.into_iter().map(scalar).collect())
}

pub fn poly(p: &XPoly) -> Value {
    scalar(&p.to_scalar())
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => value.to_string(),
        Format::Table => table(value),
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn aligned(rows: Vec<Vec<String>>) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    rows.iter()
        .map(|r| {
            let line: Vec<String> = r
                .iter()
                .enumerate()
                .map(|(c, s)| format!("{s:<w$}", w = widths[c]))
                .collect();
            line.join("  ").trim_end().to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn object_rows(objects: &[&Map<String, Value>]) -> Vec<Vec<String>> {
    let keys: Vec<&String> = objects[0].keys().collect();
    let mut rows = vec![keys.iter().map(|k| k.to_string()).collect()];
    for o in objects {
        rows.push(keys.iter().map(|k| o.get(*k).map(cell).unwrap_or_default()).collect());
    }
    rows
}

fn table(value: &Value) -> String {
    match value {
        Value::Array(items) => {
            let objects: Vec<&Map<String, Value>> = items.iter().filter_map(Value::as_object).collect();
            if !items.is_empty() && objects.len() == items.len() {
                aligned(object_rows(&objects))
            } else {
                let mut rows = vec![vec!["n".to_string(), "value".to_string()]];
                rows.extend(items.iter().enumerate().map(|(i, v)| vec![i.to_string(), cell(v)]));
                aligned(rows)
            }
        }
        Value::Object(map) => {
            let mut out = Vec::new();
            let mut rows = Vec::new();
            for (k, v) in map {
                match v {
                    Value::Array(a) if a.iter().any(Value::is_object) => {
                        out.push(format!("{k}:\n{}", table(v)));
                    }
                    _ => rows.push(vec![k.clone(), cell(v)]),
                }
            }
            let mut text = aligned(rows);
            for block in out {
                if !text.is_empty() {
                    text.push('\n');
                }
                text.push_str(&block);
            }
            text
        }
        other => cell(other),
    }
}
