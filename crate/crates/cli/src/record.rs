//! Structured command output with deterministic rendering: sorted JSON keys
//! and floats fixed at ten significant digits.

use serde_json::{Map, Value};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Plain,
    Csv,
    Json,
}

/// Rounds to ten significant digits so repeated runs serialize identically.
/// Magnitudes below the toolkit's root tolerance collapse to zero.
pub fn sig10(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < 5e-13 {
        return 0.0;
    }
    format!("{x:.9e}").parse().unwrap_or(x)
}

pub fn sig10_value(x: f64) -> Value {
    Value::from(sig10(x))
}

pub fn sig10_string(x: f64) -> String {
    let r = sig10(x);
    // trim the exponent form for table-friendly output
    if r == 0.0 || (1e-4..1e12).contains(&r.abs()) {
        let s = format!("{r:.10}");
        let s = s.trim_end_matches('0').trim_end_matches('.');
        s.to_string()
    } else {
        format!("{r:e}")
    }
}

#[derive(Debug)]
pub struct OutputRecord {
    pub command: String,
    pub inputs: BTreeMap<String, String>,
    pub results: Value,
    /// Table rows (column names + rows), used by the csv and plain renderers.
    pub table: Option<(Vec<String>, Vec<Vec<String>>)>,
    /// Provenance footnotes: which operation produced which cell.
    pub footnotes: Vec<String>,
}

impl OutputRecord {
    pub fn new(command: &str) -> Self {
        OutputRecord {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            results: Value::Object(Map::new()),
            table: None,
            footnotes: Vec::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn result(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        if let Value::Object(map) = &mut self.results {
            map.insert(key.to_string(), value.into());
        }
        self
    }

    pub fn result_f64(&mut self, key: &str, value: f64) -> &mut Self {
        self.result(key, sig10_value(value))
    }

    pub fn footnote(&mut self, note: impl ToString) -> &mut Self {
        self.footnotes.push(note.to_string());
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
            Format::Plain => self.render_plain(),
        }
    }

    fn render_json(&self) -> String {
        // serde_json's default map preserves sorted order via BTreeMap
        let mut top = Map::new();
        top.insert("command".into(), Value::String(self.command.clone()));
        let inputs: Map<String, Value> = self
            .inputs
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        top.insert("inputs".into(), Value::Object(inputs));
        top.insert("results".into(), self.results.clone());
        if let Some((cols, rows)) = &self.table {
            let rows_json: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let obj: Map<String, Value> = cols
                        .iter()
                        .cloned()
                        .zip(r.iter().map(|c| Value::String(c.clone())))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            top.insert("rows".into(), Value::Array(rows_json));
        }
        if !self.footnotes.is_empty() {
            top.insert(
                "provenance".into(),
                Value::Array(
                    self.footnotes
                        .iter()
                        .map(|f| Value::String(f.clone()))
                        .collect(),
                ),
            );
        }
        serde_json::to_string_pretty(&Value::Object(top)).expect("serializable")
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        if let Some((cols, rows)) = &self.table {
            out.push_str(&cols.join(","));
            out.push('\n');
            for r in rows {
                out.push_str(&r.join(","));
                out.push('\n');
            }
        } else if let Value::Object(map) = &self.results {
            let keys: Vec<&String> = map.keys().collect();
            out.push_str(
                &keys
                    .iter()
                    .map(|k| k.as_str())
                    .collect::<Vec<_>>()
                    .join(","),
            );
            out.push('\n');
            out.push_str(
                &keys
                    .iter()
                    .map(|k| value_to_plain(&map[k.as_str()]))
                    .collect::<Vec<_>>()
                    .join(","),
            );
            out.push('\n');
        }
        out
    }

    fn render_plain(&self) -> String {
        let mut out = String::new();
        if let Some((cols, rows)) = &self.table {
            let widths: Vec<usize> = cols
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    rows.iter()
                        .map(|r| r[i].len())
                        .chain([c.len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            for (c, w) in cols.iter().zip(&widths) {
                out.push_str(&format!("{c:<w$}  "));
            }
            out.push('\n');
            for r in rows {
                for (cell, w) in r.iter().zip(&widths) {
                    out.push_str(&format!("{cell:<w$}  "));
                }
                out.push('\n');
            }
        }
        if let Value::Object(map) = &self.results {
            for (k, v) in map {
                out.push_str(&format!("{k}: {}\n", value_to_plain(v)));
            }
        }
        for f in &self.footnotes {
            out.push_str(&format!("# {f}\n"));
        }
        out
    }
}

fn value_to_plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(value_to_plain)
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig10_is_stable() {
        assert_eq!(sig10(18.880071555262937), 18.88007156);
        assert_eq!(sig10(18.880071555262937), sig10(18.880071555599999));
        assert_eq!(sig10_string(19.485281374), "19.48528137");
        assert_eq!(sig10_string(2.0), "2");
    }

    #[test]
    fn json_keys_sorted() {
        let mut r = OutputRecord::new("demo");
        r.result("zeta", 1).result("alpha", 2);
        let s = r.render(Format::Json);
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
    }
}
