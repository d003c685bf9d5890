//! Report rendering: JSON (default), CSV and aligned text. Every float is
//! rounded to 12 significant digits before rendering.

use std::io::Write;
use std::path::Path;
use std::time::SystemTime;

use serde_json::{Map, Value};

use crate::args::Format;
use crate::error::{CliError, CliResult};

/// A report as a JSON document plus a flat table for CSV and text output.
pub struct Report {
    pub json: Map<String, Value>,
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Report {
    pub fn new(command: &str, header: Vec<&'static str>) -> Self {
        let mut json = Map::new();
        json.insert("command".into(), Value::from(command));
        Report {
            json,
            header,
            rows: Vec::new(),
        }
    }

    pub fn set(&mut self, key: &str, value: impl Into<Value>) {
        self.json.insert(key.to_string(), value.into());
    }
}

pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(x) = n.as_f64() {
                *v = Value::from(round12(x));
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn to_value<T: serde::Serialize>(x: &T) -> CliResult<Value> {
    serde_json::to_value(x).map_err(|e| CliError::Output(e.to_string()))
}

pub fn render(mut report: Report, format: Format, timestamp: bool) -> CliResult<String> {
    if timestamp {
        let now = humantime::format_rfc3339_seconds(SystemTime::now()).to_string();
        report.json.insert("timestamp".into(), Value::from(now));
    }
    report.rows.iter_mut().flatten().for_each(round_value);
    match format {
        Format::Json => {
            let mut doc = Value::Object(report.json);
            round_value(&mut doc);
            let mut text = serde_json::to_string_pretty(&doc).map_err(|e| CliError::Output(e.to_string()))?;
            text.push('\n');
            Ok(text)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Output(e.to_string());
            w.write_record(&report.header).map_err(io)?;
            for row in &report.rows {
                w.write_record(row.iter().map(cell)).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
        }
        Format::Text => {
            let cells: Vec<Vec<String>> = report.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
            let widths: Vec<usize> = (0..report.header.len())
                .map(|i| cells.iter().map(|r| r[i].chars().count()).chain([report.header[i].len()]).max().unwrap())
                .collect();
            let line = |fields: Vec<&str>| {
                let padded: Vec<String> = fields.iter().zip(&widths).map(|(f, w)| format!("{f:<w$}")).collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            let mut out = line(report.header.clone());
            for row in &cells {
                out += &line(row.iter().map(String::as_str).collect());
            }
            Ok(out)
        }
    }
}

pub fn emit(text: &str, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => std::fs::write(p, text).map_err(CliError::io(p)),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(CliError::io("<stdout>"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(round12(1.842_370_993_177_108_6), 1.842_370_993_18);
        assert_eq!(round12(2.0 / 7.0), 0.285_714_285_714);
        assert_eq!(round12(123_456_789_012_345.0), 123_456_789_012_000.0);
        assert_eq!(round12(0.0), 0.0);
        assert!(round12(f64::NAN).is_nan());
    }

    fn sample() -> Report {
        let mut r = Report::new("demo", vec!["k", "H_k"]);
        r.set("values", json!([1.0 / 3.0, 7]));
        r.rows.push(vec![json!(0), json!(1.0 / 3.0)]);
        r.rows.push(vec![json!(10), Value::Null]);
        r
    }

    #[test]
    fn json_rounds_nested_floats() {
        let text = render(sample(), Format::Json, false).unwrap();
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["values"][0], json!(0.333333333333));
        assert_eq!(v["values"][1], json!(7));
        assert_eq!(v["command"], "demo");
        assert!(v.get("timestamp").is_none());
        let stamped: Value = serde_json::from_str(&render(sample(), Format::Json, true).unwrap()).unwrap();
        assert!(stamped["timestamp"].as_str().unwrap().ends_with('Z'));
    }

    #[test]
    fn csv_and_text() {
        assert_eq!(render(sample(), Format::Csv, false).unwrap(), "k,H_k\n0,0.333333333333\n10,\n");
        assert_eq!(render(sample(), Format::Text, false).unwrap(), "k   H_k\n0   0.333333333333\n10\n");
    }
}
