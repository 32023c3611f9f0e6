//! Deterministic CSV and JSON record emission: header first, fixed column
//! order, 17-significant-digit decimals, RFC-4180-style quoting.

use std::fmt::Write as _;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

/// 17 significant decimal digits; enough to round-trip any f64.
pub fn format_value(x: f64) -> String {
    format!("{x:.16e}")
}

/// Quote a CSV field when it contains a comma, quote, or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n', '\r']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Render records as CSV (header first) or as JSON, one object per record
/// with keys equal to the column names.
pub fn render(format: Format, columns: &[&str], rows: &[Vec<f64>]) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            let header: Vec<String> = columns.iter().map(|c| csv_field(c)).collect();
            let _ = writeln!(out, "{}", header.join(","));
            for row in rows {
                let fields: Vec<String> = row.iter().map(|&v| format_value(v)).collect();
                let _ = writeln!(out, "{}", fields.join(","));
            }
        }
        Format::Json => {
            for row in rows {
                let mut obj = serde_json::Map::new();
                for (c, &v) in columns.iter().zip(row) {
                    obj.insert(
                        (*c).to_string(),
                        serde_json::Number::from_f64(v)
                            .map(serde_json::Value::Number)
                            .unwrap_or(serde_json::Value::Null),
                    );
                }
                let _ = writeln!(out, "{}", serde_json::Value::Object(obj));
            }
        }
    }
    out
}
