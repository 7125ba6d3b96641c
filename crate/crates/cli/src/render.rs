//! Text, CSV and JSON rendering of face-bound tables.
//!
//! Machine formats always carry full decimal digits; JSON encodes big
//! integers as strings.

use std::fmt::Write as _;

use lieface::{BigInt, FaceBoundVector};
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

/// One labelled column of a comparison table.
#[derive(Debug, Clone)]
pub struct Column {
    pub label: String,
    pub vector: FaceBoundVector,
}

pub fn render_table(v: &FaceBoundVector, format: Format) -> String {
    match format {
        Format::Text => {
            let width = v.bounds.len().saturating_sub(1).to_string().len();
            let mut out = String::new();
            for (i, b) in v.bounds.iter().enumerate() {
                let _ = writeln!(out, "{i:>width$}  {b}");
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("i,bound\n");
            for (i, b) in v.bounds.iter().enumerate() {
                let _ = writeln!(out, "{i},{b}");
            }
            out
        }
        Format::Json => {
            let value = json!({
                "d": v.d,
                "f0": v.f0_input.to_string(),
                "bounds": v.bounds.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "total": v.total().to_string(),
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&value).expect("serializable")
            )
        }
    }
}

fn row_max(columns: &[Column], i: usize) -> Option<&BigInt> {
    columns.iter().filter_map(|c| c.vector.bounds.get(i)).max()
}

/// Multi-column table; in text form each row's largest entries get a `*`.
pub fn render_comparison(columns: &[Column], format: Format) -> String {
    let rows = columns
        .iter()
        .map(|c| c.vector.bounds.len())
        .max()
        .unwrap_or(0);
    let cell = |c: &Column, i: usize| {
        c.vector
            .bounds
            .get(i)
            .map(ToString::to_string)
            .unwrap_or_default()
    };
    match format {
        Format::Text => {
            let i_width = rows.saturating_sub(1).to_string().len().max(1);
            let widths: Vec<usize> = columns
                .iter()
                .map(|c| {
                    (0..rows)
                        .map(|i| cell(c, i).len() + 1)
                        .chain(std::iter::once(c.label.len()))
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let mut out = format!("{:>i_width$}", "i");
            for (c, w) in columns.iter().zip(&widths) {
                let _ = write!(out, "  {:>w$}", c.label);
            }
            out.push('\n');
            for i in 0..rows {
                let best = row_max(columns, i);
                let mut line = format!("{i:>i_width$}");
                for (c, w) in columns.iter().zip(&widths) {
                    let v = c.vector.bounds.get(i);
                    let mark = if v.is_some() && v == best { "*" } else { " " };
                    let _ = write!(line, "  {:>w$}", format!("{}{mark}", cell(c, i)), w = *w);
                }
                out.push_str(line.trim_end());
                out.push('\n');
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("i");
            for c in columns {
                let _ = write!(out, ",{}", c.label);
            }
            out.push('\n');
            for i in 0..rows {
                out.push_str(&i.to_string());
                for c in columns {
                    let _ = write!(out, ",{}", cell(c, i));
                }
                out.push('\n');
            }
            out
        }
        Format::Json => {
            let mut cols = Map::new();
            for c in columns {
                cols.insert(
                    c.label.clone(),
                    json!({
                        "d": c.vector.d,
                        "f0": c.vector.f0_input.to_string(),
                        "bounds": c.vector.bounds.iter().map(ToString::to_string).collect::<Vec<_>>(),
                        "total": c.vector.total().to_string(),
                    }),
                );
            }
            let maxima: Vec<Value> = (0..rows)
                .map(|i| {
                    let best = row_max(columns, i);
                    Value::Array(
                        columns
                            .iter()
                            .filter(|c| c.vector.bounds.get(i) == best)
                            .map(|c| Value::String(c.label.clone()))
                            .collect(),
                    )
                })
                .collect();
            let value = json!({ "columns": Value::Object(cols), "row_maxima": maxima });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&value).expect("serializable")
            )
        }
    }
}

/// Scientific notation with `digits` significant figures, rounding half up:
/// `15777499 -> "1.57775e7"` for 6 digits.
pub fn significant_figures(value: &BigInt, digits: usize) -> String {
    assert!(digits >= 1);
    if value.is_zero() {
        return "0".into();
    }
    let sign = if value.is_negative() { "-" } else { "" };
    let s = value.abs().to_string();
    let mut exponent = s.len() - 1;
    let mut mantissa: Vec<u8> = s.bytes().map(|b| b - b'0').collect();
    if mantissa.len() > digits {
        let round_up = mantissa[digits] >= 5;
        mantissa.truncate(digits);
        if round_up {
            let mut k = digits;
            loop {
                if k == 0 {
                    mantissa.insert(0, 1);
                    mantissa.truncate(digits);
                    exponent += 1;
                    break;
                }
                k -= 1;
                if mantissa[k] == 9 {
                    mantissa[k] = 0;
                } else {
                    mantissa[k] += 1;
                    break;
                }
            }
        }
    }
    let text: String = mantissa.iter().map(|d| char::from(b'0' + d)).collect();
    let (head, tail) = text.split_at(1);
    if tail.is_empty() {
        format!("{sign}{head}e{exponent}")
    } else {
        format!("{sign}{head}.{tail}e{exponent}")
    }
}
