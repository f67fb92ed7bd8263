//! Text and JSON rendering of results.

use std::fmt;

use hopfcalc_core::linalg::{Basis, LinComb};
use hopfcalc_core::scalar::{format_rational, Rational};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

/// A result in both output formats.
#[derive(Clone, Debug, PartialEq)]
pub struct Rendered {
    pub text: String,
    pub json: Value,
}

impl Rendered {
    pub fn new(text: impl Into<String>, json: Value) -> Self {
        Rendered {
            text: text.into(),
            json,
        }
    }

    pub fn emit(&self, format: Format) -> String {
        let mut out = match format {
            Format::Text => self.text.clone(),
            Format::Json => self.json.to_string(),
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        out
    }
}

/// Canonical text of a linear combination: terms in basis order, `c*b`
/// with `1*` omitted, `0` for zero, tensors as `u (x) v`.
pub fn format_lc<B: Basis + fmt::Display>(x: &LinComb<B>) -> String {
    x.to_string()
}

/// `[{"basis": ..., "coefficient": ...}, ...]` with coefficients as strings.
pub fn lc_json<B: Basis + fmt::Display>(x: &LinComb<B>) -> Value {
    Value::Array(
        x.iter()
            .map(|(b, c)| json!({ "basis": b.to_string(), "coefficient": format_rational(c) }))
            .collect(),
    )
}

pub fn render_lc<B: Basis + fmt::Display>(x: &LinComb<B>) -> Rendered {
    Rendered::new(format_lc(x), lc_json(x))
}

pub fn render_rational(r: &Rational) -> Rendered {
    let s = format_rational(r);
    Rendered::new(s.clone(), json!({ "value": s }))
}

pub fn render_value(v: impl fmt::Display) -> Rendered {
    let s = v.to_string();
    Rendered::new(s.clone(), json!({ "value": s }))
}

pub fn render_list(items: Vec<String>) -> Rendered {
    Rendered::new(items.join("\n"), json!(items))
}
