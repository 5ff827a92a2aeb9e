//! Tabular reports rendered as aligned text, CSV or JSON.

use std::fmt::Write as _;

use clap::ValueEnum;
use serde_json::{json, Value};
use twohilb::linalg::C64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone)]
pub enum Cell {
    Text(String),
    Int(i64),
    Real(f64),
    Complex(C64),
    Missing,
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_string())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as i64)
    }
}

impl From<i32> for Cell {
    fn from(n: i32) -> Self {
        Cell::Int(i64::from(n))
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Real(x)
    }
}

impl From<C64> for Cell {
    fn from(z: C64) -> Self {
        Cell::Complex(z)
    }
}

impl From<Option<f64>> for Cell {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Cell::Missing, Cell::Real)
    }
}

/// What a subcommand hands back: a table, its JSON form, an optional
/// plain-text rendering that replaces the table, and failed checks.
#[derive(Debug, Default)]
pub struct Report {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    pub json: Value,
    pub text: Option<String>,
    pub failures: Vec<String>,
}

impl Report {
    pub fn table(columns: &[&str]) -> Self {
        Report {
            columns: columns.iter().map(|c| c.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        self.rows.push(row);
    }

    /// JSON from the table when no richer document was set.
    fn json_value(&self) -> Value {
        let mut doc = if self.json.is_null() {
            let rows: Vec<Value> = self
                .rows
                .iter()
                .map(|r| {
                    let obj = self
                        .columns
                        .iter()
                        .zip(r)
                        .map(|(c, v)| (c.clone(), cell_json(v)))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            json!({ "rows": rows })
        } else {
            self.json.clone()
        };
        if let Value::Object(map) = &mut doc {
            map.insert("passed".into(), Value::Bool(self.failures.is_empty()));
            map.insert("failures".into(), json!(self.failures));
        }
        doc
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&self.json_value()).expect("reports serialize");
                s.push('\n');
                s
            }
            Format::Csv => self.csv(),
            Format::Text => match &self.text {
                Some(t) => t.clone(),
                None => self.aligned(),
            },
        }
    }

    fn csv(&self) -> String {
        // complex columns split into `name_re,name_im`
        let complex: Vec<bool> = (0..self.columns.len())
            .map(|j| {
                self.rows
                    .iter()
                    .any(|r| matches!(r.get(j), Some(Cell::Complex(_))))
            })
            .collect();
        let mut header = Vec::new();
        for (c, &cx) in self.columns.iter().zip(&complex) {
            if cx {
                header.push(csv_field(&format!("{c}_re")));
                header.push(csv_field(&format!("{c}_im")));
            } else {
                header.push(csv_field(c));
            }
        }
        let mut out = header.join(",");
        out.push('\n');
        for row in &self.rows {
            let mut fields = Vec::new();
            for (j, &cx) in complex.iter().enumerate() {
                let cell = row.get(j).unwrap_or(&Cell::Missing);
                match (cell, cx) {
                    (Cell::Complex(z), _) => {
                        fields.push(sig9(z.re));
                        fields.push(sig9(z.im));
                    }
                    (Cell::Real(x), true) => {
                        fields.push(sig9(*x));
                        fields.push("0".into());
                    }
                    (other, true) => {
                        fields.push(csv_cell(other));
                        fields.push(String::new());
                    }
                    (other, false) => fields.push(csv_cell(other)),
                }
            }
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    fn aligned(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(text_cell).collect())
            .collect();
        let mut widths: Vec<usize> = self.columns.iter().map(|c| c.chars().count()).collect();
        for r in &cells {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |items: &[String]| {
            let mut s = String::new();
            for (i, (item, w)) in items.iter().zip(&widths).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                let _ = write!(s, "{item:<w$}");
            }
            s.trim_end().to_string()
        };
        let mut out = line(&self.columns);
        out.push('\n');
        for r in &cells {
            out.push_str(&line(r));
            out.push('\n');
        }
        for f in &self.failures {
            let _ = writeln!(out, "FAIL: {f}");
        }
        out
    }
}

fn cell_json(c: &Cell) -> Value {
    match c {
        Cell::Text(s) => json!(s),
        Cell::Int(n) => json!(n),
        Cell::Real(x) => json!(x),
        Cell::Complex(z) => json!([z.re, z.im]),
        Cell::Missing => Value::Null,
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_cell(c: &Cell) -> String {
    match c {
        Cell::Text(s) => csv_field(s),
        Cell::Int(n) => n.to_string(),
        Cell::Real(x) => sig9(*x),
        Cell::Complex(z) => format!("{},{}", sig9(z.re), sig9(z.im)),
        Cell::Missing => String::new(),
    }
}

fn text_cell(c: &Cell) -> String {
    match c {
        Cell::Text(s) => s.clone(),
        Cell::Int(n) => n.to_string(),
        Cell::Real(x) => fixed6(*x),
        Cell::Complex(z) => complex6(*z),
        Cell::Missing => "-".into(),
    }
}

/// Six decimals, with `-0.000000` folded to `0.000000`.
pub fn fixed6(x: f64) -> String {
    let s = format!("{x:.6}");
    if s.trim_start_matches('-')
        .chars()
        .all(|ch| ch == '0' || ch == '.')
    {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

/// `a` when the imaginary part vanishes at six decimals, else `a+bi`.
pub fn complex6(z: C64) -> String {
    let im = fixed6(z.im);
    if im == "0.000000" {
        return fixed6(z.re);
    }
    let re = fixed6(z.re);
    if im.starts_with('-') {
        format!("{re}{im}i")
    } else {
        format!("{re}+{im}i")
    }
}

/// Nine significant digits, trailing zeros trimmed, like `%.9g`.
pub fn sig9(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let exp = x.abs().log10().floor() as i32;
    if (-5..9).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        let s = format!("{x:.decimals$}");
        let s = if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        };
        if s == "-0" {
            "0".into()
        } else {
            s
        }
    } else {
        let s = format!("{x:.8e}");
        let (mantissa, exponent) = s.split_once('e').expect("scientific notation");
        let mantissa = if mantissa.contains('.') {
            mantissa.trim_end_matches('0').trim_end_matches('.')
        } else {
            mantissa
        };
        format!("{mantissa}e{exponent}")
    }
}
