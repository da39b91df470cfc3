//! Output documents and the json/csv/pretty renderers.
//!
//! Coefficients are written as strings ("p" or "p/q") so every JSON
//! document parses back to the exact values.

use std::fmt::Write as _;

use clap::ValueEnum;
use riordan::{Coefficient, LagrangeReport, RiordanMatrix, Series};
use serde::{Deserialize, Serialize};

use crate::input::{parse_literal, SpecError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Pretty,
}

fn strings(c: &[Coefficient]) -> Vec<String> {
    c.iter().map(Coefficient::to_string).collect()
}

fn coefficients(s: &[String]) -> Result<Vec<Coefficient>, SpecError> {
    s.iter()
        .map(|c| c.parse().map_err(|e| SpecError::from(format!("{e}"))))
        .collect()
}

fn series_from(s: &[String]) -> Result<Series, SpecError> {
    Series::from_coeffs(coefficients(s)?).map_err(|e| SpecError::from(e.to_string()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleDoc {
    pub f: Vec<String>,
    pub g: Vec<String>,
    pub depth: usize,
    pub rows: Vec<Vec<String>>,
}

impl TriangleDoc {
    pub fn new(t: &RiordanMatrix) -> Self {
        TriangleDoc {
            f: strings(t.f().coeffs()),
            g: strings(t.g().coeffs()),
            depth: t.depth(),
            rows: t.rows().iter().map(|r| strings(r)).collect(),
        }
    }

    pub fn entries(&self) -> Result<Vec<Vec<Coefficient>>, SpecError> {
        self.rows.iter().map(|r| coefficients(r)).collect()
    }

    pub fn parameters(&self) -> Result<(Series, Series), SpecError> {
        Ok((series_from(&self.f)?, series_from(&self.g)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceDoc {
    pub a: Vec<String>,
    pub z: Vec<String>,
}

impl SequenceDoc {
    pub fn series(&self) -> Result<(Series, Series), SpecError> {
        Ok((series_from(&self.a)?, series_from(&self.z)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub scheme: String,
    pub steps: usize,
    pub iterates: Vec<Vec<String>>,
}

impl TraceDoc {
    pub fn iterates(&self) -> Result<Vec<Series>, SpecError> {
        self.iterates.iter().map(|s| series_from(s)).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ViolationDoc {
    pub n: usize,
    pub k: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LagrangeDoc {
    pub max_n: usize,
    pub violations: Vec<ViolationDoc>,
}

impl LagrangeDoc {
    pub fn new(report: &LagrangeReport) -> Self {
        LagrangeDoc {
            max_n: report.max_n,
            violations: report
                .violations
                .iter()
                .map(|v| ViolationDoc {
                    n: v.n,
                    k: v.k,
                    lhs: v.lhs.to_string(),
                    rhs: v.rhs.to_string(),
                })
                .collect(),
        }
    }
}

/// Reads back a series written by [`render_series`] in JSON form.
pub fn parse_series_json(s: &str) -> Result<Series, SpecError> {
    let c = parse_literal(s)?;
    Series::from_coeffs(c).map_err(|e| SpecError::from(e.to_string()))
}

fn json<T: Serialize>(doc: &T) -> String {
    // documents are plain strings and integers
    serde_json::to_string_pretty(doc).expect("serializable document")
}

fn csv_line(c: &[Coefficient]) -> String {
    strings(c).join(",")
}

pub fn render_series(s: &Series, format: Format) -> String {
    match format {
        Format::Json => json(&strings(s.coeffs())),
        Format::Csv => csv_line(s.coeffs()),
        Format::Pretty => s.to_string(),
    }
}

pub fn render_triangle(t: &RiordanMatrix, format: Format) -> String {
    match format {
        Format::Json => json(&TriangleDoc::new(t)),
        Format::Csv => t
            .rows()
            .iter()
            .map(|r| csv_line(r))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Pretty => {
            let cells: Vec<Vec<String>> = t.rows().iter().map(|r| strings(r)).collect();
            let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
            let mut out = String::new();
            for (n, row) in cells.iter().enumerate() {
                if n > 0 {
                    out.push('\n');
                }
                let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                out.push_str(&line.join(" "));
            }
            out
        }
    }
}

pub fn render_sequences(a: &Series, z: &Series, format: Format) -> String {
    match format {
        Format::Json => json(&SequenceDoc {
            a: strings(a.coeffs()),
            z: strings(z.coeffs()),
        }),
        Format::Csv => format!("A,{}\nZ,{}", csv_line(a.coeffs()), csv_line(z.coeffs())),
        Format::Pretty => format!("A = {a}\nZ = {z}"),
    }
}

pub fn render_trace(scheme: &str, steps: usize, iterates: &[Series], format: Format) -> String {
    match format {
        Format::Json => json(&TraceDoc {
            scheme: scheme.to_string(),
            steps,
            iterates: iterates.iter().map(|s| strings(s.coeffs())).collect(),
        }),
        Format::Csv => iterates
            .iter()
            .map(|s| csv_line(s.coeffs()))
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Pretty => iterates
            .iter()
            .map(Series::to_string)
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

pub fn render_lagrange(report: &LagrangeReport, format: Format) -> String {
    let doc = LagrangeDoc::new(report);
    match format {
        Format::Json => json(&doc),
        Format::Csv => {
            let mut out = String::from("n,k,lhs,rhs");
            for v in &doc.violations {
                let _ = write!(out, "\n{},{},{},{}", v.n, v.k, v.lhs, v.rhs);
            }
            out
        }
        Format::Pretty => {
            if doc.violations.is_empty() {
                return format!("identity holds for 1 <= k <= n <= {}", doc.max_n);
            }
            let mut out = format!(
                "{} violations up to n = {}",
                doc.violations.len(),
                doc.max_n
            );
            for v in &doc.violations {
                let _ = write!(out, "\n  n={} k={}: {} != {}", v.n, v.k, v.lhs, v.rhs);
            }
            out
        }
    }
}
