//! Series arguments: degree-indexed literals or named presets.

use std::fmt;
use std::str::FromStr;

use riordan::{Coefficient, Series};
use serde_json::Value;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    Geometric,
    PascalG,
    One,
    Arithgeo,
    CuriousF,
    CuriousG,
}

impl Preset {
    pub const ALL: [Preset; 6] = [
        Preset::Geometric,
        Preset::PascalG,
        Preset::One,
        Preset::Arithgeo,
        Preset::CuriousF,
        Preset::CuriousG,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Geometric => "geometric",
            Preset::PascalG => "pascal_g",
            Preset::One => "one",
            Preset::Arithgeo => "arithgeo",
            Preset::CuriousF => "curious_f",
            Preset::CuriousG => "curious_g",
        }
    }

    pub fn series(self, precision: usize) -> Series {
        match self {
            Preset::Geometric => Series::polynomial(std::iter::repeat(1), precision),
            Preset::PascalG => Series::polynomial([1, -1], precision),
            Preset::One => Series::one(precision),
            // 1/(1-x)^2
            Preset::Arithgeo | Preset::CuriousF => Series::polynomial(1i64.., precision),
            Preset::CuriousG => Series::polynomial([-1, 2], precision),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SeriesSpec {
    Literal(Vec<Coefficient>),
    Preset(Preset),
}

impl SeriesSpec {
    /// The series at `precision`; literals are polynomials, padded with
    /// zeros or truncated as needed.
    pub fn to_series(&self, precision: usize) -> Series {
        match self {
            SeriesSpec::Literal(c) => Series::polynomial(c.iter().cloned(), precision),
            SeriesSpec::Preset(p) => p.series(precision),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecError(String);

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for SpecError {}

impl From<String> for SpecError {
    fn from(s: String) -> Self {
        SpecError(s)
    }
}

impl FromStr for SeriesSpec {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with('[') {
            return parse_literal(s).map(SeriesSpec::Literal);
        }
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .map(SeriesSpec::Preset)
            .ok_or_else(|| {
                let names: Vec<_> = Preset::ALL.iter().map(|p| p.name()).collect();
                SpecError(format!(
                    "unknown preset {s:?} (expected a JSON array or one of {})",
                    names.join(", ")
                ))
            })
    }
}

/// Parses a JSON array whose items are integers or rational strings.
pub fn parse_literal(s: &str) -> Result<Vec<Coefficient>, SpecError> {
    let value: Value =
        serde_json::from_str(s).map_err(|e| SpecError(format!("invalid JSON: {e}")))?;
    let Value::Array(items) = value else {
        return Err(SpecError("expected a JSON array".into()));
    };
    if items.is_empty() {
        return Err(SpecError("empty series literal".into()));
    }
    items
        .iter()
        .enumerate()
        .map(|(i, item)| parse_item(item).map_err(|e| SpecError(format!("item {i}: {e}"))))
        .collect()
}

fn parse_item(item: &Value) -> Result<Coefficient, String> {
    match item {
        Value::String(s) => s.parse().map_err(|e| format!("{e}")),
        Value::Number(n) => n
            .as_i64()
            .map(Coefficient::from)
            .or_else(|| n.as_u64().map(Coefficient::from))
            .ok_or_else(|| format!("{n} is not an integer; write fractions as \"p/q\"")),
        other => Err(format!("expected a string or integer, got {other}")),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    Geometric,
    Arithgeo,
    Curious,
    Column(usize),
}

impl FromStr for Scheme {
    type Err = SpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "geometric" => return Ok(Scheme::Geometric),
            "arithgeo" => return Ok(Scheme::Arithgeo),
            "curious" => return Ok(Scheme::Curious),
            _ => {}
        }
        let n = s
            .strip_prefix("column:")
            .or_else(|| s.strip_prefix("column(").and_then(|r| r.strip_suffix(')')))
            .ok_or_else(|| {
                SpecError(format!(
                    "unknown scheme {s:?} (expected geometric, arithgeo, curious or column:N)"
                ))
            })?;
        match n.parse::<usize>() {
            Ok(n) if n >= 1 => Ok(Scheme::Column(n)),
            _ => Err(SpecError(format!(
                "column index must be a positive integer, got {n:?}"
            ))),
        }
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scheme::Geometric => f.write_str("geometric"),
            Scheme::Arithgeo => f.write_str("arithgeo"),
            Scheme::Curious => f.write_str("curious"),
            Scheme::Column(n) => write!(f, "column:{n}"),
        }
    }
}
