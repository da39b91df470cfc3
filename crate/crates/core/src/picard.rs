//! Picard (successive approximation) iteration of affine contractions on
//! truncated power series.
//!
//! With the distance `d(f, g) = 1/2^ω(f-g)`, any map `t ↦ a·t + b` whose
//! slope `a` has order at least one halves distances, so iterating it from
//! any start converges to its unique fixed point `b / (1 - a)`. A sequence of
//! such maps sharing that contraction constant, applied one after another
//! ("crossed iteration"), converges to the fixed point of their limit map.
//! Reciprocation `f/g` and the columns `x^(n-1) f / g^n` of a Riordan array
//! are both obtained this way.

use alloc::boxed::Box;
use alloc::vec::Vec;

use crate::coefficient::Coefficient;
use crate::error::{Error, Result};
use crate::series::Series;

/// The map `t ↦ slope·t + offset`, with `order(slope) ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineMap {
    slope: Series,
    offset: Series,
}

impl AffineMap {
    pub fn new(slope: Series, offset: Series) -> Result<Self> {
        if !slope.constant_term().is_zero() {
            return Err(Error::NotContractive { step: None });
        }
        Ok(AffineMap { slope, offset })
    }

    pub fn slope(&self) -> &Series {
        &self.slope
    }

    pub fn offset(&self) -> &Series {
        &self.offset
    }

    pub fn apply(&self, t: &Series) -> Series {
        self.slope.cauchy_product(t).add(&self.offset)
    }

    /// The unique fixed point through degree `precision`, found by plain
    /// iteration from zero.
    pub fn fixed_point(&self, precision: usize) -> Result<Series> {
        let available = self.slope.precision().min(self.offset.precision());
        if precision > available {
            return Err(Error::PrecisionExceeded {
                requested: precision,
                available,
            });
        }
        let trace = iterate_fixed(self, &Series::zero(precision), precision + 1);
        trace.last().truncate(precision)
    }
}

/// The iterates of a Picard process, starting point first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationTrace {
    iterates: Vec<Series>,
}

impl IterationTrace {
    pub fn iterates(&self) -> &[Series] {
        &self.iterates
    }

    pub fn into_iterates(self) -> Vec<Series> {
        self.iterates
    }

    /// Number of iterates, including the start.
    pub fn len(&self) -> usize {
        self.iterates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.iterates.is_empty()
    }

    pub fn last(&self) -> &Series {
        self.iterates
            .last()
            .expect("a trace always holds its start point")
    }

    /// Splits each polynomial iterate `m` into the part agreeing with `limit`
    /// (degrees `< m`) and a remainder, and returns the remainder
    /// coefficients from degree `m` up to the iterate's degree. Iterates
    /// with no remainder are skipped, so the rows start at the first
    /// iterate that overshoots.
    ///
    /// Fails if an iterate does not agree with `limit` below degree `m`.
    pub fn remainder_rows(&self, limit: &Series) -> Result<Vec<Vec<Coefficient>>> {
        let mut rows = Vec::new();
        for (m, it) in self.iterates.iter().enumerate().skip(1) {
            if !it.agrees_through(limit, m - 1) {
                return Err(Error::InvalidArgument(
                    "iterate does not agree with the limit below its step index",
                ));
            }
            if let Some(deg) = it.degree().filter(|&d| d >= m) {
                rows.push(it.coeffs()[m..=deg].to_vec());
            }
        }
        Ok(rows)
    }
}

/// Plain Picard iteration: `steps` applications of `map` starting at `start`.
pub fn iterate_fixed(map: &AffineMap, start: &Series, steps: usize) -> IterationTrace {
    let mut iterates = Vec::with_capacity(steps + 1);
    iterates.push(start.clone());
    for _ in 0..steps {
        let next = map.apply(iterates.last().unwrap());
        iterates.push(next);
    }
    IterationTrace { iterates }
}

type MapFn = dyn Fn(usize) -> Result<(Series, Series)> + Send + Sync;

/// An equi-contractive sequence of affine maps, indexed by step.
pub struct IterationScheme {
    precision: usize,
    maps: Box<MapFn>,
    limit: Option<AffineMap>,
}

impl core::fmt::Debug for IterationScheme {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("IterationScheme")
            .field("precision", &self.precision)
            .field("limit", &self.limit)
            .finish_non_exhaustive()
    }
}

impl IterationScheme {
    /// `maps(m)` yields the `(slope, offset)` of the map used at step `m`.
    /// Iterates are carried at `precision`.
    pub fn new<F>(precision: usize, maps: F) -> Self
    where
        F: Fn(usize) -> Result<(Series, Series)> + Send + Sync + 'static,
    {
        IterationScheme {
            precision,
            maps: Box::new(maps),
            limit: None,
        }
    }

    /// The scheme that uses `map` at every step.
    pub fn constant(map: AffineMap) -> Self {
        let precision = map.slope.precision().min(map.offset.precision());
        let m = map.clone();
        IterationScheme::new(precision, move |_| Ok((m.slope.clone(), m.offset.clone())))
            .with_limit(map)
    }

    pub fn with_limit(mut self, limit: AffineMap) -> Self {
        self.limit = Some(limit);
        self
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    pub fn limit_map(&self) -> Option<&AffineMap> {
        self.limit.as_ref()
    }

    /// The map at step `m`, checked for contractivity.
    pub fn map(&self, m: usize) -> Result<AffineMap> {
        let (slope, offset) = (self.maps)(m)?;
        AffineMap::new(slope, offset).map_err(|_| Error::NotContractive { step: Some(m) })
    }
}

/// Crossed iteration: iterate `m + 1` is `scheme.map(m)` applied to iterate `m`.
pub fn iterate_crossed(
    scheme: &IterationScheme,
    start: &Series,
    steps: usize,
) -> Result<IterationTrace> {
    let start = if start.precision() > scheme.precision {
        start.truncate(scheme.precision)?
    } else {
        start.clone()
    };
    let mut iterates = Vec::with_capacity(steps + 1);
    iterates.push(start);
    for m in 0..steps {
        let map = scheme.map(m)?;
        let next = map.apply(iterates.last().unwrap());
        iterates.push(next);
    }
    Ok(IterationTrace { iterates })
}

fn contraction_slope(g: &Series) -> Result<(Coefficient, Series)> {
    let g0 = g.constant_term().clone();
    let inv = g0.recip().ok_or(Error::DivisionDomain)?;
    // (g0 - g) / g0
    let mut slope = g.scale(&inv).negate();
    slope = slope.add(&Series::one(g.precision()));
    Ok((inv, slope))
}

/// Scheme `t ↦ T_m((g0 - g)/g0)·t + T_m(f/g0)` whose crossed iterates from
/// zero converge to `f/g`.
pub fn reciprocation_scheme(f: &Series, g: &Series) -> Result<IterationScheme> {
    let precision = f.precision().min(g.precision());
    let (inv_g0, slope) = contraction_slope(&g.truncate(precision)?)?;
    let offset = f.truncate(precision)?.scale(&inv_g0);
    let limit = AffineMap::new(slope.clone(), offset.clone())?;
    Ok(IterationScheme::new(precision, move |m| {
        check_step(m, precision)?;
        Ok((slope.taylor(m, precision)?, offset.taylor(m, precision)?))
    })
    .with_limit(limit))
}

/// Scheme building column `n` (counted from 1) of `T(f|g)`, whose limit is
/// `x^(n-1) f / g^n`.
///
/// For `n = 1` this is [`reciprocation_scheme`] and `prev_column` is ignored.
/// For `n ≥ 2`, `prev_column` must be column `n - 1`, i.e. `x^(n-2) f / g^(n-1)`,
/// and step `m` uses `t ↦ T_m((g0 - g)/g0)·t + x·T_(m-1)(prev_column / g0)`.
pub fn column_scheme(
    f: &Series,
    g: &Series,
    n: usize,
    prev_column: &Series,
) -> Result<IterationScheme> {
    match n {
        0 => Err(Error::InvalidArgument("columns are counted from 1")),
        1 => reciprocation_scheme(f, g),
        _ => {
            let precision = g.precision().min(prev_column.precision() + 1);
            let (inv_g0, slope) = contraction_slope(&g.truncate(precision)?)?;
            let feed = prev_column.scale(&inv_g0);
            let limit = AffineMap::new(slope.clone(), feed.mul_x_pow(1).truncate(precision)?)?;
            Ok(IterationScheme::new(precision, move |m| {
                check_step(m, precision)?;
                let offset = match m {
                    0 => Series::zero(precision),
                    _ => feed.taylor(m - 1, precision - 1)?.mul_x_pow(1),
                };
                Ok((slope.taylor(m, precision)?, offset))
            })
            .with_limit(limit))
        }
    }
}

fn check_step(m: usize, precision: usize) -> Result<()> {
    if m > precision {
        Err(Error::PrecisionExceeded {
            requested: m,
            available: precision,
        })
    } else {
        Ok(())
    }
}

/// `f / g` through degree `precision`, by `precision + 1` crossed iterations
/// of the reciprocation scheme.
pub fn reciprocal(f: &Series, g: &Series, precision: usize) -> Result<Series> {
    if g.constant_term().is_zero() {
        return Err(Error::DivisionDomain);
    }
    let f = f.truncate(precision)?;
    let g = g.truncate(precision)?;
    let scheme = reciprocation_scheme(&f, &g)?;
    let trace = iterate_crossed(&scheme, &Series::zero(precision), precision + 1)?;
    Ok(trace.last().clone())
}

/// Builds columns `1..=n` of `T(f|g)` one after another, each by `steps`
/// crossed iterations fed by the previous column, and returns the trace of
/// column `n`. Every iterate is carried at precision `steps`.
pub fn crossed_column_trace(
    f: &Series,
    g: &Series,
    n: usize,
    steps: usize,
) -> Result<IterationTrace> {
    if n == 0 {
        return Err(Error::InvalidArgument("columns are counted from 1"));
    }
    if steps == 0 {
        return Err(Error::InvalidArgument("at least one step is needed"));
    }
    let f = f.truncate(steps)?;
    let g = g.truncate(steps)?;
    let zero = Series::zero(steps);
    let mut trace = iterate_crossed(&reciprocation_scheme(&f, &g)?, &zero, steps)?;
    for col in 2..=n {
        // the last iterate is exact through degree steps - 1
        let prev = trace.last().truncate(steps - 1)?;
        let scheme = column_scheme(&f, &g, col, &prev)?;
        trace = iterate_crossed(&scheme, &zero, steps)?;
    }
    Ok(trace)
}
