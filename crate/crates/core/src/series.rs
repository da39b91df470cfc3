//! Truncated formal power series over the rationals.
//!
//! A [`Series`] stores the coefficients of `x^0..=x^P` where `P` is its
//! precision: every stored coefficient is authoritative, nothing beyond it is
//! known. Binary operations return the smaller of the operand precisions.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::vec;
use alloc::vec::Vec;

use crate::coefficient::Coefficient;
use crate::error::{Error, Result};

/// The order of a series: index of its first nonzero coefficient.
///
/// `Infinite` is reported when every stored coefficient is zero, meaning the
/// order exceeds the precision.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeriesOrder {
    Finite(usize),
    Infinite,
}

impl SeriesOrder {
    pub fn is_at_least(self, n: usize) -> bool {
        match self {
            SeriesOrder::Finite(k) => k >= n,
            SeriesOrder::Infinite => true,
        }
    }
}

impl fmt::Display for SeriesOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesOrder::Finite(k) => write!(f, "{k}"),
            SeriesOrder::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    // len == precision + 1, never empty
    coeffs: Vec<Coefficient>,
}

impl Series {
    /// A series known through degree `coeffs.len() - 1`.
    pub fn from_coeffs(coeffs: Vec<Coefficient>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptySeries);
        }
        Ok(Series { coeffs })
    }

    /// An exact polynomial viewed at the given precision: padded with zeros,
    /// or truncated if it has terms past `precision`.
    pub fn polynomial<I, C>(coeffs: I, precision: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<Coefficient>,
    {
        let mut v: Vec<Coefficient> = coeffs
            .into_iter()
            .take(precision + 1)
            .map(Into::into)
            .collect();
        v.resize(precision + 1, Coefficient::zero());
        Series { coeffs: v }
    }

    pub fn zero(precision: usize) -> Self {
        Series {
            coeffs: vec![Coefficient::zero(); precision + 1],
        }
    }

    pub fn constant(c: Coefficient, precision: usize) -> Self {
        Self::monomial(c, 0, precision)
    }

    pub fn one(precision: usize) -> Self {
        Self::constant(Coefficient::one(), precision)
    }

    /// The series `x`.
    pub fn x(precision: usize) -> Self {
        Self::monomial(Coefficient::one(), 1, precision)
    }

    /// `c * x^k`, which is zero at this precision when `k > precision`.
    pub fn monomial(c: Coefficient, k: usize, precision: usize) -> Self {
        let mut s = Self::zero(precision);
        if k <= precision {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn precision(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Coefficient] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Coefficient> {
        self.coeffs
    }

    /// `[x^n]` of the series.
    pub fn coefficient(&self, n: usize) -> Result<&Coefficient> {
        self.coeffs.get(n).ok_or(Error::PrecisionExceeded {
            requested: n,
            available: self.precision(),
        })
    }

    pub fn constant_term(&self) -> &Coefficient {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coefficient::is_zero)
    }

    pub fn order(&self) -> SeriesOrder {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map_or(SeriesOrder::Infinite, SeriesOrder::Finite)
    }

    /// Degree of the highest nonzero stored coefficient, `None` when zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Ultrametric distance `1/2^ω(self - other)`, zero when the difference
    /// vanishes to the common precision.
    pub fn distance(&self, other: &Series) -> Coefficient {
        let p = self.precision().min(other.precision());
        (0..=p)
            .find(|&i| self.coeffs[i] != other.coeffs[i])
            .map_or_else(Coefficient::zero, Coefficient::inverse_power_of_two)
    }

    /// Coefficientwise equality through degree `m`.
    pub fn agrees_through(&self, other: &Series, m: usize) -> bool {
        m <= self.precision() && m <= other.precision() && self.coeffs[..=m] == other.coeffs[..=m]
    }

    /// Degree-`m` Taylor truncation.
    pub fn truncate(&self, m: usize) -> Result<Series> {
        if m > self.precision() {
            return Err(Error::PrecisionExceeded {
                requested: m,
                available: self.precision(),
            });
        }
        Ok(Series {
            coeffs: self.coeffs[..=m].to_vec(),
        })
    }

    /// The Taylor polynomial of degree `m`, as an exact polynomial viewed at
    /// `precision` (zero-padded past degree `m`).
    pub fn taylor(&self, m: usize, precision: usize) -> Result<Series> {
        let t = self.truncate(m.min(precision))?;
        Ok(Series::polynomial(t.coeffs, precision))
    }

    pub fn negate(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let p = self.precision().min(other.precision());
        Series {
            coeffs: (0..=p)
                .map(|i| &self.coeffs[i] + &other.coeffs[i])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let p = self.precision().min(other.precision());
        Series {
            coeffs: (0..=p)
                .map(|i| &self.coeffs[i] - &other.coeffs[i])
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coefficient) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn cauchy_product(&self, other: &Series) -> Series {
        let p = self.precision().min(other.precision());
        let mut out = vec![Coefficient::zero(); p + 1];
        for (i, a) in self.coeffs[..=p].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=p - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        Series { coeffs: out }
    }

    /// `self^k` with `self^0 = 1`.
    pub fn power(&self, k: usize) -> Series {
        let mut result = Series::one(self.precision());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.cauchy_product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.cauchy_product(&base);
            }
        }
        result
    }

    /// `self * x^k`; the precision grows by `k`.
    pub fn mul_x_pow(&self, k: usize) -> Series {
        let mut coeffs = vec![Coefficient::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Series { coeffs }
    }

    /// `self / x`; needs a zero constant term and precision at least 1.
    pub fn div_x(&self) -> Result<Series> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::DivisionDomain);
        }
        if self.precision() == 0 {
            return Err(Error::PrecisionExceeded {
                requested: 1,
                available: 0,
            });
        }
        Ok(Series {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// `self(inner)` by Horner's rule, exact through `min` of the precisions.
    pub fn compose(&self, inner: &Series) -> Result<Series> {
        if !inner.coeffs[0].is_zero() {
            return Err(Error::CompositionDomain);
        }
        let p = self.precision().min(inner.precision());
        let inner = inner.truncate(p)?;
        let mut acc = Series::constant(self.coeffs[p].clone(), p);
        for c in self.coeffs[..p].iter().rev() {
            acc = acc.cauchy_product(&inner);
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Formal derivative; the precision drops by one, so a series known only
    /// through degree 0 has no known derivative coefficients.
    pub fn derivative(&self) -> Result<Series> {
        if self.precision() == 0 {
            return Err(Error::PrecisionExceeded {
                requested: 1,
                available: 0,
            });
        }
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Coefficient::from(i))
                .collect(),
        })
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(x^{})", self, self.precision() + 1)
    }
}

/// Ascending-degree polynomial form such as `1+2x-(1/2)x^3`; zero terms are
/// omitted and the zero series renders as `0`.
impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if i == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                if mag.is_integer() {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            if i == 1 {
                f.write_str("x")?;
            } else {
                write!(f, "x^{i}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

macro_rules! series_op {
    ($trait:ident, $method:ident, $impl_fn:ident) => {
        impl<'a, 'b> $trait<&'b Series> for &'a Series {
            type Output = Series;
            fn $method(self, rhs: &'b Series) -> Series {
                Series::$impl_fn(self, rhs)
            }
        }
        impl $trait<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                Series::$impl_fn(&self, &rhs)
            }
        }
    };
}
series_op!(Add, add, add);
series_op!(Sub, sub, sub);
series_op!(Mul, mul, cauchy_product);

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.negate()
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        self.negate()
    }
}
