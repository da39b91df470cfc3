//! Riordan arrays `T(f|g)`: the lower-triangular matrix whose column `k`
//! is the series `x^k f / g^(k+1)`.
//!
//! Columns are generated by the division recurrence, each one fed by the
//! column to its left:
//!
//! ```text
//! d(0,0) = f0/g0
//! d(n,0) = (f_n - g_1 d(n-1,0) - ... - g_n d(0,0)) / g0
//! d(n,k) = (d(n-1,k-1) - g_1 d(n-1,k) - ... - g_(n-k) d(k,k)) / g0
//! ```
//!
//! All arrays carry an explicit `depth` (rows `0..depth`); group operations
//! need equal depths and preserve them. The parameters `f` and `g` are kept
//! through degree `depth - 1`, which is exactly what the block depends on.

use alloc::vec::Vec;

use crate::coefficient::Coefficient;
use crate::error::{Error, Parameter, Result};
use crate::picard::reciprocal;
use crate::reversion::invert_series;
use crate::series::Series;

#[derive(Debug, Clone)]
pub struct RiordanMatrix {
    f: Series,
    g: Series,
    depth: usize,
    // rows[n] holds d(n,0..=n)
    rows: Vec<Vec<Coefficient>>,
}

/// Arrays compare by their entry blocks. Parameters past what the block
/// determines may differ between equal arrays.
impl PartialEq for RiordanMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.depth == other.depth && self.rows == other.rows
    }
}

impl Eq for RiordanMatrix {}

/// The A- and Z-sequences of a Riordan array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequencePair {
    pub a_seq: Series,
    pub z_seq: Series,
}

/// Builds `T(f|g)` with rows `0..depth` column by column.
pub fn build_triangle(f: &Series, g: &Series, depth: usize) -> Result<RiordanMatrix> {
    if depth == 0 {
        return Err(Error::InvalidDepth(depth));
    }
    if f.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm(Parameter::F));
    }
    if g.constant_term().is_zero() {
        return Err(Error::ZeroConstantTerm(Parameter::G));
    }
    let p = depth - 1;
    let f = f.truncate(p)?;
    let g = g.truncate(p)?;
    let inv_g0 = g.constant_term().recip().ok_or(Error::DivisionDomain)?;
    let gs = g.coeffs();

    let mut rows: Vec<Vec<Coefficient>> = (0..depth).map(|n| Vec::with_capacity(n + 1)).collect();
    for k in 0..depth {
        for n in k..depth {
            // feed: f_n for the first column, the upper-left neighbour otherwise
            let mut acc = if k == 0 {
                f.coeffs()[n].clone()
            } else {
                rows[n - 1][k - 1].clone()
            };
            for j in 1..=n - k {
                let gj = &gs[j];
                if !gj.is_zero() {
                    acc -= &(gj * &rows[n - j][k]);
                }
            }
            rows[n].push(acc * &inv_g0);
        }
    }
    Ok(RiordanMatrix { f, g, depth, rows })
}

fn check_depth(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DepthMismatch { left: a, right: b })
    }
}

impl RiordanMatrix {
    pub fn new(f: &Series, g: &Series, depth: usize) -> Result<Self> {
        build_triangle(f, g, depth)
    }

    /// `T(1|1)`.
    pub fn identity(depth: usize) -> Result<Self> {
        let one = Series::one(depth.saturating_sub(1));
        build_triangle(&one, &one, depth)
    }

    /// Appell subgroup element `T(d|1)`, the Toeplitz matrix of `d`.
    pub fn appell(d: &Series, depth: usize) -> Result<Self> {
        build_triangle(d, &Series::one(d.precision()), depth)
    }

    /// Bell subgroup element `T(1|1/d)`.
    pub fn bell(d: &Series, depth: usize) -> Result<Self> {
        let p = depth.saturating_sub(1);
        let one = Series::one(p);
        build_triangle(&one, &reciprocal(&one, d, p)?, depth)
    }

    /// Associated (Lagrange) subgroup element `T(1/h|1/h)`.
    pub fn associated(h: &Series, depth: usize) -> Result<Self> {
        let p = depth.saturating_sub(1);
        let inv = reciprocal(&Series::one(p), h, p)?;
        build_triangle(&inv, &inv, depth)
    }

    /// From the classical pair `(d(x), h(x))`, with `h` of order 1:
    /// `(d, h) = T(x d / h | x / h)`.
    pub fn from_classical(d: &Series, h: &Series, depth: usize) -> Result<Self> {
        if !h.order().is_at_least(1) || h.precision() == 0 || h.coeffs()[1].is_zero() {
            return Err(Error::InvalidArgument("h must have order exactly 1"));
        }
        let p = depth.saturating_sub(1);
        let h_over_x = h.div_x()?;
        let g = reciprocal(&Series::one(p), &h_over_x, p)?;
        let f = d.truncate(p)?.cauchy_product(&g);
        build_triangle(&f, &g, depth)
    }

    /// The classical pair `(f/g, x/g)`, both through degree `depth - 1`.
    pub fn to_classical(&self) -> Result<(Series, Series)> {
        let p = self.depth - 1;
        let d = reciprocal(&self.f, &self.g, p)?;
        let h = reciprocal(&Series::one(p), &self.g, p)?
            .mul_x_pow(1)
            .truncate(p)?;
        Ok((d, h))
    }

    pub fn f(&self) -> &Series {
        &self.f
    }

    pub fn g(&self) -> &Series {
        &self.g
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn rows(&self) -> &[Vec<Coefficient>] {
        &self.rows
    }

    /// `d(n,k)`, zero above the diagonal. Panics if `n >= depth`.
    pub fn entry(&self, n: usize, k: usize) -> Coefficient {
        self.rows[n]
            .get(k)
            .cloned()
            .unwrap_or_else(Coefficient::zero)
    }

    /// Column `k` as a series through degree `depth - 1`.
    pub fn column(&self, k: usize) -> Series {
        Series::polynomial((0..self.depth).map(|n| self.entry(n, k)), self.depth - 1)
    }

    /// The same array with fewer rows.
    pub fn truncated(&self, depth: usize) -> Result<Self> {
        if depth == 0 || depth > self.depth {
            return Err(Error::InvalidDepth(depth));
        }
        Ok(RiordanMatrix {
            f: self.f.truncate(depth - 1)?,
            g: self.g.truncate(depth - 1)?,
            depth,
            rows: self.rows[..depth].to_vec(),
        })
    }

    /// The linear map `h ↦ (f/g)·h(x/g)`, as the matrix–vector product of
    /// the block with the coefficients of `h`.
    pub fn apply(&self, h: &Series) -> Result<Series> {
        let p = self.depth - 1;
        let h = h.truncate(p)?;
        let out = self.rows.iter().map(|row| {
            row.iter()
                .zip(h.coeffs())
                .map(|(d, c)| d * c)
                .sum::<Coefficient>()
        });
        Ok(Series::polynomial(out, p))
    }

    /// `T(f1|g1)·T(f2|g2) = T(f1·f2(x/g1) | g1·g2(x/g1))`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        check_depth(self.depth, other.depth)?;
        let p = self.depth - 1;
        let x_over_g1 = reciprocal(&Series::one(p), &self.g, p)?.mul_x_pow(1);
        let f = self.f.cauchy_product(&other.f.compose(&x_over_g1)?);
        let g = self.g.cauchy_product(&other.g.compose(&x_over_g1)?);
        build_triangle(&f, &g, self.depth)
    }

    /// `self^n` by repeated products; `self^0` is the identity.
    pub fn pow(&self, n: u32) -> Result<Self> {
        let mut acc = RiordanMatrix::identity(self.depth)?;
        for _ in 0..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `ω = x/g` through degree `depth`, and its compositional inverse
    /// through degree `depth - 1`.
    fn omega_inverse(&self) -> Result<Series> {
        let p = self.depth - 1;
        let omega = reciprocal(&Series::one(p), &self.g, p)?.mul_x_pow(1);
        invert_series(&omega, p)
    }

    /// `T(f|g)^-1 = T(1/f(ω⁻¹) | 1/g(ω⁻¹))` with `ω = x/g`.
    pub fn inverse(&self) -> Result<Self> {
        let p = self.depth - 1;
        let w = self.omega_inverse()?;
        let one = Series::one(p);
        let f = reciprocal(&one, &self.f.compose(&w)?, p)?;
        let g = reciprocal(&one, &self.g.compose(&w)?, p)?;
        build_triangle(&f, &g, self.depth)
    }

    /// `A = 1/g(ω⁻¹)` through degree `depth - 1` and
    /// `Z = (A - (f0/g0)/f(ω⁻¹)) / x` through degree `depth - 2`.
    pub fn a_z_sequences(&self) -> Result<SequencePair> {
        if self.depth < 2 {
            return Err(Error::InvalidDepth(self.depth));
        }
        let p = self.depth - 1;
        let w = self.omega_inverse()?;
        let one = Series::one(p);
        let a_seq = reciprocal(&one, &self.g.compose(&w)?, p)?;
        let ratio = self.f.constant_term() / self.g.constant_term();
        let inv_f = reciprocal(&one, &self.f.compose(&w)?, p)?;
        let numerator = a_seq.sub(&inv_f.scale(&ratio));
        if !numerator.constant_term().is_zero() {
            return Err(Error::Internal(
                "A - (f0/g0)/f(ω⁻¹) has a nonzero constant term",
            ));
        }
        let z_seq = numerator.div_x()?;
        Ok(SequencePair { a_seq, z_seq })
    }

    /// The inverse from the A- and Z-sequences alone:
    /// `T^-1(f|g) = T((g0/f0)(A - xZ) | A)`.
    pub fn inverse_via_sequences(&self) -> Result<Self> {
        let SequencePair { a_seq, z_seq } = self.a_z_sequences()?;
        let ratio = self.g.constant_term() / self.f.constant_term();
        let f = a_seq.sub(&z_seq.mul_x_pow(1)).scale(&ratio);
        build_triangle(&f, &a_seq, self.depth)
    }

    /// `T(f·g^m | g)` at the same depth. For `m > 0` its lower-right block
    /// from `(m, m)` is `self`; for `m < 0` it is `self` with the first `|m|`
    /// rows and columns removed.
    pub fn shift(&self, m: isize) -> Result<Self> {
        let p = self.depth - 1;
        let k = m.unsigned_abs();
        let f = if m >= 0 {
            self.f.cauchy_product(&self.g.power(k))
        } else {
            reciprocal(&self.f, &self.g.power(k), p)?
        };
        build_triangle(&f, &self.g, self.depth)
    }

    /// Deletes the first `m` rows and columns of the block, giving
    /// `T(f/g^m | g)` at depth `depth - m`.
    pub fn drop_leading(&self, m: usize) -> Result<Self> {
        if m >= self.depth {
            return Err(Error::InvalidDepth(self.depth.saturating_sub(m)));
        }
        let depth = self.depth - m;
        let p = depth - 1;
        let f = reciprocal(&self.f, &self.g.power(m), p)?;
        let rows = self.rows[m..].iter().map(|row| row[m..].to_vec()).collect();
        Ok(RiordanMatrix {
            f,
            g: self.g.truncate(p)?,
            depth,
            rows,
        })
    }
}
