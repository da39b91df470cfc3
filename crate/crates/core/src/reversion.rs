//! Compositional inversion by Picard iteration, and the Lagrange inversion
//! identity as a checkable statement.
//!
//! For `ω` of order one write `g = x/ω`. The inverse `ω⁻¹` is the unique
//! fixed point of `F(y) = x·g(y)` on series without constant term, and `F`
//! halves distances there. Since the degree-`k` truncation of `F(y)` only
//! depends on the degree-`(k-1)` truncation of `y`, iterating
//! `T_1 = g0·x`, `T_k = T_k(F(T_(k-1)))` produces `ω⁻¹` exactly through
//! degree `k` after stage `k`.

use alloc::vec::Vec;

use crate::coefficient::Coefficient;
use crate::error::{Error, Result};
use crate::picard::reciprocal;
use crate::series::{Series, SeriesOrder};

/// A series `ω` with `ω(0) = 0`, `ω'(0) ≠ 0`, together with `g = x/ω`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReversionProblem {
    omega: Series,
    g: Series,
}

impl ReversionProblem {
    pub fn new(omega: &Series) -> Result<Self> {
        let order = omega.order();
        if order != SeriesOrder::Finite(1) {
            return Err(Error::NotInvertible { order });
        }
        let reduced = omega.div_x()?;
        let p = reduced.precision();
        let g = reciprocal(&Series::one(p), &reduced, p)?;
        Ok(ReversionProblem {
            omega: omega.clone(),
            g,
        })
    }

    pub fn omega(&self) -> &Series {
        &self.omega
    }

    /// `x/ω`, known through degree `precision(ω) - 1`.
    pub fn g(&self) -> &Series {
        &self.g
    }

    /// The contraction `F(y) = x·g(y)`; `y` must have no constant term.
    pub fn contraction(&self, y: &Series) -> Result<Series> {
        Ok(self.g.compose(y)?.mul_x_pow(1))
    }

    /// `ω⁻¹` through degree `precision`, which may be at most `precision(ω)`.
    pub fn invert(&self, precision: usize) -> Result<Series> {
        if precision > self.omega.precision() {
            return Err(Error::PrecisionExceeded {
                requested: precision,
                available: self.omega.precision(),
            });
        }
        if precision == 0 {
            return Ok(Series::zero(0));
        }
        let mut t = Series::monomial(self.g.constant_term().clone(), 1, 1);
        for k in 2..=precision {
            // T_k(x·g(T_(k-1))) only needs g and T_(k-1) through degree k - 1
            let inner = t.truncate(k - 1)?;
            t = self.g.truncate(k - 1)?.compose(&inner)?.mul_x_pow(1);
        }
        Ok(t)
    }
}

/// Compositional inverse of `omega` through degree `precision`.
pub fn invert_series(omega: &Series, precision: usize) -> Result<Series> {
    ReversionProblem::new(omega)?.invert(precision)
}

/// The coefficient `[x^n] (ω⁻¹)^k` predicted by Lagrange inversion,
/// `(k/n)·[x^(n-k)] g^n`, for `g = x/ω`. Zero when `k > n`.
pub fn lagrange_coefficient(g: &Series, n: usize, k: usize) -> Result<Coefficient> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidArgument("n and k must be positive"));
    }
    if g.constant_term().is_zero() {
        return Err(Error::DivisionDomain);
    }
    if k > n {
        return Ok(Coefficient::zero());
    }
    let d = n - k;
    let gn = g.truncate(d)?.power(n);
    Ok(Coefficient::new(k, n).unwrap() * &gn.coeffs()[d])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangeViolation {
    pub n: usize,
    pub k: usize,
    /// `n·[x^n](ω⁻¹)^k`
    pub lhs: Coefficient,
    /// `k·[x^(n-k)] g^n`
    pub rhs: Coefficient,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LagrangeReport {
    pub max_n: usize,
    pub violations: Vec<LagrangeViolation>,
}

impl LagrangeReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `n·[x^n](ω⁻¹)^k = k·[x^(n-k)](x/ω)^n` for all `1 ≤ k ≤ n ≤ max_n`,
/// with `ω⁻¹` computed by [`invert_series`]. Needs `precision(ω) ≥ max_n`.
#[allow(clippy::needless_range_loop)]
pub fn verify_lagrange(omega: &Series, max_n: usize) -> Result<LagrangeReport> {
    let problem = ReversionProblem::new(omega)?;
    let inverse = problem.invert(max_n)?;
    let g = problem.g().truncate(max_n.saturating_sub(1))?;

    // inverse_powers[k] = (ω⁻¹)^k, g_powers[n] = g^n
    let mut inverse_powers = Vec::with_capacity(max_n + 1);
    let mut g_powers = Vec::with_capacity(max_n + 1);
    inverse_powers.push(Series::one(max_n));
    g_powers.push(Series::one(g.precision()));
    for i in 1..=max_n {
        inverse_powers.push(inverse_powers[i - 1].cauchy_product(&inverse));
        g_powers.push(g_powers[i - 1].cauchy_product(&g));
    }

    let mut violations = Vec::new();
    for n in 1..=max_n {
        for k in 1..=n {
            let lhs = Coefficient::from(n) * &inverse_powers[k].coeffs()[n];
            let rhs = Coefficient::from(k) * &g_powers[n].coeffs()[n - k];
            if lhs != rhs {
                violations.push(LagrangeViolation { n, k, lhs, rhs });
            }
        }
    }
    Ok(LagrangeReport { max_n, violations })
}
