//! Independent oracles for testing the `riordan` crate.
//!
//! Everything here works on plain coefficient vectors of `BigRational` and
//! deliberately avoids the `riordan` algorithms it is used to check. The
//! only things borrowed from `riordan` are the value types, for conversion.

#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use riordan::{Coefficient, Series};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn to_q(s: &Series) -> Vec<Q> {
    s.coeffs().iter().map(|c| c.as_rational().clone()).collect()
}

pub fn from_q(v: &[Q]) -> Series {
    Series::from_coeffs(v.iter().cloned().map(Coefficient::from).collect()).expect("non-empty")
}

/// Coefficients `0..=n` of a vector, zero-padded.
pub fn padded(a: &[Q], n: usize) -> Vec<Q> {
    (0..=n)
        .map(|i| a.get(i).cloned().unwrap_or_else(Q::zero))
        .collect()
}

/// Coefficients `0..=n` of `a·b`.
pub fn poly_mul(a: &[Q], b: &[Q], n: usize) -> Vec<Q> {
    let mut out = vec![Q::zero(); n + 1];
    for (i, ai) in a.iter().enumerate().take(n + 1) {
        for (j, bj) in b.iter().enumerate().take(n + 1 - i) {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Coefficients `0..=n` of `a^k`, by `k` plain multiplications.
pub fn poly_pow(a: &[Q], k: usize, n: usize) -> Vec<Q> {
    let mut acc = padded(&[Q::one()], n);
    for _ in 0..k {
        acc = poly_mul(&acc, a, n);
    }
    acc
}

/// Coefficients `0..=n` of `f/g` by long division: `q_i = (f_i - Σ_{j<i} q_j g_{i-j}) / g_0`.
pub fn long_division(f: &[Q], g: &[Q], n: usize) -> Vec<Q> {
    assert!(
        !g[0].is_zero(),
        "division by a series with zero constant term"
    );
    let f = padded(f, n);
    let g = padded(g, n);
    let mut out: Vec<Q> = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let mut acc = f[i].clone();
        for (j, qj) in out.iter().enumerate() {
            acc -= qj * &g[i - j];
        }
        out.push(acc / &g[0]);
    }
    out
}

/// Coefficients `0..=n` of `Σ_j outer_j inner^j` (inner without constant term).
pub fn compose_naive(outer: &[Q], inner: &[Q], n: usize) -> Vec<Q> {
    assert!(inner.first().is_none_or(Zero::is_zero));
    let mut out = vec![Q::zero(); n + 1];
    let mut power = padded(&[Q::one()], n);
    for c in outer.iter().take(n + 1) {
        for (o, p) in out.iter_mut().zip(&power) {
            *o += c * p;
        }
        power = poly_mul(&power, inner, n);
    }
    out
}

/// Solves `ω(y) = x` for `y` degree by degree. Coefficients `0..=n`.
///
/// At degree `m ≥ 2` the equation reads
/// `ω_1 y_m + [x^m] Σ_{j≥2} ω_j y^j = 0`, where the sum involves only
/// `y_1..y_(m-1)`.
pub fn back_substitution_inverse(omega: &[Q], n: usize) -> Vec<Q> {
    let omega = padded(omega, n);
    assert!(omega[0].is_zero() && !omega[1].is_zero());
    let mut y = vec![Q::zero(); n + 1];
    if n == 0 {
        return y;
    }
    y[1] = omega[1].recip();
    for m in 2..=n {
        // y is exact through m - 1 and y[m] is still zero
        let mut rest = Q::zero();
        let mut power = poly_mul(&y, &y, m);
        for wj in omega.iter().take(m + 1).skip(2) {
            rest += wj * &power[m];
            power = poly_mul(&power, &y, m);
        }
        y[m] = -rest / &omega[1];
    }
    y
}

/// `n!/(k!(n-k)!)`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let fact = |m: u64| (1..=m).fold(BigInt::one(), |acc, i| acc * BigInt::from(i));
    fact(n) / (fact(k) * fact(n - k))
}

/// Square dense copy of a lower-triangular row block.
pub fn dense(rows: &[Vec<Coefficient>]) -> Vec<Vec<Q>> {
    let d = rows.len();
    rows.iter()
        .map(|r| {
            (0..d)
                .map(|k| r.get(k).map_or_else(Q::zero, |c| c.as_rational().clone()))
                .collect()
        })
        .collect()
}

pub fn identity(d: usize) -> Vec<Vec<Q>> {
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| if i == j { Q::one() } else { Q::zero() })
                .collect()
        })
        .collect()
}

pub fn matmul(a: &[Vec<Q>], b: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let d = a.len();
    (0..d)
        .map(|i| {
            (0..d)
                .map(|j| (0..d).fold(Q::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

/// Inverse of a lower-triangular matrix with nonzero diagonal, by forward
/// substitution on each unit vector.
pub fn invert_lower(a: &[Vec<Q>]) -> Vec<Vec<Q>> {
    let d = a.len();
    let mut inv = vec![vec![Q::zero(); d]; d];
    for col in 0..d {
        for i in col..d {
            let mut acc = if i == col { Q::one() } else { Q::zero() };
            for k in col..i {
                acc -= &a[i][k] * &inv[k][col];
            }
            inv[i][col] = acc / &a[i][i];
        }
    }
    inv
}

/// Every `d[n+1][k+1] = Σ_j a_j d[n][k+j]` inside the block.
pub fn a_recurrence_holds(block: &[Vec<Q>], a: &[Q]) -> bool {
    let d = block.len();
    (0..d.saturating_sub(1)).all(|n| {
        (0..=n).all(|k| {
            let s = (0..=n - k).fold(Q::zero(), |acc, j| {
                acc + a.get(j).cloned().unwrap_or_else(Q::zero) * &block[n][k + j]
            });
            s == block[n + 1][k + 1]
        })
    })
}

/// Every `d[n+1][0] = Σ_j z_j d[n][j]` inside the block.
pub fn z_recurrence_holds(block: &[Vec<Q>], z: &[Q]) -> bool {
    let d = block.len();
    (0..d.saturating_sub(1)).all(|n| {
        let s = (0..=n).fold(Q::zero(), |acc, j| {
            acc + z.get(j).cloned().unwrap_or_else(Q::zero) * &block[n][j]
        });
        s == block[n + 1][0]
    })
}

/// Closed form `a(n,j) = n+j-1 + Σ_{k=1}^{j-1} (-1)^k C(n+j-1-k, n+j-2k) 2^(n+j-2k)`
/// for the curious triangle with the column `1, 2, 3, ...` prepended,
/// 1-based (`1 ≤ j ≤ n`).
pub fn curious_closed_form(n: i64, j: i64) -> BigInt {
    let mut acc = BigInt::from(n + j - 1);
    for k in 1..j {
        let top = n + j - 1 - k;
        let bottom = n + j - 2 * k;
        if bottom < 0 || bottom > top {
            continue;
        }
        let term = binomial(top as u64, bottom as u64) * (BigInt::one() << (bottom as usize));
        if k % 2 == 1 {
            acc -= term;
        } else {
            acc += term;
        }
    }
    acc
}

/// Seeded source of small random rationals and series.
pub struct Panel {
    rng: ChaCha8Rng,
}

impl Panel {
    pub fn new(seed: u64) -> Self {
        Panel {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Numerator in `-5..=5`, denominator in `1..=4`.
    pub fn rational(&mut self) -> Q {
        q(self.rng.gen_range(-5..=5), self.rng.gen_range(1..=4))
    }

    pub fn nonzero_rational(&mut self) -> Q {
        loop {
            let r = self.rational();
            if !r.is_zero() {
                return r;
            }
        }
    }

    /// Coefficients `0..=precision`, with a nonzero constant term if asked.
    pub fn coeffs(&mut self, precision: usize, unit: bool) -> Vec<Q> {
        let mut v: Vec<Q> = (0..=precision).map(|_| self.rational()).collect();
        if unit {
            v[0] = self.nonzero_rational();
        }
        v
    }

    pub fn series(&mut self, precision: usize, unit: bool) -> Series {
        from_q(&self.coeffs(precision, unit))
    }

    /// A random series of order exactly one.
    pub fn omega(&mut self, precision: usize) -> Series {
        let mut v = self.coeffs(precision, false);
        v[0] = Q::zero();
        v[1] = self.nonzero_rational();
        from_q(&v)
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.gen_range(0..upper)
    }
}
