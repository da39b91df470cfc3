//! Exact rational coefficients.

use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use alloc::string::String;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element of the coefficient field: an arbitrary-precision rational
/// kept in lowest terms with a positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Coefficient(BigRational);

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient(BigRational::zero())
    }

    pub fn one() -> Self {
        Coefficient(BigRational::one())
    }

    /// `numerator / denominator`, or `None` when the denominator is zero.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Option<Self> {
        let den = denominator.into();
        if den.is_zero() {
            return None;
        }
        Some(Coefficient(BigRational::new(numerator.into(), den)))
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Coefficient(BigRational::from_integer(n.into()))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn abs(&self) -> Self {
        Coefficient(self.0.abs())
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Coefficient(self.0.recip()))
        }
    }

    /// `1 / 2^k`.
    pub fn inverse_power_of_two(k: usize) -> Self {
        let den = BigInt::one() << k;
        Coefficient(BigRational::new(BigInt::one(), den))
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }
}

impl From<BigRational> for Coefficient {
    fn from(r: BigRational) -> Self {
        Coefficient(r)
    }
}

impl From<BigInt> for Coefficient {
    fn from(n: BigInt) -> Self {
        Coefficient::from_integer(n)
    }
}

macro_rules! from_primitive {
    ($($t:ty),*) => {$(
        impl From<$t> for Coefficient {
            fn from(n: $t) -> Self {
                Coefficient::from_integer(BigInt::from(n))
            }
        }
    )*};
}
from_primitive!(i8, i16, i32, i64, i128, isize, u8, u16, u32, u64, u128, usize);

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                Coefficient(self.0.$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: &'a Coefficient) -> Coefficient {
                Coefficient(self.0.$method(&rhs.0))
            }
        }
        impl<'a> $trait<Coefficient> for &'a Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: Coefficient) -> Coefficient {
                Coefficient((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Coefficient> for &'a Coefficient {
            type Output = Coefficient;
            fn $method(self, rhs: &'b Coefficient) -> Coefficient {
                Coefficient((&self.0).$method(&rhs.0))
            }
        }
    };
}
binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
// Panics on a zero divisor, like the underlying rational type.
binop!(Div, div);

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Coefficient> for Coefficient {
    fn sub_assign(&mut self, rhs: &Coefficient) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Coefficient> for Coefficient {
    fn mul_assign(&mut self, rhs: &Coefficient) {
        self.0 *= &rhs.0;
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient(-self.0)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient(-&self.0)
    }
}

impl core::iter::Sum for Coefficient {
    fn sum<I: Iterator<Item = Coefficient>>(iter: I) -> Self {
        iter.fold(Coefficient::zero(), |acc, c| acc + c)
    }
}

/// Renders as `p` for integers and `p/q` otherwise.
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseCoefficientError {
    input: String,
    reason: &'static str,
}

impl fmt::Display for ParseCoefficientError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "cannot parse {:?} as a rational: {}",
            self.input, self.reason
        )
    }
}

impl core::error::Error for ParseCoefficientError {}

/// Accepts an integer (`-3`) or a fraction `p/q` with `q != 0`.
impl FromStr for Coefficient {
    type Err = ParseCoefficientError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason| ParseCoefficientError {
            input: String::from(s),
            reason,
        };
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num.parse().map_err(|_| err("invalid numerator"))?;
        match den {
            None => Ok(Coefficient::from_integer(num)),
            Some(d) => {
                let den: BigInt = d.parse().map_err(|_| err("invalid denominator"))?;
                Coefficient::new(num, den).ok_or_else(|| err("zero denominator"))
            }
        }
    }
}
