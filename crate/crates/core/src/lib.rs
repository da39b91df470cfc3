//! Exact formal power series over the rationals, Picard iteration of
//! contractions on them, Riordan arrays `T(f|g)` and series reversion with
//! the Lagrange inversion identity.
//!
//! Everything is exact. A [`Series`] is a truncation known through an
//! explicit precision, and every operation reports the precision it can
//! vouch for.
//!
//! ```
//! use riordan::{build_triangle, invert_series, Series};
//!
//! // Pascal's triangle is T(1 | 1 - x)
//! let pascal = build_triangle(&Series::one(4), &Series::polynomial([1, -1], 4), 5).unwrap();
//! assert_eq!(pascal.entry(4, 2), 6.into());
//!
//! // the inverse of x - x^2 has the Catalan numbers as coefficients
//! let inv = invert_series(&Series::polynomial([0, 1, -1], 5), 5).unwrap();
//! assert_eq!(inv.to_string(), "x+x^2+2x^3+5x^4+14x^5");
//! ```

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod coefficient;
mod error;
pub mod picard;
pub mod reversion;
pub mod riordan;
mod series;

pub use crate::coefficient::{Coefficient, ParseCoefficientError};
pub use crate::error::{Error, Parameter, Result};
pub use crate::picard::{
    column_scheme, iterate_crossed, iterate_fixed, reciprocal, AffineMap, IterationScheme,
    IterationTrace,
};
pub use crate::reversion::{
    invert_series, lagrange_coefficient, verify_lagrange, LagrangeReport, LagrangeViolation,
    ReversionProblem,
};
pub use crate::riordan::{build_triangle, RiordanMatrix, SequencePair};
pub use crate::series::{Series, SeriesOrder};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
struct ReadmeDoctests;
