use core::fmt;

use crate::series::SeriesOrder;

/// Which parameter of a Riordan pair `T(f|g)` an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parameter {
    F,
    G,
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::F => f.write_str("f"),
            Parameter::G => f.write_str("g"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A coefficient beyond the known precision was requested.
    PrecisionExceeded {
        requested: usize,
        available: usize,
    },
    /// Composition `outer(inner)` with an inner series of order 0.
    CompositionDomain,
    /// Division by a series whose constant term is zero.
    DivisionDomain,
    /// An affine map whose slope has order 0, optionally at a crossed-iteration step.
    NotContractive {
        step: Option<usize>,
    },
    /// Series reversion needs order exactly 1.
    NotInvertible {
        order: SeriesOrder,
    },
    /// A Riordan parameter has a zero constant term.
    ZeroConstantTerm(Parameter),
    DepthMismatch {
        left: usize,
        right: usize,
    },
    InvalidDepth(usize),
    EmptySeries,
    InvalidArgument(&'static str),
    /// An internal identity failed; indicates a bug upstream.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::PrecisionExceeded {
                requested,
                available,
            } => write!(
                f,
                "precision exceeded: degree {requested} requested, series known through degree {available}"
            ),
            Error::CompositionDomain => {
                f.write_str("composition domain: inner series must have zero constant term")
            }
            Error::DivisionDomain => {
                f.write_str("division domain: constant term of the divisor is zero")
            }
            Error::NotContractive { step: Some(step) } => write!(
                f,
                "not contractive: slope at step {step} has a nonzero constant term"
            ),
            Error::NotContractive { step: None } => {
                f.write_str("not contractive: slope has a nonzero constant term")
            }
            Error::NotInvertible { order } => {
                write!(f, "not invertible: order must be 1 (got {order})")
            }
            Error::ZeroConstantTerm(p) => {
                write!(f, "domain error: constant term of {p} must be nonzero")
            }
            Error::DepthMismatch { left, right } => {
                write!(f, "depth mismatch: {left} vs {right}")
            }
            Error::InvalidDepth(d) => write!(f, "invalid depth {d}"),
            Error::EmptySeries => f.write_str("a series needs at least one coefficient"),
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
