//! Decide whether a nonzero additive map `f` on a finite field can satisfy
//! `f(x) f(y) = 0` on every point of a plane curve, evaluate the zero-forcing
//! bounds that rule such maps out, and realize the rational-function
//! counterexample for the hyperbola over Q(t) and F_p(t).
//!
//! Module map:
//!
//! - [`fields`]: F_p and F_{p^k} arithmetic, Frobenius, trace.
//! - [`poly`]: univariate and sparse multivariate polynomials, rational
//!   functions, and the curve-expression parser.
//! - [`curve`]: point enumeration, points at infinity, singular points,
//!   Hasse-Weil window, surface slicing, curve files.
//! - [`additive`]: linearized maps, their matrices, kernels and hyperplanes.
//! - [`cover`]: the decision procedures, the zero-forcing bounds and the
//!   combined analysis.
//! - [`published`]: worked examples and thresholds as originally claimed,
//!   kept for comparison.
//! - [`valuation`]: degree and p-adic valuations, valuation rings and the
//!   explicit additive functional on rational function fields.

pub mod additive;
pub mod cover;
pub mod curve;
pub mod fields;
pub mod poly;
pub mod published;
pub mod valuation;

use thiserror::Error;

pub use fields::{FqContext, FqElement};
pub use num_rational::BigRational;

/// Upper limits on exhaustive enumerations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Field elements, point candidates and hyperplanes.
    pub enumeration: u64,
    /// Exhaustive scans over all p^{k^2} additive maps.
    pub oracle: u64,
    /// Entries of an affine point list kept in serialized reports.
    pub list: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            enumeration: 1 << 20,
            oracle: 1 << 24,
            list: 10_000,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{what}: {needed} items exceed the cap of {cap}")]
pub struct CapExceeded {
    pub what: &'static str,
    pub needed: u128,
    pub cap: u64,
}

impl Caps {
    /// Both enumeration caps set to `cap`.
    pub fn uniform(cap: u64) -> Self {
        Self {
            enumeration: cap,
            oracle: cap,
            ..Self::default()
        }
    }

    pub fn check_enumeration(&self, what: &'static str, needed: u128) -> Result<(), CapExceeded> {
        check(what, needed, self.enumeration)
    }

    pub fn check_oracle(&self, what: &'static str, needed: u128) -> Result<(), CapExceeded> {
        check(what, needed, self.oracle)
    }
}

fn check(what: &'static str, needed: u128, cap: u64) -> Result<(), CapExceeded> {
    if needed > cap as u128 {
        Err(CapExceeded { what, needed, cap })
    } else {
        Ok(())
    }
}

/// `base^exp` as u128, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: u64, exp: u64) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc == u128::MAX {
            break;
        }
    }
    acc
}
