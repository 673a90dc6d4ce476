//! Polynomials and rational functions.
//!
//! - [`UniPoly`]: dense univariate polynomials over any [`CoeffField`]
//!   (rationals or a finite field), with long division and gcd.
//! - [`RationalFunction`]: canonical elements of F(t).
//! - [`SparsePoly`]: sparse polynomials in x, y (and z) over F_{p^k}; the
//!   aliases [`BiPoly`] and [`TriPoly`] name the two shapes in use.
//! - [`parse_bipoly`]: the curve-expression grammar.

mod coeff;
mod parse;
mod ratfunc;
mod sparse;
mod uni;

use thiserror::Error;

pub use coeff::{CoeffField, Rationals};
pub use parse::{parse_bipoly, parse_tripoly, ParseError};
pub use ratfunc::RationalFunction;
pub use sparse::{BiPoly, Monomial, SparsePoly, TriPoly, VARIABLE_NAMES};
pub use uni::{Degree, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("rational function with zero denominator")]
    ZeroDenominator,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
}

/// `(quotient, remainder)` of univariate long division.
pub fn unipoly_divmod<F: CoeffField>(
    a: &UniPoly<F>,
    b: &UniPoly<F>,
) -> Result<(UniPoly<F>, UniPoly<F>), PolyError> {
    a.div_rem(b)
}
