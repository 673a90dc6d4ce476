use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::fields::{FqContext, FqElement};

/// A coefficient field, passed by value alongside its elements so that
/// elements which need context (finite-field elements) and those that don't
/// (rationals) share one polynomial implementation.
pub trait CoeffField: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug + fmt::Display;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    #[allow(clippy::wrong_self_convention)]
    fn from_int(&self, n: i64) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
}

/// The field Q with exact arbitrary-precision arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl CoeffField for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_int(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
}

impl CoeffField for FqContext {
    type Elem = FqElement;

    fn zero(&self) -> FqElement {
        FqContext::zero(self)
    }
    fn one(&self) -> FqElement {
        FqContext::one(self)
    }
    fn from_int(&self, n: i64) -> FqElement {
        FqContext::from_int(self, n)
    }
    fn is_zero(&self, a: &FqElement) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &FqElement, b: &FqElement) -> FqElement {
        a + b
    }
    fn sub(&self, a: &FqElement, b: &FqElement) -> FqElement {
        a - b
    }
    fn mul(&self, a: &FqElement, b: &FqElement) -> FqElement {
        a * b
    }
    fn neg(&self, a: &FqElement) -> FqElement {
        -a
    }
    fn inv(&self, a: &FqElement) -> Option<FqElement> {
        a.inv().ok()
    }
}
