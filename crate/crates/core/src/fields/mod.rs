//! Exact arithmetic in F_p and F_{p^k} = F_p[u]/(modulus).
//!
//! An [`FqContext`] is a cheap, shareable handle on a validated field
//! presentation. Every [`FqElement`] carries the handle of the field it
//! lives in; mixing elements of different fields is an error in the
//! `checked_*` methods and a panic in the operator impls.

pub(crate) mod fp_poly;

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use thiserror::Error;

use crate::{CapExceeded, Caps};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("p = {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("p = {0} exceeds the supported machine-width range (p < 2^32)")]
    PrimeTooLarge(u64),
    #[error("extension degree must be at least 1, got {0}")]
    BadDegree(usize),
    #[error("field order {p}^{k} does not fit in 64 bits")]
    OrderOverflow { p: u64, k: usize },
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("operands belong to different fields")]
    ContextMismatch,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error("element coordinates must be {expected} residues below p, got {got:?}")]
    BadCoordinates { expected: usize, got: Vec<u64> },
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

#[derive(Debug, PartialEq, Eq, Hash)]
struct Presentation {
    p: u64,
    k: usize,
    modulus: Vec<u64>,
    order: u64,
}

/// The field F_{p^k}, presented as F_p[u]/(modulus).
#[derive(Clone)]
pub struct FqContext {
    inner: Arc<Presentation>,
}

impl PartialEq for FqContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for FqContext {}

impl Hash for FqContext {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.inner.hash(state)
    }
}

impl fmt::Debug for FqContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F_{}^{} mod {:?}", self.p(), self.k(), self.modulus())
    }
}

impl FqContext {
    /// Builds and validates a field presentation.
    ///
    /// When `modulus` is `None` the smallest monic irreducible polynomial of
    /// degree `k` is chosen, ordering candidates by the integer
    /// `sum c_i p^i` of their lower coefficients. For `k = 1` the modulus is
    /// always `u`.
    pub fn new(p: u64, k: usize, modulus: Option<Vec<u64>>) -> Result<Self, FieldError> {
        if p.is_multiple_of(2) || !is_prime(p) {
            return Err(FieldError::NotOddPrime(p));
        }
        if p >= 1 << 32 {
            return Err(FieldError::PrimeTooLarge(p));
        }
        if k < 1 {
            return Err(FieldError::BadDegree(k));
        }
        let order = u32::try_from(k)
            .ok()
            .and_then(|k32| p.checked_pow(k32))
            .filter(|&o| o < 1 << 63)
            .ok_or(FieldError::OrderOverflow { p, k })?;

        let modulus = match modulus {
            Some(m) => {
                if m.len() != k + 1 {
                    return Err(FieldError::InvalidModulus(format!(
                        "expected {} coefficients for degree {k}, got {}",
                        k + 1,
                        m.len()
                    )));
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(FieldError::InvalidModulus(format!(
                        "coefficient {c} is not a residue mod {p}"
                    )));
                }
                if m[k] != 1 {
                    return Err(FieldError::InvalidModulus("modulus is not monic".into()));
                }
                if k == 1 && m[0] != 0 {
                    return Err(FieldError::InvalidModulus(
                        "the prime field is presented with modulus u".into(),
                    ));
                }
                if !fp_poly::is_irreducible(&m, p) {
                    return Err(FieldError::InvalidModulus(format!(
                        "{m:?} is reducible over F_{p}"
                    )));
                }
                m
            }
            None => smallest_irreducible(p, k),
        };

        Ok(Self {
            inner: Arc::new(Presentation {
                p,
                k,
                modulus,
                order,
            }),
        })
    }

    /// The prime field F_p.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        Self::new(p, 1, None)
    }

    pub fn p(&self) -> u64 {
        self.inner.p
    }

    pub fn k(&self) -> usize {
        self.inner.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    /// p^k.
    pub fn order(&self) -> u64 {
        self.inner.order
    }

    pub fn zero(&self) -> FqElement {
        FqElement {
            ctx: self.clone(),
            coeffs: vec![0; self.k()],
        }
    }

    pub fn one(&self) -> FqElement {
        self.from_int(1)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> FqElement {
        let p = self.p() as i128;
        let r = (n as i128).rem_euclid(p) as u64;
        let mut coeffs = vec![0; self.k()];
        coeffs[0] = r;
        FqElement {
            ctx: self.clone(),
            coeffs,
        }
    }

    /// The class of `u`. For k = 1 this is zero, since the modulus is `u`.
    pub fn generator(&self) -> FqElement {
        let mut coeffs = vec![0; self.k()];
        if self.k() > 1 {
            coeffs[1] = 1;
        }
        FqElement {
            ctx: self.clone(),
            coeffs,
        }
    }

    /// Element with the given coordinates in the basis 1, u, ..., u^{k-1}.
    pub fn element(&self, coeffs: &[u64]) -> Result<FqElement, FieldError> {
        if coeffs.len() != self.k() || coeffs.iter().any(|&c| c >= self.p()) {
            return Err(FieldError::BadCoordinates {
                expected: self.k(),
                got: coeffs.to_vec(),
            });
        }
        Ok(FqElement {
            ctx: self.clone(),
            coeffs: coeffs.to_vec(),
        })
    }

    /// Element whose coordinates are the base-p digits of `index`
    /// (coefficient of u^0 least significant).
    pub fn element_at(&self, mut index: u64) -> FqElement {
        debug_assert!(index < self.order());
        let p = self.p();
        let coeffs = (0..self.k())
            .map(|_| {
                let c = index % p;
                index /= p;
                c
            })
            .collect();
        FqElement {
            ctx: self.clone(),
            coeffs,
        }
    }

    /// Lazily yields all p^k elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FqElement> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    /// Reduces an arbitrary F_p-polynomial in u into the field.
    pub(crate) fn reduce(&self, mut poly: Vec<u64>) -> FqElement {
        let p = self.p();
        for c in poly.iter_mut() {
            *c %= p;
        }
        let mut r = fp_poly::rem(&poly, self.modulus(), p);
        r.resize(self.k(), 0);
        FqElement {
            ctx: self.clone(),
            coeffs: r,
        }
    }
}

/// All p^k elements in lexicographic coefficient order (coefficient of the
/// highest power of u most significant), subject to the enumeration cap.
pub fn enumerate_elements(ctx: &FqContext, caps: &Caps) -> Result<Vec<FqElement>, FieldError> {
    caps.check_enumeration("field elements", ctx.order() as u128)?;
    Ok(ctx.elements().collect())
}

fn smallest_irreducible(p: u64, k: usize) -> Vec<u64> {
    if k == 1 {
        return vec![0, 1];
    }
    let mut digits = vec![0u64; k];
    loop {
        let mut candidate = digits.clone();
        candidate.push(1);
        if fp_poly::is_irreducible(&candidate, p) {
            return candidate;
        }
        // increment base-p counter, least significant digit first
        let mut i = 0;
        loop {
            digits[i] += 1;
            if digits[i] < p {
                break;
            }
            digits[i] = 0;
            i += 1;
            assert!(
                i < k,
                "irreducible polynomials of every degree exist over F_p"
            );
        }
    }
}

/// An element of F_{p^k} as its coordinate vector in the power basis.
#[derive(Clone)]
pub struct FqElement {
    ctx: FqContext,
    coeffs: Vec<u64>,
}

impl PartialEq for FqElement {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs && self.ctx == other.ctx
    }
}

impl Eq for FqElement {}

impl Hash for FqElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.coeffs.hash(state)
    }
}

impl PartialOrd for FqElement {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by enumeration index; elements of different fields compare by
/// coordinates alone.
impl Ord for FqElement {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.coeffs.iter().rev().cmp(other.coeffs.iter().rev())
    }
}

impl FqElement {
    pub fn context(&self) -> &FqContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == 1 && self.coeffs[1..].iter().all(|&c| c == 0)
    }

    /// Position in the enumeration order of [`FqContext::elements`].
    pub fn index(&self) -> u64 {
        let p = self.ctx.p();
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    /// The residue when the element lies in the prime subfield.
    pub fn prime_value(&self) -> Option<u64> {
        self.coeffs[1..]
            .iter()
            .all(|&c| c == 0)
            .then_some(self.coeffs[0])
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(FieldError::ContextMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let p = self.ctx.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + b) % p)
            .collect();
        Ok(Self {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let p = self.ctx.p();
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| (a + p - b) % p)
            .collect();
        Ok(Self {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        let p = self.ctx.p();
        if self.ctx.k() == 1 {
            return Ok(Self {
                ctx: self.ctx.clone(),
                coeffs: vec![fp_poly::mul_mod_p(self.coeffs[0], other.coeffs[0], p)],
            });
        }
        Ok(self
            .ctx
            .reduce(fp_poly::mul(&self.coeffs, &other.coeffs, p)))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        self.checked_mul(&other.inv()?)
    }

    /// Multiplies by a residue of the prime field.
    pub fn scale(&self, lambda: u64) -> Self {
        let p = self.ctx.p();
        let lambda = lambda % p;
        Self {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .map(|&c| fp_poly::mul_mod_p(c, lambda, p))
                .collect(),
        }
    }

    /// Multiplicative inverse, computed by extended Euclid on the
    /// coefficient polynomial.
    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        let p = self.ctx.p();
        if self.ctx.k() == 1 {
            return Ok(self
                .ctx
                .from_int(fp_poly::inv_mod_p(self.coeffs[0], p) as i64));
        }
        let mut a = self.coeffs.clone();
        fp_poly::trim(&mut a);
        let inv = fp_poly::inv_mod_poly(&a, self.ctx.modulus(), p)
            .expect("nonzero element of a field is invertible");
        Ok(self.ctx.reduce(inv))
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.ctx.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            exp >>= 1;
        }
        acc
    }

    /// `self^{p^i}`, by `i mod k` successive p-th powers.
    pub fn frobenius(&self, i: usize) -> Self {
        let k = self.ctx.k();
        let p = self.ctx.p();
        (0..i % k).fold(self.clone(), |acc, _| acc.pow(p))
    }

    /// All Frobenius conjugates `self^{p^i}` for `0 <= i < k`.
    pub fn conjugates(&self) -> Vec<Self> {
        let p = self.ctx.p();
        let mut out = Vec::with_capacity(self.ctx.k());
        let mut cur = self.clone();
        for _ in 0..self.ctx.k() {
            let next = cur.pow(p);
            out.push(cur);
            cur = next;
        }
        out
    }

    /// Absolute trace to F_p, returned as an element of the prime subfield.
    pub fn trace(&self) -> Self {
        self.conjugates()
            .iter()
            .fold(self.ctx.zero(), |acc, c| &acc + c)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&FqElement> for &FqElement {
            type Output = FqElement;
            fn $method(self, rhs: &FqElement) -> FqElement {
                self.$checked(rhs)
                    .expect("arithmetic across different fields")
            }
        }
        impl $tr<FqElement> for FqElement {
            type Output = FqElement;
            fn $method(self, rhs: FqElement) -> FqElement {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &FqElement {
    type Output = FqElement;
    fn neg(self) -> FqElement {
        let p = self.ctx.p();
        FqElement {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|&c| (p - c) % p).collect(),
        }
    }
}

impl Neg for FqElement {
    type Output = FqElement;
    fn neg(self) -> FqElement {
        -&self
    }
}

/// Renders in the curve-expression grammar, e.g. `2`, `g`, `1 + 2*g^2`.
impl fmt::Display for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "g".to_string(),
                (1, c) => format!("{c}*g"),
                (i, 1) => format!("g^{i}"),
                (i, c) => format!("{c}*g^{i}"),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl fmt::Debug for FqElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FqContext {
        FqContext::new(3, 2, Some(vec![1, 0, 1])).unwrap()
    }

    #[test]
    fn context_construction() {
        let f3 = FqContext::new(3, 1, None).unwrap();
        assert_eq!(f3.modulus(), &[0, 1]);
        assert_eq!(f3.order(), 3);
        assert_eq!(f9().order(), 9);
        assert_eq!(FqContext::new(4, 1, None), Err(FieldError::NotOddPrime(4)));
        assert_eq!(FqContext::new(2, 1, None), Err(FieldError::NotOddPrime(2)));
        assert_eq!(FqContext::new(9, 1, None), Err(FieldError::NotOddPrime(9)));
        assert_eq!(FqContext::new(3, 0, None), Err(FieldError::BadDegree(0)));
        // u^2 + 1 splits over F_5
        assert!(matches!(
            FqContext::new(5, 2, Some(vec![1, 0, 1])),
            Err(FieldError::InvalidModulus(_))
        ));
        // non-monic
        assert!(matches!(
            FqContext::new(3, 2, Some(vec![1, 0, 2])),
            Err(FieldError::InvalidModulus(_))
        ));
    }

    #[test]
    fn default_modulus_is_smallest_irreducible() {
        assert_eq!(FqContext::new(3, 2, None).unwrap().modulus(), &[1, 0, 1]);
        // u^2 + 2 over F_5: 2 is a non-residue mod 5; smaller candidates u^2, u^2+1 split
        assert_eq!(FqContext::new(5, 2, None).unwrap().modulus(), &[2, 0, 1]);
        // over F_3, u^3 + 2u + 1 has index 1 + 2*3 = 7; every smaller candidate has a root
        assert_eq!(FqContext::new(3, 3, None).unwrap().modulus(), &[1, 2, 0, 1]);
    }

    #[test]
    fn u_squared_is_minus_one_in_f9() {
        let f = f9();
        let u = f.generator();
        assert_eq!(&u * &u, f.from_int(2));
    }

    #[test]
    fn small_prime_field_arithmetic() {
        let f3 = FqContext::prime(3).unwrap();
        assert_eq!(&f3.from_int(2) + &f3.from_int(2), f3.from_int(1));
        let f5 = FqContext::prime(5).unwrap();
        assert_eq!(&f5.from_int(4) * &f5.from_int(4), f5.from_int(1));
        assert_eq!(f5.from_int(2).inv().unwrap(), f5.from_int(3));
        assert_eq!(f3.zero().inv(), Err(FieldError::ZeroInverse));
    }

    #[test]
    fn inverse_of_generator_in_f9() {
        let f = f9();
        assert_eq!(f.generator().inv().unwrap(), f.element(&[0, 2]).unwrap());
    }

    #[test]
    fn frobenius_and_trace_in_f9() {
        let f = f9();
        let u = f.generator();
        assert_eq!(u.frobenius(1), f.element(&[0, 2]).unwrap());
        assert_eq!(u.frobenius(0), u);
        for a in f.elements() {
            assert_eq!(a.frobenius(2), a);
        }
        assert!(u.trace().is_zero());
        assert_eq!(f.one().trace(), f.from_int(2));
    }

    #[test]
    fn trace_in_prime_field_is_identity() {
        let f7 = FqContext::prime(7).unwrap();
        for a in f7.elements() {
            assert_eq!(a.trace(), a);
        }
    }

    #[test]
    fn cross_field_arithmetic_is_rejected() {
        let a = FqContext::prime(3).unwrap().one();
        let b = FqContext::prime(5).unwrap().one();
        assert_eq!(a.checked_add(&b), Err(FieldError::ContextMismatch));
        assert_eq!(a.checked_mul(&b), Err(FieldError::ContextMismatch));
        // same presentation built twice is the same field
        let c = FqContext::prime(3).unwrap().one();
        assert!(a.checked_add(&c).is_ok());
    }

    #[test]
    fn enumeration_order_and_cap() {
        let f3 = FqContext::prime(3).unwrap();
        let all = enumerate_elements(&f3, &Caps::default()).unwrap();
        assert_eq!(all, vec![f3.from_int(0), f3.from_int(1), f3.from_int(2)]);
        let f = f9();
        let all = enumerate_elements(&f, &Caps::default()).unwrap();
        assert_eq!(all.len(), 9);
        assert_eq!(&all[..3], &[f.from_int(0), f.from_int(1), f.from_int(2)]);
        let f25 = FqContext::new(5, 2, None).unwrap();
        assert_eq!(
            enumerate_elements(&f25, &Caps::default()).unwrap().len(),
            25
        );
        let tiny = Caps {
            enumeration: 10,
            ..Caps::default()
        };
        assert!(matches!(
            enumerate_elements(&f25, &tiny),
            Err(FieldError::Cap(_))
        ));
    }

    #[test]
    fn index_roundtrip() {
        let f = FqContext::new(5, 3, None).unwrap();
        for i in (0..f.order()).step_by(7) {
            assert_eq!(f.element_at(i).index(), i);
        }
    }
}
