use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::CoeffField;
use super::PolyError;

/// Degree of a univariate polynomial; the zero polynomial has degree −∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }
}

impl Add for Degree {
    type Output = Degree;
    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Dense univariate polynomial in `t`, coefficients low-to-high with no
/// trailing zeros.
#[derive(Clone, Debug)]
pub struct UniPoly<F: CoeffField> {
    field: F,
    coeffs: Vec<F::Elem>,
}

impl<F: CoeffField> PartialEq for UniPoly<F> {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl<F: CoeffField> UniPoly<F> {
    pub fn new(field: F, mut coeffs: Vec<F::Elem>) -> Self {
        while coeffs.last().is_some_and(|c| field.is_zero(c)) {
            coeffs.pop();
        }
        Self { field, coeffs }
    }

    pub fn zero(field: F) -> Self {
        Self {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::new(field, vec![c])
    }

    pub fn one(field: F) -> Self {
        let one = field.one();
        Self::constant(field, one)
    }

    /// `c * t^n`.
    pub fn monomial(field: F, c: F::Elem, n: usize) -> Self {
        let mut coeffs = vec![field.zero(); n];
        coeffs.push(c);
        Self::new(field, coeffs)
    }

    /// The indeterminate `t`.
    pub fn t(field: F) -> Self {
        let one = field.one();
        Self::monomial(field, one, 1)
    }

    pub fn from_ints(field: F, coeffs: &[i64]) -> Self {
        let cs = coeffs.iter().map(|&c| field.from_int(c)).collect();
        Self::new(field, cs)
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Coefficient of `t^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Self::new(f.clone(), self.coeffs.iter().map(|a| f.mul(a, c)).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&self.field.inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// Long division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), PolyError> {
        let f = &self.field;
        let lead_inv = divisor
            .leading()
            .and_then(|c| f.inv(c))
            .ok_or(PolyError::DivisionByZero)?;
        let dlen = divisor.coeffs.len();
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((Self::zero(f.clone()), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dlen + 1];
        for shift in (0..quot.len()).rev() {
            let c = f.mul(&rem[shift + dlen - 1], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] = f.sub(&rem[shift + j], &f.mul(&c, d));
            }
            quot[shift] = c;
        }
        rem.truncate(dlen - 1);
        Ok((Self::new(f.clone(), quot), Self::new(f.clone(), rem)))
    }

    /// Monic greatest common divisor; gcd(0, 0) = 0.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("divisor is nonzero");
            a = b;
            // monic remainders keep rational coefficients from blowing up
            b = if r.is_zero() { r } else { r.monic() };
        }
        a.monic()
    }

    /// Horner evaluation at a coefficient.
    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::one(self.field.clone());
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
}

impl<F: CoeffField> Add for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn add(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let cs = (0..n)
            .map(|i| f.add(&self.coeff(i), &rhs.coeff(i)))
            .collect();
        UniPoly::new(f.clone(), cs)
    }
}

impl<F: CoeffField> Sub for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn sub(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        let f = &self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let cs = (0..n)
            .map(|i| f.sub(&self.coeff(i), &rhs.coeff(i)))
            .collect();
        UniPoly::new(f.clone(), cs)
    }
}

impl<F: CoeffField> Mul for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn mul(self, rhs: &UniPoly<F>) -> UniPoly<F> {
        let f = &self.field;
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero(f.clone());
        }
        let mut out = vec![f.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        UniPoly::new(f.clone(), out)
    }
}

impl<F: CoeffField> Neg for &UniPoly<F> {
    type Output = UniPoly<F>;
    fn neg(self) -> UniPoly<F> {
        let f = &self.field;
        UniPoly::new(f.clone(), self.coeffs.iter().map(|c| f.neg(c)).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl<F: CoeffField> $tr for UniPoly<F> {
            type Output = UniPoly<F>;
            fn $method(self, rhs: UniPoly<F>) -> UniPoly<F> {
                (&self).$method(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl<F: CoeffField> fmt::Display for UniPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let cs = if cs.contains(['+', '-', '/']) {
                format!("({cs})")
            } else {
                cs
            };
            let is_one = *c == self.field.one();
            match i {
                0 => write!(f, "{cs}")?,
                _ if is_one => write!(f, "t")?,
                _ => write!(f, "{cs}*t")?,
            }
            if i > 1 {
                write!(f, "^{i}")?;
            }
        }
        Ok(())
    }
}
