use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::CoeffField;
use super::uni::UniPoly;
use super::PolyError;

/// An element of F(t) kept in canonical form: numerator and denominator
/// coprime, denominator monic, zero represented as 0/1.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction<F: CoeffField> {
    num: UniPoly<F>,
    den: UniPoly<F>,
}

impl<F: CoeffField> RationalFunction<F> {
    pub fn new(num: UniPoly<F>, den: UniPoly<F>) -> Result<Self, PolyError> {
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: UniPoly<F>, den: UniPoly<F>) -> Self {
        let field = num.field().clone();
        if num.is_zero() {
            return Self {
                num,
                den: UniPoly::one(field),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g).expect("gcd is nonzero");
        let (den, _) = den.div_rem(&g).expect("gcd is nonzero");
        let lc_inv = field
            .inv(den.leading().expect("denominator is nonzero"))
            .expect("nonzero leading coefficient");
        Self {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    /// Canonical form of num/den when the two are already coprime.
    fn coprime(num: UniPoly<F>, den: UniPoly<F>) -> Self {
        let field = num.field().clone();
        if num.is_zero() {
            return Self {
                num,
                den: UniPoly::one(field),
            };
        }
        let lc_inv = field
            .inv(den.leading().expect("denominator is nonzero"))
            .expect("nonzero leading coefficient");
        Self {
            num: num.scale(&lc_inv),
            den: den.scale(&lc_inv),
        }
    }

    fn is_unit(p: &UniPoly<F>) -> bool {
        p.degree() == super::Degree::Finite(0)
    }

    /// x/g and y/g for g = gcd(x, y), skipping the divisions when g = 1.
    fn cancel(x: &UniPoly<F>, y: &UniPoly<F>) -> (UniPoly<F>, UniPoly<F>) {
        let g = x.gcd(y);
        if Self::is_unit(&g) {
            return (x.clone(), y.clone());
        }
        (
            x.div_rem(&g).expect("gcd is nonzero").0,
            y.div_rem(&g).expect("gcd is nonzero").0,
        )
    }

    fn sum(&self, rhs: &Self, num: UniPoly<F>) -> Self {
        // coprime denominators give a reduced sum
        if Self::is_unit(&self.den.gcd(&rhs.den)) {
            Self::coprime(num, &self.den * &rhs.den)
        } else {
            Self::normalized(num, &self.den * &rhs.den)
        }
    }

    pub fn from_poly(p: UniPoly<F>) -> Self {
        let one = UniPoly::one(p.field().clone());
        Self { num: p, den: one }
    }

    pub fn constant(field: F, c: F::Elem) -> Self {
        Self::from_poly(UniPoly::constant(field, c))
    }

    pub fn zero(field: F) -> Self {
        Self::from_poly(UniPoly::zero(field))
    }

    pub fn one(field: F) -> Self {
        Self::from_poly(UniPoly::one(field))
    }

    pub fn t(field: F) -> Self {
        Self::from_poly(UniPoly::t(field))
    }

    pub fn field(&self) -> &F {
        self.num.field()
    }

    pub fn num(&self) -> &UniPoly<F> {
        &self.num
    }

    pub fn den(&self) -> &UniPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroInverse);
        }
        Ok(Self::coprime(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, PolyError> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        Self::coprime(self.num.scale(c), self.den.clone())
    }

    /// The quotient of numerator by denominator.
    pub fn polynomial_part(&self) -> UniPoly<F> {
        self.num
            .div_rem(&self.den)
            .expect("denominator is nonzero")
            .0
    }

    /// Evaluates the polynomial `p` at this rational function.
    pub fn compose_into(p: &UniPoly<F>, at: &Self) -> Self {
        let field = p.field().clone();
        p.coeffs()
            .iter()
            .rev()
            .fold(Self::zero(field.clone()), |acc, c| {
                &(&acc * at) + &Self::constant(field.clone(), c.clone())
            })
    }
}

impl<F: CoeffField> Add for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn add(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        self.sum(rhs, num)
    }
}

impl<F: CoeffField> Sub for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn sub(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        let num = &(&self.num * &rhs.den) - &(&rhs.num * &self.den);
        self.sum(rhs, num)
    }
}

impl<F: CoeffField> Mul for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn mul(self, rhs: &RationalFunction<F>) -> RationalFunction<F> {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero(self.num.field().clone());
        }
        let (a, d) = RationalFunction::cancel(&self.num, &rhs.den);
        let (c, b) = RationalFunction::cancel(&rhs.num, &self.den);
        RationalFunction::coprime(&a * &c, &b * &d)
    }
}

impl<F: CoeffField> Neg for &RationalFunction<F> {
    type Output = RationalFunction<F>;
    fn neg(self) -> RationalFunction<F> {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl<F: CoeffField> fmt::Display for RationalFunction<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == UniPoly::one(self.field().clone()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Rationals;

    fn q(coeffs: &[i64]) -> UniPoly<Rationals> {
        UniPoly::from_ints(Rationals, coeffs)
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction<Rationals> {
        RationalFunction::new(q(num), q(den)).unwrap()
    }

    #[test]
    fn sum_collapses_to_one() {
        let a = rf(&[0, 1], &[1, 1]);
        let b = rf(&[1], &[1, 1]);
        assert_eq!(&a + &b, RationalFunction::one(Rationals));
    }

    #[test]
    fn inverse_of_t_squared() {
        let x = rf(&[0, 0, 1], &[1]);
        let inv = x.inv().unwrap();
        assert_eq!(inv.num(), &q(&[1]));
        assert_eq!(inv.den(), &q(&[0, 0, 1]));
        assert_eq!(
            RationalFunction::zero(Rationals).inv(),
            Err(PolyError::ZeroInverse)
        );
    }

    #[test]
    fn common_factor_cancels() {
        // (t^2 - 1)/(t - 1) = t + 1
        let x = rf(&[-1, 0, 1], &[-1, 1]);
        assert_eq!(x, RationalFunction::from_poly(q(&[1, 1])));
    }

    #[test]
    fn denominator_is_monic() {
        let x = rf(&[2], &[4, 2]);
        assert_eq!(x.num(), &q(&[1]));
        assert_eq!(x.den(), &q(&[2, 1]));
        assert_eq!(rf(&[0], &[5, 5]), RationalFunction::zero(Rationals));
        assert_eq!(
            RationalFunction::new(q(&[1]), q(&[])),
            Err(PolyError::ZeroDenominator)
        );
    }
}
