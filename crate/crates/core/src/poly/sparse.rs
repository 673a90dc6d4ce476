use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::fields::{FieldError, FqContext, FqElement};

pub const VARIABLE_NAMES: [char; 3] = ['x', 'y', 'z'];

/// Exponent vector of a monomial in `N` variables, ordered graded
/// lexicographically (total degree first, then exponents left to right).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial<const N: usize>(pub [u32; N]);

impl<const N: usize> Monomial<N> {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl<const N: usize> Ord for Monomial<N> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl<const N: usize> PartialOrd for Monomial<N> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial over F_{p^k} in `N` variables named x, y, z.
/// No zero coefficient is ever stored.
#[derive(Clone, PartialEq, Eq)]
pub struct SparsePoly<const N: usize> {
    ctx: FqContext,
    terms: BTreeMap<Monomial<N>, FqElement>,
}

/// Defining polynomial of a plane curve.
pub type BiPoly = SparsePoly<2>;
/// Defining polynomial of a surface in 3-space.
pub type TriPoly = SparsePoly<3>;

impl<const N: usize> SparsePoly<N> {
    pub fn zero(ctx: &FqContext) -> Self {
        Self {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: FqElement) -> Self {
        let mut out = Self::zero(c.context());
        out.insert(Monomial([0; N]), c);
        out
    }

    /// The variable with index `var` (0 = x, 1 = y, 2 = z).
    pub fn var(ctx: &FqContext, var: usize) -> Self {
        let mut exps = [0; N];
        exps[var] = 1;
        Self::from_terms(ctx, [(exps, ctx.one())])
    }

    /// Builds a polynomial, summing repeated monomials and dropping zeros.
    pub fn from_terms(
        ctx: &FqContext,
        terms: impl IntoIterator<Item = ([u32; N], FqElement)>,
    ) -> Self {
        let mut out = Self::zero(ctx);
        for (exps, c) in terms {
            out.insert(Monomial(exps), c);
        }
        out
    }

    /// Convenience for prime-field coefficients given as integers.
    pub fn from_int_terms(ctx: &FqContext, terms: &[([u32; N], i64)]) -> Self {
        Self::from_terms(ctx, terms.iter().map(|&(e, c)| (e, ctx.from_int(c))))
    }

    fn insert(&mut self, m: Monomial<N>, c: FqElement) {
        let sum = match self.terms.remove(&m) {
            Some(old) => &old + &c,
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(m, sum);
        }
    }

    pub fn context(&self) -> &FqContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending graded lexicographic order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[u32; N], &FqElement)> {
        self.terms.iter().map(|(m, c)| (&m.0, c))
    }

    pub fn coeff(&self, exps: [u32; N]) -> FqElement {
        self.terms
            .get(&Monomial(exps))
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(|m| m.degree())
    }

    /// Degree in a single variable; `None` for the zero polynomial.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// The homogeneous part of top total degree.
    pub fn leading_form(&self) -> Self {
        let Some(d) = self.total_degree() else {
            return self.clone();
        };
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &FqElement) -> Self {
        Self::from_terms(&self.ctx, self.terms().map(|(e, a)| (*e, a * c)))
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = Self::constant(self.ctx.one());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact evaluation at a point of F_{p^k}^N.
    pub fn eval(&self, point: &[FqElement; N]) -> Result<FqElement, FieldError> {
        if point.iter().any(|v| *v.context() != self.ctx) {
            return Err(FieldError::ContextMismatch);
        }
        let mut acc = self.ctx.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    term = &term * &v.pow(e as u64);
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Formal partial derivative; exponents are multiplied in F_p, so terms
    /// whose exponent is divisible by p vanish.
    pub fn partial(&self, var: usize) -> Self {
        let p = self.ctx.p();
        Self::from_terms(
            &self.ctx,
            self.terms
                .iter()
                .filter(|(m, _)| m.0[var] > 0)
                .map(|(m, c)| {
                    let mut e = m.0;
                    let factor = e[var] as u64 % p;
                    e[var] -= 1;
                    (e, c.scale(factor))
                }),
        )
    }

    /// Substitutes `value` for variable `var`, dropping that variable.
    /// Only meaningful for `M = N - 1`.
    pub fn substitute<const M: usize>(&self, var: usize, value: &FqElement) -> SparsePoly<M> {
        assert_eq!(M + 1, N, "substitution removes exactly one variable");
        SparsePoly::<M>::from_terms(
            &self.ctx,
            self.terms.iter().map(|(m, c)| {
                let mut rest = [0u32; M];
                let mut j = 0;
                for (i, &e) in m.0.iter().enumerate() {
                    if i != var {
                        rest[j] = e;
                        j += 1;
                    }
                }
                (rest, c * &value.pow(m.0[var] as u64))
            }),
        )
    }
}

impl<const N: usize> Add for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn add(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(*m, c.clone());
        }
        out
    }
}

impl<const N: usize> Sub for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn sub(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        self + &(-rhs)
    }
}

impl<const N: usize> Neg for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn neg(self) -> SparsePoly<N> {
        SparsePoly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl<const N: usize> Mul for &SparsePoly<N> {
    type Output = SparsePoly<N>;
    fn mul(self, rhs: &SparsePoly<N>) -> SparsePoly<N> {
        let mut out = SparsePoly::zero(&self.ctx);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let mut e = a.0;
                for (x, y) in e.iter_mut().zip(&b.0) {
                    *x += y;
                }
                out.insert(Monomial(e), ca * cb);
            }
        }
        out
    }
}

/// Renders in the curve-expression grammar, highest graded-lex term first,
/// e.g. `2*x*y + y^2 + x + 2*y`. Extension-field coefficients with several
/// components are parenthesized: `(1 + g)*x`.
impl<const N: usize> fmt::Display for SparsePoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let rendered: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mut factors = Vec::new();
                let is_constant = m.degree() == 0;
                if !c.is_one() || is_constant {
                    let cs = c.to_string();
                    factors.push(if cs.contains('+') && !is_constant {
                        format!("({cs})")
                    } else {
                        cs
                    });
                }
                for (i, &e) in m.0.iter().enumerate() {
                    match e {
                        0 => {}
                        1 => factors.push(VARIABLE_NAMES[i].to_string()),
                        e => factors.push(format!("{}^{e}", VARIABLE_NAMES[i])),
                    }
                }
                factors.join("*")
            })
            .collect();
        write!(f, "{}", rendered.join(" + "))
    }
}

impl<const N: usize> fmt::Debug for SparsePoly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparsePoly({self} over {:?})", self.ctx)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FqContext {
        FqContext::prime(p).unwrap()
    }

    #[test]
    fn partial_derivatives() {
        let f5 = f(5);
        // y^2 - x^3 - 3x - 1
        let c = BiPoly::from_int_terms(
            &f5,
            &[([0, 2], 1), ([3, 0], -1), ([1, 0], -3), ([0, 0], -1)],
        );
        assert_eq!(c.partial(1), BiPoly::from_int_terms(&f5, &[([0, 1], 2)]));
        let x5 = BiPoly::from_int_terms(&f5, &[([5, 0], 1)]);
        assert!(x5.partial(0).is_zero());

        let f3 = f(3);
        // d/dx (y^2 + 2xy + 2y + x) = 2y + 1
        let c = BiPoly::from_int_terms(&f3, &[([0, 2], 1), ([1, 1], 2), ([0, 1], 2), ([1, 0], 1)]);
        assert_eq!(
            c.partial(0),
            BiPoly::from_int_terms(&f3, &[([0, 1], 2), ([0, 0], 1)])
        );
    }

    #[test]
    fn evaluation() {
        let f3 = f(3);
        let c = BiPoly::from_int_terms(&f3, &[([0, 2], 1), ([1, 1], 2), ([0, 1], 2), ([1, 0], 1)]);
        assert!(c.eval(&[f3.zero(), f3.zero()]).unwrap().is_zero());
        assert!(c.eval(&[f3.one(), f3.one()]).unwrap().is_zero());
        let f5 = f(5);
        let h = BiPoly::from_int_terms(&f5, &[([1, 1], 1), ([0, 0], -1)]);
        assert!(h.eval(&[f5.from_int(2), f5.from_int(3)]).unwrap().is_zero());
        assert_eq!(
            h.eval(&[f3.one(), f3.one()]),
            Err(FieldError::ContextMismatch)
        );
    }

    #[test]
    fn render_order_and_degree() {
        let f3 = f(3);
        let c = BiPoly::from_int_terms(&f3, &[([0, 2], 1), ([1, 1], 2), ([0, 1], 2), ([1, 0], 1)]);
        assert_eq!(c.to_string(), "2*x*y + y^2 + x + 2*y");
        assert_eq!(c.total_degree(), Some(2));
        assert_eq!(c.num_terms(), 4);
        let f9 = FqContext::new(3, 2, None).unwrap();
        let g = f9.generator();
        let e = BiPoly::from_terms(&f9, [([1, 0], &g + &f9.one()), ([0, 0], g.clone())]);
        assert_eq!(e.to_string(), "(1 + g)*x + g");
    }

    #[test]
    fn substitution() {
        let f5 = f(5);
        // xyz - 1 with z = 2 gives 2xy - 1
        let s = TriPoly::from_int_terms(&f5, &[([1, 1, 1], 1), ([0, 0, 0], -1)]);
        let c: BiPoly = s.substitute(2, &f5.from_int(2));
        assert_eq!(c, BiPoly::from_int_terms(&f5, &[([1, 1], 2), ([0, 0], -1)]));
    }
}
