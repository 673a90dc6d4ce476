//! Additive maps on F_{p^k}.
//!
//! Every additive map on F_{p^k} is F_p-linear, hence a linearized
//! polynomial `f(x) = sum a_i x^{p^i}` with `a_i` in F_{p^k}. Its zero set is
//! an F_p-subspace; the hyperplanes among those subspaces are exactly the
//! kernels of the trace functionals `x -> Tr(a x)`.

mod matrix;

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::fields::{FieldError, FqContext, FqElement};
use crate::{CapExceeded, Caps};

pub use matrix::FpMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdditiveError {
    #[error("operands belong to different fields")]
    ContextMismatch,
    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the trace functional needs a nonzero element")]
    ZeroFunctional,
    #[error(transparent)]
    Cap(#[from] CapExceeded),
}

impl From<FieldError> for AdditiveError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::Cap(c) => AdditiveError::Cap(c),
            _ => AdditiveError::ContextMismatch,
        }
    }
}

/// `x -> sum_i a_i x^{p^i}` with `k` coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinearizedMap {
    ctx: FqContext,
    coeffs: Vec<FqElement>,
}

impl LinearizedMap {
    pub fn new(ctx: &FqContext, coeffs: Vec<FqElement>) -> Result<Self, AdditiveError> {
        if coeffs.len() != ctx.k() {
            return Err(AdditiveError::DimensionMismatch {
                expected: ctx.k(),
                got: coeffs.len(),
            });
        }
        if coeffs.iter().any(|c| c.context() != ctx) {
            return Err(AdditiveError::ContextMismatch);
        }
        Ok(Self {
            ctx: ctx.clone(),
            coeffs,
        })
    }

    pub fn zero(ctx: &FqContext) -> Self {
        Self {
            ctx: ctx.clone(),
            coeffs: vec![ctx.zero(); ctx.k()],
        }
    }

    pub fn identity(ctx: &FqContext) -> Self {
        let mut m = Self::zero(ctx);
        m.coeffs[0] = ctx.one();
        m
    }

    pub fn context(&self) -> &FqContext {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[FqElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(FqElement::is_zero)
    }

    pub fn scale(&self, c: &FqElement) -> Self {
        Self {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| c * a).collect(),
        }
    }

    pub fn eval(&self, x: &FqElement) -> Result<FqElement, AdditiveError> {
        if x.context() != &self.ctx {
            return Err(AdditiveError::ContextMismatch);
        }
        Ok(self.eval_conjugates(&x.conjugates()))
    }

    /// Evaluation given the precomputed conjugates `x^{p^i}`.
    pub fn eval_conjugates(&self, conjugates: &[FqElement]) -> FqElement {
        self.coeffs
            .iter()
            .zip(conjugates)
            .filter(|(a, _)| !a.is_zero())
            .fold(self.ctx.zero(), |acc, (a, xp)| &acc + &(a * xp))
    }

    /// Matrix over F_p whose column j holds the coordinates of f(u^j).
    pub fn to_matrix(&self) -> FpMatrix {
        let k = self.ctx.k();
        let mut m = FpMatrix::zeros(self.ctx.p(), k, k);
        for j in 0..k {
            let basis = basis_element(&self.ctx, j);
            let image = self.eval_conjugates(&basis.conjugates());
            for (i, &c) in image.coeffs().iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// Inverse of [`to_matrix`](Self::to_matrix).
    ///
    /// The k^2 maps `x -> u^l x^{p^i}` form an F_p-basis of all F_p-linear
    /// maps; the coordinates of `m` in that basis give the coefficients.
    pub fn from_matrix(ctx: &FqContext, m: &FpMatrix) -> Result<Self, AdditiveError> {
        let k = ctx.k();
        if m.rows() != k || m.cols() != k || m.p() != ctx.p() {
            return Err(AdditiveError::DimensionMismatch {
                expected: k,
                got: m.rows().max(m.cols()),
            });
        }
        let n = k * k;
        // column (l, i) of `change` is the vectorized matrix of u^l x^{p^i}
        let mut change = FpMatrix::zeros(ctx.p(), n, n);
        for l in 0..k {
            for i in 0..k {
                let mut coeffs = vec![ctx.zero(); k];
                coeffs[i] = basis_element(ctx, l);
                let basis_map = Self {
                    ctx: ctx.clone(),
                    coeffs,
                };
                let bm = basis_map.to_matrix();
                for r in 0..k {
                    for c in 0..k {
                        change.set(r * k + c, l * k + i, bm.get(r, c));
                    }
                }
            }
        }
        let inv = change.inverse().expect("the maps u^l x^(p^i) form a basis");
        let target: Vec<u64> = (0..n).map(|idx| m.get(idx / k, idx % k)).collect();
        let coords = inv.mul_vec(&target);
        let coeffs = (0..k)
            .map(|i| {
                let digits: Vec<u64> = (0..k).map(|l| coords[l * k + i]).collect();
                ctx.element(&digits).expect("coordinates are residues")
            })
            .collect();
        Ok(Self {
            ctx: ctx.clone(),
            coeffs,
        })
    }
}

impl fmt::Display for LinearizedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.ctx.p();
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, a)| {
                let x = if i == 0 {
                    "x".to_string()
                } else {
                    format!("x^{}", crate::saturating_pow(p, i as u64))
                };
                if a.is_one() {
                    x
                } else if a.to_string().contains('+') {
                    format!("({a})*{x}")
                } else {
                    format!("{a}*{x}")
                }
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl fmt::Debug for LinearizedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinearizedMap({self})")
    }
}

/// u^j as a field element.
fn basis_element(ctx: &FqContext, j: usize) -> FqElement {
    let mut digits = vec![0u64; ctx.k()];
    digits[j] = 1;
    ctx.element(&digits).expect("unit vector")
}

/// An F_p-subspace of F_{p^k}, held as the reduced row echelon matrix of a
/// basis (coordinates in 1, u, ..., u^{k-1}). Two subspaces are equal iff
/// their echelon matrices are identical.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ctx: FqContext,
    basis: FpMatrix,
}

impl Subspace {
    /// The span of the given coordinate vectors.
    pub fn span(ctx: &FqContext, vectors: &[Vec<u64>]) -> Self {
        let k = ctx.k();
        let mut m = if vectors.is_empty() {
            FpMatrix::zeros(ctx.p(), 0, k)
        } else {
            FpMatrix::from_rows(ctx.p(), vectors)
        };
        m.rref();
        Self {
            ctx: ctx.clone(),
            basis: m.without_zero_rows(),
        }
    }

    pub fn span_elements(ctx: &FqContext, elements: &[FqElement]) -> Self {
        let vectors: Vec<Vec<u64>> = elements.iter().map(|e| e.coeffs().to_vec()).collect();
        Self::span(ctx, &vectors)
    }

    pub fn whole(ctx: &FqContext) -> Self {
        let rows: Vec<Vec<u64>> = FpMatrix::identity(ctx.p(), ctx.k()).row_vecs();
        Self::span(ctx, &rows)
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }

    pub fn basis_elements(&self) -> Vec<FqElement> {
        self.basis
            .row_vecs()
            .iter()
            .map(|r| self.ctx.element(r).expect("basis rows are coordinates"))
            .collect()
    }

    /// Membership by reducing `x` against the echelon basis.
    pub fn contains(&self, x: &FqElement) -> bool {
        let p = self.ctx.p();
        let mut v = x.coeffs().to_vec();
        for r in 0..self.basis.rows() {
            let row = self.basis.row(r);
            let pivot = row.iter().position(|&c| c != 0).expect("nonzero row");
            let factor = v[pivot];
            if factor != 0 {
                for (vi, &ri) in v.iter_mut().zip(row) {
                    *vi = (*vi + p - (factor * ri) % p) % p;
                }
            }
        }
        v.iter().all(|&c| c == 0)
    }

    /// All p^dim members.
    pub fn elements(&self) -> Vec<FqElement> {
        let basis = self.basis_elements();
        let mut out = vec![self.ctx.zero()];
        for b in &basis {
            let mut next = Vec::with_capacity(out.len() * self.ctx.p() as usize);
            for lambda in 0..self.ctx.p() {
                let shift = b.scale(lambda);
                next.extend(out.iter().map(|e| e + &shift));
            }
            out = next;
        }
        out
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {}, basis {:?})",
            self.dim(),
            self.basis.row_vecs()
        )
    }
}

/// Null space of the map, in canonical form; its dimension is k - rank.
pub fn kernel(f: &LinearizedMap) -> Subspace {
    Subspace::span(&f.ctx, &f.to_matrix().nullspace())
}

/// The map `x -> Tr(a x)`, i.e. coefficients `a^{p^i}`.
pub fn trace_functional(a: &FqElement) -> Result<LinearizedMap, AdditiveError> {
    if a.is_zero() {
        return Err(AdditiveError::ZeroFunctional);
    }
    Ok(LinearizedMap {
        ctx: a.context().clone(),
        coeffs: a.conjugates(),
    })
}

/// A hyperplane `{x : Tr(a x) = 0}` with its normal element `a`.
#[derive(Clone, Debug)]
pub struct Hyperplane {
    normal: FqElement,
    /// Tr(a u^j) for each basis element, so membership is one dot product.
    trace_row: Vec<u64>,
    subspace: Subspace,
}

impl Hyperplane {
    pub fn from_normal(a: &FqElement) -> Result<Self, AdditiveError> {
        let functional = trace_functional(a)?;
        let ctx = a.context();
        let trace_row = (0..ctx.k())
            .map(|j| {
                let t = (a * &basis_element(ctx, j)).trace();
                t.prime_value().expect("trace lies in F_p")
            })
            .collect();
        Ok(Self {
            normal: a.clone(),
            trace_row,
            subspace: kernel(&functional),
        })
    }

    pub fn normal(&self) -> &FqElement {
        &self.normal
    }

    pub fn functional(&self) -> LinearizedMap {
        trace_functional(&self.normal).expect("normal is nonzero")
    }

    pub fn subspace(&self) -> &Subspace {
        &self.subspace
    }

    /// `Tr(a x) == 0`.
    pub fn contains(&self, x: &FqElement) -> bool {
        let p = self.normal.context().p();
        self.trace_row
            .iter()
            .zip(x.coeffs())
            .fold(0, |acc, (&t, &c)| (acc + t * c) % p)
            == 0
    }
}

/// All (p^k - 1)/(p - 1) hyperplanes of F_{p^k}, one per normal direction.
/// Normals are the elements whose highest nonzero coordinate is 1, taken in
/// enumeration order, which fixes the canonical search order.
pub fn enumerate_hyperplanes(
    ctx: &FqContext,
    caps: &Caps,
) -> Result<Vec<Hyperplane>, AdditiveError> {
    let count = (ctx.order() - 1) / (ctx.p() - 1);
    caps.check_enumeration("hyperplanes", count as u128)?;
    let mut seen = HashSet::new();
    let mut out = Vec::with_capacity(count as usize);
    for a in ctx.elements().skip(1) {
        let lead = a.coeffs().iter().rev().find(|&&c| c != 0).copied();
        if lead != Some(1) {
            continue;
        }
        let h = Hyperplane::from_normal(&a)?;
        if seen.insert(h.subspace.clone()) {
            out.push(h);
        }
    }
    debug_assert_eq!(out.len() as u64, count);
    Ok(out)
}

/// Lazily yields all p^{k^2} linearized maps. The coefficient tuple is read
/// as a base-p^k numeral with a_0 least significant.
pub fn enumerate_all_maps(
    ctx: &FqContext,
    caps: &Caps,
) -> Result<impl Iterator<Item = LinearizedMap>, AdditiveError> {
    let total = crate::saturating_pow(ctx.p(), (ctx.k() * ctx.k()) as u64);
    caps.check_oracle("additive maps", total)?;
    let q = ctx.order();
    let ctx = ctx.clone();
    Ok((0..total as u64).map(move |mut n| {
        let coeffs = (0..ctx.k())
            .map(|_| {
                let e = ctx.element_at(n % q);
                n /= q;
                e
            })
            .collect();
        LinearizedMap {
            ctx: ctx.clone(),
            coeffs,
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f9() -> FqContext {
        FqContext::new(3, 2, Some(vec![1, 0, 1])).unwrap()
    }

    #[test]
    fn eval_examples() {
        let f = f9();
        let u = f.generator();
        assert_eq!(LinearizedMap::identity(&f).eval(&u).unwrap(), u);
        let tr = LinearizedMap::new(&f, vec![f.one(), f.one()]).unwrap();
        assert!(tr.eval(&u).unwrap().is_zero());
        assert!(LinearizedMap::zero(&f).eval(&u).unwrap().is_zero());
        let other = FqContext::prime(3).unwrap();
        assert_eq!(tr.eval(&other.one()), Err(AdditiveError::ContextMismatch));
    }

    #[test]
    fn matrices() {
        let f = f9();
        assert_eq!(
            LinearizedMap::identity(&f).to_matrix(),
            FpMatrix::identity(3, 2)
        );
        let frob = LinearizedMap::new(&f, vec![f.zero(), f.one()]).unwrap();
        // 1 -> 1, u -> -u
        assert_eq!(
            frob.to_matrix(),
            FpMatrix::from_rows(3, &[vec![1, 0], vec![0, 2]])
        );
        assert_eq!(
            LinearizedMap::from_matrix(&f, &frob.to_matrix()).unwrap(),
            frob
        );
        let bad = FpMatrix::identity(3, 3);
        assert!(matches!(
            LinearizedMap::from_matrix(&f, &bad),
            Err(AdditiveError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernels() {
        let f = f9();
        assert_eq!(kernel(&LinearizedMap::zero(&f)).dim(), 2);
        assert_eq!(kernel(&LinearizedMap::identity(&f)).dim(), 0);
        let tr = trace_functional(&f.one()).unwrap();
        assert_eq!(tr, LinearizedMap::new(&f, vec![f.one(), f.one()]).unwrap());
        let ker = kernel(&tr);
        assert_eq!(ker, Subspace::span_elements(&f, &[f.generator()]));
        assert!(!ker.contains(&f.one()));
    }

    #[test]
    fn prime_field_functional_is_identity() {
        let f5 = FqContext::prime(5).unwrap();
        let tr = trace_functional(&f5.one()).unwrap();
        assert_eq!(tr, LinearizedMap::identity(&f5));
        assert_eq!(kernel(&tr).dim(), 0);
        assert_eq!(
            trace_functional(&f5.zero()),
            Err(AdditiveError::ZeroFunctional)
        );
    }

    #[test]
    fn hyperplane_counts() {
        let caps = Caps::default();
        let hs = enumerate_hyperplanes(&f9(), &caps).unwrap();
        assert_eq!(hs.len(), 4);
        let distinct: HashSet<_> = hs.iter().map(|h| h.subspace().clone()).collect();
        assert_eq!(distinct.len(), 4);

        let f5 = FqContext::prime(5).unwrap();
        let hs = enumerate_hyperplanes(&f5, &caps).unwrap();
        assert_eq!(hs.len(), 1);
        assert_eq!(hs[0].subspace().dim(), 0);

        let f27 = FqContext::new(3, 3, None).unwrap();
        assert_eq!(enumerate_hyperplanes(&f27, &caps).unwrap().len(), 13);
    }

    #[test]
    fn map_enumeration() {
        let caps = Caps::default();
        let f3 = FqContext::prime(3).unwrap();
        let maps: Vec<String> = enumerate_all_maps(&f3, &caps)
            .unwrap()
            .map(|m| m.to_string())
            .collect();
        assert_eq!(maps, vec!["0", "x", "2*x"]);
        assert_eq!(enumerate_all_maps(&f9(), &caps).unwrap().count(), 81);
        assert_eq!(
            enumerate_all_maps(&FqContext::prime(5).unwrap(), &caps)
                .unwrap()
                .count(),
            5
        );
        let tiny = Caps::uniform(50);
        assert!(matches!(
            enumerate_all_maps(&f9(), &tiny).map(|_| ()),
            Err(AdditiveError::Cap(_))
        ));
    }

    #[test]
    fn subspace_members() {
        let f = f9();
        let ker = kernel(&trace_functional(&f.one()).unwrap());
        let members = ker.elements();
        assert_eq!(members.len(), 3);
        assert!(members.iter().all(|m| ker.contains(m)));
        assert_eq!(Subspace::whole(&f).elements().len(), 9);
    }
}
