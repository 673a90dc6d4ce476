//! Exact evaluation of the zero-forcing bounds.
//!
//! Every comparison is done in integers. Half-integer powers of p are
//! removed by squaring both sides once the sign of the left side is known.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Signed;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// The zero-forcing inequality in p, k and the degree d.
    Inequality,
    /// The cover-size bound m/d > 2 p^{k-1} with the actual point count m.
    ByCount,
    /// p^k - 1 > 4 p^{k-1}, for conics.
    Conic,
    /// (p - 6)^2 p^{k-1} > 4p with p > 6, for elliptic curves.
    Elliptic,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Inequality => "inequality",
            BoundKind::ByCount => "by-count",
            BoundKind::Conic => "conic",
            BoundKind::Elliptic => "elliptic",
        })
    }
}

/// Outcome of one bound together with the integers it compared.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub kind: BoundKind,
    pub p: u64,
    pub k: u32,
    pub d: Option<u64>,
    pub m: Option<u64>,
    /// Named intermediate integers, in evaluation order.
    pub terms: Vec<(&'static str, BigInt)>,
    /// Side conditions that must hold before `lhs > rhs` is meaningful,
    /// e.g. a positive base before squaring.
    pub sign_condition: Option<(&'static str, bool)>,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub forced_zero: bool,
    /// Whether the bound would force zero with the factor 2 on the right
    /// dropped. Informational only; never feeds `forced_zero`.
    pub conjectural: bool,
    /// m/d, the least number of vertices covering all edges.
    pub cover_lower_bound: Option<BigRational>,
}

impl BoundReport {
    /// One-line trace of the exact comparison.
    pub fn trace(&self) -> String {
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .map(|(name, v)| format!("{name} = {v}"))
            .collect();
        if let Some((cond, holds)) = self.sign_condition {
            parts.push(format!("{cond}: {holds}"));
        }
        parts.push(format!(
            "{} > {}: {}",
            self.lhs,
            self.rhs,
            self.lhs > self.rhs
        ));
        parts.join("; ")
    }
}

fn pow(p: u64, e: u32) -> BigInt {
    num_traits::pow(BigInt::from(p), e as usize)
}

/// `base > 0` and `base^2 > radicand_coeff^2 * q`, i.e. base > c sqrt(q).
fn exceeds_sqrt_multiple(base: &BigInt, coeff: &BigInt, q: &BigInt) -> (BigInt, BigInt, bool) {
    let lhs = base * base;
    let rhs = coeff * coeff * q;
    let holds = base.is_positive() && lhs > rhs;
    (lhs, rhs, holds)
}

/// Evaluates `(p^k + 1 - (d-1)(d-2) p^{k/2} - d) / d > 2 p^{k-1}` exactly:
/// with A = p^k + 1 - d - 2d p^{k-1} and B = (d-1)(d-2) it holds iff A > 0
/// and A^2 > B^2 p^k.
pub fn zero_forcing_inequality(p: u64, k: u32, d: u64) -> BoundReport {
    assert!(k >= 1 && d >= 1);
    let q = pow(p, k);
    let pk1 = pow(p, k - 1);
    let dd = BigInt::from(d);
    let b = BigInt::from((d - 1) * d.saturating_sub(2));
    let a = &q + 1 - &dd - BigInt::from(2) * &dd * &pk1;
    let (lhs, rhs, forced_zero) = exceeds_sqrt_multiple(&a, &b, &q);
    let a_conj = &q + 1 - &dd - &dd * &pk1;
    let (_, _, conjectural) = exceeds_sqrt_multiple(&a_conj, &b, &q);
    BoundReport {
        kind: BoundKind::Inequality,
        p,
        k,
        d: Some(d),
        m: None,
        terms: vec![
            ("q", q),
            ("A = q + 1 - d - 2d p^(k-1)", a.clone()),
            ("B = (d-1)(d-2)", b),
        ],
        sign_condition: Some(("A > 0", a.is_positive())),
        lhs,
        rhs,
        forced_zero,
        conjectural,
        cover_lower_bound: None,
    }
}

/// `m/d > 2 p^{k-1}` as exact rationals, i.e. m > 2 d p^{k-1}.
pub fn zero_forcing_by_count(m: u64, d: u64, p: u64, k: u32) -> BoundReport {
    assert!(k >= 1 && d >= 1);
    let pk1 = pow(p, k - 1);
    let mm = BigInt::from(m);
    let dd = BigInt::from(d);
    let rhs = BigInt::from(2) * &dd * &pk1;
    let conjectural = mm > &dd * &pk1;
    BoundReport {
        kind: BoundKind::ByCount,
        p,
        k,
        d: Some(d),
        m: Some(m),
        terms: vec![("p^(k-1)", pk1)],
        sign_condition: None,
        forced_zero: mm > rhs,
        lhs: mm.clone(),
        rhs,
        conjectural,
        cover_lower_bound: Some(BigRational::new(mm, dd)),
    }
}

/// `p^k - 1 > 4 p^{k-1}`.
pub fn corollary_conic(p: u64, k: u32) -> BoundReport {
    assert!(k >= 1);
    let q = pow(p, k);
    let pk1 = pow(p, k - 1);
    let lhs = &q - 1;
    let rhs = BigInt::from(4) * &pk1;
    let conjectural = lhs > BigInt::from(2) * &pk1;
    BoundReport {
        kind: BoundKind::Conic,
        p,
        k,
        d: Some(2),
        m: None,
        terms: vec![("q", q), ("p^(k-1)", pk1)],
        sign_condition: None,
        forced_zero: lhs > rhs,
        lhs,
        rhs,
        conjectural,
        cover_lower_bound: None,
    }
}

/// `(p-6) p^{k-1} > 2 sqrt(p) p^{(k-1)/2}`, evaluated as p > 6 and
/// `(p-6)^2 p^{k-1} > 4p`.
pub fn corollary_elliptic(p: u64, k: u32) -> BoundReport {
    assert!(k >= 1);
    let pk1 = pow(p, k - 1);
    let margin: BigInt = BigInt::from(p) - 6;
    let lhs = &margin * &margin * &pk1;
    let rhs = BigInt::from(4) * BigInt::from(p);
    let forced_zero = margin.is_positive() && lhs > rhs;
    let margin_conj: BigInt = BigInt::from(p) - 3;
    let conjectural = margin_conj.is_positive() && &margin_conj * &margin_conj * &pk1 > rhs;
    BoundReport {
        kind: BoundKind::Elliptic,
        p,
        k,
        d: Some(3),
        m: None,
        terms: vec![("p - 6", margin.clone()), ("p^(k-1)", pk1)],
        sign_condition: Some(("p - 6 > 0", margin.is_positive())),
        lhs,
        rhs,
        forced_zero,
        conjectural,
        cover_lower_bound: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inequality_examples() {
        let r = zero_forcing_inequality(17, 1, 3);
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (BigInt::from(81), BigInt::from(68))
        );
        assert!(r.forced_zero);
        assert!(!zero_forcing_inequality(3, 1, 2).forced_zero);
        // B = 0 for conics: A = 26 - 2 - 20 = 4 > 0
        let r = zero_forcing_inequality(5, 2, 2);
        assert_eq!(r.terms[1].1, BigInt::from(4));
        assert!(r.forced_zero);
    }

    #[test]
    fn count_examples() {
        let r = zero_forcing_by_count(6, 2, 7, 1);
        assert!(r.forced_zero);
        assert_eq!(
            r.cover_lower_bound,
            Some(BigRational::from_integer(3.into()))
        );
        assert!(!zero_forcing_by_count(4, 2, 5, 1).forced_zero);
        assert!(!zero_forcing_by_count(0, 1, 3, 1).forced_zero);
    }

    #[test]
    fn conic_examples() {
        assert!(corollary_conic(7, 1).forced_zero);
        assert!(!corollary_conic(5, 1).forced_zero);
        assert!(corollary_conic(5, 2).forced_zero);
    }

    #[test]
    fn elliptic_examples() {
        assert!(corollary_elliptic(17, 1).forced_zero);
        let r = corollary_elliptic(13, 1);
        assert_eq!(
            (r.lhs.clone(), r.rhs.clone()),
            (BigInt::from(49), BigInt::from(52))
        );
        assert!(!r.forced_zero);
        assert_eq!(corollary_elliptic(13, 2).lhs, BigInt::from(637));
        assert!(corollary_elliptic(13, 2).forced_zero);
        assert!(!corollary_elliptic(7, 2).forced_zero);
        assert!(corollary_elliptic(7, 3).forced_zero);
        assert!(!corollary_elliptic(5, 9).forced_zero);
    }

    #[test]
    fn conjectural_flag_is_weaker() {
        // p = 11, k = 1: 25 > 44 fails, but (11-3)^2 = 64 > 44
        let r = corollary_elliptic(11, 1);
        assert!(!r.forced_zero && r.conjectural);
        for p in [3u64, 5, 7, 11, 13] {
            for k in 1..4 {
                for d in 1..5 {
                    let r = zero_forcing_inequality(p, k, d);
                    assert!(!r.forced_zero || r.conjectural);
                }
            }
        }
    }
}
