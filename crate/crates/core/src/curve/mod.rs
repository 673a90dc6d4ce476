//! Plane curves over F_{p^k}: affine points, points at infinity, singular
//! points over small extensions, the Hasse-Weil window and surface slices.

mod file;

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;
use thiserror::Error;

use crate::fields::{FieldError, FqContext, FqElement};
use crate::poly::{BiPoly, ParseError, TriPoly};
use crate::{CapExceeded, Caps};

pub use file::{load_curve, CurveFile};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("the defining polynomial is zero")]
    ZeroPolynomial,
    #[error("the defining polynomial is a nonzero constant")]
    ConstantPolynomial,
    #[error("substitution yields the zero polynomial: the slice is the whole plane")]
    SliceIsPlane,
    #[error("singular-point search needs an extension degree of at least 1")]
    BadExtensionDegree,
    #[error("curve file line {line}: {message}")]
    File { line: usize, message: String },
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Cap(#[from] CapExceeded),
}

/// User-supplied hypotheses, recorded verbatim and never upgraded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Assertions {
    pub smooth: bool,
    pub abs_irreducible: bool,
}

/// An affine plane curve given by a non-constant polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct Curve {
    defining: BiPoly,
    degree: u32,
    assertions: Assertions,
}

impl Curve {
    pub fn new(defining: BiPoly, assertions: Assertions) -> Result<Self, CurveError> {
        let degree = defining.total_degree().ok_or(CurveError::ZeroPolynomial)?;
        if degree == 0 {
            return Err(CurveError::ConstantPolynomial);
        }
        Ok(Self {
            defining,
            degree,
            assertions,
        })
    }

    /// Parses `text` in the curve-expression grammar.
    pub fn parse(text: &str, ctx: &FqContext, assertions: Assertions) -> Result<Self, CurveError> {
        Self::new(crate::poly::parse_bipoly(text, ctx)?, assertions)
    }

    pub fn defining(&self) -> &BiPoly {
        &self.defining
    }

    pub fn context(&self) -> &FqContext {
        self.defining.context()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn assertions(&self) -> Assertions {
        self.assertions
    }

    /// Genus bound (d-1)(d-2)/2 for a smooth plane curve of degree d.
    pub fn genus_bound(&self) -> u64 {
        let d = self.degree as u64;
        (d - 1) * (d - 2) / 2
    }
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = 0", self.defining)
    }
}

/// A sorted, duplicate-free list of affine points.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PointSet {
    points: Vec<(FqElement, FqElement)>,
}

impl PointSet {
    pub fn new(mut points: Vec<(FqElement, FqElement)>) -> Self {
        points.sort();
        points.dedup();
        Self { points }
    }

    pub fn points(&self) -> &[(FqElement, FqElement)] {
        &self.points
    }

    pub fn count(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &(FqElement, FqElement)> {
        self.points.iter()
    }

    /// Largest number of points sharing an x-coordinate and sharing a
    /// y-coordinate: the maximum vertex degrees on the two sides of the
    /// point/edge bipartite graph.
    pub fn max_vertex_degrees(&self) -> (usize, usize) {
        use std::collections::HashMap;
        let mut xs: HashMap<&FqElement, usize> = HashMap::new();
        let mut ys: HashMap<&FqElement, usize> = HashMap::new();
        for (x, y) in &self.points {
            *xs.entry(x).or_default() += 1;
            *ys.entry(y).or_default() += 1;
        }
        (
            xs.values().copied().max().unwrap_or(0),
            ys.values().copied().max().unwrap_or(0),
        )
    }
}

impl<'a> IntoIterator for &'a PointSet {
    type Item = &'a (FqElement, FqElement);
    type IntoIter = std::slice::Iter<'a, (FqElement, FqElement)>;
    fn into_iter(self) -> Self::IntoIter {
        self.points.iter()
    }
}

/// Coefficients of `f(x0, y)` as a polynomial in y, low-to-high.
fn specialize_x(f: &BiPoly, x0: &FqElement) -> Vec<FqElement> {
    let ctx = f.context();
    let len = f.degree_in(1).map_or(0, |d| d as usize + 1);
    let mut out = vec![ctx.zero(); len];
    for (&[i, j], c) in f.terms() {
        out[j as usize] = &out[j as usize] + &(c * &x0.pow(i as u64));
    }
    out
}

fn horner(coeffs: &[FqElement], y: &FqElement, zero: &FqElement) -> FqElement {
    coeffs
        .iter()
        .rev()
        .fold(zero.clone(), |acc, c| &(&acc * y) + c)
}

fn zeros_of(f: &BiPoly, field: &FqContext) -> Vec<(FqElement, FqElement)> {
    let zero = field.zero();
    let mut out = Vec::new();
    for x in field.elements() {
        let ys = specialize_x(f, &x);
        for y in field.elements() {
            if horner(&ys, &y, &zero).is_zero() {
                out.push((x.clone(), y));
            }
        }
    }
    out
}

/// All affine points of the curve over its field of definition.
pub fn affine_points(c: &Curve, caps: &Caps) -> Result<PointSet, CurveError> {
    let q = c.context().order() as u128;
    caps.check_enumeration("affine point candidates", q * q)?;
    Ok(PointSet::new(zeros_of(&c.defining, c.context())))
}

/// Number of F_{p^k}-rational roots of the leading form on the line at
/// infinity. Never exceeds the degree.
pub fn points_at_infinity_count(c: &Curve, caps: &Caps) -> Result<usize, CurveError> {
    let ctx = c.context();
    caps.check_enumeration("points at infinity", ctx.order() as u128)?;
    let lead = c.defining.leading_form();
    let d = c.degree;
    // L(X, 1): coefficient of X^i is the coefficient of x^i y^(d-i)
    let dehomogenized: Vec<FqElement> = (0..=d).map(|i| lead.coeff([i, d - i])).collect();
    let zero = ctx.zero();
    let finite = ctx
        .elements()
        .filter(|x| horner(&dehomogenized, x, &zero).is_zero())
        .count();
    // the point (1 : 0) lies on L exactly when x^d is absent
    let at_x_axis = usize::from(lead.coeff([d, 0]).is_zero());
    Ok(finite + at_x_axis)
}

/// Result of a bounded singular-point search.
#[derive(Debug, Clone)]
pub struct SingularSearch {
    /// Extension degree m over the curve's field.
    pub ext_degree: usize,
    /// The field F_{p^{km}} that was searched.
    pub field: FqContext,
    pub points: PointSet,
}

impl SingularSearch {
    pub fn found(&self) -> bool {
        !self.points.is_empty()
    }

    pub fn summary(&self) -> String {
        if self.found() {
            format!(
                "{} singular point(s) over F_{}^{}",
                self.points.count(),
                self.field.p(),
                self.field.k()
            )
        } else {
            format!("no singular point found up to degree {}", self.ext_degree)
        }
    }
}

/// Maps elements of `small` into `big` by sending u to a fixed root of the
/// modulus of `small`.
pub(crate) struct Embedding {
    root_powers: Vec<FqElement>,
    big: FqContext,
}

impl Embedding {
    pub(crate) fn new(small: &FqContext, big: &FqContext) -> Option<Self> {
        if small == big {
            let root_powers = (0..small.k())
                .map(|i| small.generator().pow(i as u64))
                .collect();
            return Some(Self {
                root_powers,
                big: big.clone(),
            });
        }
        if !big.k().is_multiple_of(small.k()) || big.p() != small.p() {
            return None;
        }
        let modulus: Vec<FqElement> = small
            .modulus()
            .iter()
            .map(|&c| big.from_int(c as i64))
            .collect();
        let zero = big.zero();
        let root = big
            .elements()
            .find(|r| horner(&modulus, r, &zero).is_zero())?;
        let root_powers = (0..small.k()).map(|i| root.pow(i as u64)).collect();
        Some(Self {
            root_powers,
            big: big.clone(),
        })
    }

    pub(crate) fn map(&self, a: &FqElement) -> FqElement {
        a.coeffs()
            .iter()
            .zip(&self.root_powers)
            .fold(self.big.zero(), |acc, (&c, r)| &acc + &r.scale(c))
    }

    pub(crate) fn map_poly(&self, f: &BiPoly) -> BiPoly {
        BiPoly::from_terms(&self.big, f.terms().map(|(e, c)| (*e, self.map(c))))
    }
}

/// Points of F_{p^{k m}}^2 where the curve and both partial derivatives
/// vanish. An empty result is not a proof of smoothness.
pub fn singular_points(
    c: &Curve,
    ext_degree: usize,
    caps: &Caps,
) -> Result<SingularSearch, CurveError> {
    if ext_degree < 1 {
        return Err(CurveError::BadExtensionDegree);
    }
    let ctx = c.context();
    let big_order = crate::saturating_pow(ctx.p(), (ctx.k() * ext_degree) as u64);
    caps.check_enumeration(
        "singular point candidates",
        big_order.saturating_mul(big_order),
    )?;
    let big = if ext_degree == 1 {
        ctx.clone()
    } else {
        FqContext::new(ctx.p(), ctx.k() * ext_degree, None)?
    };
    let emb = Embedding::new(ctx, &big).expect("F_{p^k} embeds in F_{p^{km}}");
    let f = emb.map_poly(&c.defining);
    let fx = f.partial(0);
    let fy = f.partial(1);
    let points = zeros_of(&f, &big)
        .into_iter()
        .filter(|(x, y)| {
            let pt = [x.clone(), y.clone()];
            fx.eval(&pt).is_ok_and(|v| v.is_zero()) && fy.eval(&pt).is_ok_and(|v| v.is_zero())
        })
        .collect();
    Ok(SingularSearch {
        ext_degree,
        field: big,
        points: PointSet::new(points),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HwVerdict {
    Consistent,
    ViolatesWindow,
}

impl fmt::Display for HwVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HwVerdict::Consistent => "consistent",
            HwVerdict::ViolatesWindow => "violates-window",
        })
    }
}

/// The Hasse-Weil comparison |N - q - 1| <= 2 g sqrt(q), held as the exact
/// integer test (N - q - 1)^2 <= 4 g^2 q with g the genus bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HwWindow {
    pub q: u64,
    pub genus_bound: u64,
    pub affine_count: usize,
    pub infinity_count: usize,
    /// N: affine plus infinite points.
    pub n_points: u64,
    /// (N - q - 1)^2.
    pub lhs: BigInt,
    /// 4 g^2 q.
    pub rhs: BigInt,
    /// q + 1 - floor(sqrt(4 g^2 q)): smallest N inside the window.
    pub lower: BigInt,
    /// q + 1 + floor(sqrt(4 g^2 q)): largest N inside the window.
    pub upper: BigInt,
    pub verdict: HwVerdict,
}

pub fn hasse_weil_window(c: &Curve, caps: &Caps) -> Result<HwWindow, CurveError> {
    let affine = affine_points(c, caps)?.count();
    let infinity = points_at_infinity_count(c, caps)?;
    Ok(hasse_weil_from_counts(c, affine, infinity))
}

/// Window check from already computed point counts.
pub fn hasse_weil_from_counts(c: &Curve, affine: usize, infinity: usize) -> HwWindow {
    let q = c.context().order();
    let g = c.genus_bound();
    let n = (affine + infinity) as u64;
    let deviation = BigInt::from(n) - BigInt::from(q) - 1;
    let lhs = &deviation * &deviation;
    let rhs = BigInt::from(4u8) * BigInt::from(g) * BigInt::from(g) * BigInt::from(q);
    let radius = rhs.sqrt();
    let center = BigInt::from(q) + 1;
    debug_assert!(!radius.is_negative());
    HwWindow {
        q,
        genus_bound: g,
        affine_count: affine,
        infinity_count: infinity,
        n_points: n,
        verdict: if lhs <= rhs {
            HwVerdict::Consistent
        } else {
            HwVerdict::ViolatesWindow
        },
        lower: &center - &radius,
        upper: &center + &radius,
        lhs,
        rhs,
    }
}

/// A plane section of a surface obtained by fixing one coordinate.
#[derive(Debug, Clone)]
pub struct Slice {
    pub curve: Curve,
    pub degree: u32,
    pub surface_degree: u32,
    /// For x, y, z: the least degree of a nonzero slice over all values
    /// substituted for that variable (`None` if every slice is zero).
    pub min_degree_per_variable: [Option<u32>; 3],
    /// floor(2d/3) for the surface degree d.
    pub two_thirds_bound: u32,
    /// Whether some variable admits a slice of degree at most floor(2d/3).
    pub two_thirds_attained: bool,
}

/// Substitutes `value` for variable `var` (0 = x, 1 = y, 2 = z); the two
/// remaining variables become the curve's x and y in order.
pub fn slice_surface(
    f3: &TriPoly,
    var: usize,
    value: &FqElement,
    caps: &Caps,
) -> Result<Slice, CurveError> {
    assert!(var < 3, "variable index out of range");
    let ctx = f3.context();
    if value.context() != ctx {
        return Err(FieldError::ContextMismatch.into());
    }
    let surface_degree = f3.total_degree().ok_or(CurveError::ZeroPolynomial)?;
    let sliced: BiPoly = f3.substitute(var, value);
    if sliced.is_zero() {
        return Err(CurveError::SliceIsPlane);
    }
    let curve = Curve::new(sliced, Assertions::default())?;

    caps.check_enumeration("slice values", 3 * ctx.order() as u128)?;
    let mut min_degree_per_variable = [None; 3];
    for (v, slot) in min_degree_per_variable.iter_mut().enumerate() {
        *slot = ctx
            .elements()
            .filter_map(|s| f3.substitute::<2>(v, &s).total_degree())
            .min();
    }
    let two_thirds_bound = 2 * surface_degree / 3;
    let two_thirds_attained = min_degree_per_variable
        .iter()
        .flatten()
        .any(|&d| d <= two_thirds_bound);
    Ok(Slice {
        degree: curve.degree(),
        curve,
        surface_degree,
        min_degree_per_variable,
        two_thirds_bound,
        two_thirds_attained,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_tripoly;

    fn curve(text: &str, p: u64, k: usize) -> Curve {
        let ctx = FqContext::new(p, k, None).unwrap();
        Curve::parse(text, &ctx, Assertions::default()).unwrap()
    }

    fn ints(ps: &PointSet) -> Vec<(u64, u64)> {
        ps.iter().map(|(x, y)| (x.index(), y.index())).collect()
    }

    #[test]
    fn affine_points_of_small_curves() {
        let caps = Caps::default();
        let c = curve("y^2 + 2*x*y + 2*y + x", 3, 1);
        assert_eq!(
            ints(&affine_points(&c, &caps).unwrap()),
            vec![(0, 0), (0, 1), (1, 1), (2, 1), (2, 2)]
        );
        let c = curve("y^2 - x^3 - 3*x - 1", 5, 1);
        assert_eq!(
            ints(&affine_points(&c, &caps).unwrap()),
            vec![(0, 1), (0, 4), (1, 0), (2, 0)]
        );
        let c = curve("x*y - 1", 5, 1);
        assert_eq!(
            ints(&affine_points(&c, &caps).unwrap()),
            vec![(1, 1), (2, 3), (3, 2), (4, 4)]
        );
    }

    #[test]
    fn rejects_degenerate_polynomials() {
        let f3 = FqContext::prime(3).unwrap();
        assert_eq!(
            Curve::parse("3*x", &f3, Assertions::default()),
            Err(CurveError::ZeroPolynomial)
        );
        assert_eq!(
            Curve::parse("2", &f3, Assertions::default()),
            Err(CurveError::ConstantPolynomial)
        );
    }

    #[test]
    fn points_at_infinity() {
        let caps = Caps::default();
        assert_eq!(
            points_at_infinity_count(&curve("x*y - 1", 5, 1), &caps).unwrap(),
            2
        );
        assert_eq!(
            points_at_infinity_count(&curve("y^2 - x^3 - 3*x - 1", 5, 1), &caps).unwrap(),
            1
        );
        assert_eq!(
            points_at_infinity_count(&curve("y - x", 3, 1), &caps).unwrap(),
            1
        );
        // x^2 + y^2 over F_3: -1 is a non-square, no rational direction
        assert_eq!(
            points_at_infinity_count(&curve("x^2 + y^2 - 1", 3, 1), &caps).unwrap(),
            0
        );
    }

    #[test]
    fn singular_point_searches() {
        let caps = Caps::default();
        let s = singular_points(&curve("y^2 - x^3 - 3*x - 1", 5, 1), 1, &caps).unwrap();
        assert_eq!(ints(&s.points), vec![(2, 0)]);
        let s = singular_points(&curve("y^2 - x^3 - x - 1", 5, 1), 1, &caps).unwrap();
        assert!(!s.found());
        assert_eq!(s.summary(), "no singular point found up to degree 1");
        let s = singular_points(&curve("x*y - 1", 7, 1), 1, &caps).unwrap();
        assert!(!s.found());
    }

    #[test]
    fn singular_point_over_extension() {
        // y^2 = (x^2 + 1)^2 is singular at (+-i, 0), which are rational
        // only over F_9
        let caps = Caps::default();
        let c = curve("y^2 - x^4 - 2*x^2 - 1", 3, 1);
        assert!(!singular_points(&c, 1, &caps).unwrap().found());
        let s = singular_points(&c, 2, &caps).unwrap();
        assert_eq!(s.field.order(), 9);
        assert_eq!(s.points.count(), 2);
        assert!(matches!(
            singular_points(&c, 0, &caps),
            Err(CurveError::BadExtensionDegree)
        ));
    }

    #[test]
    fn hasse_weil_examples() {
        let caps = Caps::default();
        let hw = hasse_weil_window(&curve("x*y - 1", 5, 1), &caps).unwrap();
        assert_eq!((hw.n_points, hw.genus_bound), (6, 0));
        assert_eq!(hw.verdict, HwVerdict::Consistent);

        let hw = hasse_weil_window(&curve("y^2 - x^3 - x - 1", 5, 1), &caps).unwrap();
        assert_eq!(hw.rhs, BigInt::from(20));
        assert_eq!(hw.verdict, HwVerdict::Consistent);

        // x^2 - y^2 = (x - y)(x + y): 9 affine points, 2 at infinity
        let hw = hasse_weil_window(&curve("x^2 - y^2", 5, 1), &caps).unwrap();
        assert_eq!((hw.affine_count, hw.infinity_count), (9, 2));
        assert_eq!(hw.verdict, HwVerdict::ViolatesWindow);
    }

    #[test]
    fn slicing() {
        let caps = Caps::default();
        let f5 = FqContext::prime(5).unwrap();
        let s = parse_tripoly("x^2 + y^2 + z^2 - 1", &f5).unwrap();
        let slice = slice_surface(&s, 2, &f5.zero(), &caps).unwrap();
        assert_eq!(slice.curve.defining().to_string(), "x^2 + y^2 + 4");
        assert_eq!(slice.degree, 2);

        let s = parse_tripoly("x*y*z - 1", &f5).unwrap();
        let slice = slice_surface(&s, 2, &f5.from_int(2), &caps).unwrap();
        assert_eq!(slice.curve.defining().to_string(), "2*x*y + 4");
        // z = 0 kills the cubic term
        assert_eq!(slice.min_degree_per_variable, [Some(0), Some(0), Some(0)]);

        let f7 = FqContext::prime(7).unwrap();
        let s = parse_tripoly("x^3 + y^3 + z^3", &f7).unwrap();
        let slice = slice_surface(&s, 2, &f7.one(), &caps).unwrap();
        assert_eq!(slice.degree, 3);
        assert_eq!(slice.min_degree_per_variable, [Some(3); 3]);
        assert_eq!(slice.two_thirds_bound, 2);
        assert!(!slice.two_thirds_attained);

        let s = parse_tripoly("z*x - z*y", &f7).unwrap();
        assert!(matches!(
            slice_surface(&s, 2, &f7.zero(), &caps),
            Err(CurveError::SliceIsPlane)
        ));
    }
}
