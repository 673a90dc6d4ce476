//! Valuations on Q, Q(t) and F_p(t), and an explicit nonzero additive
//! function `h` with `h(x) h(1/x) = 0`.
//!
//! With the degree valuation `v(f/g) = deg g - deg f`, the valuation ring
//! `O = {v >= 0}` is exactly the set of rational functions whose polynomial
//! part is constant. Taking `h(x)` to be the coefficient of `t` in the
//! polynomial part therefore gives an additive map that vanishes on `O`.
//! Since `x` or `1/x` lies in `O` for every nonzero `x`, one of `h(x)` and
//! `h(1/x)` is zero, while `h(t) = 1`.
//!
//! Over the reals the same conclusion goes through a valuation on R extending
//! one on Q(alpha) for a transcendental alpha. That extension is not
//! constructive and nothing here realizes it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::fields::{is_prime, FqContext};
use crate::poly::{CoeffField, Degree, PolyError, RationalFunction, Rationals, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("the operation needs a nonzero argument")]
    ZeroArgument,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// An integer or infinity; infinity exceeds every integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ValuationValue {
    Finite(BigInt),
    Infinity,
}

impl ValuationValue {
    pub fn finite(n: i64) -> Self {
        ValuationValue::Finite(BigInt::from(n))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ValuationValue::Infinity)
    }

    pub fn is_nonnegative(&self) -> bool {
        match self {
            ValuationValue::Finite(n) => !n.is_negative(),
            ValuationValue::Infinity => true,
        }
    }
}

impl Ord for ValuationValue {
    fn cmp(&self, other: &Self) -> Ordering {
        use ValuationValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinity) => Ordering::Less,
            (Infinity, Finite(_)) => Ordering::Greater,
            (Infinity, Infinity) => Ordering::Equal,
        }
    }
}

impl PartialOrd for ValuationValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Add for &ValuationValue {
    type Output = ValuationValue;
    fn add(self, rhs: Self) -> ValuationValue {
        match (self, rhs) {
            (ValuationValue::Finite(a), ValuationValue::Finite(b)) => ValuationValue::Finite(a + b),
            _ => ValuationValue::Infinity,
        }
    }
}

impl Add for ValuationValue {
    type Output = ValuationValue;
    fn add(self, rhs: Self) -> ValuationValue {
        &self + &rhs
    }
}

impl fmt::Display for ValuationValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValuationValue::Finite(n) => write!(f, "{n}"),
            ValuationValue::Infinity => f.write_str("inf"),
        }
    }
}

fn degree_of<F: CoeffField>(p: &UniPoly<F>) -> i64 {
    match p.degree() {
        Degree::Finite(n) => n as i64,
        Degree::NegInfinity => unreachable!("only called on nonzero polynomials"),
    }
}

/// `deg den - deg num` on the reduced form; infinity at zero.
pub fn degree_valuation<F: CoeffField>(x: &RationalFunction<F>) -> ValuationValue {
    if x.is_zero() {
        return ValuationValue::Infinity;
    }
    ValuationValue::finite(degree_of(x.den()) - degree_of(x.num()))
}

/// v(x) = 0 for every nonzero x.
pub fn trivial_valuation<F: CoeffField>(x: &RationalFunction<F>) -> ValuationValue {
    if x.is_zero() {
        ValuationValue::Infinity
    } else {
        ValuationValue::finite(0)
    }
}

pub fn in_valuation_ring<F: CoeffField>(x: &RationalFunction<F>) -> bool {
    degree_valuation(x).is_nonnegative()
}

/// Coefficient of `t` in the polynomial part of `x`.
pub fn h_additive<F: CoeffField>(x: &RationalFunction<F>) -> F::Elem {
    x.polynomial_part().coeff(1)
}

/// Whether `x` or `1/x` lies in the valuation ring. Always true.
pub fn check_x_or_inverse<F: CoeffField>(x: &RationalFunction<F>) -> Result<bool, ValuationError> {
    if x.is_zero() {
        return Err(ValuationError::ZeroArgument);
    }
    Ok(in_valuation_ring(x) || in_valuation_ring(&x.inv()?))
}

/// Exponent of `p` in `x`; infinity at zero.
pub fn padic_valuation(x: &BigRational, p: u64) -> Result<ValuationValue, ValuationError> {
    if !is_prime(p) {
        return Err(ValuationError::NotPrime(p));
    }
    if x.is_zero() {
        return Ok(ValuationValue::Infinity);
    }
    let p = BigInt::from(p);
    let multiplicity = |n: &BigInt| {
        let mut n = n.abs();
        let mut e = 0i64;
        loop {
            let (q, r) = n.div_rem(&p);
            if !r.is_zero() {
                return e;
            }
            n = q;
            e += 1;
        }
    };
    Ok(ValuationValue::finite(
        multiplicity(x.numer()) - multiplicity(x.denom()),
    ))
}

/// Coefficient fields that can produce seeded random elements.
pub trait SampleField: CoeffField {
    /// A random element; `height` bounds numerators and denominators over Q.
    fn sample(&self, rng: &mut ChaCha8Rng, height: i64) -> Self::Elem;
    fn label(&self) -> String;
}

impl SampleField for Rationals {
    fn sample(&self, rng: &mut ChaCha8Rng, height: i64) -> BigRational {
        let num = rng.gen_range(-height..=height);
        let den = rng.gen_range(1..=height);
        BigRational::new(num.into(), den.into())
    }

    fn label(&self) -> String {
        "Q(t)".into()
    }
}

impl SampleField for FqContext {
    fn sample(&self, rng: &mut ChaCha8Rng, _height: i64) -> Self::Elem {
        self.element_at(rng.gen_range(0..self.order()))
    }

    fn label(&self) -> String {
        if self.k() == 1 {
            format!("F_{}(t)", self.p())
        } else {
            format!("F_{}^{}(t)", self.p(), self.k())
        }
    }
}

/// Degree and height limits for random rational functions.
#[derive(Debug, Clone, Copy)]
pub struct SampleShape {
    pub max_degree: usize,
    pub height: i64,
}

impl Default for SampleShape {
    fn default() -> Self {
        Self {
            max_degree: 8,
            height: 9,
        }
    }
}

pub fn random_poly<F: SampleField>(
    field: &F,
    rng: &mut ChaCha8Rng,
    shape: SampleShape,
) -> UniPoly<F> {
    let deg = rng.gen_range(0..=shape.max_degree);
    let coeffs = (0..=deg).map(|_| field.sample(rng, shape.height)).collect();
    UniPoly::new(field.clone(), coeffs)
}

fn random_nonzero_poly<F: SampleField>(
    field: &F,
    rng: &mut ChaCha8Rng,
    shape: SampleShape,
) -> UniPoly<F> {
    loop {
        let p = random_poly(field, rng, shape);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A random rational function, possibly zero.
pub fn random_ratfunc<F: SampleField>(
    field: &F,
    rng: &mut ChaCha8Rng,
    shape: SampleShape,
) -> RationalFunction<F> {
    let num = random_poly(field, rng, shape);
    let den = random_nonzero_poly(field, rng, shape);
    RationalFunction::new(num, den).expect("denominator is nonzero")
}

pub fn random_nonzero_ratfunc<F: SampleField>(
    field: &F,
    rng: &mut ChaCha8Rng,
    shape: SampleShape,
) -> RationalFunction<F> {
    let num = random_nonzero_poly(field, rng, shape);
    let den = random_nonzero_poly(field, rng, shape);
    RationalFunction::new(num, den).expect("denominator is nonzero")
}

fn random_rational(rng: &mut ChaCha8Rng) -> BigRational {
    // products of small primes so that p-adic valuations are often nonzero
    let part = |rng: &mut ChaCha8Rng| {
        let mut n = BigInt::from(rng.gen_range(1..=30i64));
        for _ in 0..rng.gen_range(0..4) {
            n *= [2, 3, 5, 7][rng.gen_range(0..4)];
        }
        n
    };
    let sign = if rng.gen_bool(0.5) { 1 } else { -1 };
    let num = part(rng) * sign;
    if rng.gen_ratio(1, 20) {
        return BigRational::zero();
    }
    BigRational::new(num, part(rng))
}

/// Pass and failure counts for one named property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub name: String,
    pub passed: usize,
    pub failed: usize,
    /// The first failing input, rendered.
    pub first_failure: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub checks: Vec<PropertyCheck>,
}

impl PropertyReport {
    fn record(&mut self, name: &str, ok: bool, describe: impl FnOnce() -> String) {
        let idx = match self.checks.iter().position(|c| c.name == name) {
            Some(i) => i,
            None => {
                self.checks.push(PropertyCheck {
                    name: name.to_string(),
                    passed: 0,
                    failed: 0,
                    first_failure: None,
                });
                self.checks.len() - 1
            }
        };
        let check = &mut self.checks[idx];
        if ok {
            check.passed += 1;
        } else {
            check.failed += 1;
            if check.first_failure.is_none() {
                check.first_failure = Some(describe());
            }
        }
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().map(|c| c.failed).sum()
    }

    pub fn merge(&mut self, other: PropertyReport) {
        for c in other.checks {
            match self.checks.iter_mut().find(|m| m.name == c.name) {
                Some(m) => {
                    m.passed += c.passed;
                    m.failed += c.failed;
                    if m.first_failure.is_none() {
                        m.first_failure = c.first_failure;
                    }
                }
                None => self.checks.push(c),
            }
        }
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.failed == 0 { "ok" } else { "FAIL" };
            write!(
                f,
                "{status:4} {} ({} passed, {} failed)",
                c.name, c.passed, c.failed
            )?;
            if let Some(ex) = &c.first_failure {
                write!(f, " first failure: {ex}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// A sample pair with its product and sum, computed once.
struct Pair<F: CoeffField> {
    x: RationalFunction<F>,
    y: RationalFunction<F>,
    product: RationalFunction<F>,
    sum: RationalFunction<F>,
}

impl<F: CoeffField> Pair<F> {
    fn new(x: RationalFunction<F>, y: RationalFunction<F>) -> Self {
        let product = &x * &y;
        let sum = &x + &y;
        Self { x, y, product, sum }
    }
}

fn valuation_axioms<F: CoeffField>(
    report: &mut PropertyReport,
    label: &str,
    v: impl Fn(&RationalFunction<F>) -> ValuationValue,
    pair: &Pair<F>,
) {
    let (x, y) = (&pair.x, &pair.y);
    let (vx, vy) = (v(x), v(y));
    report.record(
        &format!("{label}: v(xy) = v(x) + v(y)"),
        v(&pair.product) == &vx + &vy,
        || format!("x = {x}, y = {y}"),
    );
    report.record(
        &format!("{label}: v(x + y) >= min(v(x), v(y))"),
        v(&pair.sum) >= vx.clone().min(vy),
        || format!("x = {x}, y = {y}"),
    );
    report.record(
        &format!("{label}: v(x) = inf iff x = 0"),
        vx.is_infinite() == x.is_zero(),
        || format!("x = {x}"),
    );
}

/// Valuation axioms, valuation-ring properties and the behaviour of `h` on
/// `samples` seeded random pairs over `field`, plus the p-adic valuation on
/// random rationals for p in {2, 3, 5, 7}.
pub fn verify_valuation_axioms<F: SampleField>(
    field: &F,
    sample_count: usize,
    seed: u64,
) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = SampleShape::default();
    let mut report = PropertyReport::default();
    let label = field.label();
    let zero = RationalFunction::zero(field.clone());

    let t = RationalFunction::t(field.clone());
    report.record(
        &format!("{label}: h(t) = 1"),
        h_additive(&t) == field.one(),
        || "h(t)".into(),
    );
    for n in 0..=16i64 {
        let tn =
            RationalFunction::from_poly(UniPoly::monomial(field.clone(), field.one(), n as usize));
        let ok = degree_valuation(&tn) == ValuationValue::finite(-n)
            && degree_valuation(&tn.inv().expect("t^n is nonzero")) == ValuationValue::finite(n);
        report.record(&format!("{label}: v(t^-n) = n and v(t^n) = -n"), ok, || {
            format!("n = {n}")
        });
    }

    for _ in 0..sample_count {
        let x = random_ratfunc(field, &mut rng, shape);
        let y = random_ratfunc(field, &mut rng, shape);
        let c = field.sample(&mut rng, shape.height);
        let pair = Pair::new(x.clone(), y.clone());
        let with_zero = Pair {
            x: x.clone(),
            y: zero.clone(),
            product: zero.clone(),
            sum: x.clone(),
        };

        valuation_axioms(
            &mut report,
            &format!("{label} degree"),
            degree_valuation,
            &pair,
        );
        valuation_axioms(
            &mut report,
            &format!("{label} trivial"),
            trivial_valuation,
            &pair,
        );
        valuation_axioms(
            &mut report,
            &format!("{label} degree"),
            degree_valuation,
            &with_zero,
        );

        if in_valuation_ring(&x) && in_valuation_ring(&y) {
            report.record(
                &format!("{label}: O closed under +"),
                in_valuation_ring(&pair.sum),
                || format!("x = {x}, y = {y}"),
            );
            report.record(
                &format!("{label}: O closed under *"),
                in_valuation_ring(&pair.product),
                || format!("x = {x}, y = {y}"),
            );
        }
        let constant = RationalFunction::constant(field.clone(), c.clone());
        report.record(
            &format!("{label}: constants lie in O"),
            in_valuation_ring(&constant),
            || format!("c = {c}"),
        );

        let hx = h_additive(&x);
        report.record(
            &format!("{label}: h(x + y) = h(x) + h(y)"),
            h_additive(&pair.sum) == field.add(&hx, &h_additive(&y)),
            || format!("x = {x}, y = {y}"),
        );
        report.record(
            &format!("{label}: h(c x) = c h(x)"),
            h_additive(&x.scale(&c)) == field.mul(&c, &hx),
            || format!("c = {c}, x = {x}"),
        );
        if in_valuation_ring(&x) {
            report.record(
                &format!("{label}: h vanishes on O"),
                field.is_zero(&hx),
                || format!("x = {x}"),
            );
        }
        if !x.is_zero() {
            report.record(
                &format!("{label}: x in O or 1/x in O"),
                check_x_or_inverse(&x).unwrap_or(false),
                || format!("x = {x}"),
            );
            let inv = x.inv().expect("x is nonzero");
            report.record(
                &format!("{label}: h(x) h(1/x) = 0"),
                field.is_zero(&field.mul(&hx, &h_additive(&inv))),
                || format!("x = {x}"),
            );
        }
    }

    for p in [2u64, 3, 5, 7] {
        let padic = format!("Q {p}-adic");
        for _ in 0..sample_count {
            let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
            let v = |r: &BigRational| padic_valuation(r, p).expect("p is prime");
            let (va, vb) = (v(&a), v(&b));
            report.record(
                &format!("{padic}: v(xy) = v(x) + v(y)"),
                v(&(&a * &b)) == &va + &vb,
                || format!("x = {a}, y = {b}"),
            );
            report.record(
                &format!("{padic}: v(x + y) >= min(v(x), v(y))"),
                v(&(&a + &b)) >= va.clone().min(vb),
                || format!("x = {a}, y = {b}"),
            );
            report.record(
                &format!("{padic}: v(x) = inf iff x = 0"),
                va.is_infinite() == a.is_zero(),
                || format!("x = {a}"),
            );
        }
    }
    report
}

/// For the curve `(P(s), Q(1/s))` checks `h(P(s)) h(Q(1/s)) = 0` at every
/// sample `s`. If `s` lies in `O` so does `P(s)`; otherwise `1/s` and hence
/// `Q(1/s)` do.
pub fn ext2_family_check<F: CoeffField>(
    p: &UniPoly<F>,
    q: &UniPoly<F>,
    samples: &[RationalFunction<F>],
) -> Result<PropertyReport, ValuationError> {
    let field = p.field();
    let mut report = PropertyReport::default();
    for s in samples {
        if s.is_zero() {
            return Err(ValuationError::ZeroArgument);
        }
        let x = RationalFunction::compose_into(p, s);
        let y = RationalFunction::compose_into(q, &s.inv()?);
        let product = field.mul(&h_additive(&x), &h_additive(&y));
        report.record("h(P(s)) h(Q(1/s)) = 0", field.is_zero(&product), || {
            format!("P = {p}, Q = {q}, s = {s}")
        });
    }
    Ok(report)
}

/// `pairs` random polynomial pairs (P, Q), each checked on `samples` random
/// nonzero rational functions.
pub fn random_family_check<F: SampleField>(
    field: &F,
    pairs: usize,
    samples: usize,
    seed: u64,
) -> PropertyReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let poly_shape = SampleShape {
        max_degree: 4,
        ..SampleShape::default()
    };
    let sample_shape = SampleShape {
        max_degree: 3,
        ..SampleShape::default()
    };
    let mut report = PropertyReport::default();
    for _ in 0..pairs {
        let p = random_poly(field, &mut rng, poly_shape);
        let q = random_poly(field, &mut rng, poly_shape);
        let ss: Vec<_> = (0..samples)
            .map(|_| random_nonzero_ratfunc(field, &mut rng, sample_shape))
            .collect();
        report.merge(ext2_family_check(&p, &q, &ss).expect("samples are nonzero"));
    }
    report
}

/// Seeded nonzero samples for [`ext2_family_check`].
pub fn random_samples<F: SampleField>(field: &F, n: usize, seed: u64) -> Vec<RationalFunction<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let shape = SampleShape {
        max_degree: 3,
        ..SampleShape::default()
    };
    (0..n)
        .map(|_| random_nonzero_ratfunc(field, &mut rng, shape))
        .collect()
}
