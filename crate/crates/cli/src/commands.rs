use std::fs;
use std::io::Write;
use std::path::Path;

use curvadd::additive::LinearizedMap;
use curvadd::cover::{
    analyze, corollary_conic, corollary_elliptic, decide_by_exhaustion, decide_by_hyperplanes,
    verdict_is_sound, zero_forcing_inequality, AnalysisOptions, BoundReport, CoverError,
    CoverVerdict, OracleMode,
};
use curvadd::curve::{affine_points, load_curve, Curve, CurveError};
use curvadd::poly::{CoeffField, RationalFunction, Rationals, UniPoly};
use curvadd::valuation::{
    check_x_or_inverse, degree_valuation, ext2_family_check, h_additive, in_valuation_ring,
    padic_valuation, random_samples, verify_valuation_axioms, PropertyReport, SampleField,
    ValuationError,
};
use curvadd::{BigRational, Caps, FqContext, FqElement};
use thiserror::Error;

use crate::claims::verify_claims;
use crate::report::{render_text, AnalysisReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("{0}")]
    Inconsistent(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Invalid(_) => EXIT_INVALID,
            CliError::Inconsistent(_) => EXIT_INCONSISTENT,
        }
    }
}

impl From<CurveError> for CliError {
    fn from(e: CurveError) -> Self {
        match &e {
            CurveError::Parse(p) => CliError::Parse(p.to_string()),
            CurveError::File { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<CoverError> for CliError {
    fn from(e: CoverError) -> Self {
        match e {
            CoverError::Curve(c) => c.into(),
            CoverError::Inconsistent(a) => {
                CliError::Inconsistent(format!("INCONSISTENT: {}", a.issues.join("; ")))
            }
            other => CliError::Invalid(other.to_string()),
        }
    }
}

impl From<ValuationError> for CliError {
    fn from(e: ValuationError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

fn io_error(e: std::io::Error) -> CliError {
    CliError::Invalid(format!("i/o: {e}"))
}

/// Caps from `CURVADD_CAP` when set, defaults otherwise.
pub fn caps_from_env() -> Result<Caps, CliError> {
    match std::env::var("CURVADD_CAP") {
        Ok(v) => v.trim().parse::<u64>().map(Caps::uniform).map_err(|_| {
            CliError::Invalid(format!("CURVADD_CAP must be a positive integer, got '{v}'"))
        }),
        Err(_) => Ok(Caps::default()),
    }
}

fn read_curve(path: &Path) -> Result<Curve, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Invalid(format!("cannot read {}: {e}", path.display())))?;
    Ok(load_curve(&text)?)
}

pub fn cmd_analyze(
    out: &mut dyn Write,
    curve: &Path,
    singular_ext: usize,
    json: Option<&Path>,
    oracle: OracleMode,
    caps: Caps,
) -> Result<(), CliError> {
    let c = read_curve(curve)?;
    let opts = AnalysisOptions {
        singular_ext,
        oracle,
        caps,
    };
    let (analysis, failure) = match analyze(&c, &opts) {
        Ok(a) => (a, None),
        Err(CoverError::Inconsistent(a)) => {
            let msg = format!("INCONSISTENT: {}", a.issues.join("; "));
            (*a, Some(CliError::Inconsistent(msg)))
        }
        Err(e) => return Err(e.into()),
    };
    write!(out, "{}", render_text(&analysis)).map_err(io_error)?;
    if let Some(path) = json {
        let report = AnalysisReport::from_analysis(&analysis, caps.list);
        fs::write(path, report.to_json()).map_err(io_error)?;
    }
    failure.map_or(Ok(()), Err)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundClass {
    Conic,
    Elliptic,
}

fn write_bound(out: &mut dyn Write, b: &BoundReport) -> Result<(), CliError> {
    let d = b.d.map_or(String::new(), |d| format!(", d = {d}"));
    writeln!(out, "{} bound for p = {}, k = {}{d}", b.kind, b.p, b.k).map_err(io_error)?;
    for (name, v) in &b.terms {
        writeln!(out, "  {name} = {v}").map_err(io_error)?;
    }
    if let Some((cond, holds)) = b.sign_condition {
        writeln!(out, "  {cond}: {holds}").map_err(io_error)?;
    }
    writeln!(out, "  lhs = {}", b.lhs).map_err(io_error)?;
    writeln!(out, "  rhs = {}", b.rhs).map_err(io_error)?;
    writeln!(out, "  lhs > rhs: {}", b.lhs > b.rhs).map_err(io_error)?;
    writeln!(out, "forced_zero = {}", b.forced_zero).map_err(io_error)?;
    writeln!(out, "conjectural (factor 2 dropped) = {}", b.conjectural).map_err(io_error)?;
    Ok(())
}

pub fn cmd_bound(
    out: &mut dyn Write,
    p: u64,
    k: u32,
    d: Option<u64>,
    class: Option<BoundClass>,
) -> Result<(), CliError> {
    FqContext::prime(p).map_err(|e| CliError::Invalid(e.to_string()))?;
    if k == 0 || k > 4096 {
        return Err(CliError::Invalid(format!(
            "k must lie in 1..=4096, got {k}"
        )));
    }
    let b = match (d, class) {
        (Some(0), _) => return Err(CliError::Invalid("d must be at least 1".into())),
        (Some(d), None) => zero_forcing_inequality(p, k, d),
        (None, Some(BoundClass::Conic)) => corollary_conic(p, k),
        (None, Some(BoundClass::Elliptic)) => corollary_elliptic(p, k),
        _ => {
            return Err(CliError::Invalid(
                "give exactly one of --d and --class".into(),
            ))
        }
    };
    write_bound(out, &b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMode {
    Hyperplane,
    Exhaustive,
    Both,
}

fn coeff_list(f: &LinearizedMap) -> String {
    let items: Vec<String> = f.coeffs().iter().map(|c| c.index().to_string()).collect();
    format!("[{}]", items.join(", "))
}

fn write_verdict(out: &mut dyn Write, v: &CoverVerdict) -> Result<(), CliError> {
    writeln!(out, "{}: exists_nonzero = {}", v.method, v.exists_nonzero).map_err(io_error)?;
    if let (Some(f), Some(s)) = (&v.witness_map, &v.witness_subspace) {
        let mut basis: Vec<u64> = s.basis_elements().iter().map(FqElement::index).collect();
        basis.sort_unstable();
        writeln!(out, "  witness f(x) = {f}").map_err(io_error)?;
        writeln!(out, "  coeffs {}", coeff_list(f)).map_err(io_error)?;
        writeln!(out, "  kernel basis {basis:?} (dimension {})", s.dim()).map_err(io_error)?;
    }
    Ok(())
}

pub fn cmd_search(
    out: &mut dyn Write,
    curve: &Path,
    mode: SearchMode,
    caps: Caps,
) -> Result<(), CliError> {
    let c = read_curve(curve)?;
    let points = affine_points(&c, &caps)?;
    let ctx = c.context();
    writeln!(out, "{} affine point(s) on {}", points.count(), c).map_err(io_error)?;
    let mut verdicts = Vec::new();
    if mode != SearchMode::Exhaustive {
        verdicts.push(decide_by_hyperplanes(&points, ctx, &caps)?);
    }
    if mode != SearchMode::Hyperplane {
        verdicts.push(decide_by_exhaustion(&points, ctx, &caps)?);
    }
    let mut problems = Vec::new();
    for v in &verdicts {
        write_verdict(out, v)?;
        if !verdict_is_sound(&points, v) {
            problems.push(format!("{} witness failed re-verification", v.method));
        }
    }
    if let [a, b] = verdicts.as_slice() {
        let agree = a.exists_nonzero == b.exists_nonzero;
        writeln!(
            out,
            "agreement: {}",
            if agree { "agree" } else { "disagree" }
        )
        .map_err(io_error)?;
        if !agree {
            problems.push("hyperplane search and exhaustive oracle disagree".into());
        }
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::Inconsistent(format!(
            "INCONSISTENT: {}",
            problems.join("; ")
        )))
    }
}

/// Coefficient field for valuation commands: `Q` or a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValuationField {
    Rationals,
    Prime(u64),
}

impl std::str::FromStr for ValuationField {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "Q" | "q" => Ok(ValuationField::Rationals),
            other => other
                .parse::<u64>()
                .map(ValuationField::Prime)
                .map_err(|_| format!("expected Q or a prime, got '{other}'")),
        }
    }
}

fn prime_field(p: u64) -> Result<FqContext, CliError> {
    FqContext::prime(p).map_err(|e| CliError::Invalid(e.to_string()))
}

fn report_properties(out: &mut dyn Write, r: &PropertyReport) -> Result<bool, CliError> {
    write!(out, "{r}").map_err(io_error)?;
    Ok(r.all_pass())
}

fn parse_coeffs<F: CoeffField>(
    field: &F,
    text: &str,
    convert: impl Fn(&str) -> Option<F::Elem>,
) -> Result<UniPoly<F>, CliError> {
    let coeffs = text
        .split(',')
        .map(|c| {
            convert(c.trim())
                .ok_or_else(|| CliError::Invalid(format!("bad coefficient '{}'", c.trim())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(UniPoly::new(field.clone(), coeffs))
}

fn ext2_over<F: SampleField>(
    out: &mut dyn Write,
    field: &F,
    p_poly: UniPoly<F>,
    q_poly: UniPoly<F>,
    samples: usize,
    seed: u64,
) -> Result<bool, CliError> {
    writeln!(
        out,
        "{}: P = {p_poly}, Q = {q_poly}, {samples} samples, seed {seed}",
        field.label()
    )
    .map_err(io_error)?;
    let ss = random_samples(field, samples, seed);
    let r = ext2_family_check(&p_poly, &q_poly, &ss)?;
    report_properties(out, &r)
}

fn demo_rows<F: CoeffField>(
    out: &mut dyn Write,
    showcase: &[RationalFunction<F>],
) -> Result<bool, CliError> {
    let field = showcase[0].field().clone();
    let mut ok = true;
    for x in showcase {
        let inv = x.inv().map_err(ValuationError::from)?;
        let (hx, hinv) = (h_additive(x), h_additive(&inv));
        let product = field.mul(&hx, &hinv);
        let row_ok = field.is_zero(&product) && check_x_or_inverse(x)?;
        ok &= row_ok;
        writeln!(
            out,
            "  x = {:<22} v(x) = {:<4} x in O: {:<5}  h(x) = {:<4} h(1/x) = {:<4} h(x)h(1/x) = {}",
            x.to_string(),
            degree_valuation(x).to_string(),
            in_valuation_ring(x),
            hx.to_string(),
            hinv.to_string(),
            product
        )
        .map_err(io_error)?;
    }
    let t = RationalFunction::t(field.clone());
    let ht = h_additive(&t);
    writeln!(out, "  h(t) = {ht}").map_err(io_error)?;
    Ok(ok && ht == field.one())
}

fn showcase<F: CoeffField>(field: &F) -> Vec<RationalFunction<F>> {
    let poly = |c: &[i64]| UniPoly::from_ints(field.clone(), c);
    let rf = |n: &[i64], d: &[i64]| {
        RationalFunction::new(poly(n), poly(d)).expect("nonzero denominator")
    };
    vec![
        RationalFunction::t(field.clone()),
        rf(&[1], &[0, 1]),
        rf(&[1, 0, 1], &[1]),
        rf(&[0, 2, 0, 1], &[1, 0, 1]),
        rf(&[1], &[1, 1]),
        rf(&[1, 1], &[3, 0, 1]),
        rf(&[1, 0, 1], &[0, 0, 0, 0, 0, 1]),
        rf(&[7], &[3]),
    ]
}

pub fn cmd_valuation_demo(out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(
        out,
        "degree valuation v(f/g) = deg g - deg f; O = {{x : v(x) >= 0}};\n\
         h(x) = coefficient of t in the polynomial part of x.\n\
         h is additive, vanishes on O, and x or 1/x lies in O, so h(x)h(1/x) = 0 while h(t) = 1.\n"
    )
    .map_err(io_error)?;
    writeln!(out, "over Q(t):").map_err(io_error)?;
    let mut ok = demo_rows(out, &showcase(&Rationals))?;
    let f5 = prime_field(5)?;
    writeln!(out, "over F_5(t):").map_err(io_error)?;
    ok &= demo_rows(out, &showcase(&f5))?;
    if ok {
        writeln!(out, "all showcase checks pass").map_err(io_error)?;
        Ok(())
    } else {
        Err(CliError::Inconsistent("a showcase check failed".into()))
    }
}

fn default_fields(over: &[ValuationField], fallback: &[ValuationField]) -> Vec<ValuationField> {
    if over.is_empty() {
        fallback.to_vec()
    } else {
        over.to_vec()
    }
}

pub fn cmd_valuation_axioms(
    out: &mut dyn Write,
    samples: usize,
    seed: u64,
    over: &[ValuationField],
) -> Result<(), CliError> {
    let fields = default_fields(
        over,
        &[
            ValuationField::Rationals,
            ValuationField::Prime(3),
            ValuationField::Prime(5),
        ],
    );
    let mut ok = true;
    for f in fields {
        let r = match f {
            ValuationField::Rationals => verify_valuation_axioms(&Rationals, samples, seed),
            ValuationField::Prime(p) => verify_valuation_axioms(&prime_field(p)?, samples, seed),
        };
        ok &= report_properties(out, &r)?;
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::Inconsistent("valuation property failures".into()))
    }
}

pub fn cmd_valuation_ext2(
    out: &mut dyn Write,
    p_text: &str,
    q_text: &str,
    samples: usize,
    seed: u64,
    over: &[ValuationField],
) -> Result<(), CliError> {
    let mut ok = true;
    for f in default_fields(over, &[ValuationField::Rationals]) {
        ok &= match f {
            ValuationField::Rationals => {
                let conv = |s: &str| s.parse::<BigRational>().ok();
                let p = parse_coeffs(&Rationals, p_text, conv)?;
                let q = parse_coeffs(&Rationals, q_text, conv)?;
                ext2_over(out, &Rationals, p, q, samples, seed)?
            }
            ValuationField::Prime(pr) => {
                let field = prime_field(pr)?;
                let conv = |s: &str| s.parse::<i64>().ok().map(|n| field.from_int(n));
                let p = parse_coeffs(&field, p_text, conv)?;
                let q = parse_coeffs(&field, q_text, conv)?;
                ext2_over(out, &field, p, q, samples, seed)?
            }
        };
    }
    if ok {
        Ok(())
    } else {
        Err(CliError::Inconsistent(
            "h(P(s)) h(Q(1/s)) was nonzero for some sample".into(),
        ))
    }
}

pub fn cmd_valuation_padic(out: &mut dyn Write, value: &str, p: &str) -> Result<(), CliError> {
    let x = value
        .trim()
        .parse::<BigRational>()
        .map_err(|_| CliError::Invalid(format!("'{value}' is not a rational number")))?;
    let p = p
        .trim()
        .parse::<u64>()
        .map_err(|_| CliError::Invalid(format!("'{p}' is not a positive integer")))?;
    writeln!(out, "{}", padic_valuation(&x, p)?).map_err(io_error)?;
    Ok(())
}

pub fn cmd_verify_paper(out: &mut dyn Write, caps: Caps) -> Result<(), CliError> {
    let report = verify_claims(&caps)?;
    write!(out, "{}", report.render()).map_err(io_error)?;
    if report.inconsistencies.is_empty() {
        Ok(())
    } else {
        Err(CliError::Inconsistent(format!(
            "INCONSISTENT: {}",
            report.inconsistencies.join("; ")
        )))
    }
}
