use std::fmt;

use super::bounds::{
    corollary_conic, corollary_elliptic, zero_forcing_by_count, zero_forcing_inequality, BoundKind,
    BoundReport,
};
use super::{
    decide_by_exhaustion, decide_by_hyperplanes, verdict_is_sound, CoverError, CoverVerdict,
};
use crate::curve::{
    affine_points, hasse_weil_from_counts, points_at_infinity_count, singular_points, Curve,
    CurveError, HwVerdict, HwWindow, PointSet, SingularSearch,
};
use crate::published::{conic_claim, EXAMPLE_CURVES};
use crate::Caps;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OracleMode {
    /// Run the exhaustive scan whenever it fits the oracle cap.
    #[default]
    Auto,
    /// Always run it; exceeding the cap is an error.
    On,
    Off,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleAgreement {
    Agree,
    Disagree,
    Skipped,
}

impl fmt::Display for OracleAgreement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OracleAgreement::Agree => "agree",
            OracleAgreement::Disagree => "disagree",
            OracleAgreement::Skipped => "skipped",
        })
    }
}

#[derive(Debug, Clone, Copy)]
pub struct AnalysisOptions {
    /// Largest extension degree searched for singular points.
    pub singular_ext: usize,
    pub oracle: OracleMode,
    pub caps: Caps,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            singular_ext: 2,
            oracle: OracleMode::Auto,
            caps: Caps::default(),
        }
    }
}

/// Whether a bound's hypotheses hold well enough for its verdict to be held
/// against the search result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundUse {
    Applied,
    Excluded(String),
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub curve: Curve,
    pub points: PointSet,
    pub infinity_count: usize,
    pub singular: SingularSearch,
    pub hw: HwWindow,
    pub inequality: BoundReport,
    pub by_count: BoundReport,
    pub conic: Option<BoundReport>,
    pub elliptic: Option<BoundReport>,
    /// One entry per evaluated bound.
    pub bound_use: Vec<(BoundKind, BoundUse)>,
    /// Largest number of points sharing one x or one y coordinate.
    pub max_vertex_degree: usize,
    pub decision: CoverVerdict,
    pub oracle: Option<CoverVerdict>,
    pub oracle_agreement: OracleAgreement,
    /// Disagreements with published claims about this curve.
    pub paper_flags: Vec<String>,
    /// Informational remarks, e.g. a reduced singular-search degree.
    pub notes: Vec<String>,
    /// Internal contradictions. Non-empty means the analysis failed.
    pub issues: Vec<String>,
}

impl Analysis {
    pub fn is_consistent(&self) -> bool {
        self.issues.is_empty()
    }

    /// All evaluated bounds in report order.
    pub fn bounds(&self) -> Vec<&BoundReport> {
        let mut out = vec![&self.inequality, &self.by_count];
        out.extend(self.conic.as_ref());
        out.extend(self.elliptic.as_ref());
        out
    }

    pub fn any_conjectural(&self) -> bool {
        self.bounds().iter().any(|b| b.conjectural)
    }
}

/// Singular search at the requested degree, stepping down while the
/// extension field exceeds the enumeration cap.
fn bounded_singular_search(
    c: &Curve,
    requested: usize,
    caps: &Caps,
    notes: &mut Vec<String>,
) -> Result<SingularSearch, CoverError> {
    let mut m = requested.max(1);
    loop {
        match singular_points(c, m, caps) {
            Ok(s) => {
                if m < requested {
                    notes.push(format!(
                        "singular search reduced from degree {requested} to {m} by the enumeration cap"
                    ));
                }
                return Ok(s);
            }
            Err(CurveError::Cap(e)) if m == 1 => return Err(e.into()),
            Err(CurveError::Cap(_)) => m -= 1,
            Err(e) => return Err(e.into()),
        }
    }
}

fn format_points(points: &[(u64, u64)]) -> String {
    let items: Vec<String> = points.iter().map(|(x, y)| format!("({x},{y})")).collect();
    format!("{{{}}}", items.join(","))
}

fn published_flags(a: &Analysis) -> Vec<String> {
    let mut flags = Vec::new();
    for ex in EXAMPLE_CURVES {
        if !ex.matches(&a.curve) {
            continue;
        }
        let computed: Vec<(u64, u64)> = a
            .points
            .iter()
            .map(|(x, y)| (x.index(), y.index()))
            .collect();
        if computed != ex.claimed_points {
            flags.push(format!(
                "{}: claimed {} affine points {}, computed {} {}",
                ex.label,
                ex.claimed_points.len(),
                format_points(ex.claimed_points),
                computed.len(),
                format_points(&computed)
            ));
        }
        if ex.claimed_identity_witness {
            let failing: Vec<(u64, u64)> = computed
                .iter()
                .copied()
                .filter(|&(x, y)| x != 0 && y != 0)
                .collect();
            if !failing.is_empty() {
                flags.push(format!(
                    "{}: claimed f(x) = x satisfies the condition, but it fails at {}",
                    ex.label,
                    format_points(&failing)
                ));
            }
        }
        if ex.claimed_smooth && a.singular.found() {
            let sing: Vec<String> = a
                .singular
                .points
                .iter()
                .map(|(x, y)| format!("({x},{y})"))
                .collect();
            flags.push(format!(
                "{}: presented as smooth, but singular at {}",
                ex.label,
                sing.join(",")
            ));
        }
    }
    if let Some(conic) = &a.conic {
        if conic_claim(conic.p, conic.k) == Some(true) && !conic.forced_zero {
            flags.push(format!(
                "conic threshold claimed for p >= 5, but p^k - 1 > 4 p^(k-1) fails at (p={}, k={}): {} > {} is false",
                conic.p, conic.k, conic.lhs, conic.rhs
            ));
        }
    }
    flags
}

/// Runs the full pipeline on `c` and checks the results against each other.
///
/// Consistency rules:
/// - the hyperplane verdict and its witness must re-verify;
/// - the exhaustive scan, when run, must agree;
/// - a bound whose hypotheses are not refuted and that forces `f = 0` must
///   not coexist with a nonzero witness.
///
/// The count bound needs every x and every y to meet at most d points.
/// The inequality and the conic and elliptic thresholds need a smooth,
/// absolutely irreducible curve; a singular point found or a Hasse-Weil
/// violation refutes that. The elliptic threshold also assumes exactly one
/// point at infinity.
pub fn analyze(c: &Curve, opts: &AnalysisOptions) -> Result<Analysis, CoverError> {
    let caps = &opts.caps;
    let ctx = c.context();
    let (p, k) = (ctx.p(), ctx.k() as u32);
    let d = u64::from(c.degree());
    let mut notes = Vec::new();

    let points = affine_points(c, caps)?;
    let infinity_count = points_at_infinity_count(c, caps)?;
    let singular = bounded_singular_search(c, opts.singular_ext, caps, &mut notes)?;
    let hw = hasse_weil_from_counts(c, points.count(), infinity_count);
    let (dx, dy) = points.max_vertex_degrees();
    let max_vertex_degree = dx.max(dy);

    let inequality = zero_forcing_inequality(p, k, d);
    let by_count = zero_forcing_by_count(points.count() as u64, d, p, k);
    let conic = (d == 2).then(|| corollary_conic(p, k));
    let elliptic = (d == 3).then(|| corollary_elliptic(p, k));

    let refuted = match (singular.found(), hw.verdict) {
        (true, _) => Some("a singular point was found".to_string()),
        (false, HwVerdict::ViolatesWindow) => {
            Some("the point count violates the Hasse-Weil window".to_string())
        }
        _ => None,
    };
    let smooth_use = || match &refuted {
        Some(reason) => BoundUse::Excluded(reason.clone()),
        None => BoundUse::Applied,
    };
    let mut bound_use = vec![(BoundKind::Inequality, smooth_use())];
    bound_use.push((
        BoundKind::ByCount,
        if max_vertex_degree as u64 <= d {
            BoundUse::Applied
        } else {
            BoundUse::Excluded(format!(
                "a coordinate value meets {max_vertex_degree} points, more than the degree {d}"
            ))
        },
    ));
    if conic.is_some() {
        bound_use.push((BoundKind::Conic, smooth_use()));
    }
    if elliptic.is_some() {
        let u = match smooth_use() {
            BoundUse::Applied if infinity_count != 1 => {
                BoundUse::Excluded(format!("{infinity_count} points at infinity instead of 1"))
            }
            u => u,
        };
        bound_use.push((BoundKind::Elliptic, u));
    }

    let decision = decide_by_hyperplanes(&points, ctx, caps)?;
    let oracle = match opts.oracle {
        OracleMode::Off => None,
        OracleMode::On => Some(decide_by_exhaustion(&points, ctx, caps)?),
        OracleMode::Auto => match decide_by_exhaustion(&points, ctx, caps) {
            Ok(v) => Some(v),
            Err(CoverError::Cap(_)) => {
                notes.push("exhaustive oracle skipped: outside the oracle cap".into());
                None
            }
            Err(e) => return Err(e),
        },
    };
    let oracle_agreement = match &oracle {
        None => OracleAgreement::Skipped,
        Some(o) if o.exists_nonzero == decision.exists_nonzero => OracleAgreement::Agree,
        Some(_) => OracleAgreement::Disagree,
    };

    let mut analysis = Analysis {
        curve: c.clone(),
        points,
        infinity_count,
        singular,
        hw,
        inequality,
        by_count,
        conic,
        elliptic,
        bound_use,
        max_vertex_degree,
        decision,
        oracle,
        oracle_agreement,
        paper_flags: Vec::new(),
        notes,
        issues: Vec::new(),
    };
    analysis.paper_flags = published_flags(&analysis);

    let mut issues = Vec::new();
    if !verdict_is_sound(&analysis.points, &analysis.decision) {
        issues.push("hyperplane witness failed re-verification".to_string());
    }
    if let Some(o) = &analysis.oracle {
        if !verdict_is_sound(&analysis.points, o) {
            issues.push("oracle witness failed re-verification".to_string());
        }
    }
    if analysis.oracle_agreement == OracleAgreement::Disagree {
        issues.push("hyperplane search and exhaustive oracle disagree".to_string());
    }
    if analysis.decision.exists_nonzero {
        for b in analysis.bounds() {
            let applied = analysis
                .bound_use
                .iter()
                .any(|(kind, u)| *kind == b.kind && *u == BoundUse::Applied);
            if b.forced_zero && applied {
                issues.push(format!(
                    "{} bound forces f = 0, yet a nonzero f exists",
                    b.kind
                ));
            }
        }
    }
    analysis.issues = issues;

    if analysis.is_consistent() {
        Ok(analysis)
    } else {
        Err(CoverError::Inconsistent(Box::new(analysis)))
    }
}
