//! Side-by-side comparison of published claims with computed results.

use std::fmt::Write as _;

use curvadd::cover::{
    analyze, corollary_conic, corollary_elliptic, AnalysisOptions, BoundReport, CoverError,
};
use curvadd::curve::{Assertions, Curve};
use curvadd::published::{conic_claim, elliptic_claim, EXAMPLE_CURVES};
use curvadd::{Caps, FqContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RowStatus {
    Match,
    Mismatch,
}

impl RowStatus {
    fn of(ok: bool) -> Self {
        if ok {
            RowStatus::Match
        } else {
            RowStatus::Mismatch
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            RowStatus::Match => "MATCH",
            RowStatus::Mismatch => "MISMATCH",
        }
    }
}

#[derive(Debug, Clone)]
pub struct ExampleRow {
    pub label: &'static str,
    pub expression: &'static str,
    pub claimed_points: Vec<(u64, u64)>,
    /// From the analysis pipeline.
    pub computed_points: Vec<(u64, u64)>,
    /// From a plain double loop over F_p x F_p.
    pub oracle_points: Vec<(u64, u64)>,
    pub exists_nonzero: bool,
    pub witness: Option<String>,
    pub singular: Vec<(u64, u64)>,
    pub flags: Vec<String>,
    pub status: RowStatus,
}

#[derive(Debug, Clone)]
pub struct HyperbolaRow {
    pub field: String,
    pub m: usize,
    pub by_count_forced: bool,
    pub inequality_forced: bool,
    pub exists_nonzero: bool,
    pub status: RowStatus,
}

#[derive(Debug, Clone)]
pub struct ThresholdRow {
    pub class: &'static str,
    pub p: u64,
    pub k: u32,
    pub bound: BoundReport,
    pub claim: Option<bool>,
    pub status: RowStatus,
}

#[derive(Debug, Clone, Default)]
pub struct ClaimsReport {
    pub examples: Vec<ExampleRow>,
    pub hyperbolas: Vec<HyperbolaRow>,
    pub table: Vec<ThresholdRow>,
    pub paper_flags: Vec<String>,
    /// Internal contradictions; any entry means exit status 3.
    pub inconsistencies: Vec<String>,
}

pub const TABLE_PRIMES: [u64; 5] = [5, 7, 11, 13, 17];
pub const TABLE_DEGREES: [u32; 3] = [1, 2, 3];

/// Every (x, y) in F_p^2 with f(x, y) = 0, by direct evaluation.
pub fn brute_force_points(c: &Curve) -> Vec<(u64, u64)> {
    let ctx = c.context();
    let mut out = Vec::new();
    for x in ctx.elements() {
        for y in ctx.elements() {
            let v = c
                .defining()
                .eval(&[x.clone(), y.clone()])
                .expect("coordinates lie in the curve's field");
            if v.is_zero() {
                out.push((x.index(), y.index()));
            }
        }
    }
    out
}

fn points_text(points: &[(u64, u64)]) -> String {
    let items: Vec<String> = points.iter().map(|(x, y)| format!("({x},{y})")).collect();
    format!("{{{}}}", items.join(","))
}

fn run_analysis(
    c: &Curve,
    caps: &Caps,
    inconsistencies: &mut Vec<String>,
) -> Result<curvadd::cover::Analysis, CoverError> {
    let opts = AnalysisOptions {
        caps: *caps,
        ..AnalysisOptions::default()
    };
    match analyze(c, &opts) {
        Err(CoverError::Inconsistent(a)) => {
            inconsistencies.extend(a.issues.iter().map(|i| format!("{c}: {i}")));
            Ok(*a)
        }
        other => other,
    }
}

pub fn verify_claims(caps: &Caps) -> Result<ClaimsReport, CoverError> {
    let mut report = ClaimsReport::default();

    for ex in EXAMPLE_CURVES {
        let curve = ex.curve();
        let a = run_analysis(&curve, caps, &mut report.inconsistencies)?;
        let computed: Vec<(u64, u64)> = a
            .points
            .iter()
            .map(|(x, y)| (x.index(), y.index()))
            .collect();
        let oracle = brute_force_points(&curve);
        if computed != oracle {
            report.inconsistencies.push(format!(
                "{}: enumeration {} disagrees with brute force {}",
                ex.label,
                points_text(&computed),
                points_text(&oracle)
            ));
        }
        let witness_ok = !ex.claimed_identity_witness
            || a.decision.exists_nonzero && computed.iter().all(|&(x, y)| x == 0 || y == 0);
        let status = RowStatus::of(
            computed == ex.claimed_points
                && witness_ok
                && !(ex.claimed_smooth && a.singular.found()),
        );
        report.paper_flags.extend(a.paper_flags.iter().cloned());
        report.examples.push(ExampleRow {
            label: ex.label,
            expression: ex.expression,
            claimed_points: ex.claimed_points.to_vec(),
            computed_points: computed,
            oracle_points: oracle,
            exists_nonzero: a.decision.exists_nonzero,
            witness: a.decision.witness_map.as_ref().map(ToString::to_string),
            singular: a
                .singular
                .points
                .iter()
                .map(|(x, y)| (x.index(), y.index()))
                .collect(),
            flags: a.paper_flags.clone(),
            status,
        });
    }

    for (p, k) in [(3u64, 1usize), (5, 1), (7, 1), (3, 2)] {
        let ctx = FqContext::new(p, k, None)?;
        let curve = Curve::parse("x*y - 1", &ctx, Assertions::default())?;
        let a = run_analysis(&curve, caps, &mut report.inconsistencies)?;
        let forced = a.by_count.forced_zero || a.inequality.forced_zero;
        report.hyperbolas.push(HyperbolaRow {
            field: if k == 1 {
                format!("F_{p}")
            } else {
                format!("F_{}", p.pow(k as u32))
            },
            m: a.points.count(),
            by_count_forced: a.by_count.forced_zero,
            inequality_forced: a.inequality.forced_zero,
            exists_nonzero: a.decision.exists_nonzero,
            status: RowStatus::of(!forced || !a.decision.exists_nonzero),
        });
    }

    for p in TABLE_PRIMES {
        for k in TABLE_DEGREES {
            for (class, bound, claim) in [
                ("conic", corollary_conic(p, k), conic_claim(p, k)),
                ("elliptic", corollary_elliptic(p, k), elliptic_claim(p, k)),
            ] {
                let status = RowStatus::of(bound.forced_zero == claim.unwrap_or(false));
                if status == RowStatus::Mismatch {
                    report.paper_flags.push(format!(
                        "{class} threshold at (p={p}, k={k}): claimed {}, computed forced_zero = {} ({} > {} is {})",
                        claim.map_or("nothing".to_string(), |c| format!("forced_zero = {c}")),
                        bound.forced_zero,
                        bound.lhs,
                        bound.rhs,
                        bound.lhs > bound.rhs
                    ));
                }
                report.table.push(ThresholdRow {
                    class,
                    p,
                    k,
                    bound,
                    claim,
                    status,
                });
            }
        }
    }
    report.paper_flags.dedup();
    Ok(report)
}

impl ClaimsReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== worked example curves ==");
        for row in &self.examples {
            let _ = writeln!(out, "{}: {} = 0", row.label, row.expression);
            let _ = writeln!(
                out,
                "  claimed   {} ({} points)",
                points_text(&row.claimed_points),
                row.claimed_points.len()
            );
            let _ = writeln!(
                out,
                "  computed  {} ({} points)",
                points_text(&row.computed_points),
                row.computed_points.len()
            );
            let _ = writeln!(
                out,
                "  oracle    {} ({} points)",
                points_text(&row.oracle_points),
                row.oracle_points.len()
            );
            let _ = writeln!(out, "  singular  {}", points_text(&row.singular));
            let _ = writeln!(
                out,
                "  claimed witness f(x) = x; computed exists_nonzero = {}{}",
                row.exists_nonzero,
                row.witness
                    .as_ref()
                    .map_or(String::new(), |w| format!(", witness f(x) = {w}"))
            );
            let _ = writeln!(out, "  {}", row.status.label());
        }

        let _ = writeln!(out, "\n== hyperbola xy = 1 ==");
        let _ = writeln!(
            out,
            "{:<6} {:>3}  {:<9} {:<10} {:<14} status",
            "field", "m", "by_count", "inequality", "exists_nonzero"
        );
        for row in &self.hyperbolas {
            let _ = writeln!(
                out,
                "{:<6} {:>3}  {:<9} {:<10} {:<14} {}",
                row.field,
                row.m,
                row.by_count_forced,
                row.inequality_forced,
                row.exists_nonzero,
                row.status.label()
            );
        }

        let _ = writeln!(out, "\n== conic and elliptic thresholds ==");
        let _ = writeln!(
            out,
            "{:<9} {:>3} {:>2}  {:<8} {:<9} {:<24} status",
            "class", "p", "k", "claimed", "computed", "lhs > rhs"
        );
        for row in &self.table {
            let _ = writeln!(
                out,
                "{:<9} {:>3} {:>2}  {:<8} {:<9} {:<24} {}",
                row.class,
                row.p,
                row.k,
                row.claim.map_or("-".to_string(), |c| c.to_string()),
                row.bound.forced_zero,
                format!("{} > {}", row.bound.lhs, row.bound.rhs),
                row.status.label()
            );
        }

        let _ = writeln!(out, "\n== paper_flags ==");
        if self.paper_flags.is_empty() {
            let _ = writeln!(out, "(none)");
        }
        for f in &self.paper_flags {
            let _ = writeln!(out, "- {f}");
        }
        if !self.inconsistencies.is_empty() {
            let _ = writeln!(out, "\n== INCONSISTENT ==");
            for i in &self.inconsistencies {
                let _ = writeln!(out, "- {i}");
            }
        }
        out
    }
}
