//! Serialized analysis reports.
//!
//! Field elements are encoded by their index `sum c_i p^i` in the field's
//! basis 1, g, ..., g^{k-1}; for prime fields this is the residue itself.
//! Big integers and rationals are decimal strings so that no value is ever
//! rounded.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use curvadd::additive::LinearizedMap;
use curvadd::cover::{Analysis, BoundReport, BoundUse};
use curvadd::FqElement;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub field: FieldSection,
    pub curve: CurveSection,
    pub points: PointsSection,
    pub hw: HwSection,
    pub bounds: BoundsSection,
    pub decision: DecisionSection,
    pub paper_flags: Vec<String>,
    pub consistency: ConsistencySection,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldSection {
    pub p: u64,
    pub k: usize,
    pub modulus: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AssertionsSection {
    pub smooth: bool,
    pub abs_irreducible: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveSection {
    pub expression: String,
    pub degree: u32,
    pub assertions: AssertionsSection,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsSection {
    pub affine_count: usize,
    pub affine_list: Vec<[u64; 2]>,
    pub affine_list_truncated: bool,
    pub infinity_count: usize,
    /// Coordinates are indices in the extension field searched.
    pub singular_found: Vec<[u64; 2]>,
    pub singular_search_degree: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HwSection {
    #[serde(rename = "N")]
    pub n: u64,
    pub window_check: String,
    pub genus_bound: u64,
    pub lower: String,
    pub upper: String,
    /// (N - q - 1)^2 and 4 g^2 q.
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundSection {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lower_bound: Option<String>,
    pub forced_zero: bool,
    pub exact_terms: BTreeMap<String, String>,
    /// Whether the bound's hypotheses survived the analysis.
    pub applied: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub excluded_because: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsSection {
    pub inequality1: BoundSection,
    pub by_count: BoundSection,
    pub conic: Option<BoundSection>,
    pub elliptic: Option<BoundSection>,
    /// Whether any bound would force zero with the factor 2 dropped.
    pub conjectural_flag: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionSection {
    pub exists_nonzero: bool,
    pub witness_map_coeffs: Option<Vec<u64>>,
    pub witness_kernel_basis: Option<Vec<u64>>,
    pub method: String,
    pub oracle_agreement: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConsistencySection {
    pub status: String,
    pub issues: Vec<String>,
    pub notes: Vec<String>,
}

fn pair(x: &FqElement, y: &FqElement) -> [u64; 2] {
    [x.index(), y.index()]
}

fn map_coeffs(f: &LinearizedMap) -> Vec<u64> {
    f.coeffs().iter().map(FqElement::index).collect()
}

fn bound_section(b: &BoundReport, usage: Option<&BoundUse>) -> BoundSection {
    let mut exact_terms: BTreeMap<String, String> = b
        .terms
        .iter()
        .map(|(name, v)| (name.to_string(), v.to_string()))
        .collect();
    exact_terms.insert("lhs".into(), b.lhs.to_string());
    exact_terms.insert("rhs".into(), b.rhs.to_string());
    if let Some((cond, holds)) = b.sign_condition {
        exact_terms.insert(cond.to_string(), holds.to_string());
    }
    let (applied, excluded_because) = match usage {
        Some(BoundUse::Applied) | None => (true, None),
        Some(BoundUse::Excluded(why)) => (false, Some(why.clone())),
    };
    BoundSection {
        m: b.m,
        d: b.d,
        lower_bound: b.cover_lower_bound.as_ref().map(ToString::to_string),
        forced_zero: b.forced_zero,
        exact_terms,
        applied,
        excluded_because,
    }
}

impl AnalysisReport {
    pub fn from_analysis(a: &Analysis, list_cap: usize) -> Self {
        let ctx = a.curve.context();
        let usage = |b: &BoundReport| {
            a.bound_use
                .iter()
                .find(|(kind, _)| *kind == b.kind)
                .map(|(_, u)| u)
        };
        let section = |b: &BoundReport| bound_section(b, usage(b));
        let mut kernel_basis = a.decision.witness_subspace.as_ref().map(|s| {
            s.basis_elements()
                .iter()
                .map(FqElement::index)
                .collect::<Vec<_>>()
        });
        if let Some(b) = kernel_basis.as_mut() {
            b.sort_unstable();
        }
        let assertions = a.curve.assertions();
        Self {
            field: FieldSection {
                p: ctx.p(),
                k: ctx.k(),
                modulus: ctx.modulus().to_vec(),
            },
            curve: CurveSection {
                expression: a.curve.defining().to_string(),
                degree: a.curve.degree(),
                assertions: AssertionsSection {
                    smooth: assertions.smooth,
                    abs_irreducible: assertions.abs_irreducible,
                },
            },
            points: PointsSection {
                affine_count: a.points.count(),
                affine_list: a
                    .points
                    .iter()
                    .take(list_cap)
                    .map(|(x, y)| pair(x, y))
                    .collect(),
                affine_list_truncated: a.points.count() > list_cap,
                infinity_count: a.infinity_count,
                singular_found: a.singular.points.iter().map(|(x, y)| pair(x, y)).collect(),
                singular_search_degree: a.singular.ext_degree,
            },
            hw: HwSection {
                n: a.hw.n_points,
                window_check: a.hw.verdict.to_string(),
                genus_bound: a.hw.genus_bound,
                lower: a.hw.lower.to_string(),
                upper: a.hw.upper.to_string(),
                lhs: a.hw.lhs.to_string(),
                rhs: a.hw.rhs.to_string(),
            },
            bounds: BoundsSection {
                inequality1: section(&a.inequality),
                by_count: section(&a.by_count),
                conic: a.conic.as_ref().map(section),
                elliptic: a.elliptic.as_ref().map(section),
                conjectural_flag: a.any_conjectural(),
            },
            decision: DecisionSection {
                exists_nonzero: a.decision.exists_nonzero,
                witness_map_coeffs: a.decision.witness_map.as_ref().map(map_coeffs),
                witness_kernel_basis: kernel_basis,
                method: a.decision.method.to_string(),
                oracle_agreement: a.oracle_agreement.to_string(),
            },
            paper_flags: a.paper_flags.clone(),
            consistency: ConsistencySection {
                status: if a.is_consistent() {
                    "consistent".into()
                } else {
                    "INCONSISTENT".into()
                },
                issues: a.issues.clone(),
                notes: a.notes.clone(),
            },
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}

/// Human-readable rendering of an analysis.
pub fn render_text(a: &Analysis) -> String {
    let ctx = a.curve.context();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "curve      {} over F_{}^{} (modulus {:?})",
        a.curve,
        ctx.p(),
        ctx.k(),
        ctx.modulus()
    );
    let _ = writeln!(
        out,
        "degree     {} (genus bound {})",
        a.curve.degree(),
        a.curve.genus_bound()
    );
    let shown: Vec<String> = a
        .points
        .iter()
        .take(20)
        .map(|(x, y)| format!("({x}, {y})"))
        .collect();
    let more = if a.points.count() > 20 { ", ..." } else { "" };
    let _ = writeln!(
        out,
        "affine     {} point(s): {}{more}",
        a.points.count(),
        shown.join(", ")
    );
    let _ = writeln!(out, "infinity   {} point(s)", a.infinity_count);
    let _ = writeln!(out, "singular   {}", a.singular.summary());
    for (x, y) in &a.singular.points {
        let _ = writeln!(out, "           ({x}, {y})");
    }
    let _ = writeln!(
        out,
        "hasse-weil N = {} in [{}, {}]: {}",
        a.hw.n_points, a.hw.lower, a.hw.upper, a.hw.verdict
    );
    for b in a.bounds() {
        let usage = a
            .bound_use
            .iter()
            .find(|(k, _)| *k == b.kind)
            .map(|(_, u)| u);
        let note = match usage {
            Some(BoundUse::Excluded(why)) => format!(" [not applied: {why}]"),
            _ => String::new(),
        };
        let _ = writeln!(
            out,
            "bound      {:<10} forced_zero = {}{note}",
            b.kind.to_string(),
            b.forced_zero
        );
        let _ = writeln!(out, "           {}", b.trace());
    }
    let _ = writeln!(
        out,
        "decision   exists_nonzero = {} ({})",
        a.decision.exists_nonzero, a.decision.method
    );
    if let Some(f) = &a.decision.witness_map {
        let _ = writeln!(out, "witness    f(x) = {f}");
    }
    let _ = writeln!(out, "oracle     {}", a.oracle_agreement);
    for flag in &a.paper_flags {
        let _ = writeln!(out, "flag       {flag}");
    }
    for note in &a.notes {
        let _ = writeln!(out, "note       {note}");
    }
    if a.is_consistent() {
        let _ = writeln!(out, "status     consistent");
    } else {
        let _ = writeln!(out, "status     INCONSISTENT");
        for issue in &a.issues {
            let _ = writeln!(out, "           {issue}");
        }
    }
    out
}
