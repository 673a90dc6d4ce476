//! Whether a nonzero additive map `f` with `f(x) f(y) = 0` on a point set
//! exists, and the bounds that rule it out.
//!
//! The kernel of such an `f` is a proper subspace meeting every point in at
//! least one coordinate. Any hyperplane containing that kernel works as well,
//! so the primary search only walks hyperplanes. The exhaustive scan over all
//! maps is kept as an independent oracle.

mod analysis;
mod bounds;

use std::fmt;

use thiserror::Error;

use crate::additive::{
    enumerate_all_maps, enumerate_hyperplanes, kernel, AdditiveError, LinearizedMap, Subspace,
};
use crate::curve::{CurveError, PointSet};
use crate::fields::{FieldError, FqContext, FqElement};
use crate::{CapExceeded, Caps};

pub use analysis::{analyze, Analysis, AnalysisOptions, BoundUse, OracleAgreement, OracleMode};
pub use bounds::{
    corollary_conic, corollary_elliptic, zero_forcing_by_count, zero_forcing_inequality, BoundKind,
    BoundReport,
};

#[derive(Debug, Clone, Error)]
pub enum CoverError {
    #[error("a point lies outside the field being searched")]
    ContextMismatch,
    #[error(transparent)]
    Cap(#[from] CapExceeded),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Additive(AdditiveError),
    /// A bound forced f = 0 while a nonzero f was found, or the two search
    /// procedures disagreed. Carries the full analysis for inspection.
    #[error("INCONSISTENT: {}", .0.issues.join("; "))]
    Inconsistent(Box<Analysis>),
}

impl From<AdditiveError> for CoverError {
    fn from(e: AdditiveError) -> Self {
        match e {
            AdditiveError::Cap(c) => CoverError::Cap(c),
            other => CoverError::Additive(other),
        }
    }
}

impl From<FieldError> for CoverError {
    fn from(e: FieldError) -> Self {
        CoverError::Curve(e.into())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SearchMethod {
    HyperplaneSearch,
    ExhaustiveOracle,
}

impl fmt::Display for SearchMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMethod::HyperplaneSearch => "hyperplane-search",
            SearchMethod::ExhaustiveOracle => "exhaustive-oracle",
        })
    }
}

#[derive(Debug, Clone)]
pub struct CoverVerdict {
    pub exists_nonzero: bool,
    pub witness_subspace: Option<Subspace>,
    pub witness_map: Option<LinearizedMap>,
    pub method: SearchMethod,
}

impl CoverVerdict {
    fn found(map: LinearizedMap, subspace: Subspace, method: SearchMethod) -> Self {
        Self {
            exists_nonzero: true,
            witness_subspace: Some(subspace),
            witness_map: Some(map),
            method,
        }
    }

    fn none(method: SearchMethod) -> Self {
        Self {
            exists_nonzero: false,
            witness_subspace: None,
            witness_map: None,
            method,
        }
    }
}

fn check_points(points: &PointSet, ctx: &FqContext) -> Result<(), CoverError> {
    if points
        .iter()
        .any(|(x, y)| x.context() != ctx || y.context() != ctx)
    {
        return Err(CoverError::ContextMismatch);
    }
    Ok(())
}

/// First hyperplane, in canonical order, that contains a coordinate of every
/// point. The witness is the trace functional of its normal.
pub fn decide_by_hyperplanes(
    points: &PointSet,
    ctx: &FqContext,
    caps: &Caps,
) -> Result<CoverVerdict, CoverError> {
    check_points(points, ctx)?;
    for h in enumerate_hyperplanes(ctx, caps)? {
        if points.iter().all(|(x, y)| h.contains(x) || h.contains(y)) {
            return Ok(CoverVerdict::found(
                h.functional(),
                h.subspace().clone(),
                SearchMethod::HyperplaneSearch,
            ));
        }
    }
    Ok(CoverVerdict::none(SearchMethod::HyperplaneSearch))
}

/// Scans every nonzero linearized map and evaluates it at both coordinates
/// of each point. Shares nothing with the hyperplane path beyond field
/// arithmetic.
pub fn decide_by_exhaustion(
    points: &PointSet,
    ctx: &FqContext,
    caps: &Caps,
) -> Result<CoverVerdict, CoverError> {
    check_points(points, ctx)?;
    let conjugates: Vec<(Vec<FqElement>, Vec<FqElement>)> = points
        .iter()
        .map(|(x, y)| (x.conjugates(), y.conjugates()))
        .collect();
    for f in enumerate_all_maps(ctx, caps)?.skip(1) {
        let covers = conjugates
            .iter()
            .all(|(cx, cy)| f.eval_conjugates(cx).is_zero() || f.eval_conjugates(cy).is_zero());
        if covers {
            let ker = kernel(&f);
            return Ok(CoverVerdict::found(f, ker, SearchMethod::ExhaustiveOracle));
        }
    }
    Ok(CoverVerdict::none(SearchMethod::ExhaustiveOracle))
}

/// Re-checks a witness by direct evaluation: nonzero, and vanishing on a
/// coordinate of every point.
pub fn verify_witness(points: &PointSet, f: &LinearizedMap) -> bool {
    if f.is_zero() {
        return false;
    }
    points
        .iter()
        .all(|(x, y)| f.eval(x).is_ok_and(|v| v.is_zero()) || f.eval(y).is_ok_and(|v| v.is_zero()))
}

/// Whether a verdict satisfies its own invariants on `points`.
pub fn verdict_is_sound(points: &PointSet, v: &CoverVerdict) -> bool {
    if !v.exists_nonzero {
        return v.witness_map.is_none() && v.witness_subspace.is_none();
    }
    match (&v.witness_map, &v.witness_subspace) {
        (Some(f), Some(s)) => verify_witness(points, f) && kernel(f) == *s,
        _ => false,
    }
}
