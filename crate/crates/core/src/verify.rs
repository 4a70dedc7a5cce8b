//! Checks closed-form claims against the computed pipeline.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::dims::{
    strong_metric_dimension_modular, strong_metric_dimension_modular_pipeline, DimsRoute, SrgStats,
};
use crate::error::{Error, Result};
use crate::families::{generate, predicted_dims, ClosedFormClaim, FamilySpec, Prediction};
use crate::vc::SolverOptions;

pub const DEFAULT_MAX_PRODUCT: usize = 120;

#[derive(Copy, Clone, Debug)]
pub struct VerifyOptions {
    pub solver: SolverOptions,
    /// Products above this many vertices are refused.
    pub max_product: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            solver: SolverOptions::default(),
            max_product: DEFAULT_MAX_PRODUCT,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SolverStats {
    pub nodes_explored: u64,
    pub elapsed_secs: f64,
    pub optimal: bool,
    pub lower_bound: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimReport {
    pub id: String,
    pub claim: ClosedFormClaim,
    pub predicted: usize,
    pub computed: usize,
    /// Full-pipeline value when the complete-factor formula was used.
    pub cross_check: Option<usize>,
    pub matched: bool,
    pub optimal: bool,
    pub product_n: usize,
    pub route: DimsRoute,
    pub srg: Option<SrgStats>,
    pub solver: SolverStats,
    pub elapsed_secs: f64,
}

pub fn verify_claim(claim: &ClosedFormClaim, opts: &VerifyOptions) -> Result<ClaimReport> {
    let start = Instant::now();
    let predicted = match predicted_dims(claim) {
        Prediction::Valid(v) => v,
        Prediction::Invalid(why) => return Err(Error::Precondition(why)),
    };
    let (gs, hs) = claim.factors();
    let (g, h) = (generate(&gs)?, generate(&hs)?);
    let size = g.n() * h.n();
    if size > opts.max_product {
        return Err(Error::TooLarge {
            size,
            limit: opts.max_product,
        });
    }
    let dims = strong_metric_dimension_modular(&g, &h, &opts.solver)?;
    let mut optimal = dims.cover.optimal;
    let cross_check = if dims.route == DimsRoute::CompleteFactor {
        let full = strong_metric_dimension_modular_pipeline(&g, &h, &opts.solver)?;
        optimal &= full.cover.optimal;
        Some(full.cover.size)
    } else {
        None
    };
    let computed = dims.cover.size;
    Ok(ClaimReport {
        id: claim.id(),
        claim: claim.clone(),
        predicted,
        computed,
        cross_check,
        matched: optimal && computed == predicted && cross_check.is_none_or(|c| c == computed),
        optimal,
        product_n: dims.product_n,
        route: dims.route,
        srg: dims.srg,
        solver: SolverStats {
            nodes_explored: dims.cover.nodes_explored,
            elapsed_secs: dims.cover.elapsed.as_secs_f64(),
            optimal: dims.cover.optimal,
            lower_bound: dims.cover.lower_bound,
        },
        elapsed_secs: start.elapsed().as_secs_f64(),
    })
}

/// Claims in their suite order, verified in parallel; results keep the
/// input order.
pub fn verify_all(claims: &[ClosedFormClaim], opts: &VerifyOptions) -> Vec<Result<ClaimReport>> {
    claims.par_iter().map(|c| verify_claim(c, opts)).collect()
}

/// Every closed-form value the acceptance matrix reproduces.
pub fn reference_suite() -> Vec<ClosedFormClaim> {
    use ClosedFormClaim::*;
    let k33 = FamilySpec::knn_minus_m(3);
    vec![
        Stars { s: 3, t: 2 },
        Stars { s: 4, t: 3 },
        CycleComplements { s: 5, t: 5 },
        CycleComplements { s: 5, t: 6 },
        Cycles { s: 7, t: 7 },
        Cycles { s: 7, t: 8 },
        Cycles { s: 8, t: 8 },
        Cycles { s: 8, t: 9 },
        KnnPlainPair { n: 3, m: 3 },
        KnnMinusM {
            g: k33,
            h: FamilySpec::Cycle { n: 7 },
        },
        P5PathOrCycle { r: 7, cycle: false },
        P5PathOrCycle { r: 7, cycle: true },
        CompleteFactor {
            g: FamilySpec::Path { n: 4 },
            t: 2,
        },
        StarHstq { r: 3, s: 4, t: 4, q: 3 },
    ]
}

/// Quick instances of every claim family, all well under a second.
pub fn small_suite() -> Vec<ClosedFormClaim> {
    use ClosedFormClaim::*;
    let k33 = FamilySpec::knn_minus_m(3);
    vec![
        Stars { s: 2, t: 2 },
        Stars { s: 3, t: 3 },
        Stars { s: 2, t: 4 },
        CycleComplements { s: 5, t: 5 },
        Cycles { s: 7, t: 7 },
        KnnMinusMPlain {
            n: 3,
            h: FamilySpec::Cycle { n: 5 },
        },
        KnnMinusM {
            g: FamilySpec::KnnMinusM {
                n: 3,
                q: vec![2, 1, 1],
                r: vec![1, 1, 2],
            },
            h: FamilySpec::Cycle { n: 4 },
        },
        KnnPair {
            g: k33.clone(),
            h: k33,
        },
        P5 {
            h: FamilySpec::Cycle { n: 5 },
        },
        P5 {
            h: FamilySpec::Path { n: 8 },
        },
        CompleteFactor {
            g: FamilySpec::Cycle { n: 5 },
            t: 3,
        },
        CompleteFactor {
            g: FamilySpec::Star { s: 3 },
            t: 2,
        },
    ]
}

pub fn suite(name: &str) -> Option<Vec<ClosedFormClaim>> {
    match name {
        "reference" | "paper" => Some(reference_suite()),
        "small" => Some(small_suite()),
        _ => None,
    }
}

/// Time limit attached to each acceptance-matrix instance.
pub fn time_limit(claim: &ClosedFormClaim) -> Duration {
    use ClosedFormClaim::*;
    let secs = match claim {
        Stars { .. } | CompleteFactor { .. } => 5,
        CycleComplements { .. } | P5PathOrCycle { .. } | P5 { .. } => 30,
        Cycles { s: 8, t: 9 } | Cycles { s: 9, t: 8 } | StarHstq { .. } => 300,
        _ => 60,
    };
    Duration::from_secs(secs)
}
