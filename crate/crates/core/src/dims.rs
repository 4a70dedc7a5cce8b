//! Strong metric dimension as the vertex cover number of the strong
//! resolving graph.

use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::metric::ModularMetric;
use crate::products::PairCode;
use crate::srg::{srg_dispatch, srg_oracle, SrgRoute};
use crate::vc::{min_vertex_cover_with, CoverResult, SolverOptions};

/// `dim_s(G)` for connected `G`, with the default solver budget.
pub fn strong_metric_dimension(g: &Graph) -> Result<usize> {
    let r = strong_metric_dimension_with(g, &SolverOptions::default())?;
    if r.optimal {
        Ok(r.size)
    } else {
        Err(Error::BudgetExhausted)
    }
}

pub fn strong_metric_dimension_with(g: &Graph, opts: &SolverOptions) -> Result<CoverResult> {
    let srg = srg_oracle(g)?;
    Ok(min_vertex_cover_with(&srg.to_graph(), opts))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "route", content = "srg", rename_all = "kebab-case")]
pub enum DimsRoute {
    /// `(t-1) n(G) + dim_s(G)` for `G ⋄ K_t`, without building the product.
    CompleteFactor,
    Pipeline(SrgRoute),
}

#[derive(Clone, Debug, Serialize)]
pub struct SrgStats {
    pub edges: usize,
    pub non_isolated: usize,
    /// Whether the specialized builder matched the oracle, when one ran.
    pub specialized_agrees: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModularDims {
    pub route: DimsRoute,
    pub product_n: usize,
    /// Witness in product coordinates `g * n(H) + h`.
    pub cover: CoverResult,
    /// `None` on the complete-factor route.
    pub srg: Option<SrgStats>,
}

/// `dim_s(G ⋄ H)`. A complete factor opposite a non-complete one uses the
/// closed formula; everything else goes through [`srg_dispatch`].
pub fn strong_metric_dimension_modular(g: &Graph, h: &Graph, opts: &SolverOptions) -> Result<ModularDims> {
    let m = ModularMetric::new(g, h);
    if !m.connected() {
        return Err(Error::Disconnected);
    }
    let (gc, hc) = (g.is_complete(), h.is_complete());
    if hc && !gc {
        return complete_factor(g, h.n(), opts, false);
    }
    if gc && !hc {
        return complete_factor(h, g.n(), opts, true);
    }
    pipeline(g, h, opts)
}

/// Always the full pipeline, even when a factor is complete.
pub fn strong_metric_dimension_modular_pipeline(g: &Graph, h: &Graph, opts: &SolverOptions) -> Result<ModularDims> {
    if !ModularMetric::new(g, h).connected() {
        return Err(Error::Disconnected);
    }
    pipeline(g, h, opts)
}

fn pipeline(g: &Graph, h: &Graph, opts: &SolverOptions) -> Result<ModularDims> {
    let d = srg_dispatch(g, h)?;
    let srg = d.srg.to_graph();
    let cover = min_vertex_cover_with(&srg, opts);
    Ok(ModularDims {
        route: DimsRoute::Pipeline(d.route),
        product_n: g.n() * h.n(),
        srg: Some(SrgStats {
            edges: d.srg.edge_count(),
            non_isolated: d.srg.non_isolated().len(),
            specialized_agrees: d.agrees(),
        }),
        cover,
    })
}

/// `x ⋄ K_t` with `x` non-complete. The witness is every `(x, k)` with
/// `k > 0` plus `(w, 0)` for `w` in a minimum cover of `x_SR`; `swapped`
/// means the complete factor is the first one.
fn complete_factor(x: &Graph, t: usize, opts: &SolverOptions, swapped: bool) -> Result<ModularDims> {
    let start = Instant::now();
    let base = strong_metric_dimension_with(x, opts)?;
    let code = if swapped {
        PairCode { n_g: t, n_h: x.n() }
    } else {
        PairCode { n_g: x.n(), n_h: t }
    };
    let at = |v: Vertex, k: usize| if swapped { code.encode(k, v) } else { code.encode(v, k) };
    let mut witness: Vec<Vertex> = base.witness.iter().map(|&w| at(w, 0)).collect();
    for v in 0..x.n() {
        for k in 1..t {
            witness.push(at(v, k));
        }
    }
    witness.sort_unstable();
    let shift = (t - 1) * x.n();
    Ok(ModularDims {
        route: DimsRoute::CompleteFactor,
        product_n: code.len(),
        cover: CoverResult {
            size: witness.len(),
            witness,
            lower_bound: base.lower_bound + shift,
            nodes_explored: base.nodes_explored,
            elapsed: start.elapsed(),
            optimal: base.optimal,
        },
        srg: None,
    })
}
