//! Strong resolving graphs.
//!
//! [`srg_oracle`] works on any connected graph from the definition of
//! mutually maximally distant pairs. The `srg_modular_*` builders produce the
//! same edge set for `G ⋄ H` from factor data only, each under its own
//! hypotheses; they exist to be checked against the oracle.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Dist, DistMatrix, Graph, Vertex};
use crate::metric::ModularMetric;
use crate::products::{build_product, PairCode, ProductKind};
use crate::structure::{self, minus_graphs, modular_twin_pairs};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SrgReason {
    Twin,
    Dist2NonBoundary,
    Dist3,
    CondIv,
    CondV,
    Diam2Dist2,
    GammaPairBox,
    CoBox,
    DirectCoBar,
    CoBarDirect,
    MmdOracle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SrgGraph {
    pub n: usize,
    /// Keyed by `(u, v)` with `u < v`; the first recorded reason wins.
    pub edges: BTreeMap<(Vertex, Vertex), SrgReason>,
}

impl SrgGraph {
    pub fn new(n: usize) -> Self {
        SrgGraph {
            n,
            edges: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, u: Vertex, v: Vertex, reason: SrgReason) {
        assert!(u != v, "strong resolving graphs have no loops");
        let key = (u.min(v), u.max(v));
        self.edges.entry(key).or_insert(reason);
    }

    pub fn contains(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains_key(&(u.min(v), u.max(v)))
    }

    pub fn edge_set(&self) -> BTreeSet<(Vertex, Vertex)> {
        self.edges.keys().copied().collect()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for &(u, v) in self.edges.keys() {
            g.add_edge(u, v);
        }
        g
    }

    /// Vertices on at least one edge.
    pub fn non_isolated(&self) -> Vec<Vertex> {
        let mut seen = vec![false; self.n];
        for &(u, v) in self.edges.keys() {
            seen[u] = true;
            seen[v] = true;
        }
        (0..self.n).filter(|&v| seen[v]).collect()
    }

    /// Relabels through `perm` (old `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[Vertex]) -> SrgGraph {
        let mut out = SrgGraph::new(self.n);
        for (&(u, v), &r) in &self.edges {
            out.insert(perm[u], perm[v], r);
        }
        out
    }
}

/// `u` and `v` are mutually maximally distant: no neighbor of either is
/// strictly farther from the other. Only meaningful for `d(u,v)` finite.
pub fn is_mmd(g: &Graph, d: &DistMatrix, u: Vertex, v: Vertex) -> bool {
    let duv = d.get(u, v);
    u != v
        && duv.is_finite()
        && g.neighbors(u).all(|w| d.get(w, v) <= duv)
        && g.neighbors(v).all(|w| d.get(w, u) <= duv)
}

pub fn srg_oracle(g: &Graph) -> Result<SrgGraph> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = all_pairs_distances(g);
    Ok(srg_from_distances(g, &d))
}

fn srg_from_distances(g: &Graph, d: &DistMatrix) -> SrgGraph {
    let n = g.n();
    let rows: Vec<Vec<(Vertex, Vertex)>> = (0..n)
        .into_par_iter()
        .map(|u| {
            ((u + 1)..n)
                .filter(|&v| is_mmd(g, d, u, v))
                .map(|v| (u, v))
                .collect()
        })
        .collect();
    let mut srg = SrgGraph::new(n);
    for (u, v) in rows.into_iter().flatten() {
        srg.insert(u, v, SrgReason::MmdOracle);
    }
    srg
}

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what.to_string()))
    }
}

fn add_twins(srg: &mut SrgGraph, g: &Graph, h: &Graph) {
    for (u, v) in modular_twin_pairs(g, h) {
        srg.insert(u, v, SrgReason::Twin);
    }
}

/// Edges of `A □ B` lifted into product coordinates. `ga`/`hb` give the
/// factor vertex behind each index of `A`/`B`.
fn add_box(srg: &mut SrgGraph, code: &PairCode, a: &Graph, ga: &[Vertex], b: &Graph, hb: &[Vertex], reason: SrgReason) {
    for (x, y) in a.edges() {
        for &h in hb {
            srg.insert(code.encode(ga[x], h), code.encode(ga[y], h), reason);
        }
    }
    for (x, y) in b.edges() {
        for &g in ga {
            srg.insert(code.encode(g, hb[x]), code.encode(g, hb[y]), reason);
        }
    }
}

/// Edges of `A × B` lifted into product coordinates.
fn add_direct(srg: &mut SrgGraph, code: &PairCode, a: &Graph, ga: &[Vertex], b: &Graph, hb: &[Vertex], reason: SrgReason) {
    for (x, y) in a.edges() {
        for (p, q) in b.edges() {
            srg.insert(code.encode(ga[x], hb[p]), code.encode(ga[y], hb[q]), reason);
            srg.insert(code.encode(ga[x], hb[q]), code.encode(ga[y], hb[p]), reason);
        }
    }
}

/// Diameter-two case: twins plus `Ḡ □ H̄`, `G × H̄` and `Ḡ × H`.
pub fn srg_modular_diam2(g: &Graph, h: &Graph) -> Result<SrgGraph> {
    let m = ModularMetric::new(g, h);
    require(m.diameter_two()?, "G ⋄ H must have diameter two")?;
    let code = PairCode::new(g, h);
    let (gc, hc) = (g.complement(), h.complement());
    let all_g: Vec<Vertex> = (0..g.n()).collect();
    let all_h: Vec<Vertex> = (0..h.n()).collect();
    let mut srg = SrgGraph::new(code.len());
    add_twins(&mut srg, g, h);
    add_box(&mut srg, &code, &gc, &all_g, &hc, &all_h, SrgReason::CoBox);
    add_direct(&mut srg, &code, g, &all_g, &hc, &all_h, SrgReason::DirectCoBar);
    add_direct(&mut srg, &code, &gc, &all_g, h, &all_h, SrgReason::CoBarDirect);
    Ok(srg)
}

/// `G` has a γ-pair and `H` no universal vertex: twins, `Ḡ⁻ □ H̄⁻`,
/// `G⁻ × H̄⁻`, `Ḡ⁻ × H⁻`, and the distance-3 pairs. The latter are the
/// `GP(G) □ GP(H)` edges together with pairs that are a γ-pair in one
/// coordinate and distinct twins in the other; without twins in either
/// factor this is exactly [`srg_modular_gamma_case_printed`].
pub fn srg_modular_gamma_case(g: &Graph, h: &Graph) -> Result<SrgGraph> {
    let mut srg = srg_modular_gamma_case_printed(g, h)?;
    let code = PairCode::new(g, h);
    let twins = |x: &Graph| -> Vec<(Vertex, Vertex)> {
        (0..x.n())
            .flat_map(|a| ((a + 1)..x.n()).map(move |b| (a, b)))
            .filter(|&(a, b)| structure::are_twins(x, a, b))
            .collect()
    };
    let (tg, th) = (twins(g), twins(h));
    let (pg, ph) = (structure::gamma_pairs(g), structure::gamma_pairs(h));
    for &(a, b) in &pg {
        for &(c, d) in &th {
            srg.insert(code.encode(a, c), code.encode(b, d), SrgReason::Dist3);
            srg.insert(code.encode(a, d), code.encode(b, c), SrgReason::Dist3);
        }
    }
    for &(a, b) in &tg {
        for &(c, d) in &ph {
            srg.insert(code.encode(a, c), code.encode(b, d), SrgReason::Dist3);
            srg.insert(code.encode(a, d), code.encode(b, c), SrgReason::Dist3);
        }
    }
    Ok(srg)
}

/// The five edge families exactly as printed: twins, `GP(G) □ GP(H)`,
/// `Ḡ⁻ □ H̄⁻`, `G⁻ × H̄⁻` and `Ḡ⁻ × H⁻`. Misses distance-3 pairs when a
/// factor has distinct twins; kept for auditing.
pub fn srg_modular_gamma_case_printed(g: &Graph, h: &Graph) -> Result<SrgGraph> {
    let m = ModularMetric::new(g, h);
    require(m.is_general(), "needs non-complete factors, not both unions of two cliques")?;
    require(m.g.has_gamma_pair, "G must have a γ-pair")?;
    require(
        m.h.class.universal_vertices.is_empty(),
        "H must have no universal vertex",
    )?;
    require(m.connected(), "G ⋄ H must be connected")?;
    let code = PairCode::new(g, h);
    let all_g: Vec<Vertex> = (0..g.n()).collect();
    let all_h: Vec<Vertex> = (0..h.n()).collect();
    let gm = minus_graphs(g);
    let hm = minus_graphs(h);
    let mut srg = SrgGraph::new(code.len());
    add_twins(&mut srg, g, h);
    add_box(
        &mut srg,
        &code,
        &structure::gp_graph(g),
        &all_g,
        &structure::gp_graph(h),
        &all_h,
        SrgReason::GammaPairBox,
    );
    add_box(&mut srg, &code, &gm.co_minus, &gm.vertices, &hm.co_minus, &hm.vertices, SrgReason::CoBox);
    add_direct(&mut srg, &code, &gm.minus, &gm.vertices, &hm.co_minus, &hm.vertices, SrgReason::DirectCoBar);
    add_direct(&mut srg, &code, &gm.co_minus, &gm.vertices, &hm.minus, &hm.vertices, SrgReason::CoBarDirect);
    Ok(srg)
}

/// Diameter-three case, conditions (i)–(v) and mirrors, evaluated with
/// closed-form product distances.
pub fn srg_modular_diam3(g: &Graph, h: &Graph) -> Result<SrgGraph> {
    let m = ModularMetric::new(g, h);
    require(m.is_general(), "needs non-complete factors, not both unions of two cliques")?;
    require(!m.diameter_two()?, "G ⋄ H must have diameter three")?;
    let code = PairCode::new(g, h);
    let n = code.len();
    let three = Dist::new(3);
    let dist = |u: Vertex, v: Vertex| m.distance(code.decode(u), code.decode(v)).value;

    let boundary: Vec<bool> = (0..n).map(|u| (0..n).any(|v| dist(u, v) == three)).collect();

    let in_gamma = |x: &Graph| {
        let mut inp = vec![false; x.n()];
        for (a, b) in structure::gamma_pairs(x) {
            inp[a] = true;
            inp[b] = true;
        }
        inp
    };
    let g_in_gamma = in_gamma(g);
    let h_in_gamma = in_gamma(h);

    // (iv): x, x' universal in X; d_Y(y, y') = 2 and yy' ∈ E(Y_SR).
    let cond_iv = |xf: &Graph, yf: &Graph, yd: &DistMatrix, x1, x2, y1, y2| {
        xf.is_universal(x1)
            && xf.is_universal(x2)
            && yd.get(y1, y2) == Dist::new(2)
            && is_mmd(yf, yd, y1, y2)
    };
    // (v): x universal, x' not; d_Y(y,y') = 2; d_Y(y,y'') ≤ 2 on N[y'];
    // y' in no γ-pair of Y.
    let cond_v = |xf: &Graph, yf: &Graph, yd: &DistMatrix, y_gamma: &[bool], x1, x2, y1, y2: Vertex| {
        xf.is_universal(x1)
            && !xf.is_universal(x2)
            && yd.get(y1, y2) == Dist::new(2)
            && yf.closed_neighborhood(y2).ones().all(|y3| yd.get(y1, y3) <= Dist::new(2))
            && !y_gamma[y2]
    };

    let rows: Vec<Vec<(Vertex, Vertex, SrgReason)>> = (0..n)
        .into_par_iter()
        .map(|u| {
            let (g1, h1) = code.decode(u);
            let mut out = Vec::new();
            for v in (u + 1)..n {
                let (g2, h2) = code.decode(v);
                let d = dist(u, v);
                let reason = if structure::modular_twin_predicate(g, h, (g1, h1), (g2, h2)) {
                    Some(SrgReason::Twin)
                } else if d == three {
                    Some(SrgReason::Dist3)
                } else if d == Dist::new(2) && !boundary[u] && !boundary[v] {
                    Some(SrgReason::Dist2NonBoundary)
                } else if cond_iv(g, h, &m.h.dist, g1, g2, h1, h2)
                    || cond_iv(h, g, &m.g.dist, h1, h2, g1, g2)
                {
                    Some(SrgReason::CondIv)
                } else if cond_v(g, h, &m.h.dist, &h_in_gamma, g1, g2, h1, h2)
                    || cond_v(g, h, &m.h.dist, &h_in_gamma, g2, g1, h2, h1)
                    || cond_v(h, g, &m.g.dist, &g_in_gamma, h1, h2, g1, g2)
                    || cond_v(h, g, &m.g.dist, &g_in_gamma, h2, h1, g2, g1)
                {
                    Some(SrgReason::CondV)
                } else {
                    None
                };
                if let Some(r) = reason {
                    out.push((u, v, r));
                }
            }
            out
        })
        .collect();
    let mut srg = SrgGraph::new(n);
    for (u, v, r) in rows.into_iter().flatten() {
        srg.insert(u, v, r);
    }
    Ok(srg)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SrgRoute {
    Diam2,
    GammaCase,
    GammaCaseSwapped,
    Diam3,
    Oracle,
}

#[derive(Clone, Debug)]
pub struct Dispatched {
    pub route: SrgRoute,
    /// The oracle's strong resolving graph of the built product.
    pub srg: SrgGraph,
    /// The specialized builder's output, when one applied.
    pub specialized: Option<SrgGraph>,
}

impl Dispatched {
    /// Whether the specialized builder agreed with the oracle edge set.
    pub fn agrees(&self) -> Option<bool> {
        self.specialized
            .as_ref()
            .map(|s| s.edge_set() == self.srg.edge_set())
    }
}

/// Chooses the specialized builder that applies to `(G, H)`, and always
/// returns the oracle edge set of the built product alongside it.
pub fn srg_dispatch(g: &Graph, h: &Graph) -> Result<Dispatched> {
    let m = ModularMetric::new(g, h);
    require(m.connected(), "G ⋄ H must be connected")?;
    let specialized: Option<(SrgRoute, SrgGraph)> = if !m.is_general() {
        None
    } else if m.diameter_two()? {
        Some((SrgRoute::Diam2, srg_modular_diam2(g, h)?))
    } else if m.g.has_gamma_pair && m.h.class.universal_vertices.is_empty() {
        Some((SrgRoute::GammaCase, srg_modular_gamma_case(g, h)?))
    } else if m.h.has_gamma_pair && m.g.class.universal_vertices.is_empty() {
        let swapped = srg_modular_gamma_case(h, g)?;
        let back = PairCode::new(h, g).swap_permutation();
        Some((SrgRoute::GammaCaseSwapped, swapped.relabel(&back)))
    } else {
        Some((SrgRoute::Diam3, srg_modular_diam3(g, h)?))
    };
    let product = build_product(ProductKind::Modular, g, h);
    let srg = srg_oracle(&product)?;
    Ok(match specialized {
        Some((route, s)) => Dispatched {
            route,
            srg,
            specialized: Some(s),
        },
        None => Dispatched {
            route: SrgRoute::Oracle,
            srg,
            specialized: None,
        },
    })
}
