//! Twins, γ-pairs (perfect codes of size two) and the twin-class blocks
//! used by the closed-form dimension formulas.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, Graph, Vertex};
use crate::products::PairCode;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TwinKind {
    /// `N[u] = N[v]`
    Closed,
    /// `N(u) = N(v)`
    Open,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwinPartition {
    pub kind: TwinKind,
    /// Sorted classes, ordered by smallest member.
    pub classes: Vec<Vec<Vertex>>,
}

impl TwinPartition {
    pub fn class_of(&self, v: Vertex) -> usize {
        self.classes
            .iter()
            .position(|c| c.contains(&v))
            .expect("partition covers every vertex")
    }

    pub fn has_distinct_twins(&self) -> bool {
        self.classes.iter().any(|c| c.len() > 1)
    }
}

pub fn twin_classes(g: &Graph, kind: TwinKind) -> TwinPartition {
    let key = |v: Vertex| match kind {
        TwinKind::Closed => g.closed_neighborhood(v),
        TwinKind::Open => g.row(v).clone(),
    };
    let mut classes: Vec<(fixedbitset::FixedBitSet, Vec<Vertex>)> = Vec::new();
    for v in 0..g.n() {
        let k = key(v);
        match classes.iter_mut().find(|(ck, _)| *ck == k) {
            Some((_, members)) => members.push(v),
            None => classes.push((k, vec![v])),
        }
    }
    TwinPartition {
        kind,
        classes: classes.into_iter().map(|(_, m)| m).collect(),
    }
}

pub fn are_twins(g: &Graph, u: Vertex, v: Vertex) -> bool {
    g.closed_neighborhood(u) == g.closed_neighborhood(v)
}

/// `{a, b}` is a γ-pair when `N[a]` and `N[b]` partition `V(G)`. This also
/// admits pairs in different components (e.g. the two vertices of `K̄_2`).
pub fn is_gamma_pair(g: &Graph, a: Vertex, b: Vertex) -> bool {
    if a == b {
        return false;
    }
    let na = g.closed_neighborhood(a);
    let nb = g.closed_neighborhood(b);
    na.is_disjoint(&nb) && na.count_ones(..) + nb.count_ones(..) == g.n()
}

/// All γ-pairs `(a, b)` with `a < b`, sorted.
pub fn gamma_pairs(g: &Graph) -> Vec<(Vertex, Vertex)> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in (a + 1)..g.n() {
            if is_gamma_pair(g, a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn has_gamma_pair(g: &Graph) -> bool {
    (0..g.n()).any(|a| ((a + 1)..g.n()).any(|b| is_gamma_pair(g, a, b)))
}

/// Vertices lying in at least one γ-pair.
pub fn p_set(g: &Graph) -> Vec<Vertex> {
    let mut inp = vec![false; g.n()];
    for (a, b) in gamma_pairs(g) {
        inp[a] = true;
        inp[b] = true;
    }
    (0..g.n()).filter(|&v| inp[v]).collect()
}

/// The γ-pair graph: same vertices, one edge per γ-pair.
pub fn gp_graph(g: &Graph) -> Graph {
    let mut gp = Graph::new(g.n());
    for (a, b) in gamma_pairs(g) {
        gp.add_edge(a, b);
    }
    gp
}

/// `G` and `Ḡ` restricted to the vertices outside every γ-pair.
#[derive(Clone, Debug)]
pub struct MinusGraphs {
    pub minus: Graph,
    pub co_minus: Graph,
    /// `vertices[i]` is the vertex of `G` behind vertex `i` of both graphs.
    pub vertices: Vec<Vertex>,
}

pub fn minus_graphs(g: &Graph) -> MinusGraphs {
    let p = p_set(g);
    let vertices: Vec<Vertex> = (0..g.n()).filter(|v| !p.contains(v)).collect();
    MinusGraphs {
        minus: g.induced(&vertices),
        co_minus: g.complement().induced(&vertices),
        vertices,
    }
}

/// Blocks `T_1..T_k`: first every closed-twin class whose members are in no
/// γ-pair, then each γ-paired class merged with its partner class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwinOrdering {
    pub blocks: Vec<Vec<Vertex>>,
    /// `blocks[..split]` are unpaired classes, `blocks[split..]` merged pairs.
    pub split: usize,
}

impl TwinOrdering {
    pub fn k(&self) -> usize {
        self.blocks.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

pub fn twin_ordering(h: &Graph) -> Result<TwinOrdering> {
    let classes = twin_classes(h, TwinKind::Closed).classes;
    // Twins share closed neighborhoods, so γ-pairing is a relation on classes.
    let partner_of = |ci: usize| -> Result<Option<usize>> {
        let rep = classes[ci][0];
        let partners: Vec<usize> = (0..classes.len())
            .filter(|&cj| is_gamma_pair(h, rep, classes[cj][0]))
            .collect();
        match partners.as_slice() {
            [] => Ok(None),
            [cj] => Ok(Some(*cj)),
            _ => Err(Error::Precondition(format!(
                "twin class of {rep} is γ-paired with {} classes",
                partners.len()
            ))),
        }
    };
    let mut blocks = Vec::new();
    let mut merged = Vec::new();
    let mut used = vec![false; classes.len()];
    for ci in 0..classes.len() {
        match partner_of(ci)? {
            None => blocks.push(classes[ci].clone()),
            Some(cj) => {
                if partner_of(cj)? != Some(ci) {
                    return Err(Error::Precondition(
                        "γ-pairing between twin classes is not a matching".into(),
                    ));
                }
                if !used[ci] {
                    used[ci] = true;
                    used[cj] = true;
                    let mut b = classes[ci].clone();
                    b.extend(&classes[cj]);
                    b.sort();
                    merged.push(b);
                }
            }
        }
    }
    let split = blocks.len();
    blocks.extend(merged);
    Ok(TwinOrdering { blocks, split })
}

/// Twins in `G ⋄ H`: twins in both coordinates, or γ-pairs in both.
pub fn modular_twin_predicate(
    g: &Graph,
    h: &Graph,
    (g1, h1): (Vertex, Vertex),
    (g2, h2): (Vertex, Vertex),
) -> bool {
    (are_twins(g, g1, g2) && are_twins(h, h1, h2))
        || (is_gamma_pair(g, g1, g2) && is_gamma_pair(h, h1, h2))
}

/// Distinct twin pairs of `G ⋄ H` in product coordinates, `u < v`.
pub fn modular_twin_pairs(g: &Graph, h: &Graph) -> Vec<(Vertex, Vertex)> {
    let code = PairCode::new(g, h);
    let mut out = Vec::new();
    for u in 0..code.len() {
        for v in (u + 1)..code.len() {
            if modular_twin_predicate(g, h, code.decode(u), code.decode(v)) {
                out.push((u, v));
            }
        }
    }
    out
}

/// Vertices at eccentricity equal to the diameter.
pub fn boundary_vertices(g: &Graph) -> Result<Vec<Vertex>> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let d = all_pairs_distances(g);
    let diam = d.diameter();
    Ok((0..g.n())
        .filter(|&u| (0..g.n()).any(|v| d.get(u, v) == diam))
        .collect())
}
