//! The six binary graph products on `V(G) × V(H)`.
//!
//! Product vertex `(g, h)` is encoded as `g * n(H) + h` (g-major).

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductKind {
    Cartesian,
    Direct,
    Strong,
    Lexicographic,
    DirectCoDirect,
    Modular,
}

impl ProductKind {
    pub const ALL: [ProductKind; 6] = [
        ProductKind::Cartesian,
        ProductKind::Direct,
        ProductKind::Strong,
        ProductKind::Lexicographic,
        ProductKind::DirectCoDirect,
        ProductKind::Modular,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Direct => "direct",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lexicographic",
            ProductKind::DirectCoDirect => "direct-co-direct",
            ProductKind::Modular => "modular",
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ProductKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown product kind `{s}`")))
    }
}

/// Row-major pair encoding.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct PairCode {
    pub n_g: usize,
    pub n_h: usize,
}

impl PairCode {
    pub fn new(g: &Graph, h: &Graph) -> Self {
        PairCode {
            n_g: g.n(),
            n_h: h.n(),
        }
    }

    pub fn encode(&self, g: Vertex, h: Vertex) -> Vertex {
        debug_assert!(g < self.n_g && h < self.n_h);
        g * self.n_h + h
    }

    pub fn decode(&self, v: Vertex) -> (Vertex, Vertex) {
        (v / self.n_h, v % self.n_h)
    }

    pub fn len(&self) -> usize {
        self.n_g * self.n_h
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Maps `(g, h)` here to `(h, g)` in the code of `H × G`.
    pub fn swap_permutation(&self) -> Vec<Vertex> {
        let swapped = PairCode {
            n_g: self.n_h,
            n_h: self.n_g,
        };
        (0..self.len())
            .map(|v| {
                let (g, h) = self.decode(v);
                swapped.encode(h, g)
            })
            .collect()
    }
}

/// Which clause of the modular product makes two vertices adjacent.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeType {
    Cartesian,
    Direct,
    CoDirect,
}

/// Classifies the pair `(g,h)`, `(g2,h2)` w.r.t. the factor relations.
/// Returns `None` for equal or non-adjacent-in-every-clause pairs.
pub fn modular_edge_type(
    g: &Graph,
    h: &Graph,
    (g1, h1): (Vertex, Vertex),
    (g2, h2): (Vertex, Vertex),
) -> Option<EdgeType> {
    let gs = g1 == g2;
    let hs = h1 == h2;
    let ga = !gs && g.has_edge(g1, g2);
    let ha = !hs && h.has_edge(h1, h2);
    if (gs && ha) || (ga && hs) {
        Some(EdgeType::Cartesian)
    } else if ga && ha {
        Some(EdgeType::Direct)
    } else if !gs && !hs && !ga && !ha {
        Some(EdgeType::CoDirect)
    } else {
        None
    }
}

pub fn adjacent(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    a: (Vertex, Vertex),
    b: (Vertex, Vertex),
) -> bool {
    if a == b {
        return false;
    }
    let (g1, h1) = a;
    let (g2, h2) = b;
    let gs = g1 == g2;
    let hs = h1 == h2;
    let ga = !gs && g.has_edge(g1, g2);
    let ha = !hs && h.has_edge(h1, h2);
    let cartesian = (gs && ha) || (ga && hs);
    let direct = ga && ha;
    let co_direct = !gs && !hs && !ga && !ha;
    match kind {
        ProductKind::Cartesian => cartesian,
        ProductKind::Direct => direct,
        ProductKind::Strong => cartesian || direct,
        ProductKind::Lexicographic => ga || (gs && ha),
        ProductKind::DirectCoDirect => direct || co_direct,
        ProductKind::Modular => cartesian || direct || co_direct,
    }
}

pub fn build_product(kind: ProductKind, g: &Graph, h: &Graph) -> Graph {
    let code = PairCode::new(g, h);
    let mut p = Graph::new(code.len());
    for u in 0..code.len() {
        for v in (u + 1)..code.len() {
            if adjacent(kind, g, h, code.decode(u), code.decode(v)) {
                p.add_edge(u, v);
            }
        }
    }
    p
}

/// Closed neighborhood of `(gv, hv)` in `G ⋄ H` from factor neighborhoods:
/// `N[g] × N[h]` together with `N̄[g] × N̄[h]`.
pub fn modular_neighborhood(g: &Graph, h: &Graph, gv: Vertex, hv: Vertex) -> FixedBitSet {
    let code = PairCode::new(g, h);
    let ng = g.closed_neighborhood(gv);
    let nh = h.closed_neighborhood(hv);
    let mut out = FixedBitSet::with_capacity(code.len());
    for x in 0..g.n() {
        for y in 0..h.n() {
            // inside both closed neighborhoods, or outside both
            if ng.contains(x) == nh.contains(y) {
                out.insert(code.encode(x, y));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::classify;

    fn clique_sizes(g: &Graph) -> Vec<usize> {
        let mut sizes: Vec<usize> = g
            .components()
            .iter()
            .map(|c| {
                let k = c.len();
                assert_eq!(g.induced(c).edge_count(), k * (k - 1) / 2, "component not a clique");
                k
            })
            .collect();
        sizes.sort();
        sizes
    }

    #[test]
    fn complete_factors_give_a_clique() {
        let p = build_product(ProductKind::Modular, &Graph::complete(2), &Graph::complete(3));
        assert_eq!(p.n(), 6);
        assert_eq!(p.edge_count(), 15);
        assert!(p.is_complete());
    }

    #[test]
    fn two_clique_unions() {
        let f = Graph::complete(1).disjoint_union(&Graph::complete(2));
        let p = build_product(ProductKind::Modular, &f, &f);
        assert_eq!(clique_sizes(&p), vec![4, 5]);
    }

    #[test]
    fn edgeless_factors_match_direct_of_cliques() {
        let e3 = Graph::new(3);
        let k3 = Graph::complete(3);
        assert_eq!(
            build_product(ProductKind::Modular, &e3, &e3).edges(),
            build_product(ProductKind::Direct, &k3, &k3).edges()
        );
    }

    #[test]
    fn cartesian_square_of_k2_is_c4() {
        let p2 = Graph::path(2);
        let p = build_product(ProductKind::Cartesian, &p2, &p2);
        assert_eq!(p.edge_count(), 4);
        assert!((0..4).all(|v| p.degree(v) == 2));
        assert!(p.is_connected());
    }

    #[test]
    fn neighborhood_examples() {
        let k2 = Graph::complete(2);
        assert_eq!(modular_neighborhood(&k2, &k2, 0, 0).count_ones(..), 4);
        let e2 = Graph::new(2);
        let nb: Vec<_> = modular_neighborhood(&e2, &e2, 0, 0).ones().collect();
        assert_eq!(nb, vec![0, 3]);
    }

    #[test]
    fn modular_with_clique_matches_strong_and_lex() {
        for g in [Graph::path(4), Graph::cycle(5), Graph::star(3), Graph::new(3)] {
            assert!(!classify(&g).is_complete);
            for t in [2, 3] {
                let k = Graph::complete(t);
                let m = build_product(ProductKind::Modular, &g, &k).edges();
                assert_eq!(m, build_product(ProductKind::Strong, &g, &k).edges());
                assert_eq!(m, build_product(ProductKind::Lexicographic, &g, &k).edges());
            }
        }
    }

    #[test]
    fn pair_code_and_kind_names() {
        let code = PairCode { n_g: 3, n_h: 4 };
        for g in 0..3 {
            for h in 0..4 {
                assert_eq!(code.decode(code.encode(g, h)), (g, h));
            }
        }
        for k in ProductKind::ALL {
            assert_eq!(k.name().parse::<ProductKind>().unwrap(), k);
        }
        assert!("tensor".parse::<ProductKind>().is_err());
    }
}
