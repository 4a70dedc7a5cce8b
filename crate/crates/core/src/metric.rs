//! Closed-form distances in graph products.
//!
//! [`ModularMetric`] evaluates the modular-product distance purely from
//! factor data (factor distances, neighborhoods, γ-pairs); nothing here
//! builds the product.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{all_pairs_distances, classify, parity_distances, Dist, DistMatrix, Graph, GraphClass, ParityDistances, Vertex};
use crate::products::{modular_edge_type, ProductKind};
use crate::structure::{has_gamma_pair, is_gamma_pair};

/// Cached per-factor data.
#[derive(Clone, Debug)]
pub struct Factor<'a> {
    pub graph: &'a Graph,
    pub dist: DistMatrix,
    pub class: GraphClass,
    pub has_gamma_pair: bool,
}

impl<'a> Factor<'a> {
    pub fn new(graph: &'a Graph) -> Self {
        Factor {
            graph,
            dist: all_pairs_distances(graph),
            class: classify(graph),
            has_gamma_pair: has_gamma_pair(graph),
        }
    }

    fn twins(&self, a: Vertex, b: Vertex) -> bool {
        a == b || self.graph.closed_neighborhood(a) == self.graph.closed_neighborhood(b)
    }

    fn universal(&self, v: Vertex) -> bool {
        self.graph.is_universal(v)
    }

    fn has_universal(&self) -> bool {
        !self.class.universal_vertices.is_empty()
    }
}

/// Closed-form distance in the Cartesian, strong, lexicographic and direct
/// products.
pub struct StandardMetric<'a> {
    kind: ProductKind,
    g: &'a Graph,
    h: &'a Graph,
    dg: DistMatrix,
    dh: DistMatrix,
    pg: ParityDistances,
    ph: ParityDistances,
}

impl<'a> StandardMetric<'a> {
    pub fn new(kind: ProductKind, g: &'a Graph, h: &'a Graph) -> Result<Self> {
        match kind {
            ProductKind::DirectCoDirect | ProductKind::Modular => {
                return Err(Error::UnsupportedProduct(kind))
            }
            _ => {}
        }
        Ok(StandardMetric {
            kind,
            g,
            h,
            dg: all_pairs_distances(g),
            dh: all_pairs_distances(h),
            pg: parity_distances(g),
            ph: parity_distances(h),
        })
    }

    pub fn distance(&self, (g1, h1): (Vertex, Vertex), (g2, h2): (Vertex, Vertex)) -> Dist {
        let dg = self.dg.get(g1, g2);
        let dh = self.dh.get(h1, h2);
        match self.kind {
            ProductKind::Cartesian => dg.plus(dh),
            ProductKind::Strong => dg.max(dh),
            ProductKind::Lexicographic => {
                if g1 != g2 {
                    dg
                } else if self.g.degree(g1) == 0 {
                    // an isolated first coordinate gives no detour through another layer
                    dh
                } else {
                    dh.min(Dist::new(2))
                }
            }
            ProductKind::Direct => {
                if (g1, h1) == (g2, h2) {
                    return Dist::ZERO;
                }
                // walks of equal length need room to pad the shorter one
                let stuck = [(self.g, g1), (self.g, g2), (self.h, h1), (self.h, h2)];
                if stuck.iter().any(|&(x, v)| x.degree(v) == 0) {
                    return Dist::INF;
                }
                let even = self.pg.even.get(g1, g2).max(self.ph.even.get(h1, h2));
                let odd = self.pg.odd.get(g1, g2).max(self.ph.odd.get(h1, h2));
                even.min(odd)
            }
            ProductKind::DirectCoDirect | ProductKind::Modular => unreachable!(),
        }
    }
}

pub fn standard_product_distance(
    kind: ProductKind,
    g: &Graph,
    h: &Graph,
    a: (Vertex, Vertex),
    b: (Vertex, Vertex),
) -> Result<Dist> {
    Ok(StandardMetric::new(kind, g, h)?.distance(a, b))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceCase {
    BothComplete,
    OneFactorComplete,
    BothEdgeless,
    TwoCliquePairInfinite,
    General,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModularDistanceCase {
    pub tag: DistanceCase,
    pub value: Dist,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
enum Regime {
    BothComplete,
    GComplete,
    HComplete,
    TwoCliqueUnions,
    General,
}

/// Modular-product distances from factor data.
pub struct ModularMetric<'a> {
    pub g: Factor<'a>,
    pub h: Factor<'a>,
    regime: Regime,
    /// Component index of each vertex, used for the two-clique-union regime.
    side_g: Vec<usize>,
    side_h: Vec<usize>,
}

fn sides(g: &Graph) -> Vec<usize> {
    let mut side = vec![0; g.n()];
    for (i, c) in g.components().iter().enumerate() {
        for &v in c {
            side[v] = i;
        }
    }
    side
}

impl<'a> ModularMetric<'a> {
    pub fn new(g: &'a Graph, h: &'a Graph) -> Self {
        let fg = Factor::new(g);
        let fh = Factor::new(h);
        let regime = match (fg.class.is_complete, fh.class.is_complete) {
            (true, true) => Regime::BothComplete,
            (true, false) => Regime::GComplete,
            (false, true) => Regime::HComplete,
            (false, false) => {
                if fg.class.is_union_of_two_cliques && fh.class.is_union_of_two_cliques {
                    Regime::TwoCliqueUnions
                } else {
                    Regime::General
                }
            }
        };
        ModularMetric {
            side_g: sides(g),
            side_h: sides(h),
            g: fg,
            h: fh,
            regime,
        }
    }

    /// Neither factor complete and not both unions of two cliques.
    pub fn is_general(&self) -> bool {
        self.regime == Regime::General
    }

    fn require_general(&self) -> Result<()> {
        if self.is_general() {
            Ok(())
        } else {
            Err(Error::Precondition(
                "needs non-complete factors that are not both unions of two cliques".into(),
            ))
        }
    }

    pub fn distance(&self, a: (Vertex, Vertex), b: (Vertex, Vertex)) -> ModularDistanceCase {
        let (g1, h1) = a;
        let (g2, h2) = b;
        let (tag, value) = match self.regime {
            Regime::BothComplete => {
                let v = if a == b { Dist::ZERO } else { Dist::new(1) };
                (DistanceCase::BothComplete, v)
            }
            Regime::HComplete => {
                let v = if g1 != g2 {
                    self.g.dist.get(g1, g2)
                } else {
                    self.h.dist.get(h1, h2)
                };
                (DistanceCase::OneFactorComplete, v)
            }
            Regime::GComplete => {
                let v = if h1 != h2 {
                    self.h.dist.get(h1, h2)
                } else {
                    self.g.dist.get(g1, g2)
                };
                (DistanceCase::OneFactorComplete, v)
            }
            Regime::TwoCliqueUnions => {
                let class = |g: Vertex, h: Vertex| self.side_g[g] ^ self.side_h[h];
                let v = if a == b {
                    Dist::ZERO
                } else if class(g1, h1) == class(g2, h2) {
                    Dist::new(1)
                } else {
                    Dist::INF
                };
                let tag = if v == Dist::INF {
                    DistanceCase::TwoCliquePairInfinite
                } else if self.g.class.is_edgeless && self.h.class.is_edgeless {
                    DistanceCase::BothEdgeless
                } else {
                    DistanceCase::General
                };
                (tag, v)
            }
            Regime::General => {
                let v = if a == b {
                    Dist::ZERO
                } else if modular_edge_type(self.g.graph, self.h.graph, a, b).is_some() {
                    Dist::new(1)
                } else if self.dist3_unchecked(a, b) {
                    Dist::new(3)
                } else {
                    Dist::new(2)
                };
                let tag = if self.g.class.is_edgeless && self.h.class.is_edgeless {
                    DistanceCase::BothEdgeless
                } else {
                    DistanceCase::General
                };
                (tag, v)
            }
        };
        ModularDistanceCase { tag, value }
    }

    /// One orientation of the distance-three characterization: equal closed
    /// neighborhoods in `x`, far apart in `y`, and `x`-vertex universal or
    /// the `y`-pair a γ-pair.
    fn dist3_side(x: &Factor, y: &Factor, x1: Vertex, x2: Vertex, y1: Vertex, y2: Vertex) -> bool {
        x.twins(x1, x2)
            && y.dist.get(y1, y2) >= Dist::new(3)
            && (x.universal(x1) || is_gamma_pair(y.graph, y1, y2))
    }

    fn dist3_unchecked(&self, (g1, h1): (Vertex, Vertex), (g2, h2): (Vertex, Vertex)) -> bool {
        Self::dist3_side(&self.g, &self.h, g1, g2, h1, h2)
            || Self::dist3_side(&self.h, &self.g, h1, h2, g1, g2)
    }

    pub fn dist3_predicate(&self, a: (Vertex, Vertex), b: (Vertex, Vertex)) -> Result<bool> {
        self.require_general()?;
        Ok(self.dist3_unchecked(a, b))
    }

    /// Diameter two exactly when no pair reaches distance three: neither
    /// factor has a γ-pair, and no factor with a universal vertex meets a
    /// factor of diameter at least three.
    pub fn diameter_two(&self) -> Result<bool> {
        self.require_general()?;
        let three = Dist::new(3);
        let bad = self.g.has_gamma_pair
            || self.h.has_gamma_pair
            || (self.g.has_universal() && self.h.class.diameter >= three)
            || (self.h.has_universal() && self.g.class.diameter >= three);
        Ok(!bad)
    }

    /// Largest closed-form distance over all pairs.
    pub fn diameter(&self) -> Dist {
        let (ng, nh) = (self.g.graph.n(), self.h.graph.n());
        let mut best = Dist::ZERO;
        for g1 in 0..ng {
            for h1 in 0..nh {
                for g2 in 0..ng {
                    for h2 in 0..nh {
                        best = best.max(self.distance((g1, h1), (g2, h2)).value);
                    }
                }
            }
        }
        best
    }

    pub fn connected(&self) -> bool {
        modular_connected_from(&self.g.class, &self.h.class)
    }
}

pub fn modular_distance(
    g: &Graph,
    h: &Graph,
    a: (Vertex, Vertex),
    b: (Vertex, Vertex),
) -> ModularDistanceCase {
    ModularMetric::new(g, h).distance(a, b)
}

pub fn dist3_predicate(g: &Graph, h: &Graph, a: (Vertex, Vertex), b: (Vertex, Vertex)) -> Result<bool> {
    ModularMetric::new(g, h).dist3_predicate(a, b)
}

pub fn modular_diameter_two(g: &Graph, h: &Graph) -> Result<bool> {
    ModularMetric::new(g, h).diameter_two()
}

fn modular_connected_from(cg: &GraphClass, ch: &GraphClass) -> bool {
    let disconnected = (cg.is_complete && !ch.is_connected)
        || (ch.is_complete && !cg.is_connected)
        || (cg.is_union_of_two_cliques && ch.is_union_of_two_cliques);
    !disconnected
}

/// Connectivity of `G ⋄ H` from factor classes alone.
pub fn modular_connected(g: &Graph, h: &Graph) -> bool {
    modular_connected_from(&classify(g), &classify(h))
}
