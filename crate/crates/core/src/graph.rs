//! Simple undirected graphs stored as bit rows, plus BFS distance oracles.
//!
//! Vertices are `0..n`. Every constructor documents its labeling so that
//! product coordinates and witnesses are reproducible.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Vertex = usize;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    rows: Vec<FixedBitSet>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(Error::Precondition(format!(
                    "edge ({u},{v}) invalid for {n} vertices"
                )));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds `uv`; panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) {
        assert!(u != v, "self-loop at {u}");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.rows[u].contains(v)
    }

    /// Open neighborhood as a bit row.
    pub fn row(&self, v: Vertex) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.rows[v].ones()
    }

    pub fn closed_neighborhood(&self, v: Vertex) -> FixedBitSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.rows[u].ones().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            let mut r = self.rows[u].clone();
            r.toggle_range(..);
            r.set(u, false);
            g.rows[u] = r;
        }
        g
    }

    /// `self` on `0..n(self)`, `other` shifted by `n(self)`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Subgraph induced by `keep`; vertex `i` of the result is `keep[i]`.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut g = Graph::new(keep.len());
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Applies `perm` (old vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn is_universal(&self, v: Vertex) -> bool {
        self.degree(v) + 1 == self.n
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.is_universal(v))
    }

    pub fn is_edgeless(&self) -> bool {
        self.rows.iter().all(|r| r.is_clear())
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = FixedBitSet::with_capacity(self.n);
            let mut frontier = FixedBitSet::with_capacity(self.n);
            frontier.insert(s);
            comp.insert(s);
            while !frontier.is_clear() {
                let mut next = FixedBitSet::with_capacity(self.n);
                for u in frontier.ones() {
                    next.union_with(&self.rows[u]);
                }
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            seen.union_with(&comp);
            out.push(comp.ones().collect());
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.components().len() == 1
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for i in 1..n {
            g.add_edge(i - 1, i);
        }
        g
    }

    /// `C_n` for `n >= 3`, vertices in cyclic order.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    pub fn complete(n: usize) -> Graph {
        Graph::new(n).complement()
    }

    /// `K_{1,s}` with the center at 0 and leaves `1..=s`.
    pub fn star(s: usize) -> Graph {
        let mut g = Graph::new(s + 1);
        for i in 1..=s {
            g.add_edge(0, i);
        }
        g
    }

    /// Parses the edge-list interchange format: a header `n m`, then `m`
    /// lines `u v` with `u < v < n`. Blank lines and `#` comments are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let parse_pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let mut it = l.split_whitespace();
            let mut next = || -> Result<usize> {
                it.next()
                    .ok_or_else(|| Error::Parse {
                        line,
                        msg: "expected two integers".into(),
                    })?
                    .parse::<usize>()
                    .map_err(|e| Error::Parse {
                        line,
                        msg: e.to_string(),
                    })
            };
            let a = next()?;
            let b = next()?;
            if it.next().is_some() {
                return Err(Error::Parse {
                    line,
                    msg: "trailing tokens".into(),
                });
            }
            Ok((a, b))
        };

        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing header line `n m`".into(),
        })?;
        let (n, m) = parse_pair(hline, header)?;
        if n == 0 {
            return Err(Error::Parse {
                line: hline,
                msg: "graph must have at least one vertex".into(),
            });
        }
        let mut g = Graph::new(n);
        let mut count = 0;
        let mut last_line = hline;
        for (line, l) in lines {
            last_line = line;
            let (u, v) = parse_pair(line, l)?;
            if !(u < v && v < n) {
                return Err(Error::Parse {
                    line,
                    msg: format!("edge `{u} {v}` must satisfy u < v < {n}"),
                });
            }
            if g.has_edge(u, v) {
                return Err(Error::Parse {
                    line,
                    msg: format!("duplicate edge `{u} {v}`"),
                });
            }
            g.add_edge(u, v);
            count += 1;
        }
        if count != m {
            return Err(Error::Parse {
                line: last_line,
                msg: format!("header announced {m} edges, found {count}"),
            });
        }
        Ok(g)
    }

    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut s = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            s.push_str(&format!("{u} {v}\n"));
        }
        s
    }
}

/// A hop distance or infinity.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dist(u32);

impl Dist {
    pub const INF: Dist = Dist(u32::MAX);
    pub const ZERO: Dist = Dist(0);

    pub const fn new(d: u32) -> Dist {
        assert!(d != u32::MAX);
        Dist(d)
    }

    pub fn is_finite(self) -> bool {
        self != Dist::INF
    }

    pub fn get(self) -> Option<u32> {
        self.is_finite().then_some(self.0)
    }

    /// Saturating sum: anything plus infinity is infinity.
    pub fn plus(self, other: Dist) -> Dist {
        if self.is_finite() && other.is_finite() {
            Dist(self.0 + other.0)
        } else {
            Dist::INF
        }
    }
}

impl fmt::Debug for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.get() {
            Some(d) => write!(f, "{d}"),
            None => f.write_str("inf"),
        }
    }
}

impl From<u32> for Dist {
    fn from(d: u32) -> Dist {
        Dist::new(d)
    }
}

impl Serialize for Dist {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self.get() {
            Some(d) => s.serialize_u32(d),
            None => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Dist {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Dist, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Num(u32),
            Str(String),
        }
        match Repr::deserialize(d)? {
            Repr::Num(v) if v != u32::MAX => Ok(Dist(v)),
            Repr::Str(s) if s == "inf" => Ok(Dist::INF),
            _ => Err(serde::de::Error::custom("expected a distance or \"inf\"")),
        }
    }
}

/// All-pairs table of [`Dist`] values.
#[derive(Clone, PartialEq, Eq)]
pub struct DistMatrix {
    n: usize,
    d: Vec<Dist>,
}

impl DistMatrix {
    fn filled(n: usize, value: Dist) -> Self {
        DistMatrix {
            n,
            d: vec![value; n * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Dist {
        self.d[u * self.n + v]
    }

    fn set(&mut self, u: Vertex, v: Vertex, value: Dist) {
        self.d[u * self.n + v] = value;
    }

    /// Largest entry; infinity for disconnected graphs.
    pub fn diameter(&self) -> Dist {
        self.d.iter().copied().max().unwrap_or(Dist::ZERO)
    }
}

impl fmt::Debug for DistMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<_> = self.d.chunks(self.n.max(1)).collect();
        f.debug_list().entries(rows).finish()
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistMatrix {
    let n = g.n();
    let mut dm = DistMatrix::filled(n, Dist::INF);
    for s in 0..n {
        let mut visited = FixedBitSet::with_capacity(n);
        let mut frontier = FixedBitSet::with_capacity(n);
        visited.insert(s);
        frontier.insert(s);
        let mut level = 0;
        while !frontier.is_clear() {
            for v in frontier.ones() {
                dm.set(s, v, Dist::new(level));
            }
            let mut next = FixedBitSet::with_capacity(n);
            for u in frontier.ones() {
                next.union_with(g.row(u));
            }
            next.difference_with(&visited);
            visited.union_with(&next);
            frontier = next;
            level += 1;
        }
    }
    dm
}

/// Shortest odd and even walk lengths.
#[derive(Clone, Debug)]
pub struct ParityDistances {
    pub odd: DistMatrix,
    pub even: DistMatrix,
}

/// BFS on the bipartite double cover `G × K_2`: layer `k` of the search
/// from `(s, even)` holds the vertices reachable by a walk of length `k`
/// that were not reached earlier at the same parity.
pub fn parity_distances(g: &Graph) -> ParityDistances {
    let n = g.n();
    let mut odd = DistMatrix::filled(n, Dist::INF);
    let mut even = DistMatrix::filled(n, Dist::INF);
    for s in 0..n {
        let mut seen = [
            FixedBitSet::with_capacity(n),
            FixedBitSet::with_capacity(n),
        ];
        let mut frontier = FixedBitSet::with_capacity(n);
        frontier.insert(s);
        seen[0].insert(s);
        even.set(s, s, Dist::ZERO);
        let mut level = 0u32;
        while !frontier.is_clear() {
            level += 1;
            let parity = (level % 2) as usize;
            let mut next = FixedBitSet::with_capacity(n);
            for u in frontier.ones() {
                next.union_with(g.row(u));
            }
            next.difference_with(&seen[parity]);
            seen[parity].union_with(&next);
            let table = if parity == 1 { &mut odd } else { &mut even };
            for v in next.ones() {
                table.set(s, v, Dist::new(level));
            }
            frontier = next;
        }
    }
    ParityDistances { odd, even }
}

/// Predicates the product distance formulas branch on.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphClass {
    pub is_complete: bool,
    pub is_edgeless: bool,
    pub is_connected: bool,
    pub is_union_of_two_cliques: bool,
    pub diameter: Dist,
    pub universal_vertices: Vec<Vertex>,
    pub isolated_vertices: Vec<Vertex>,
}

pub fn classify(g: &Graph) -> GraphClass {
    let comps = g.components();
    let is_clique = |c: &Vec<Vertex>| {
        c.iter()
            .all(|&u| c.iter().all(|&v| u == v || g.has_edge(u, v)))
    };
    GraphClass {
        is_complete: g.is_complete(),
        is_edgeless: g.is_edgeless(),
        is_connected: comps.len() == 1,
        is_union_of_two_cliques: comps.len() == 2 && comps.iter().all(is_clique),
        diameter: all_pairs_distances(g).diameter(),
        universal_vertices: (0..g.n()).filter(|&v| g.is_universal(v)).collect(),
        isolated_vertices: (0..g.n()).filter(|&v| g.degree(v) == 0).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_sequence(g: &Graph) -> Vec<usize> {
        let mut d: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
        d.sort();
        d
    }

    #[test]
    fn complement_examples() {
        assert!(Graph::complete(3).complement().is_edgeless());
        assert_eq!(Graph::complete(3).complement().n(), 3);
        let p4 = Graph::path(4);
        assert_eq!(p4.complement().complement(), p4);
        let c5c = Graph::cycle(5).complement();
        assert_eq!(degree_sequence(&c5c), vec![2; 5]);
        assert_eq!(c5c.edge_count(), 5);
        assert!(c5c.is_connected());
    }

    #[test]
    fn disjoint_union_examples() {
        let k2 = Graph::complete(2);
        let u = k2.disjoint_union(&k2);
        assert_eq!((u.n(), u.edge_count(), u.components().len()), (4, 2, 2));
        let u = Graph::complete(1).disjoint_union(&k2);
        assert_eq!((u.n(), u.edge_count()), (3, 1));
        let u = Graph::complete(3).disjoint_union(&Graph::complete(4));
        assert!(classify(&u).is_union_of_two_cliques);
    }

    #[test]
    fn distances() {
        let d = all_pairs_distances(&Graph::path(4));
        assert_eq!(d.get(0, 3), Dist::new(3));
        let k2 = Graph::complete(2);
        let d = all_pairs_distances(&k2.disjoint_union(&k2));
        assert_eq!(d.get(0, 2), Dist::INF);
        assert_eq!(d.diameter(), Dist::INF);
        let d = all_pairs_distances(&Graph::cycle(6));
        assert_eq!(d.get(0, 3), Dist::new(3));
    }

    #[test]
    fn parity_examples() {
        let p = parity_distances(&Graph::cycle(5));
        assert_eq!(p.odd.get(0, 1), Dist::new(1));
        assert_eq!(p.even.get(0, 1), Dist::new(4));
        assert_eq!(p.odd.get(0, 0), Dist::new(5));
        assert_eq!(p.even.get(0, 0), Dist::ZERO);

        let p = parity_distances(&Graph::complete(2));
        assert_eq!(p.odd.get(0, 1), Dist::new(1));
        assert_eq!(p.even.get(0, 1), Dist::INF);
        assert_eq!(p.odd.get(0, 0), Dist::INF);

        let p = parity_distances(&Graph::path(3));
        assert_eq!(p.odd.get(0, 2), Dist::INF);
        assert_eq!(p.even.get(0, 2), Dist::new(2));
    }

    #[test]
    fn classify_examples() {
        let c = classify(&Graph::complete(5));
        assert!(c.is_complete);
        assert_eq!(c.diameter, Dist::new(1));
        assert_eq!(c.universal_vertices, vec![0, 1, 2, 3, 4]);

        let c = classify(&Graph::complete(3).disjoint_union(&Graph::complete(4)));
        assert!(c.is_union_of_two_cliques);
        assert_eq!(c.diameter, Dist::INF);

        let c = classify(&Graph::star(3));
        assert_eq!(c.universal_vertices, vec![0]);
        assert_eq!(c.diameter, Dist::new(2));
        assert!(!c.is_union_of_two_cliques);

        let c = classify(&Graph::new(3));
        assert!(c.is_edgeless && !c.is_union_of_two_cliques);
        assert_eq!(c.isolated_vertices, vec![0, 1, 2]);
        assert!(classify(&Graph::new(2)).is_union_of_two_cliques);
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = Graph::cycle(5);
        assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);

        let text = "# comment\n\n3 2\n0 1\n\n1 2\n";
        assert_eq!(Graph::parse_edge_list(text).unwrap(), Graph::path(3));

        let err = |t: &str| match Graph::parse_edge_list(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        };
        assert_eq!(err("0 0\n"), 1);
        assert_eq!(err("3 1\n1 0\n"), 2);
        assert_eq!(err("3 1\n0 3\n"), 2);
        assert_eq!(err("3 2\n0 1\n0 1\n"), 3);
        assert_eq!(err("3 2\n0 1\n"), 2);
        assert_eq!(err("3 1\n0 x\n"), 2);
        assert_eq!(err(""), 1);
    }

    #[test]
    fn dist_json() {
        assert_eq!(serde_json::to_string(&Dist::INF).unwrap(), "\"inf\"");
        assert_eq!(serde_json::to_string(&Dist::new(3)).unwrap(), "3");
        let d: Dist = serde_json::from_str("\"inf\"").unwrap();
        assert_eq!(d, Dist::INF);
        assert_eq!(Dist::new(2).plus(Dist::INF), Dist::INF);
    }
}
