//! Test corpora: every graph on at most four vertices up to isomorphism, and
//! seeded random graphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub const DEFAULT_SEED: u64 = 0x6d6f_6470;

fn pair_index(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect()
}

fn from_mask(n: usize, pairs: &[(usize, usize)], mask: u32) -> Graph {
    let mut g = Graph::new(n);
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if mask >> i & 1 == 1 {
            g.add_edge(u, v);
        }
    }
    g
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest edge mask over all relabelings.
fn canonical_mask(g: &Graph, pairs: &[(usize, usize)], perms: &[Vec<usize>]) -> u32 {
    perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .enumerate()
                .filter(|&(_, &(u, v))| g.has_edge(p[u], p[v]))
                .fold(0u32, |m, (i, _)| m | 1 << i)
        })
        .min()
        .unwrap_or(0)
}

/// All graphs with `1 ≤ n ≤ max_n` vertices up to isomorphism, by order
/// then by canonical mask. `max_n` is capped at 6.
pub fn nonisomorphic_graphs(max_n: usize) -> Vec<Graph> {
    assert!(max_n <= 6, "exhaustive enumeration is limited to 6 vertices");
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs = pair_index(n);
        let perms = permutations(n);
        let mut seen = std::collections::BTreeSet::new();
        for mask in 0..(1u32 << pairs.len()) {
            let g = from_mask(n, &pairs, mask);
            if seen.insert(canonical_mask(&g, &pairs, &perms)) {
                out.push(g);
            }
        }
        // order by canonical mask within each n for a stable listing
        let start = out.len() - seen.len();
        let canon: Vec<u32> = out[start..].iter().map(|g| canonical_mask(g, &pairs, &perms)).collect();
        let mut tail: Vec<(u32, Graph)> = canon.into_iter().zip(out.drain(start..)).collect();
        tail.sort_by_key(|(c, _)| *c);
        out.extend(tail.into_iter().map(|(_, g)| g));
    }
    out
}

/// The 18 graphs of order at most four.
pub fn small_graphs() -> Vec<Graph> {
    nonisomorphic_graphs(4)
}

/// Every ordered pair of [`small_graphs`].
pub fn small_pairs() -> Vec<(Graph, Graph)> {
    let gs = small_graphs();
    gs.iter()
        .flat_map(|g| gs.iter().map(move |h| (g.clone(), h.clone())))
        .collect()
}

pub fn gnp(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// `count` factor pairs with orders in `1..=max_n` and edge densities drawn
/// uniformly from `[0.2, 0.8]`.
pub fn random_pairs(seed: u64, count: usize, max_n: usize) -> Vec<(Graph, Graph)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let one = |rng: &mut ChaCha8Rng| {
                let n = rng.gen_range(1..=max_n);
                let p = rng.gen_range(0.2..=0.8);
                gnp(rng, n, p)
            };
            let g = one(&mut rng);
            let h = one(&mut rng);
            (g, h)
        })
        .collect()
}

/// `count` graphs with orders in `min_n..=max_n` for solver checks.
pub fn random_graphs(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            let p = rng.gen_range(0.1..=0.9);
            gnp(&mut rng, n, p)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_match_known_enumeration() {
        let gs = nonisomorphic_graphs(5);
        let by_n: Vec<usize> = (1..=5).map(|n| gs.iter().filter(|g| g.n() == n).count()).collect();
        assert_eq!(by_n, vec![1, 2, 4, 11, 34]);
        assert_eq!(small_graphs().len(), 18);
        assert_eq!(small_pairs().len(), 324);
    }

    #[test]
    fn seeded_corpora_are_reproducible() {
        let a = random_pairs(7, 20, 6);
        let b = random_pairs(7, 20, 6);
        assert!(a.iter().zip(&b).all(|(x, y)| x.0 == y.0 && x.1 == y.1));
        assert!(a.iter().all(|(g, h)| (1..=6).contains(&g.n()) && (1..=6).contains(&h.n())));
        let c = random_graphs(7, 10, 5, 9);
        assert!(c.iter().all(|g| (5..=9).contains(&g.n())));
    }
}
