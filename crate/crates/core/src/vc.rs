//! Exact minimum vertex cover.
//!
//! The solver strips isolated vertices, applies pendant and dominance
//! reductions, then finds a maximum independent set of what is left as a
//! maximum clique of its complement (bitset branch and bound with a greedy
//! coloring bound, i.e. a clique cover of the original graph). The cover is
//! the complement of that independent set.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

pub const DEFAULT_BUDGET: Duration = Duration::from_secs(300);

fn secs<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverResult {
    pub size: usize,
    /// Sorted cover; never contains isolated vertices.
    pub witness: Vec<Vertex>,
    /// Proven lower bound on the cover number.
    pub lower_bound: usize,
    pub nodes_explored: u64,
    #[serde(serialize_with = "secs")]
    pub elapsed: Duration,
    pub optimal: bool,
}

#[derive(Copy, Clone, Debug)]
pub struct SolverOptions {
    pub budget: Duration,
    /// Return the lexicographically smallest optimal witness.
    pub canonical: bool,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            budget: DEFAULT_BUDGET,
            canonical: false,
        }
    }
}

pub fn min_vertex_cover(g: &Graph, budget: Duration) -> CoverResult {
    min_vertex_cover_with(
        g,
        &SolverOptions {
            budget,
            canonical: false,
        },
    )
}

pub fn min_vertex_cover_with(g: &Graph, opts: &SolverOptions) -> CoverResult {
    let start = Instant::now();
    let deadline = start + opts.budget;
    let mut alive = FixedBitSet::with_capacity(g.n());
    alive.extend((0..g.n()).filter(|&v| g.degree(v) > 0));
    let base = solve(g, alive.clone(), deadline);
    let mut nodes = base.nodes;
    let mut witness = base.cover;
    let mut optimal = base.optimal;

    if opts.canonical && optimal {
        if let Some((w, extra)) = canonical_witness(g, &alive, witness.len(), deadline) {
            witness = w;
            nodes += extra;
        } else {
            optimal = false;
        }
    }
    debug_assert!(covers(g, &witness));
    CoverResult {
        size: witness.len(),
        lower_bound: if optimal { witness.len() } else { base.lower_bound },
        witness,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
        optimal,
    }
}

pub fn covers(g: &Graph, cover: &[Vertex]) -> bool {
    let mut inside = FixedBitSet::with_capacity(g.n());
    inside.extend(cover.iter().copied());
    g.edges()
        .iter()
        .all(|&(u, v)| inside.contains(u) || inside.contains(v))
}

struct Solved {
    cover: Vec<Vertex>,
    lower_bound: usize,
    nodes: u64,
    optimal: bool,
}

/// Minimum cover of the subgraph induced by `alive`.
fn solve(g: &Graph, mut alive: FixedBitSet, deadline: Instant) -> Solved {
    let mut cover = Vec::new();
    reduce(g, &mut alive, &mut cover);
    let rest: Vec<Vertex> = alive.ones().collect();
    let mut clique = CliqueSearch::for_independent_sets(g, &rest, deadline);
    let (mis, root_bound) = clique.run();
    let mut in_mis = FixedBitSet::with_capacity(g.n());
    in_mis.extend(mis.iter().map(|&i| rest[i]));
    cover.extend(rest.iter().copied().filter(|&v| !in_mis.contains(v)));
    cover.sort_unstable();
    let forced = cover.len() - (rest.len() - mis.len());
    Solved {
        lower_bound: forced + rest.len() - root_bound.max(mis.len()),
        cover,
        nodes: clique.nodes,
        optimal: !clique.aborted,
    }
}

/// Isolated, pendant and dominance reductions; each step keeps some
/// minimum cover of the remaining graph extendable by the recorded choices.
fn reduce(g: &Graph, alive: &mut FixedBitSet, cover: &mut Vec<Vertex>) {
    let live_row = |alive: &FixedBitSet, v: Vertex| {
        let mut r = g.row(v).clone();
        r.intersect_with(alive);
        r
    };
    loop {
        let mut changed = false;
        let vs: Vec<Vertex> = alive.ones().collect();
        for v in vs {
            if !alive.contains(v) {
                continue;
            }
            let r = live_row(alive, v);
            match r.count_ones(..) {
                0 => {
                    alive.set(v, false);
                    changed = true;
                }
                1 => {
                    let u = r.ones().next().unwrap();
                    cover.push(u);
                    alive.set(v, false);
                    alive.set(u, false);
                    changed = true;
                }
                _ => {}
            }
        }
        // N[u] ⊆ N[v] for adjacent u, v: some maximum independent set avoids v.
        let vs: Vec<Vertex> = alive.ones().collect();
        'outer: for v in vs {
            let mut nv = live_row(alive, v);
            nv.insert(v);
            for u in live_row(alive, v).ones() {
                let mut nu = live_row(alive, u);
                nu.insert(u);
                if nu.is_subset(&nv) {
                    cover.push(v);
                    alive.set(v, false);
                    changed = true;
                    continue 'outer;
                }
            }
        }
        if !changed {
            break;
        }
    }
}

type Words = Vec<u64>;

fn words(m: usize) -> usize {
    m.div_ceil(64).max(1)
}

fn bit_set(w: &mut [u64], i: usize) {
    w[i / 64] |= 1 << (i % 64);
}

fn bit_clear(w: &mut [u64], i: usize) {
    w[i / 64] &= !(1 << (i % 64));
}

fn first_bit(w: &[u64]) -> Option<usize> {
    w.iter()
        .enumerate()
        .find(|(_, &x)| x != 0)
        .map(|(i, &x)| i * 64 + x.trailing_zeros() as usize)
}

fn is_empty(w: &[u64]) -> bool {
    w.iter().all(|&x| x == 0)
}

/// Maximum clique search over a bitset adjacency (bit order = branching order).
struct CliqueSearch {
    adj: Vec<Words>,
    /// `order[i]` is the caller's index of internal vertex `i`.
    order: Vec<usize>,
    best: Vec<usize>,
    current: Vec<usize>,
    nodes: u64,
    deadline: Instant,
    aborted: bool,
}

impl CliqueSearch {
    /// Clique search in the complement of `g[rest]`; results index `rest`.
    fn for_independent_sets(g: &Graph, rest: &[Vertex], deadline: Instant) -> Self {
        let m = rest.len();
        let mut local = FixedBitSet::with_capacity(g.n());
        local.extend(rest.iter().copied());
        let deg: Vec<usize> = rest
            .iter()
            .map(|&v| {
                let mut r = g.row(v).clone();
                r.intersect_with(&local);
                r.count_ones(..)
            })
            .collect();
        // Highest complement degree first, ties by smallest id.
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| (deg[i], rest[i]));
        let mut adj = vec![vec![0u64; words(m)]; m];
        for (a, &ia) in order.iter().enumerate() {
            for (b, &ib) in order.iter().enumerate() {
                if a != b && !g.has_edge(rest[ia], rest[ib]) {
                    bit_set(&mut adj[a], b);
                }
            }
        }
        CliqueSearch {
            adj,
            order,
            best: Vec::new(),
            current: Vec::new(),
            nodes: 0,
            deadline,
            aborted: false,
        }
    }

    fn m(&self) -> usize {
        self.adj.len()
    }

    /// Greedy sequential coloring of `p`; returns vertices with
    /// nondecreasing color numbers.
    fn color(&self, p: &[u64]) -> Vec<(usize, usize)> {
        let mut uncolored = p.to_vec();
        let mut out = Vec::new();
        let mut k = 0;
        while !is_empty(&uncolored) {
            k += 1;
            let mut q = uncolored.clone();
            while let Some(v) = first_bit(&q) {
                bit_clear(&mut uncolored, v);
                bit_clear(&mut q, v);
                for (qw, aw) in q.iter_mut().zip(&self.adj[v]) {
                    *qw &= !aw;
                }
                out.push((v, k));
            }
        }
        out
    }

    fn greedy_start(&mut self) {
        let mut p = vec![0u64; words(self.m())];
        (0..self.m()).for_each(|i| bit_set(&mut p, i));
        let mut clique = Vec::new();
        while let Some(v) = first_bit(&p) {
            clique.push(v);
            for (pw, aw) in p.iter_mut().zip(&self.adj[v]) {
                *pw &= aw;
            }
        }
        self.best = clique;
    }

    /// Returns (maximum clique in caller indices, root coloring bound).
    fn run(&mut self) -> (Vec<usize>, usize) {
        let m = self.m();
        if m == 0 {
            return (Vec::new(), 0);
        }
        self.greedy_start();
        let mut p = vec![0u64; words(m)];
        (0..m).for_each(|i| bit_set(&mut p, i));
        let root_bound = self.color(&p).last().map_or(0, |&(_, k)| k);
        self.expand(p);
        let best = self.best.iter().map(|&i| self.order[i]).collect();
        (best, root_bound)
    }

    fn expand(&mut self, mut p: Words) {
        self.nodes += 1;
        if self.nodes.is_multiple_of(1024) && Instant::now() >= self.deadline {
            self.aborted = true;
        }
        if self.aborted {
            return;
        }
        let colored = self.color(&p);
        for &(v, k) in colored.iter().rev() {
            if self.current.len() + k <= self.best.len() || self.aborted {
                return;
            }
            self.current.push(v);
            let next: Words = p.iter().zip(&self.adj[v]).map(|(a, b)| a & b).collect();
            if is_empty(&next) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            bit_clear(&mut p, v);
        }
    }
}

/// Greedy lexicographic descent: put each vertex into the cover whenever an
/// optimal cover still exists with all earlier decisions.
fn canonical_witness(
    g: &Graph,
    alive: &FixedBitSet,
    beta: usize,
    deadline: Instant,
) -> Option<(Vec<Vertex>, u64)> {
    let mut forced_in = FixedBitSet::with_capacity(g.n());
    let mut forced_out = FixedBitSet::with_capacity(g.n());
    let mut nodes = 0;
    for v in alive.ones() {
        if forced_in.contains(v) || forced_out.contains(v) {
            continue;
        }
        let mut trial = forced_in.clone();
        trial.insert(v);
        let mut rest = alive.clone();
        rest.difference_with(&trial);
        rest.difference_with(&forced_out);
        let s = solve(g, rest, deadline);
        nodes += s.nodes;
        if !s.optimal {
            return None;
        }
        if trial.count_ones(..) + s.cover.len() == beta {
            forced_in = trial;
        } else {
            forced_out.insert(v);
            for u in g.neighbors(v) {
                forced_in.insert(u);
            }
        }
    }
    let w: Vec<Vertex> = forced_in.ones().collect();
    (w.len() == beta && covers(g, &w)).then_some((w, nodes))
}

fn non_isolated(g: &Graph) -> Vec<Vertex> {
    (0..g.n()).filter(|&v| g.degree(v) > 0).collect()
}

/// Maximum independent set size of the non-isolated part, by enumerating
/// every independent set (no bounding).
fn enumerate_alpha(g: &Graph) -> Result<(usize, usize)> {
    let live = non_isolated(g);
    if live.len() > 26 {
        return Err(Error::SizeGuard(live.len()));
    }
    let masks: Vec<u32> = live
        .iter()
        .map(|&u| {
            live.iter()
                .enumerate()
                .filter(|&(_, &v)| g.has_edge(u, v))
                .fold(0u32, |m, (j, _)| m | (1 << j))
        })
        .collect();
    fn rec(i: usize, chosen: u32, size: usize, masks: &[u32], best: &mut usize) {
        if i == masks.len() {
            *best = (*best).max(size);
            return;
        }
        rec(i + 1, chosen, size, masks, best);
        if masks[i] & chosen == 0 {
            rec(i + 1, chosen | (1 << i), size + 1, masks, best);
        }
    }
    let mut best = 0;
    rec(0, 0, 0, &masks, &mut best);
    Ok((live.len(), best))
}

/// Cover number by exhaustive enumeration; at most 26 non-isolated vertices.
pub fn brute_force_vc(g: &Graph) -> Result<usize> {
    let (m, alpha) = enumerate_alpha(g)?;
    Ok(m - alpha)
}

/// Independence number by exhaustive enumeration (isolated vertices count).
pub fn brute_force_mis(g: &Graph) -> Result<usize> {
    let (m, alpha) = enumerate_alpha(g)?;
    Ok(alpha + g.n() - m)
}
