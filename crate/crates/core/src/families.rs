//! Parameterized graph families and closed-form strong metric dimensions of
//! modular products built from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dims::strong_metric_dimension;
use crate::error::{Error, Result};
use crate::graph::{classify, Graph, Vertex};
use crate::structure::{minus_graphs, twin_classes, twin_ordering, TwinKind};
use crate::vc::{min_vertex_cover, DEFAULT_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    /// `K_{1,s}`, center first.
    Star { s: usize },
    Empty { n: usize },
    ComplementOf { of: Box<FamilySpec> },
    CliqueUnion { sizes: Vec<usize> },
    /// `K_{n,n}` minus a perfect matching, `x_i` blown up into a clique of
    /// `q[i]` vertices and `y_i` into one of `r[i]`.
    KnnMinusM { n: usize, q: Vec<usize>, r: Vec<usize> },
    Hstq { s: usize, t: usize, q: usize },
}

impl FamilySpec {
    /// Plain `K_{n,n}` minus a perfect matching.
    pub fn knn_minus_m(n: usize) -> FamilySpec {
        FamilySpec::KnnMinusM {
            n,
            q: vec![1; n],
            r: vec![1; n],
        }
    }

    pub fn complement(self) -> FamilySpec {
        FamilySpec::ComplementOf { of: Box::new(self) }
    }

    /// Builds a spec from a tag and a flat parameter list. `co-<tag>` takes
    /// the complement; `knn-minus-m` accepts either `n` alone or `n q.. r..`.
    pub fn from_params(tag: &str, params: &[usize]) -> Result<FamilySpec> {
        if let Some(inner) = tag.strip_prefix("co-") {
            return Ok(FamilySpec::from_params(inner, params)?.complement());
        }
        let exactly = |k: usize| {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::Domain(format!("`{tag}` takes {k} parameter(s), got {}", params.len())))
            }
        };
        Ok(match tag {
            "path" => {
                exactly(1)?;
                FamilySpec::Path { n: params[0] }
            }
            "cycle" => {
                exactly(1)?;
                FamilySpec::Cycle { n: params[0] }
            }
            "complete" => {
                exactly(1)?;
                FamilySpec::Complete { n: params[0] }
            }
            "star" => {
                exactly(1)?;
                FamilySpec::Star { s: params[0] }
            }
            "empty" => {
                exactly(1)?;
                FamilySpec::Empty { n: params[0] }
            }
            "clique-union" => FamilySpec::CliqueUnion {
                sizes: params.to_vec(),
            },
            "knn-minus-m" => match params {
                [n] => FamilySpec::knn_minus_m(*n),
                [n, rest @ ..] if rest.len() == 2 * n => FamilySpec::KnnMinusM {
                    n: *n,
                    q: rest[..*n].to_vec(),
                    r: rest[*n..].to_vec(),
                },
                _ => return Err(Error::Domain("`knn-minus-m` takes n, or n followed by 2n sizes".into())),
            },
            "hstq" => {
                exactly(3)?;
                FamilySpec::Hstq {
                    s: params[0],
                    t: params[1],
                    q: params[2],
                }
            }
            _ => return Err(Error::Domain(format!("unknown family `{tag}`"))),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        match self {
            FamilySpec::Path { n } => write!(f, "P{n}"),
            FamilySpec::Cycle { n } => write!(f, "C{n}"),
            FamilySpec::Complete { n } => write!(f, "K{n}"),
            FamilySpec::Star { s } => write!(f, "K1,{s}"),
            FamilySpec::Empty { n } => write!(f, "E{n}"),
            FamilySpec::ComplementOf { of } => write!(f, "co({of})"),
            FamilySpec::CliqueUnion { sizes } => write!(f, "cliques({})", list(sizes)),
            FamilySpec::KnnMinusM { n, q, r } => {
                if q.iter().chain(r).all(|&x| x == 1) {
                    write!(f, "K{n},{n}-M")
                } else {
                    write!(f, "K{n},{n}-M({};{})", list(q), list(r))
                }
            }
            FamilySpec::Hstq { s, t, q } => write!(f, "H({s},{t},{q})"),
        }
    }
}

fn domain(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain(msg()))
    }
}

fn clique_on(g: &mut Graph, vs: &[Vertex]) {
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            g.add_edge(a, b);
        }
    }
}

/// Labeling:
/// - `Hstq`: `X = 0..s`, `Y = s..s+t` (so `y_t = s+t-1`), `W` next, `z` last.
/// - `KnnMinusM`: the cliques replacing `x_1..x_n` in order, then those
///   replacing `y_1..y_n`.
/// - `ComplementOf` keeps the labels of the inner family.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    Ok(match spec {
        FamilySpec::Path { n } => {
            domain(*n >= 1, || "path needs n >= 1".into())?;
            Graph::path(*n)
        }
        FamilySpec::Cycle { n } => {
            domain(*n >= 3, || "cycle needs n >= 3".into())?;
            Graph::cycle(*n)
        }
        FamilySpec::Complete { n } => {
            domain(*n >= 1, || "complete graph needs n >= 1".into())?;
            Graph::complete(*n)
        }
        FamilySpec::Star { s } => {
            domain(*s >= 1, || "star needs s >= 1".into())?;
            Graph::star(*s)
        }
        FamilySpec::Empty { n } => {
            domain(*n >= 1, || "empty graph needs n >= 1".into())?;
            Graph::new(*n)
        }
        FamilySpec::ComplementOf { of } => generate(of)?.complement(),
        FamilySpec::CliqueUnion { sizes } => {
            domain(!sizes.is_empty() && sizes.iter().all(|&k| k >= 1), || {
                "clique union needs at least one clique, each of size >= 1".into()
            })?;
            let mut g = Graph::new(sizes.iter().sum());
            let mut next = 0;
            for &k in sizes {
                let block: Vec<Vertex> = (next..next + k).collect();
                clique_on(&mut g, &block);
                next += k;
            }
            g
        }
        FamilySpec::KnnMinusM { n, q, r } => {
            domain(*n >= 2, || "K_{n,n}-M needs n >= 2".into())?;
            domain(q.len() == *n && r.len() == *n, || {
                format!("K_{{n,n}}-M needs {n} q-sizes and {n} r-sizes")
            })?;
            domain(q.iter().chain(r).all(|&x| x >= 1), || "clique sizes must be >= 1".into())?;
            let mut blocks: Vec<Vec<Vertex>> = Vec::with_capacity(2 * n);
            let mut next = 0;
            for &k in q.iter().chain(r) {
                blocks.push((next..next + k).collect());
                next += k;
            }
            let mut g = Graph::new(next);
            for b in &blocks {
                clique_on(&mut g, b);
            }
            for i in 0..*n {
                for j in 0..*n {
                    if i != j {
                        for &a in &blocks[i] {
                            for &b in &blocks[n + j] {
                                g.add_edge(a, b);
                            }
                        }
                    }
                }
            }
            g
        }
        FamilySpec::Hstq { s, t, q } => {
            domain(*s >= 1 && *t >= 2, || "H(s,t,q) needs s >= 1, t >= 2, q >= 0".into())?;
            let (s, t, q) = (*s, *t, *q);
            let z = s + t + q;
            let mut g = Graph::new(z + 1);
            for x in 0..s {
                for y in s..s + t {
                    g.add_edge(x, y);
                }
            }
            for y in s..s + t - 1 {
                g.add_edge(z, y);
            }
            for w in s + t..z {
                g.add_edge(z, w);
            }
            g
        }
    })
}

/// A closed-form value for `dim_s(G ⋄ H)` together with its hypotheses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "claim", rename_all = "kebab-case")]
pub enum ClosedFormClaim {
    /// `K_{1,s} ⋄ K_{1,t}`; the larger star is taken as `s`.
    Stars { s: usize, t: usize },
    CycleComplements { s: usize, t: usize },
    Cycles { s: usize, t: usize },
    /// `K_{n,n}^{-M}(q, r) ⋄ H`.
    KnnMinusM { g: FamilySpec, h: FamilySpec },
    KnnMinusMPlain { n: usize, h: FamilySpec },
    KnnPair { g: FamilySpec, h: FamilySpec },
    KnnPlainPair { n: usize, m: usize },
    /// `P_5 ⋄ H`.
    P5 { h: FamilySpec },
    /// `P_5 ⋄ P_r` or `P_5 ⋄ C_r`.
    P5PathOrCycle { r: usize, cycle: bool },
    /// `K_{1,r} ⋄ H(s,t,q)`.
    StarHstq { r: usize, s: usize, t: usize, q: usize },
    /// `G ⋄ K_t`.
    CompleteFactor { g: FamilySpec, t: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Prediction {
    Valid(usize),
    Invalid(String),
}

impl Prediction {
    pub fn value(&self) -> Option<usize> {
        match self {
            Prediction::Valid(v) => Some(*v),
            Prediction::Invalid(_) => None,
        }
    }
}

impl ClosedFormClaim {
    pub fn tag(&self) -> &'static str {
        match self {
            ClosedFormClaim::Stars { .. } => "stars",
            ClosedFormClaim::CycleComplements { .. } => "cycle-complements",
            ClosedFormClaim::Cycles { .. } => "cycles",
            ClosedFormClaim::KnnMinusM { .. } => "knn-minus-m",
            ClosedFormClaim::KnnMinusMPlain { .. } => "knn-minus-m-plain",
            ClosedFormClaim::KnnPair { .. } => "knn-pair",
            ClosedFormClaim::KnnPlainPair { .. } => "knn-plain-pair",
            ClosedFormClaim::P5 { .. } => "p5",
            ClosedFormClaim::P5PathOrCycle { .. } => "p5-path-or-cycle",
            ClosedFormClaim::StarHstq { .. } => "star-hstq",
            ClosedFormClaim::CompleteFactor { .. } => "complete-factor",
        }
    }

    /// The two factors, `G` first.
    pub fn factors(&self) -> (FamilySpec, FamilySpec) {
        use FamilySpec::*;
        match self {
            ClosedFormClaim::Stars { s, t } => (Star { s: *s.max(t) }, Star { s: *s.min(t) }),
            ClosedFormClaim::CycleComplements { s, t } => {
                (Cycle { n: *s }.complement(), Cycle { n: *t }.complement())
            }
            ClosedFormClaim::Cycles { s, t } => (Cycle { n: *s }, Cycle { n: *t }),
            ClosedFormClaim::KnnMinusM { g, h } | ClosedFormClaim::KnnPair { g, h } => (g.clone(), h.clone()),
            ClosedFormClaim::KnnMinusMPlain { n, h } => (FamilySpec::knn_minus_m(*n), h.clone()),
            ClosedFormClaim::KnnPlainPair { n, m } => (FamilySpec::knn_minus_m(*n), FamilySpec::knn_minus_m(*m)),
            ClosedFormClaim::P5 { h } => (Path { n: 5 }, h.clone()),
            ClosedFormClaim::P5PathOrCycle { r, cycle } => {
                (Path { n: 5 }, if *cycle { Cycle { n: *r } } else { Path { n: *r } })
            }
            ClosedFormClaim::StarHstq { r, s, t, q } => (Star { s: *r }, Hstq { s: *s, t: *t, q: *q }),
            ClosedFormClaim::CompleteFactor { g, t } => (g.clone(), Complete { n: *t }),
        }
    }

    pub fn id(&self) -> String {
        let (g, h) = self.factors();
        format!("{}:{g}*{h}", self.tag())
    }
}

struct Invalid(String);

impl From<Error> for Invalid {
    fn from(e: Error) -> Self {
        Invalid(e.to_string())
    }
}

fn hyp(ok: bool, msg: &str) -> std::result::Result<(), Invalid> {
    if ok {
        Ok(())
    } else {
        Err(Invalid(msg.to_string()))
    }
}

/// `(n, [t_i(G)])` of a `KnnMinusM` spec.
fn knn_blocks(spec: &FamilySpec) -> std::result::Result<(usize, Vec<usize>), Invalid> {
    match spec {
        FamilySpec::KnnMinusM { n, q, r } => {
            generate(spec)?;
            Ok((*n, q.iter().zip(r).map(|(a, b)| a + b).collect()))
        }
        _ => Err(Invalid("factor must be a K_{n,n}-M family".into())),
    }
}

/// `(sum t_j(H), k(H))` for `H` without a universal vertex.
fn twin_block_terms(h: &Graph) -> std::result::Result<(usize, usize), Invalid> {
    hyp(
        classify(h).universal_vertices.is_empty(),
        "H must have no universal vertex",
    )?;
    let order = twin_ordering(h)?;
    Ok((order.sizes().iter().sum(), order.k()))
}

pub fn predicted_dims(claim: &ClosedFormClaim) -> Prediction {
    match predict(claim) {
        Ok(v) => Prediction::Valid(v),
        Err(Invalid(why)) => Prediction::Invalid(why),
    }
}

fn predict(claim: &ClosedFormClaim) -> std::result::Result<usize, Invalid> {
    Ok(match *claim {
        ClosedFormClaim::Stars { s, t } => {
            let (s, t) = (s.max(t), s.min(t));
            hyp(t >= 2, "stars need s >= t >= 2")?;
            if t == 2 {
                s * t + s - 1
            } else {
                s * t + s
            }
        }
        ClosedFormClaim::CycleComplements { s, t } => {
            hyp(s >= 5 && t >= 5, "cycle complements need s, t >= 5")?;
            if s == 5 && t == 5 {
                20
            } else {
                s * t - (s / 2) * (t / 2)
            }
        }
        ClosedFormClaim::Cycles { s, t } => {
            hyp(s >= 7 && t >= 7, "cycles need s, t >= 7")?;
            let m = s.min(t);
            let r = match m % 3 {
                0 | 1 => 0,
                _ if s == t => 1,
                _ => 2,
            };
            s * t - 4 * (s / 3).min(t / 3) - r
        }
        ClosedFormClaim::KnnMinusM { ref g, ref h } => {
            let (n, tg) = knn_blocks(g)?;
            hyp(n >= 3, "K_{n,n}-M needs n >= 3")?;
            let (sum_h, k) = twin_block_terms(&generate(h)?)?;
            tg.iter().map(|ti| ti * sum_h).sum::<usize>() - n * k
        }
        ClosedFormClaim::KnnMinusMPlain { n, ref h } => {
            hyp(n >= 3, "K_{n,n}-M needs n >= 3")?;
            let (sum_h, k) = twin_block_terms(&generate(h)?)?;
            2 * n * sum_h - n * k
        }
        ClosedFormClaim::KnnPair { ref g, ref h } => {
            let (n, tg) = knn_blocks(g)?;
            let (m, th) = knn_blocks(h)?;
            hyp(n >= 3 && m >= 3, "both K_{n,n}-M factors need n, m >= 3")?;
            let sum_h: usize = th.iter().sum();
            tg.iter().map(|ti| ti * sum_h).sum::<usize>() - n * m
        }
        ClosedFormClaim::KnnPlainPair { n, m } => {
            hyp(n >= 3 && m >= 3, "both K_{n,n}-M factors need n, m >= 3")?;
            3 * n * m
        }
        ClosedFormClaim::P5 { ref h } => {
            let hg = generate(h)?;
            hyp(
                !twin_classes(&hg, TwinKind::Closed).has_distinct_twins(),
                "H must have no distinct twins",
            )?;
            let (sum_h, k) = twin_block_terms(&hg)?;
            let co_minus = minus_graphs(&hg).co_minus;
            let cover = min_vertex_cover(&co_minus, DEFAULT_BUDGET);
            hyp(cover.optimal, "cover number of the co-minus graph not proven")?;
            4 * sum_h - 2 * k + cover.size
        }
        ClosedFormClaim::P5PathOrCycle { r, .. } => {
            hyp(r >= 7, "needs r >= 7")?;
            3 * r - 2
        }
        ClosedFormClaim::StarHstq { r, s, t, q } => {
            hyp(r >= 3 && q >= 3 && s >= 4 && t >= 4, "needs r, q >= 3 and s, t >= 4")?;
            let b = star_hstq_b(r, s, t, q).ok_or_else(|| Invalid("no row of the b-table applies".into()))?;
            (s + t + q - 1) * r + r + q + s + t - b
        }
        ClosedFormClaim::CompleteFactor { ref g, t } => {
            hyp(t >= 1, "K_t needs t >= 1")?;
            let gg = generate(g)?;
            hyp(!gg.is_complete(), "G must not be complete")?;
            hyp(gg.is_connected(), "G must be connected")?;
            (t - 1) * gg.n() + strong_metric_dimension(&gg)?
        }
    })
}

/// The correction term for `K_{1,r} ⋄ H(s,t,q)`, rows tried top to bottom.
pub fn star_hstq_b(r: usize, s: usize, t: usize, q: usize) -> Option<usize> {
    let m_s = s.min(r.saturating_sub(q));
    let m_t = (t - 1).min(r.saturating_sub(q));
    if r <= q + 1 {
        Some(r + 2)
    } else if r == q + 2 || (r >= q + 3 && (s + 1).max(t) >= r) {
        Some(r + 1)
    } else if r >= q + 3 && t <= s && s < r - 1 {
        Some(q + m_s)
    } else if r >= q + 3 && s < t && t < r {
        Some(q + m_t)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{gamma_pairs, is_gamma_pair, p_set};

    fn valid(c: ClosedFormClaim) -> usize {
        predicted_dims(&c).value().unwrap_or_else(|| panic!("{c:?} rejected"))
    }

    #[test]
    fn small_hstq_members() {
        let p4 = generate(&FamilySpec::Hstq { s: 1, t: 2, q: 0 }).unwrap();
        assert_eq!(p4.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        assert!(p4.is_connected() && (0..4).filter(|&v| p4.degree(v) == 1).count() == 2);
        let p5 = generate(&FamilySpec::Hstq { s: 1, t: 2, q: 1 }).unwrap();
        let mut degs: Vec<usize> = (0..5).map(|v| p5.degree(v)).collect();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 2, 2, 2]);
        assert!(p5.is_connected() && p5.edge_count() == 4);
        assert!(generate(&FamilySpec::Hstq { s: 0, t: 2, q: 0 }).is_err());
        assert!(generate(&FamilySpec::Hstq { s: 1, t: 1, q: 0 }).is_err());
    }

    #[test]
    fn hstq_structure() {
        let (s, t, q) = (4, 4, 3);
        let h = generate(&FamilySpec::Hstq { s, t, q }).unwrap();
        let (yt, z) = (s + t - 1, s + t + q);
        assert!(is_gamma_pair(&h, yt, z));
        let open = twin_classes(&h, TwinKind::Open);
        let class_of = |v| open.classes[open.class_of(v)].clone();
        assert_eq!(class_of(0), (0..s).collect::<Vec<_>>());
        assert_eq!(class_of(s), (s..s + t - 1).collect::<Vec<_>>());
        assert_eq!(class_of(s + t), (s + t..s + t + q).collect::<Vec<_>>());
        assert!(!twin_classes(&h, TwinKind::Closed).has_distinct_twins());
    }

    #[test]
    fn knn_minus_m_structure() {
        let c6 = generate(&FamilySpec::knn_minus_m(3)).unwrap();
        assert!((0..6).all(|v| c6.degree(v) == 2) && c6.is_connected());
        let spec = FamilySpec::KnnMinusM {
            n: 3,
            q: vec![2, 1, 3],
            r: vec![1, 2, 1],
        };
        let g = generate(&spec).unwrap();
        assert_eq!(p_set(&g).len(), g.n());
        assert_eq!(twin_ordering(&g).unwrap().sizes(), vec![3, 3, 4]);
        assert!(!gamma_pairs(&g).is_empty());
        assert!(generate(&FamilySpec::KnnMinusM { n: 2, q: vec![1], r: vec![1, 1] }).is_err());
        assert!(generate(&FamilySpec::KnnMinusM { n: 2, q: vec![0, 1], r: vec![1, 1] }).is_err());
    }

    #[test]
    fn params_round_trip() {
        assert_eq!(FamilySpec::from_params("cycle", &[7]).unwrap(), FamilySpec::Cycle { n: 7 });
        assert_eq!(
            FamilySpec::from_params("co-cycle", &[5]).unwrap(),
            FamilySpec::Cycle { n: 5 }.complement()
        );
        assert_eq!(FamilySpec::from_params("knn-minus-m", &[3]).unwrap(), FamilySpec::knn_minus_m(3));
        assert!(FamilySpec::from_params("knn-minus-m", &[3, 1]).is_err());
        assert!(FamilySpec::from_params("wheel", &[5]).is_err());
        let json = serde_json::to_string(&FamilySpec::Hstq { s: 4, t: 4, q: 3 }).unwrap();
        assert_eq!(json, r#"{"family":"hstq","s":4,"t":4,"q":3}"#);
    }

    #[test]
    fn predictions() {
        assert_eq!(valid(ClosedFormClaim::Stars { s: 3, t: 2 }), 8);
        assert_eq!(valid(ClosedFormClaim::Stars { s: 4, t: 3 }), 16);
        assert_eq!(valid(ClosedFormClaim::CycleComplements { s: 5, t: 6 }), 24);
        assert_eq!(valid(ClosedFormClaim::CycleComplements { s: 5, t: 5 }), 20);
        assert_eq!(valid(ClosedFormClaim::Cycles { s: 7, t: 7 }), 41);
        assert_eq!(valid(ClosedFormClaim::Cycles { s: 7, t: 8 }), 48);
        assert_eq!(valid(ClosedFormClaim::Cycles { s: 8, t: 8 }), 55);
        assert_eq!(valid(ClosedFormClaim::Cycles { s: 8, t: 9 }), 62);
        assert_eq!(valid(ClosedFormClaim::KnnPlainPair { n: 3, m: 3 }), 27);
        let k33 = FamilySpec::knn_minus_m(3);
        assert_eq!(valid(ClosedFormClaim::KnnPair { g: k33.clone(), h: k33.clone() }), 27);
        assert_eq!(
            valid(ClosedFormClaim::KnnMinusM { g: k33.clone(), h: FamilySpec::Cycle { n: 7 } }),
            21
        );
        assert_eq!(valid(ClosedFormClaim::KnnMinusMPlain { n: 3, h: FamilySpec::Cycle { n: 7 } }), 21);
        assert_eq!(valid(ClosedFormClaim::P5PathOrCycle { r: 7, cycle: true }), 19);
        assert_eq!(valid(ClosedFormClaim::P5 { h: FamilySpec::Cycle { n: 7 } }), 19);
        assert_eq!(valid(ClosedFormClaim::P5 { h: FamilySpec::Path { n: 7 } }), 19);
        assert_eq!(valid(ClosedFormClaim::StarHstq { r: 3, s: 4, t: 4, q: 3 }), 39);
        assert_eq!(valid(ClosedFormClaim::CompleteFactor { g: FamilySpec::Path { n: 4 }, t: 2 }), 5);
    }

    #[test]
    fn invalid_parameters_are_named() {
        for c in [
            ClosedFormClaim::Stars { s: 3, t: 1 },
            ClosedFormClaim::CycleComplements { s: 4, t: 6 },
            ClosedFormClaim::Cycles { s: 6, t: 9 },
            ClosedFormClaim::KnnPlainPair { n: 2, m: 3 },
            ClosedFormClaim::P5 { h: FamilySpec::Star { s: 3 } },
            ClosedFormClaim::P5 { h: FamilySpec::CliqueUnion { sizes: vec![2, 3] } },
            ClosedFormClaim::P5PathOrCycle { r: 6, cycle: false },
            ClosedFormClaim::StarHstq { r: 3, s: 3, t: 4, q: 3 },
            ClosedFormClaim::CompleteFactor { g: FamilySpec::Complete { n: 3 }, t: 2 },
            ClosedFormClaim::KnnMinusM { g: FamilySpec::Cycle { n: 6 }, h: FamilySpec::Cycle { n: 7 } },
        ] {
            assert!(matches!(predicted_dims(&c), Prediction::Invalid(_)), "{c:?}");
        }
    }

    #[test]
    fn b_table_rows() {
        assert_eq!(star_hstq_b(3, 4, 4, 3), Some(5));
        assert_eq!(star_hstq_b(5, 4, 4, 3), Some(6));
        assert_eq!(star_hstq_b(7, 6, 4, 3), Some(8));
        assert_eq!(star_hstq_b(7, 5, 4, 3), Some(3 + 4));
        // t <= s < r - 1
        assert_eq!(star_hstq_b(9, 5, 4, 3), Some(3 + 5));
        // s < t < r
        assert_eq!(star_hstq_b(9, 4, 6, 3), Some(3 + 5));
    }

    #[test]
    fn claim_ids_and_json() {
        let c = ClosedFormClaim::Cycles { s: 7, t: 8 };
        assert_eq!(c.id(), "cycles:C7*C8");
        let back: ClosedFormClaim = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
        assert_eq!(back, c);
        let parsed: ClosedFormClaim =
            serde_json::from_str(r#"{"claim":"p5","h":{"family":"path","n":7}}"#).unwrap();
        assert_eq!(parsed.factors().1, FamilySpec::Path { n: 7 });
    }
}
