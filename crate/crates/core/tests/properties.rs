use modprod::graph::{all_pairs_distances, parity_distances};
use modprod::metric::ModularMetric;
use modprod::products::{adjacent, modular_edge_type, modular_neighborhood};
use modprod::srg::{is_mmd, srg_oracle};
use modprod::structure::{are_twins, modular_twin_predicate};
use modprod::vc::{brute_force_vc, covers, min_vertex_cover, min_vertex_cover_with, SolverOptions, DEFAULT_BUDGET};
use modprod::{build_product, Dist, Graph, PairCode, ProductKind};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut it = bits.into_iter();
            for u in 0..n {
                for v in (u + 1)..n {
                    if it.next().unwrap() {
                        g.add_edge(u, v);
                    }
                }
            }
            g
        })
    })
}

fn connected_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    graph(max_n).prop_filter("connected", |g| g.is_connected())
}

fn relabeled(max_n: usize) -> impl Strategy<Value = (Graph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let ids: Vec<usize> = (0..g.n()).collect();
        (Just(g), Just(ids).prop_shuffle())
    })
}

const KINDS: [ProductKind; 6] = [
    ProductKind::Cartesian,
    ProductKind::Direct,
    ProductKind::Strong,
    ProductKind::Lexicographic,
    ProductKind::DirectCoDirect,
    ProductKind::Modular,
];

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 200,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    #[test]
    fn modular_distance_is_a_metric_and_matches_bfs(g in graph(5), h in graph(5)) {
        let m = ModularMetric::new(&g, &h);
        let code = PairCode::new(&g, &h);
        let bfs = all_pairs_distances(&build_product(ProductKind::Modular, &g, &h));
        let d = |u: usize, v: usize| m.distance(code.decode(u), code.decode(v)).value;
        for u in 0..code.len() {
            prop_assert_eq!(d(u, u), Dist::ZERO);
            for v in 0..code.len() {
                prop_assert_eq!(d(u, v), bfs.get(u, v));
                prop_assert_eq!(d(u, v), d(v, u));
                if m.is_general() && u != v {
                    prop_assert!((1..=3).contains(&d(u, v).get().unwrap()));
                }
                for w in 0..code.len() {
                    prop_assert!(d(u, w) <= d(u, v).plus(d(v, w)));
                }
            }
        }
    }

    #[test]
    fn parity_minimum_is_the_distance(g in graph(7)) {
        let d = all_pairs_distances(&g);
        let p = parity_distances(&g);
        for u in 0..g.n() {
            for v in 0..g.n() {
                let (o, e) = (p.odd.get(u, v), p.even.get(u, v));
                prop_assert_eq!(o.min(e), d.get(u, v));
                if let (Some(o), Some(e)) = (o.get(), e.get()) {
                    prop_assert!(o % 2 == 1 && e % 2 == 0);
                }
            }
        }
    }

    #[test]
    fn complement_is_an_involution(g in graph(8)) {
        let c = g.complement();
        prop_assert_eq!(c.complement(), g.clone());
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
    }

    #[test]
    fn products_commute_under_the_swap(g in graph(4), h in graph(4)) {
        let perm = PairCode::new(&g, &h).swap_permutation();
        for kind in KINDS {
            let gh = build_product(kind, &g, &h);
            let hg = build_product(kind, &h, &g);
            if kind == ProductKind::Lexicographic {
                prop_assert_eq!(gh.n(), hg.n());
            } else {
                prop_assert_eq!(gh.relabel(&perm), hg, "{:?}", kind);
            }
        }
    }

    #[test]
    fn modular_edge_types_partition_the_edges(g in graph(4), h in graph(4)) {
        let code = PairCode::new(&g, &h);
        let p = build_product(ProductKind::Modular, &g, &h);
        for u in 0..code.len() {
            for v in 0..code.len() {
                let (a, b) = (code.decode(u), code.decode(v));
                let t = modular_edge_type(&g, &h, a, b);
                prop_assert_eq!(t.is_some(), p.has_edge(u, v));
                let clauses = [ProductKind::Cartesian, ProductKind::Direct]
                    .iter()
                    .filter(|&&k| adjacent(k, &g, &h, a, b))
                    .count()
                    + usize::from(
                        adjacent(ProductKind::DirectCoDirect, &g, &h, a, b)
                            && !adjacent(ProductKind::Direct, &g, &h, a, b),
                    );
                prop_assert_eq!(clauses, usize::from(t.is_some()));
            }
        }
    }

    #[test]
    fn neighborhoods_and_twins_follow_the_factors(g in graph(4), h in graph(4)) {
        let code = PairCode::new(&g, &h);
        let p = build_product(ProductKind::Modular, &g, &h);
        for u in 0..code.len() {
            let (gu, hu) = code.decode(u);
            prop_assert_eq!(modular_neighborhood(&g, &h, gu, hu), p.closed_neighborhood(u));
            for v in 0..code.len() {
                let got = modular_twin_predicate(&g, &h, code.decode(u), code.decode(v));
                prop_assert_eq!(got, are_twins(&p, u, v));
            }
        }
    }

    #[test]
    fn srg_edges_are_exactly_the_mmd_pairs(g in connected_graph(7)) {
        let d = all_pairs_distances(&g);
        let srg = srg_oracle(&g).unwrap();
        for u in 0..g.n() {
            for v in (u + 1)..g.n() {
                prop_assert_eq!(srg.contains(u, v), is_mmd(&g, &d, u, v));
                prop_assert_eq!(is_mmd(&g, &d, u, v), is_mmd(&g, &d, v, u));
            }
        }
    }

    #[test]
    fn solver_agrees_with_brute_force(g in graph(14)) {
        let r = min_vertex_cover(&g, DEFAULT_BUDGET);
        prop_assert!(r.optimal);
        prop_assert!(covers(&g, &r.witness));
        prop_assert_eq!(r.size, brute_force_vc(&g).unwrap());
        prop_assert!(r.lower_bound <= r.size);
    }

    #[test]
    fn solver_is_deterministic_and_relabel_invariant((g, perm) in relabeled(12)) {
        let opts = SolverOptions { canonical: true, ..SolverOptions::default() };
        let a = min_vertex_cover_with(&g, &opts);
        let b = min_vertex_cover_with(&g, &opts);
        prop_assert_eq!(&a.witness, &b.witness);
        prop_assert_eq!(min_vertex_cover(&g.relabel(&perm), DEFAULT_BUDGET).size, a.size);
    }

    #[test]
    fn edge_lists_round_trip(g in graph(9)) {
        let text = g.to_edge_list();
        prop_assert_eq!(Graph::parse_edge_list(&text).unwrap(), g);
    }
}
