//! Acceptance suite. Prints one PASS/FAIL line per criterion.

use std::io::Write;
use std::time::{Duration, Instant};

use modprod::audit::{self, Audit};
use modprod::corpus::{random_graphs, random_pairs, small_pairs, DEFAULT_SEED};
use modprod::families::{generate, ClosedFormClaim, FamilySpec};
use modprod::metric::ModularMetric;
use modprod::srg::srg_oracle;
use modprod::verify::{reference_suite, time_limit, verify_claim, ClaimReport, VerifyOptions};
use modprod::{build_product, Graph, ProductKind};

const RANDOM_PAIRS: usize = 500;
const RANDOM_PAIR_MAX_N: usize = 6;
const SOLVER_GRAPHS: usize = 320;
const SOLVER_MAX_N: usize = 26;
const DISTANCE_LIMIT: Duration = Duration::from_secs(120);
const SRG_LIMIT: Duration = Duration::from_secs(300);

/// Values the closed forms must reproduce, in `reference_suite` order.
const EXPECTED: [(&str, usize); 14] = [
    ("stars:K1,3*K1,2", 8),
    ("stars:K1,4*K1,3", 16),
    ("cycle-complements:co(C5)*co(C5)", 20),
    ("cycle-complements:co(C5)*co(C6)", 24),
    ("cycles:C7*C7", 41),
    ("cycles:C7*C8", 48),
    ("cycles:C8*C8", 55),
    ("cycles:C8*C9", 62),
    ("knn-plain-pair:K3,3-M*K3,3-M", 27),
    ("knn-minus-m:K3,3-M*C7", 21),
    ("p5-path-or-cycle:P5*P7", 19),
    ("p5-path-or-cycle:P5*C7", 19),
    ("complete-factor:P4*K2", 5),
    ("star-hstq:K1,3*H(4,4,3)", 39),
];

struct Report {
    lines: Vec<String>,
    failed: Vec<u8>,
}

impl Report {
    fn criterion(&mut self, id: u8, ok: bool, summary: String) {
        let tag = if ok { "PASS" } else { "FAIL" };
        self.lines.push(format!("[{tag}] criterion {id}: {summary}"));
        if !ok {
            self.failed.push(id);
        }
    }

    fn detail(&mut self, s: String) {
        self.lines.push(format!("         {s}"));
    }

    fn audits(&mut self, audits: &[&Audit]) {
        for a in audits {
            self.detail(format!("{:<22} {:>9} checks {:>4} failures", a.name, a.checked, a.failed));
            for f in &a.failures {
                self.detail(format!("  {f}"));
            }
        }
    }
}

fn corpus() -> Vec<(Graph, Graph)> {
    let mut pairs = small_pairs();
    pairs.extend(random_pairs(DEFAULT_SEED, RANDOM_PAIRS, RANDOM_PAIR_MAX_N));
    pairs
}

fn criterion_1(rep: &mut Report) -> Vec<ClaimReport> {
    let opts = VerifyOptions::default();
    let suite = reference_suite();
    assert_eq!(suite.len(), EXPECTED.len());
    let mut ok = true;
    let mut reports = Vec::new();
    let mut details = Vec::new();
    for (claim, (id, want)) in suite.iter().zip(EXPECTED) {
        let limit = time_limit(claim);
        let start = Instant::now();
        let r = verify_claim(claim, &opts);
        let took = start.elapsed();
        match r {
            Ok(r) => {
                let good = r.id == id && r.matched && r.computed == want && took < limit;
                ok &= good;
                let cross = r.cross_check.map(|c| format!(" pipeline {c}")).unwrap_or_default();
                details.push(format!(
                    "{} {id:<34} predicted {:>3} computed {:>3}{cross} expected {want:>3} in {:.2}s (limit {}s)",
                    if good { "ok  " } else { "BAD " },
                    r.predicted,
                    r.computed,
                    took.as_secs_f64(),
                    limit.as_secs()
                ));
                reports.push(r);
            }
            Err(e) => {
                ok = false;
                details.push(format!("BAD  {id}: {e}"));
            }
        }
    }
    let complete = reports
        .iter()
        .find(|r| matches!(r.claim, ClosedFormClaim::CompleteFactor { .. }))
        .is_some_and(|r| r.product_n == 8 && r.cross_check == Some(5));
    ok &= complete;
    rep.criterion(
        1,
        ok,
        format!(
            "closed-form matrix, {} of {} claims exact within their limits, P4*K2 pipeline cross-check {}",
            reports.iter().filter(|r| r.matched).count(),
            EXPECTED.len(),
            if complete { "ok" } else { "missing" }
        ),
    );
    for d in details {
        rep.detail(d);
    }
    reports
}

fn criterion_2(rep: &mut Report, pairs: &[(Graph, Graph)]) {
    let start = Instant::now();
    let modular = audit::modular_distances(pairs);
    let standard = audit::standard_distances(pairs);
    let took = start.elapsed();
    let ok = modular.passed() && standard.passed() && took < DISTANCE_LIMIT;
    rep.criterion(
        2,
        ok,
        format!(
            "distance oracles on {} factor pairs, {} mismatches in {:.1}s (limit {}s)",
            pairs.len(),
            modular.failed + standard.failed,
            took.as_secs_f64(),
            DISTANCE_LIMIT.as_secs()
        ),
    );
    rep.audits(&[&modular, &standard]);
}

fn criterion_3(rep: &mut Report, pairs: &[(Graph, Graph)]) {
    let start = Instant::now();
    let srg = audit::srg_builders(pairs);
    let invariants = audit::srg_invariants(pairs);
    let took = start.elapsed();
    let ok = srg.passed() && invariants.passed() && took < SRG_LIMIT;
    let applicable: u64 = srg.all().iter().map(|a| a.checked).sum();
    let failed: u64 = srg.all().iter().map(|a| a.failed).sum();
    rep.criterion(
        3,
        ok,
        format!(
            "SRG builders vs MMD oracle, {applicable} applicable pairs, {failed} mismatches in {:.1}s (limit {}s)",
            took.as_secs_f64(),
            SRG_LIMIT.as_secs()
        ),
    );
    let [a, b, c] = srg.all();
    rep.audits(&[a, b, c, &invariants]);
    let p = &srg.gamma_case_printed;
    rep.detail(format!(
        "literal gamma-pair family list: {} of {} applicable pairs differ, {} not explained by twin x gamma-pair distance-3 edges",
        p.differing, p.applicable, p.unexplained
    ));
    for e in p.examples.iter().take(3) {
        rep.detail(format!("  {e}"));
    }
}

fn criterion_4(rep: &mut Report, pairs: &[(Graph, Graph)]) {
    let twins = audit::no_false_twins(pairs);
    let predicate = audit::twin_predicate(pairs);
    let conn = audit::connectivity(pairs);
    let ok = twins.passed() && predicate.passed() && conn.passed();
    rep.criterion(
        4,
        ok,
        format!(
            "structural predicates on {} factor pairs, {} exceptions",
            pairs.len(),
            twins.failed + predicate.failed + conn.failed
        ),
    );
    rep.audits(&[&twins, &predicate, &conn]);
}

fn fits_guard(g: &Graph) -> bool {
    (0..g.n()).filter(|&v| g.degree(v) > 0).count() <= SOLVER_MAX_N
}

fn criterion_5(rep: &mut Report, pairs: &[(Graph, Graph)]) {
    let random = random_graphs(DEFAULT_SEED, SOLVER_GRAPHS, 8, SOLVER_MAX_N);
    let mut srgs: Vec<Graph> = pairs
        .iter()
        .filter(|(g, h)| ModularMetric::new(g, h).connected())
        .filter_map(|(g, h)| srg_oracle(&build_product(ProductKind::Modular, g, h)).ok())
        .map(|s| s.to_graph())
        .collect();
    let from_matrix: Vec<Graph> = reference_suite()
        .iter()
        .map(|c| {
            let (gs, hs) = c.factors();
            let (g, h) = (generate(&gs).unwrap(), generate(&hs).unwrap());
            srg_oracle(&build_product(ProductKind::Modular, &g, &h)).unwrap().to_graph()
        })
        .chain([srg_oracle(&generate(&FamilySpec::Path { n: 4 }).unwrap()).unwrap().to_graph()])
        .filter(fits_guard)
        .collect();
    let matrix_fit = from_matrix.len();
    srgs.extend(from_matrix);
    srgs.retain(fits_guard);
    let mut random_audit = audit::solver(&random);
    random_audit.name = "solver-random".into();
    let mut srg_audit = audit::solver(&srgs);
    srg_audit.name = "solver-srg".into();
    let ok = random.len() >= 300 && random.iter().all(fits_guard) && random_audit.passed() && srg_audit.passed();
    rep.criterion(
        5,
        ok,
        format!(
            "solver vs brute force on {} random graphs and {} SRGs ({} from the matrix), {} failures",
            random.len(),
            srgs.len(),
            matrix_fit,
            random_audit.failed + srg_audit.failed
        ),
    );
    rep.audits(&[&random_audit, &srg_audit]);
}

fn criterion_6(rep: &mut Report, reports: &[ClaimReport]) {
    let exact = reports
        .iter()
        .zip(EXPECTED)
        .filter(|(r, (id, want))| r.id == *id && r.computed == *want && r.optimal)
        .count();
    rep.criterion(
        6,
        exact == EXPECTED.len(),
        format!("{exact} of {} values reproduced at their stated sizes, no scaled substitutes", EXPECTED.len()),
    );
}

#[test]
fn acceptance() {
    let mut rep = Report {
        lines: Vec::new(),
        failed: Vec::new(),
    };
    let pairs = corpus();
    let reports = criterion_1(&mut rep);
    criterion_2(&mut rep, &pairs);
    criterion_3(&mut rep, &pairs);
    criterion_4(&mut rep, &pairs);
    criterion_5(&mut rep, &pairs);
    criterion_6(&mut rep, &reports);
    // bypasses the harness capture
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "\n{}", rep.lines.join("\n"));
    assert!(rep.failed.is_empty(), "failed criteria: {:?}", rep.failed);
}
