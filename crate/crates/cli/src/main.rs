use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use modprod::audit::{self, Audit};
use modprod::corpus::{random_graphs, random_pairs, small_pairs, DEFAULT_SEED};
use modprod::dims::{strong_metric_dimension_modular, strong_metric_dimension_with, DimsRoute};
use modprod::families::{generate, ClosedFormClaim, FamilySpec};
use modprod::graph::{all_pairs_distances, classify};
use modprod::metric::{ModularMetric, StandardMetric};
use modprod::srg::{srg_dispatch, srg_oracle, SrgGraph};
use modprod::structure::{boundary_vertices, gamma_pairs, minus_graphs, p_set, twin_classes, TwinKind};
use modprod::vc::{SolverOptions, DEFAULT_BUDGET};
use modprod::verify::{suite, verify_all, ClaimReport, VerifyOptions, DEFAULT_MAX_PRODUCT};
use modprod::{build_product, Error, Graph, PairCode, ProductKind};

const SCHEMA: u32 = 1;

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_NON_OPTIMAL: u8 = 3;

/// Graph products, strong resolving graphs and strong metric dimension.
#[derive(Parser, Serialize, Debug)]
#[command(name = "modprod", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for random corpora.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "kebab-case", tag = "command")]
enum Command {
    /// Build a product graph and write it as an edge list.
    Product {
        #[arg(long)]
        kind: ProductKind,
        #[command(flatten)]
        factors: Factors,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form distances next to BFS on the built product.
    Dist {
        #[arg(long, default_value = "modular")]
        kind: ProductKind,
        #[command(flatten)]
        factors: Factors,
        /// One pair of product vertices: g h g' h'.
        #[arg(long, num_args = 4, value_names = ["G", "H", "G2", "H2"])]
        pair: Option<Vec<usize>>,
        /// Every unordered pair of product vertices.
        #[arg(long)]
        all: bool,
    },
    /// Twin classes, γ-pairs, boundary and universal vertices of one graph.
    Analyze {
        #[arg(long)]
        g: PathBuf,
    },
    /// Strong resolving graph of G, or of G ⋄ H when --h is given.
    Srg {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        /// Edge list output; reasons go to `<out>.reasons.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Strong metric dimension of G, or of G ⋄ H when --h is given.
    Dims {
        #[arg(long)]
        g: PathBuf,
        #[arg(long)]
        h: Option<PathBuf>,
        #[command(flatten)]
        solver: Solver,
    },
    /// Write a member of a named family as an edge list.
    Gen {
        /// path, cycle, complete, star, empty, clique-union, knn-minus-m, hstq,
        /// or any of these prefixed with `co-`.
        #[arg(long)]
        family: String,
        #[arg(long, num_args = 1.., value_delimiter = ',')]
        params: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check closed-form claims against the computed dimension.
    Verify {
        /// `reference` (alias `paper`) or `small`.
        #[arg(long, conflicts_with = "claim", required_unless_present = "claim")]
        suite: Option<String>,
        /// A claim as JSON, inline or as a file path.
        #[arg(long)]
        claim: Option<String>,
        /// Largest product to build.
        #[arg(long, default_value_t = DEFAULT_MAX_PRODUCT)]
        max_product: usize,
        /// Write the per-claim JSON reports here.
        #[arg(long)]
        report: Option<PathBuf>,
        /// Print the JSON report instead of the table.
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        solver: Solver,
    },
    /// Small-corpus audits of the distance formulas, SRG builders, twin
    /// predicate and solver.
    Selftest {
        /// Random factor pairs added to the exhaustive corpus.
        #[arg(long, default_value_t = 100)]
        random: usize,
    },
}

#[derive(Args, Serialize, Debug)]
struct Factors {
    #[arg(long)]
    g: PathBuf,
    #[arg(long)]
    h: PathBuf,
}

#[derive(Args, Serialize, Debug, Clone, Copy)]
struct Solver {
    /// Solver budget in seconds.
    #[arg(long, default_value_t = DEFAULT_BUDGET.as_secs_f64())]
    budget: f64,
    /// Return the lexicographically smallest optimal witness.
    #[arg(long)]
    canonical: bool,
}

impl Solver {
    fn options(self) -> anyhow::Result<SolverOptions> {
        let budget = Duration::try_from_secs_f64(self.budget).context("--budget must be a non-negative number")?;
        Ok(SolverOptions {
            budget,
            canonical: self.canonical,
        })
    }
}

#[derive(ValueEnum, Serialize, Debug, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
enum Method {
    Oracle,
    Auto,
}

fn read_graph(path: &Path) -> anyhow::Result<Graph> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Graph::parse_edge_list(&text).with_context(|| format!("{}", path.display()))
}

/// Writes to stdout; a closed pipe on the reading side is not an error.
fn stdout(text: &str) -> anyhow::Result<()> {
    match io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => Ok(()),
        r => Ok(r?),
    }
}

fn emit(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => stdout(text),
    }
}

fn print_json(v: &Value) -> anyhow::Result<()> {
    stdout(&(serde_json::to_string_pretty(v)? + "\n"))
}

fn pairs_of(code: &PairCode, vs: &[usize]) -> Vec<(usize, usize)> {
    vs.iter().map(|&v| code.decode(v)).collect()
}

fn product(kind: ProductKind, pair: &Factors, out: Option<&Path>) -> anyhow::Result<u8> {
    let (g, h) = (read_graph(&pair.g)?, read_graph(&pair.h)?);
    emit(out, &build_product(kind, &g, &h).to_edge_list())?;
    Ok(0)
}

fn dist(config: &Cli, kind: ProductKind, pair: &Factors, one: Option<&[usize]>, all: bool) -> anyhow::Result<u8> {
    let (g, h) = (read_graph(&pair.g)?, read_graph(&pair.h)?);
    let code = PairCode::new(&g, &h);
    let bfs = all_pairs_distances(&build_product(kind, &g, &h));
    let modular = (kind == ProductKind::Modular).then(|| ModularMetric::new(&g, &h));
    let standard = StandardMetric::new(kind, &g, &h).ok();
    let targets: Vec<(usize, usize)> = match (one, all) {
        (Some([a, b, c, d]), false) => {
            if *a >= g.n() || *c >= g.n() || *b >= h.n() || *d >= h.n() {
                bail!("--pair vertex out of range");
            }
            vec![(code.encode(*a, *b), code.encode(*c, *d))]
        }
        (None, true) => (0..code.len()).flat_map(|u| (u..code.len()).map(move |v| (u, v))).collect(),
        _ => bail!("give exactly one of --pair or --all"),
    };
    let mut mismatches = 0;
    let records: Vec<Value> = targets
        .into_iter()
        .map(|(u, v)| {
            let (a, b) = (code.decode(u), code.decode(v));
            let (closed, tag) = if let Some(m) = &modular {
                let c = m.distance(a, b);
                (Some(c.value), json!(c.tag))
            } else if let Some(s) = &standard {
                (Some(s.distance(a, b)), json!(kind))
            } else {
                (None, Value::Null)
            };
            let truth = bfs.get(u, v);
            if closed.is_some_and(|c| c != truth) {
                mismatches += 1;
            }
            json!({"pair": [[a.0, a.1], [b.0, b.1]], "closed_form": closed, "bfs": truth, "case_tag": tag})
        })
        .collect();
    print_json(&json!({"schema": SCHEMA, "config": config, "kind": kind, "records": records, "mismatches": mismatches}))?;
    Ok(if mismatches == 0 { 0 } else { EXIT_MISMATCH })
}

fn analyze(config: &Cli, path: &Path) -> anyhow::Result<u8> {
    let g = read_graph(path)?;
    let class = classify(&g);
    let minus = minus_graphs(&g);
    let back = |x: &Graph| -> Vec<(usize, usize)> {
        x.edges().into_iter().map(|(u, v)| (minus.vertices[u], minus.vertices[v])).collect()
    };
    let boundary = match boundary_vertices(&g) {
        Ok(b) => Some(b),
        Err(Error::Disconnected) => None,
        Err(e) => return Err(e.into()),
    };
    print_json(&json!({
        "schema": SCHEMA,
        "config": config,
        "n": g.n(),
        "m": g.edge_count(),
        "class": class,
        "twin_classes": twin_classes(&g, TwinKind::Closed).classes,
        "false_twin_classes": twin_classes(&g, TwinKind::Open).classes,
        "gamma_pairs": gamma_pairs(&g),
        "gp": {"vertices": p_set(&g), "edges": gamma_pairs(&g).len()},
        "minus": {"vertices": minus.vertices, "edges": back(&minus.minus), "complement_edges": back(&minus.co_minus)},
        "boundary_vertices": boundary,
        "universal_vertices": class.universal_vertices,
    }))?;
    Ok(0)
}

fn reasons_json(config: &Cli, srg: &SrgGraph, extra: Value) -> Value {
    let edges: Vec<Value> = srg
        .edges
        .iter()
        .map(|(&(u, v), r)| json!({"u": u, "v": v, "reason": r}))
        .collect();
    json!({"schema": SCHEMA, "config": config, "n": srg.n, "edge_count": srg.edge_count(), "edges": edges, "route": extra})
}

fn srg(config: &Cli, g: &Path, h: Option<&Path>, method: Method, out: Option<&Path>) -> anyhow::Result<u8> {
    let g = read_graph(g)?;
    let (srg, route, code) = match h {
        None => (srg_oracle(&g)?, json!("oracle"), 0),
        Some(h) => {
            let h = read_graph(h)?;
            if method == Method::Oracle {
                (srg_oracle(&build_product(ProductKind::Modular, &g, &h))?, json!("oracle"), 0)
            } else {
                let d = srg_dispatch(&g, &h)?;
                let agrees = d.agrees();
                let code = if agrees == Some(false) { EXIT_MISMATCH } else { 0 };
                let route = json!({"builder": d.route, "agrees_with_oracle": agrees});
                (d.specialized.unwrap_or(d.srg), route, code)
            }
        }
    };
    emit(out, &srg.to_graph().to_edge_list())?;
    if let Some(out) = out {
        let mut side = out.as_os_str().to_owned();
        side.push(".reasons.json");
        fs::write(&side, serde_json::to_string_pretty(&reasons_json(config, &srg, route))?)?;
    }
    Ok(code)
}

fn dims(config: &Cli, g: &Path, h: Option<&Path>, solver: Solver) -> anyhow::Result<u8> {
    let opts = solver.options()?;
    let g = read_graph(g)?;
    let report = match h {
        None => {
            let r = strong_metric_dimension_with(&g, &opts)?;
            json!({
                "dims": r.size, "witness": r.witness, "optimal": r.optimal,
                "lower_bound": r.lower_bound, "elapsed": r.elapsed.as_secs_f64(),
                "nodes_explored": r.nodes_explored,
            })
        }
        Some(h) => {
            let h = read_graph(h)?;
            let r = strong_metric_dimension_modular(&g, &h, &opts)?;
            let code = PairCode::new(&g, &h);
            let route = match r.route {
                DimsRoute::CompleteFactor => json!("complete-factor"),
                DimsRoute::Pipeline(s) => json!(s),
            };
            json!({
                "dims": r.cover.size, "witness": pairs_of(&code, &r.cover.witness),
                "optimal": r.cover.optimal, "lower_bound": r.cover.lower_bound,
                "elapsed": r.cover.elapsed.as_secs_f64(), "nodes_explored": r.cover.nodes_explored,
                "product_n": r.product_n, "route": route, "srg": r.srg,
            })
        }
    };
    let optimal = report["optimal"].as_bool() == Some(true);
    let mut full = json!({"schema": SCHEMA});
    let obj = full.as_object_mut().unwrap();
    obj.extend(report.as_object().unwrap().clone());
    obj.insert("config".into(), json!(config));
    print_json(&full)?;
    Ok(if optimal { 0 } else { EXIT_NON_OPTIMAL })
}

fn gen(family: &str, params: &[usize], out: Option<&Path>) -> anyhow::Result<u8> {
    let spec = FamilySpec::from_params(family, params)?;
    emit(out, &generate(&spec)?.to_edge_list())?;
    Ok(0)
}

fn parse_claim(arg: &str) -> anyhow::Result<ClosedFormClaim> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))?
    };
    serde_json::from_str(&text).context("parsing claim JSON")
}

fn status(r: &ClaimReport) -> &'static str {
    match (r.matched, r.optimal) {
        (true, _) => "match",
        (false, true) => "MISMATCH",
        (false, false) => "non-optimal",
    }
}

fn verify(config: &Cli, name: Option<&str>, claim: Option<&str>, max_product: usize, report: Option<&Path>, as_json: bool, solver: Solver) -> anyhow::Result<u8> {
    let claims = match (name, claim) {
        (Some(n), _) => suite(n).with_context(|| format!("unknown suite `{n}` (reference, small)"))?,
        (None, Some(c)) => vec![parse_claim(c)?],
        (None, None) => bail!("give --suite or --claim"),
    };
    let opts = VerifyOptions {
        solver: solver.options()?,
        max_product,
    };
    let mut rows: Vec<(String, Result<ClaimReport, Error>)> = claims
        .iter()
        .zip(verify_all(&claims, &opts))
        .map(|(c, r)| (c.id(), r))
        .collect();
    rows.sort_by(|a, b| a.0.cmp(&b.0));

    let mut code = 0;
    let mut json_rows = Vec::new();
    let mut table = format!("{:<36} {:>9} {:>9} {:>8}  {}\n", "claim", "predicted", "computed", "seconds", "status");
    for (id, r) in &rows {
        match r {
            Ok(r) => {
                code = code.max(match status(r) {
                    "match" => 0,
                    "non-optimal" => EXIT_NON_OPTIMAL,
                    _ => EXIT_MISMATCH,
                });
                table.push_str(&format!(
                    "{id:<36} {:>9} {:>9} {:>8.2}  {}\n",
                    r.predicted,
                    r.computed,
                    r.elapsed_secs,
                    status(r)
                ));
                json_rows.push(serde_json::to_value(r)?);
            }
            Err(e) => {
                code = code.max(match e {
                    Error::BudgetExhausted => EXIT_NON_OPTIMAL,
                    _ => EXIT_USAGE,
                });
                table.push_str(&format!("{id:<36} {:>9} {:>9} {:>8}  error: {e}\n", "-", "-", "-"));
                json_rows.push(json!({"id": id, "error": e.to_string()}));
            }
        }
    }
    let doc = json!({"schema": SCHEMA, "config": config, "claims": json_rows});
    if let Some(p) = report {
        fs::write(p, serde_json::to_string_pretty(&doc)?).with_context(|| format!("writing {}", p.display()))?;
    }
    if as_json {
        print_json(&doc)?;
    } else {
        stdout(&table)?;
    }
    Ok(code)
}

fn selftest(seed: u64, random: usize) -> anyhow::Result<u8> {
    let mut pairs = small_pairs();
    pairs.extend(random_pairs(seed, random, 5));
    let graphs = random_graphs(seed, 60, 4, 18);
    let srg = audit::srg_builders(&pairs);
    let [a, b, c] = srg.all();
    let results: Vec<Audit> = vec![
        audit::modular_distances(&pairs),
        audit::standard_distances(&pairs),
        a.clone(),
        b.clone(),
        c.clone(),
        audit::srg_invariants(&pairs),
        audit::twin_predicate(&pairs),
        audit::no_false_twins(&pairs),
        audit::connectivity(&pairs),
        audit::solver(&graphs),
    ];
    let mut ok = true;
    for a in &results {
        ok &= a.passed();
        let mark = if a.passed() { "ok  " } else { "FAIL" };
        let mut text = format!("{mark} {:<20} {:>8} checks {:>4} failures\n", a.name, a.checked, a.failed);
        for f in &a.failures {
            text.push_str(&format!("       {f}\n"));
        }
        stdout(&text)?;
    }
    Ok(if ok { 0 } else { EXIT_MISMATCH })
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    if let Some(n) = cli.threads {
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    match &cli.command {
        Command::Product { kind, factors, out } => product(*kind, factors, out.as_deref()),
        Command::Dist { kind, factors, pair, all } => dist(cli, *kind, factors, pair.as_deref(), *all),
        Command::Analyze { g } => analyze(cli, g),
        Command::Srg { g, h, method, out } => srg(cli, g, h.as_deref(), *method, out.as_deref()),
        Command::Dims { g, h, solver } => dims(cli, g, h.as_deref(), *solver),
        Command::Gen { family, params, out } => gen(family, params, out.as_deref()),
        Command::Verify { suite, claim, max_product, report, json, solver } => verify(
            cli,
            suite.as_deref(),
            claim.as_deref(),
            *max_product,
            report.as_deref(),
            *json,
            *solver,
        ),
        Command::Selftest { random } => selftest(cli.seed, *random),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            let budget = matches!(e.downcast_ref::<Error>(), Some(Error::BudgetExhausted));
            ExitCode::from(if budget { EXIT_NON_OPTIMAL } else { EXIT_USAGE })
        }
    }
}
