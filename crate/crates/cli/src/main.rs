use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use turanlab::verify::generators;
use turanlab::{
    check_dense_hom_bound, check_duplication_gain, check_edge_loss_bound,
    check_extension_bound, check_furedi, check_rebalance, check_rpartite, check_vertex_bounds,
    check_xyp, count_json, certify_turan_good_at, enumerate_graphs, parse_graph6, search_extremal,
    transform_trace, turan_graph, write_graph6, BigCount, FastCount, Graph, GraphSource, LemmaId,
    LemmaReport, PartialMap, PatternGraph, Rat, SearchResult, VerifyError,
};

const LEMMA_HELP: &str = "\
Lemma ids and the inequality each one checks (all arithmetic exact; δ is
the least density deficit of the host, n = v(G)):

  lowerbound     every partial injective homomorphism into a δ-dense G
                 extends in at least (1 − δ·k·v(H))·n^k ways, where k is
                 the number of free pattern vertices
  dense-hom      ii(H,G) ≥ (1 − δ·v(H)²)·n^{v(H)} for δ-dense G
  xyp            (1−x)·(1−y)^p ≥ 1 − x − p·y for rationals x,y ≥ 0 and
                 integer p ≥ 0
  rebalance      for disjoint fully joined independent sets A, B with
                 |A| ≥ |B| ≥ 1 in a δ-dense G, δ ≤ 1/4:
                 ii(H,G−a) ≥ ii(H,G−b) + 2·e(H)·(|A|−|B|)·(1 − 3δ·v(H)³)·n^{v(H)−2}
  rpartite       ii(H,T_r(n)) − ii(H,G) ≥ 2·e(H)·(1 − 3δ·v(H)³)·(e(T_r(n)) − e(G))·n^{v(H)−2}
                 for r-partite δ-dense G, δ ≤ 1/4
  furedi         every K_{r+1}-free G keeps an r-partite subgraph G0 with
                 e(G) − e(G0) ≤ e(T_r(n)) − e(G); checked with the exact
                 minimum edge loss
  vertex-bounds  (a) max_v ii(v) ≥ (v(H)/n)·ii(H,G), and (b) for the given
                 v: ii(v) ≤ v(H)·n^{v(H)−1} − (n − deg v)·n^{v(H)−2}
  duplication    replacing v by a clone of v0 keeps
                 ii(H,G') ≥ ii(H,G) − ii(v) + ii(v0) − v(H)²·n^{v(H)−2}
  edge-loss      for a spanning subgraph G0 of G:
                 ii(H,G0) ≥ ii(H,G) − 2·e(H)·(e(G) − e(G0))·n^{v(H)−2}

Without explicit-instance flags, instances come from the seeded
generators (--instances, --seed). Explicit instances: --g/--g0 take
graph6, --pm maps pattern:host pairs, --a/--b/--parts take vertex lists,
xyp takes --x/--y/--p or --grid. `furedi` runs over the internal
enumeration with --all-graphs-n N --r R, or on one graph with --g --r.

Exit status is 1 if any report FAILs, 0 otherwise.";

#[derive(Parser)]
#[command(
    name = "turanlab",
    version,
    about = "Exact extremal graph computations: counting, Turán constructions, inequality verification, exhaustive search, and transformation traces"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (falls back to TURANLAB_THREADS, then all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Human,
}

#[derive(Subcommand)]
enum Command {
    /// Count injective homomorphisms, automorphisms, and copies of H in G
    ///
    /// PATTERN is a named graph (K_k complete, P_k path on k vertices,
    /// C_k cycle, S_k star with k leaves; e.g. K3, P4) or graph6. GRAPH
    /// is graph6, or `-` to read one graph6 line per host from stdin.
    Count {
        pattern: String,
        graph: String,
        /// Treat GRAPH as a file of graph6 lines
        #[arg(long)]
        file: bool,
        /// Use the 128-bit counting path (fails loudly on overflow)
        #[arg(long)]
        fast: bool,
    },
    /// Print the Turán graph T_r(n) as graph6 with its edge count
    Turan { r: usize, n: usize },
    /// Check one inequality on generated or explicit instances
    #[command(after_help = LEMMA_HELP)]
    Verify {
        /// One of: lowerbound dense-hom xyp rebalance rpartite furedi vertex-bounds duplication edge-loss
        lemma: String,
        #[command(flatten)]
        args: Box<VerifyArgs>,
    },
    /// Search K_{r+1}-free n-vertex graphs for the maximum number of
    /// copies of the pattern, comparing against the Turán graph
    Search {
        pattern: String,
        r: usize,
        n: usize,
        /// graph6 corpus file (default: internal enumeration, n ≤ 8)
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Skip malformed corpus lines with a warning instead of failing
        #[arg(long)]
        lenient: bool,
        /// Also certify the extremal through-count bound on maximizers
        #[arg(long)]
        certify: bool,
    },
    /// Transform a K_{r+1}-free graph into T_r(n), checking each step
    Trace {
        pattern: String,
        graph: String,
        r: usize,
    },
    /// Stream all n-vertex graphs up to isomorphism as graph6 (n ≤ 8)
    Enum { n: usize },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads.or_else(|| {
        std::env::var("TURANLAB_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    }) {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let fmt = cli.format;
    match cli.command {
        Command::Count {
            pattern,
            graph,
            file,
            fast,
        } => cmd_count(fmt, &pattern, &graph, file, fast),
        Command::Turan { r, n } => cmd_turan(fmt, r, n),
        Command::Search {
            pattern,
            r,
            n,
            corpus,
            lenient,
            certify,
        } => cmd_search(fmt, &pattern, r, n, corpus, lenient, certify),
        Command::Trace { pattern, graph, r } => cmd_trace(fmt, &pattern, &graph, r),
        Command::Enum { n } => cmd_enum(n),
        Command::Verify { lemma, args } => cmd_verify(fmt, &lemma, &args),
    }
}

fn parse_pattern(spec: &str) -> Result<PatternGraph> {
    if let Some(g) = parse_named(spec) {
        return Ok(PatternGraph::new(g));
    }
    let g = parse_graph6(spec)
        .map_err(|e| anyhow!("pattern {spec:?} is neither a named graph (K_k, P_k, C_k, S_k) nor graph6: {e}"))?;
    Ok(PatternGraph::new(g))
}

fn parse_named(spec: &str) -> Option<Graph> {
    let mut chars = spec.chars();
    let kind = chars.next()?;
    let rest = chars.as_str().strip_prefix('_').unwrap_or(chars.as_str());
    let k: usize = rest.parse().ok()?;
    match kind {
        'K' => Some(Graph::complete(k)),
        'P' => (k >= 1).then(|| Graph::path(k)),
        'C' => (k >= 3).then(|| Graph::cycle(k)),
        'S' => Some(Graph::star(k)),
        _ => None,
    }
}

fn parse_host(spec: &str) -> Result<Graph> {
    parse_graph6(spec).map_err(|e| anyhow!("invalid graph6 {spec:?}: {e}"))
}

fn parse_rat(spec: &str) -> Result<Rat> {
    let (num, den) = match spec.split_once('/') {
        Some((n, d)) => (n, d),
        None => (spec, "1"),
    };
    let num: BigInt = num.parse().context("rational numerator")?;
    let den: BigInt = den.parse().context("rational denominator")?;
    if den == BigInt::from(0) {
        bail!("zero denominator in {spec:?}");
    }
    Ok(Rat::new(num, den))
}

fn parse_vertex_list(spec: &str) -> Result<turanlab::bitset::VertexSet> {
    let mut labels = Vec::new();
    for part in spec.split(',').filter(|s| !s.is_empty()) {
        labels.push(part.trim().parse::<usize>().context("vertex label")?);
    }
    Ok(labels.into_iter().collect())
}

fn parse_partial_map(spec: &str) -> Result<PartialMap> {
    let mut pairs = Vec::new();
    for item in spec.split(',').filter(|s| !s.is_empty()) {
        let (h, g) = item
            .split_once(':')
            .ok_or_else(|| anyhow!("partial map entries look like patternVertex:hostVertex"))?;
        pairs.push((h.trim().parse()?, g.trim().parse()?));
    }
    Ok(PartialMap::new(pairs))
}

// ---------------------------------------------------------------- count

fn cmd_count(fmt: Format, pattern: &str, graph: &str, file: bool, fast: bool) -> Result<ExitCode> {
    let h = parse_pattern(pattern)?;
    let hosts: Vec<String> = if file {
        std::fs::read_to_string(graph)
            .with_context(|| format!("reading {graph}"))?
            .lines()
            .map(str::to_owned)
            .collect()
    } else if graph == "-" {
        std::io::stdin()
            .lock()
            .lines()
            .collect::<std::io::Result<_>>()?
    } else {
        vec![graph.to_owned()]
    };

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if fmt == Format::Csv {
        writeln!(out, "pattern,graph,inj,aut,copies")?;
    }
    for line in hosts.iter().filter(|l| !l.trim().is_empty()) {
        let g = parse_host(line.trim())?;
        let (inj, aut, copies) = if fast {
            let inj: FastCount = turanlab::count_inj(&h, &g).map_err(count_failure)?;
            let aut: FastCount = turanlab::aut_count(&h).map_err(count_failure)?;
            let copies: FastCount = turanlab::count_copies(&h, &g).map_err(count_failure)?;
            (BigCount::from(inj), BigCount::from(aut), BigCount::from(copies))
        } else {
            (
                turanlab::count_inj::<BigCount>(&h, &g)?,
                turanlab::aut_count::<BigCount>(&h)?,
                turanlab::count_copies::<BigCount>(&h, &g)?,
            )
        };
        match fmt {
            Format::Json => {
                let obj = serde_json::json!({
                    "pattern": write_graph6(h.graph()),
                    "graph": write_graph6(&g),
                    "inj": count_json(&inj),
                    "aut": count_json(&aut),
                    "copies": count_json(&copies),
                });
                writeln!(out, "{obj}")?;
            }
            Format::Csv => writeln!(
                out,
                "{},{},{inj},{aut},{copies}",
                write_graph6(h.graph()),
                write_graph6(&g)
            )?,
            Format::Human => writeln!(
                out,
                "{} in {}: inj={inj} aut={aut} copies={copies}",
                pattern,
                write_graph6(&g)
            )?,
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn count_failure(e: turanlab::CountError) -> anyhow::Error {
    anyhow!("counting failed: {e}")
}

// ---------------------------------------------------------------- turan

fn cmd_turan(fmt: Format, r: usize, n: usize) -> Result<ExitCode> {
    if r < 1 {
        bail!("need at least one part");
    }
    let t = turan_graph(r, n);
    let g6 = write_graph6(t.graph());
    let edges = t.graph().edge_count();
    match fmt {
        Format::Json => println!(
            "{}",
            serde_json::json!({"r": r, "n": n, "graph6": g6, "edges": edges})
        ),
        Format::Csv => {
            println!("r,n,graph6,edges");
            println!("{r},{n},{g6},{edges}");
        }
        Format::Human => println!("T_{r}({n}): {g6} edges={edges}"),
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------- search

fn cmd_search(
    fmt: Format,
    pattern: &str,
    r: usize,
    n: usize,
    corpus: Option<PathBuf>,
    lenient: bool,
    certify: bool,
) -> Result<ExitCode> {
    let h = parse_pattern(pattern)?;
    let source = match corpus {
        Some(path) => GraphSource::Corpus { path, lenient },
        None => GraphSource::Internal,
    };
    let result = if certify {
        certify_turan_good_at(&h, r, n, &source)?
    } else {
        search_extremal(&h, r, n, &source)?
    };
    for w in &result.warnings {
        eprintln!("warning: {w}");
    }
    print_search_result(fmt, &result)?;
    Ok(ExitCode::SUCCESS)
}

fn print_search_result(fmt: Format, res: &SearchResult) -> Result<()> {
    match fmt {
        Format::Json => println!("{}", serde_json::to_string(res)?),
        Format::Csv => {
            println!("pattern,r,n,max_copies,turan_value,turan_is_max,scanned,certified,maximizers");
            println!(
                "{},{},{},{},{},{},{},{},{}",
                res.pattern,
                res.r,
                res.n,
                res.max_copies,
                res.turan_value,
                res.turan_is_max,
                res.scanned,
                res.certified.map_or("".into(), |c| c.to_string()),
                res.maximizers.join(";")
            );
        }
        Format::Human => {
            println!(
                "pattern {} over K_{}-free graphs on {} vertices ({} scanned)",
                res.pattern,
                res.r + 1,
                res.n,
                res.scanned
            );
            println!("  max copies: {}", res.max_copies);
            println!(
                "  Turán graph: {} copies ({})",
                res.turan_value,
                if res.turan_is_max { "maximum" } else { "beaten" }
            );
            if let Some(c) = res.certified {
                println!("  certified: {c}");
            }
            println!("  maximizers: {}", res.maximizers.join(" "));
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- trace

fn cmd_trace(fmt: Format, pattern: &str, graph: &str, r: usize) -> Result<ExitCode> {
    let h = parse_pattern(pattern)?;
    let g = parse_host(graph)?;
    let trace = transform_trace(&h, &g, r)?;
    match fmt {
        Format::Json => println!("{}", serde_json::to_string(&trace)?),
        Format::Csv => {
            println!("op,graph6_before,graph6_after,edges_before,edges_after,inj_before,inj_after,check");
            for s in &trace.steps {
                let check = match &s.check {
                    turanlab::search::CheckOutcome::None => "-".into(),
                    turanlab::search::CheckOutcome::Report(rep) => {
                        if rep.passes() { "pass".into() } else { "FAIL".into() }
                    }
                    turanlab::search::CheckOutcome::Skipped { reason } => {
                        format!("skipped: {reason}")
                    }
                };
                println!(
                    "{},{},{},{},{},{},{},{}",
                    s.op,
                    s.graph6_before,
                    s.graph6_after,
                    s.edges_before,
                    s.edges_after,
                    s.inj_before,
                    s.inj_after,
                    check
                );
            }
        }
        Format::Human => {
            println!(
                "trace {} -> {} ({} steps, {} rebalances)",
                trace.initial_graph6,
                trace.final_graph6,
                trace.steps.len(),
                trace.rebalance_count()
            );
            for s in &trace.steps {
                let check = match &s.check {
                    turanlab::search::CheckOutcome::None => String::new(),
                    turanlab::search::CheckOutcome::Report(rep) => {
                        format!(" [{}]", if rep.passes() { "check pass" } else { "CHECK FAIL" })
                    }
                    turanlab::search::CheckOutcome::Skipped { reason } => {
                        format!(" [skipped: {reason}]")
                    }
                };
                println!(
                    "  {}: {} (e={}) -> {} (e={}), inj {} -> {}{check}",
                    s.op,
                    s.graph6_before,
                    s.edges_before,
                    s.graph6_after,
                    s.edges_after,
                    s.inj_before,
                    s.inj_after
                );
            }
        }
    }
    Ok(if trace.all_checks_pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

// ---------------------------------------------------------------- enum

fn cmd_enum(n: usize) -> Result<ExitCode> {
    let graphs = enumerate_graphs(n)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for g in &graphs {
        writeln!(out, "{}", write_graph6(g))?;
    }
    Ok(ExitCode::SUCCESS)
}

// ---------------------------------------------------------------- verify

#[derive(clap::Args)]
struct VerifyArgs {
    /// Number of generated instances
    #[arg(long, default_value_t = 200)]
    instances: usize,
    /// Generator seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Pattern graph for an explicit instance (named or graph6)
    #[arg(long)]
    pattern: Option<String>,
    /// Host graph as graph6
    #[arg(long)]
    g: Option<String>,
    /// Spanning subgraph as graph6 (edge-loss)
    #[arg(long)]
    g0: Option<String>,
    /// Partial map as pattern:host pairs, e.g. 0:4,2:1 (lowerbound)
    #[arg(long)]
    pm: Option<String>,
    /// Vertex list for set A, e.g. 0,1 (rebalance)
    #[arg(long)]
    a: Option<String>,
    /// Vertex list for set B (rebalance)
    #[arg(long)]
    b: Option<String>,
    /// Partition as |-separated vertex lists, e.g. 0,1|2,3 (rpartite)
    #[arg(long)]
    parts: Option<String>,
    /// Vertex v (vertex-bounds, duplication)
    #[arg(long)]
    v: Option<usize>,
    /// Vertex v0 (duplication)
    #[arg(long)]
    v0: Option<usize>,
    /// Rational like 1/3 or 2 (xyp)
    #[arg(long)]
    x: Option<String>,
    /// Rational like 1/3 or 2 (xyp)
    #[arg(long)]
    y: Option<String>,
    /// Exponent (xyp)
    #[arg(long)]
    p: Option<u32>,
    /// Run xyp over the full x,y in {0,1/8,...,1}, p in 0..=10 grid
    #[arg(long)]
    grid: bool,
    /// Check every K_{r+1}-free graph on this many vertices (furedi)
    #[arg(long)]
    all_graphs_n: Option<usize>,
    /// Number of parts r (furedi)
    #[arg(long)]
    r: Option<usize>,
}

fn cmd_verify(fmt: Format, lemma: &str, args: &VerifyArgs) -> Result<ExitCode> {
    let lemma = LemmaId::parse(lemma)
        .ok_or_else(|| anyhow!("unknown lemma id {lemma:?}; see `turanlab verify --help`"))?;
    let reports = collect_reports(lemma, args)?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if fmt == Format::Csv {
        writeln!(out, "lemma_id,verdict,substantive,slack_sign,lhs,rhs,params")?;
    }
    let mut all_pass = true;
    for rep in &reports {
        all_pass &= rep.passes();
        match fmt {
            Format::Json => writeln!(out, "{}", rep.to_json())?,
            Format::Csv => {
                let params: Vec<String> =
                    rep.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    rep.lemma_id,
                    if rep.passes() { "pass" } else { "fail" },
                    rep.substantive(),
                    rep.slack_sign(),
                    rep.lhs,
                    rep.rhs,
                    params.join(";")
                )?;
            }
            Format::Human => {
                let params: Vec<String> =
                    rep.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(
                    out,
                    "{} {}{} lhs={} rhs={} ({})",
                    rep.lemma_id,
                    if rep.passes() { "PASS" } else { "FAIL" },
                    if rep.substantive() { "" } else { " (vacuous)" },
                    rep.lhs,
                    rep.rhs,
                    params.join(", ")
                )?;
            }
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

/// Wraps a checker so hypothesis rejections on explicit instances become
/// input errors rather than failed verdicts.
fn explicit(res: Result<LemmaReport, VerifyError>) -> Result<Vec<LemmaReport>> {
    match res {
        Ok(rep) => Ok(vec![rep]),
        Err(VerifyError::Hypothesis(h)) => Err(anyhow!("instance rejected: {h}")),
        Err(e) => Err(e.into()),
    }
}

fn collect_reports(lemma: LemmaId, args: &VerifyArgs) -> Result<Vec<LemmaReport>> {
    let explicit_mode = args.g.is_some() || args.x.is_some();
    match lemma {
        LemmaId::Lowerbound => {
            if explicit_mode {
                let h = parse_pattern(args.pattern.as_deref().unwrap_or("K2"))?;
                let g = parse_host(args.g.as_deref().context("lowerbound needs --g")?)?;
                let pm = parse_partial_map(args.pm.as_deref().unwrap_or(""))?;
                explicit(check_extension_bound(&h, &g, &pm))
            } else {
                generators::extension_instances(args.instances, args.seed)
                    .iter()
                    .map(|(h, g, pm)| check_extension_bound(h, g, pm).map_err(Into::into))
                    .collect()
            }
        }
        LemmaId::DenseHom => {
            if explicit_mode {
                let h = parse_pattern(args.pattern.as_deref().unwrap_or("K2"))?;
                let g = parse_host(args.g.as_deref().context("dense-hom needs --g")?)?;
                explicit(check_dense_hom_bound(&h, &g))
            } else {
                generators::dense_hom_instances(args.instances, args.seed)
                    .iter()
                    .map(|(h, g)| check_dense_hom_bound(h, g).map_err(Into::into))
                    .collect()
            }
        }
        LemmaId::Xyp => {
            if args.grid && (args.x.is_some() || args.y.is_some() || args.p.is_some()) {
                bail!("--grid conflicts with --x/--y/--p");
            }
            if args.x.is_some() || args.y.is_some() || args.p.is_some() {
                let x = parse_rat(args.x.as_deref().context("xyp needs --x")?)?;
                let y = parse_rat(args.y.as_deref().context("xyp needs --y")?)?;
                let p = args.p.context("xyp needs --p")?;
                explicit(check_xyp(&x, &y, p))
            } else {
                // default and --grid: the full eighth-step grid
                generators::xyp_grid(8, 10)
                    .iter()
                    .map(|(x, y, p)| check_xyp(x, y, *p).map_err(Into::into))
                    .collect()
            }
        }
        LemmaId::Rebalance => {
            if explicit_mode {
                let h = parse_pattern(args.pattern.as_deref().unwrap_or("K2"))?;
                let g = parse_host(args.g.as_deref().context("rebalance needs --g")?)?;
                let a = parse_vertex_list(args.a.as_deref().context("rebalance needs --a")?)?;
                let b = parse_vertex_list(args.b.as_deref().context("rebalance needs --b")?)?;
                explicit(check_rebalance(&h, &g, &a, &b))
            } else {
                generators::rebalance_instances(args.instances, args.seed)
                    .iter()
                    .map(|(h, g, a, b)| check_rebalance(h, g, a, b).map_err(Into::into))
                    .collect()
            }
        }
        LemmaId::Rpartite => {
            if explicit_mode {
                let h = parse_pattern(args.pattern.as_deref().unwrap_or("K2"))?;
                let g = parse_host(args.g.as_deref().context("rpartite needs --g")?)?;
                let spec = args.parts.as_deref().context("rpartite needs --parts")?;
                let parts: Result<Vec<_>> = spec.split('|').map(parse_vertex_list).collect();
                let pg = turanlab::PartitionedGraph::new(g, parts?)
                    .map_err(|e| anyhow!("invalid partition: {e}"))?;
                explicit(check_rpartite(&h, &pg))
            } else {
                generators::rpartite_instances(args.instances, args.seed)
                    .iter()
                    .map(|(h, pg)| check_rpartite(h, pg).map_err(Into::into))
                    .collect()
            }
        }
        LemmaId::Furedi => {
            let r = args.r.context("furedi needs --r")?;
            if let Some(n) = args.all_graphs_n {
                let mut reports = Vec::new();
                for g in enumerate_graphs(n)? {
                    if !g.is_kfree(r + 1) {
                        continue;
                    }
                    reports.push(check_furedi(&g, r)?);
                }
                Ok(reports)
            } else {
                let g = parse_host(
                    args.g
                        .as_deref()
                        .context("furedi needs --all-graphs-n or --g")?,
                )?;
                explicit(check_furedi(&g, r))
            }
        }
        LemmaId::VertexBounds => {
            if explicit_mode {
                let h = parse_pattern(args.pattern.as_deref().unwrap_or("K2"))?;
                let g = parse_host(args.g.as_deref().context("vertex-bounds needs --g")?)?;
                let v = args.v.context("vertex-bounds needs --v")?;
                match check_vertex_bounds(&h, &g, v) {
                    Ok(pair) => Ok(pair.to_vec()),
                    Err(VerifyError::Hypothesis(h)) => Err(anyhow!("instance rejected: {h}")),
                    Err(e) => Err(e.into()),
                }
            } else {
                let mut reports = Vec::new();
                for (h, g, v) in generators::vertex_bounds_instances(args.instances, args.seed) {
                    reports.extend(check_vertex_bounds(&h, &g, v)?);
                }
                Ok(reports)
            }
        }
        LemmaId::Duplication => {
            if explicit_mode {
                let h = parse_pattern(args.pattern.as_deref().unwrap_or("K2"))?;
                let g = parse_host(args.g.as_deref().context("duplication needs --g")?)?;
                let v0 = args.v0.context("duplication needs --v0")?;
                let v = args.v.context("duplication needs --v")?;
                explicit(check_duplication_gain(&h, &g, v0, v))
            } else {
                generators::duplication_instances(args.instances, args.seed)
                    .iter()
                    .map(|(h, g, v0, v)| check_duplication_gain(h, g, *v0, *v).map_err(Into::into))
                    .collect()
            }
        }
        LemmaId::EdgeLoss => {
            if explicit_mode {
                let h = parse_pattern(args.pattern.as_deref().unwrap_or("K2"))?;
                let g = parse_host(args.g.as_deref().context("edge-loss needs --g")?)?;
                let g0 = parse_host(args.g0.as_deref().context("edge-loss needs --g0")?)?;
                explicit(check_edge_loss_bound(&h, &g, &g0))
            } else {
                generators::edge_loss_instances(args.instances, args.seed)
                    .iter()
                    .map(|(h, g, g0)| check_edge_loss_bound(h, g, g0).map_err(Into::into))
                    .collect()
            }
        }
    }
}

