//! `ofrac`: exact fractional oriented coloring from the command line.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;
use std::thread;
use std::time::Duration;

use clap::{Parser, Subcommand};

use ofrac_core::{
    analyze_miser, beta, blow_up, bound_sweep, build_target, check_nice, chi_b, chi_star,
    construct_type_a_coloring, epsilon_report, exists_bfold, extract_suborientation, hom_exists,
    tuple_coloring, verify_coloring, verify_consistency, verify_hom, BFoldColoring, ChiOutcome,
    CycleError, HomOutcome, MiserError, NicenessOutcome, OrientedGraph, Rational, SearchBudget,
    SearchOutcome, SolverError, TargetError, Verdict, EPSILON_NOTE,
};

use ofrac_cli::corpus::DEFAULT_SEED;
use ofrac_cli::formats::{
    read_coloring, read_graph, read_suborientation, write_coloring, write_graph,
    write_suborientation, FormatError,
};
use ofrac_cli::report::{sha256_hex, Report, RunManifest};
use ofrac_cli::suites::{cycles_suite, planar_suite, properties_suite, SuiteItem};

#[derive(Parser)]
#[command(
    name = "ofrac",
    version,
    about = "Exact fractional oriented coloring: verification, search, closed forms, circulant targets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Search-node budget; 0 removes the cap.
    #[arg(long, global = true)]
    budget_nodes: Option<u64>,

    /// Abort searches after this many seconds (reported as inconclusive).
    #[arg(long, global = true)]
    time_limit: Option<u64>,

    /// Seed for the random corpora.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Where to write the produced artifact (certificate, graph, coloring).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Emit a JSON run manifest instead of key: value lines.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Check a coloring file against a graph file.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Exact searches: existence, chromatic numbers, homomorphisms, sweeps.
    #[command(subcommand)]
    Solve(SolveCmd),
    /// Closed-form directed-cycle values and the block-structure analyzer.
    #[command(subcommand)]
    Cycle(CycleCmd),
    /// Circulant targets: construction, niceness, tuple colorings, accuracy.
    #[command(subcommand)]
    Target(TargetCmd),
    /// Suborientations of disjointness graphs: extraction, checking, blow-up.
    #[command(subcommand)]
    Kneser(KneserCmd),
    /// Re-run a result table and compare against the frozen expectations.
    #[command(subcommand)]
    Reproduce(ReproduceCmd),
}

#[derive(Subcommand)]
enum SolveCmd {
    /// Does a b-fold k-coloring exist?
    Bfold {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        k: u32,
    },
    /// Smallest palette for fold 1.
    ChiO {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Smallest palette for a given fold.
    ChiB {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        b: u32,
    },
    /// Is there an arc-preserving map from one graph to another?
    Hom {
        #[arg(long)]
        from: PathBuf,
        #[arg(long)]
        to: PathBuf,
    },
    /// Clique/counting lower bounds and per-fold upper bounds.
    Sweep {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        bmax: u32,
    },
}

#[derive(Subcommand)]
enum CycleCmd {
    /// The closed-form value for the directed cycle C_r.
    Value {
        #[arg(long)]
        r: u64,
    },
    /// The correction term 4 - value, with its witnessing prime factor.
    Beta {
        #[arg(long)]
        r: u64,
    },
    /// The explicit coloring attaining the closed form.
    Construct {
        #[arg(long)]
        r: u64,
    },
    /// Decompose a below-ratio-4 cycle coloring into triples and quads.
    Analyze {
        #[arg(long)]
        r: u64,
        #[arg(long)]
        coloring: PathBuf,
    },
}

#[derive(Subcommand)]
enum TargetCmd {
    /// Build the level-l circulant target graph.
    Build {
        #[arg(long)]
        l: u32,
    },
    /// Exhaustively check k-niceness of a graph.
    Nice {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        k: u32,
    },
    /// The target's tuple coloring, ratio 4 + 1/2^l.
    Coloring {
        #[arg(long)]
        l: u32,
    },
    /// Level, target size, and girth threshold for a given accuracy.
    Epsilon {
        #[arg(long)]
        eps: String,
    },
}

#[derive(Subcommand)]
enum KneserCmd {
    /// Quotient a valid coloring into a labeled suborientation.
    Extract {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        coloring: PathBuf,
    },
    /// Verify a suborientation file.
    Check {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Replace each color with a block of c fresh colors.
    Blowup {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        c: u32,
    },
}

#[derive(Subcommand)]
enum ReproduceCmd {
    /// The directed-cycle value table.
    Cycles,
    /// Circulant-target structure, niceness, and accuracy rows.
    Planar,
    /// Sandwich bounds and homomorphism monotonicity on seeded corpora.
    Properties,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Status {
    Success,
    Refuted,
    Inconclusive,
}

impl Status {
    fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Refuted => 1,
            Status::Inconclusive => 2,
        }
    }
}

#[derive(Debug)]
enum CliError {
    Format(FormatError),
    Usage(String),
    /// An internal contract failed (a certificate that does not
    /// re-verify, contradictory bounds); reported as a failure.
    Broken(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Format(e) => e.fmt(f),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Broken(msg) => f.write_str(msg),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> CliError {
        CliError::Format(e)
    }
}

fn solver_error(e: SolverError) -> CliError {
    match e {
        SolverError::FoldOutOfRange { .. }
        | SolverError::PaletteTooLarge { .. }
        | SolverError::EmptyGraph => CliError::Usage(e.to_string()),
        SolverError::CertificateInvalid { .. } | SolverError::BoundContradiction { .. } => {
            CliError::Broken(e.to_string())
        }
    }
}

fn cycle_error(e: CycleError) -> CliError {
    CliError::Usage(e.to_string())
}

fn target_error(e: TargetError) -> CliError {
    CliError::Usage(e.to_string())
}

/// Tracks every file the run touches, for the manifest.
struct Ctx {
    seed: u64,
    budget: SearchBudget,
    out: Option<PathBuf>,
    inputs: BTreeMap<String, String>,
    outputs: Vec<String>,
}

impl Ctx {
    fn new(cli: &Cli) -> Ctx {
        let mut budget = SearchBudget::default();
        if let Some(nodes) = cli.budget_nodes {
            budget.max_nodes = (nodes > 0).then_some(nodes);
        }
        if let Some(secs) = cli.time_limit {
            let flag = Arc::new(AtomicBool::new(false));
            budget.time_limit = Some(Duration::from_secs(secs));
            budget.abort = Some(flag.clone());
            thread::spawn(move || {
                thread::sleep(Duration::from_secs(secs));
                flag.store(true, Ordering::Relaxed);
            });
        }
        Ctx {
            seed: cli.seed.unwrap_or(DEFAULT_SEED),
            budget,
            out: cli.out.clone(),
            inputs: BTreeMap::new(),
            outputs: Vec::new(),
        }
    }

    fn record_input(&mut self, path: &Path) -> Result<(), CliError> {
        let shown = path.display().to_string();
        let bytes = fs::read(path).map_err(|e| {
            CliError::Format(FormatError::File {
                path: shown.clone(),
                detail: e.to_string(),
            })
        })?;
        self.inputs.insert(shown, sha256_hex(&bytes));
        Ok(())
    }

    fn load_graph(&mut self, path: &Path) -> Result<OrientedGraph, CliError> {
        self.record_input(path)?;
        Ok(read_graph(path)?)
    }

    fn load_coloring(&mut self, path: &Path) -> Result<BFoldColoring, CliError> {
        self.record_input(path)?;
        Ok(read_coloring(path)?)
    }

    /// Writes the command's artifact to `--out`; generator commands
    /// require it, search commands write certificates only on request.
    fn write_artifact(&mut self, content: &str, report: &mut Report) -> Result<(), CliError> {
        let Some(path) = self.out.clone() else {
            return Err(CliError::Usage(
                "this command produces a file; pass --out FILE".to_string(),
            ));
        };
        self.write_optional_artifact(&path, content, report)
    }

    fn write_certificate(&mut self, content: &str, report: &mut Report) -> Result<(), CliError> {
        if let Some(path) = self.out.clone() {
            self.write_optional_artifact(&path, content, report)?;
        }
        Ok(())
    }

    fn write_optional_artifact(
        &mut self,
        path: &Path,
        content: &str,
        report: &mut Report,
    ) -> Result<(), CliError> {
        fs::write(path, content).map_err(|e| {
            CliError::Format(FormatError::File {
                path: path.display().to_string(),
                detail: e.to_string(),
            })
        })?;
        let shown = path.display().to_string();
        report.push("out", &shown);
        self.outputs.push(shown);
        Ok(())
    }
}

fn sets_line(c: &BFoldColoring) -> String {
    let parts: Vec<String> = c.sets().iter().map(|s| s.to_string()).collect();
    parts.join(" ")
}

fn images_line(map: &[u32]) -> String {
    let parts: Vec<String> = map.iter().map(|v| v.to_string()).collect();
    parts.join(" ")
}

fn parse_rational(text: &str) -> Result<Rational, CliError> {
    let bad = || CliError::Usage(format!("`{text}` is not a fraction P/Q or integer"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| bad())?;
            let q: i64 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => Ok(Rational::from_integer(
            text.trim().parse().map_err(|_| bad())?,
        )),
    }
}

fn run_verify(ctx: &mut Ctx, graph: &Path, coloring: &Path) -> Result<(Report, Status), CliError> {
    let g = ctx.load_graph(graph)?;
    let c = ctx.load_coloring(coloring)?;
    let mut report = Report::new();
    report.push("palette", c.palette());
    report.push("fold", c.fold());
    match verify_coloring(&g, &c) {
        Ok(Verdict::Valid) => {
            report.push("verdict", "valid");
            report.push("ratio", c.ratio());
            Ok((report, Status::Success))
        }
        Ok(Verdict::Invalid(v)) => {
            report.push("verdict", "invalid");
            report.push("violation", v);
            Ok((report, Status::Refuted))
        }
        Err(e) => {
            report.push("verdict", "invalid");
            report.push("violation", e);
            Ok((report, Status::Refuted))
        }
    }
}

fn run_solve(ctx: &mut Ctx, cmd: &SolveCmd) -> Result<(Report, Status), CliError> {
    let mut report = Report::new();
    match cmd {
        SolveCmd::Bfold { graph, b, k } => {
            let g = ctx.load_graph(graph)?;
            report.push("fold", b);
            report.push("palette", k);
            match exists_bfold(&g, *b, *k, &ctx.budget).map_err(solver_error)? {
                SearchOutcome::Exists(c) => {
                    if !verify_coloring(&g, &c).is_ok_and(|v| v.is_valid()) {
                        return Err(CliError::Broken(
                            "search returned a certificate that fails verification".to_string(),
                        ));
                    }
                    report.push("outcome", "exists");
                    report.push("ratio", c.ratio());
                    report.push("certificate", sets_line(&c));
                    ctx.write_certificate(&write_coloring(&c), &mut report)?;
                    Ok((report, Status::Success))
                }
                SearchOutcome::NotExists => {
                    report.push("outcome", "not-exists");
                    report.push("search", "exhaustive");
                    Ok((report, Status::Refuted))
                }
                SearchOutcome::Inconclusive => {
                    report.push("outcome", "inconclusive");
                    report.push("search", "budget spent");
                    Ok((report, Status::Inconclusive))
                }
            }
        }
        SolveCmd::ChiO { graph } | SolveCmd::ChiB { graph, .. } => {
            let fold = match cmd {
                SolveCmd::ChiB { b, .. } => *b,
                _ => 1,
            };
            let g = ctx.load_graph(graph)?;
            report.push("fold", fold);
            match chi_b(&g, fold, &ctx.budget).map_err(solver_error)? {
                ChiOutcome::Value { k, certificate } => {
                    let key = if fold == 1 { "chi_o" } else { "chi_b" };
                    report.push(key, k);
                    report.push("ratio", certificate.ratio());
                    report.push("certificate", sets_line(&certificate));
                    ctx.write_certificate(&write_coloring(&certificate), &mut report)?;
                    Ok((report, Status::Success))
                }
                ChiOutcome::Inconclusive => {
                    report.push("outcome", "inconclusive");
                    Ok((report, Status::Inconclusive))
                }
            }
        }
        SolveCmd::Hom { from, to } => {
            let g = ctx.load_graph(from)?;
            let h = ctx.load_graph(to)?;
            match hom_exists(&g, &h, &ctx.budget) {
                HomOutcome::Exists(map) => {
                    if !verify_hom(&g, &h, &map) {
                        return Err(CliError::Broken(
                            "search returned a map that fails verification".to_string(),
                        ));
                    }
                    report.push("outcome", "exists");
                    report.push("map", images_line(&map));
                    Ok((report, Status::Success))
                }
                HomOutcome::NotExists => {
                    report.push("outcome", "not-exists");
                    report.push("search", "exhaustive");
                    Ok((report, Status::Refuted))
                }
                HomOutcome::Inconclusive => {
                    report.push("outcome", "inconclusive");
                    Ok((report, Status::Inconclusive))
                }
            }
        }
        SolveCmd::Sweep { graph, bmax } => {
            let g = ctx.load_graph(graph)?;
            let sweep = bound_sweep(&g, *bmax, &ctx.budget, &graph.display().to_string())
                .map_err(solver_error)?;
            report.push("omega_ro", sweep.omega_ro);
            report.push("alpha_o", sweep.alpha_o);
            report.push("lower", sweep.lower);
            report.push("lower kind", sweep.lower_kind);
            for &(fold, chi) in &sweep.chi_per_fold {
                match chi {
                    Some(k) => report.push(format!("chi_{fold}"), k),
                    None => report.push(format!("chi_{fold}"), "inconclusive"),
                }
            }
            match sweep.upper {
                Some(upper) => {
                    report.push("upper", upper);
                    report.push("tight", sweep.is_tight());
                    if let Some(c) = &sweep.best_certificate {
                        report.push("certificate", sets_line(c));
                        ctx.write_certificate(&write_coloring(c), &mut report)?;
                    }
                    Ok((report, Status::Success))
                }
                None => {
                    report.push("upper", "inconclusive");
                    Ok((report, Status::Inconclusive))
                }
            }
        }
    }
}

fn run_cycle(ctx: &mut Ctx, cmd: &CycleCmd) -> Result<(Report, Status), CliError> {
    let mut report = Report::new();
    match cmd {
        CycleCmd::Value { r } => {
            let value = chi_star(*r).map_err(cycle_error)?;
            report.push("r", r);
            report.push("value", value.value);
            report.push("case", value.case);
            Ok((report, Status::Success))
        }
        CycleCmd::Beta { r } => {
            let b = beta(*r).map_err(cycle_error)?;
            report.push("r", r);
            report.push("beta", b.value);
            match b.witness {
                Some(p) => report.push("factor", p),
                None => report.push("factor", "none"),
            }
            Ok((report, Status::Success))
        }
        CycleCmd::Construct { r } => {
            let c = construct_type_a_coloring(*r as usize).map_err(cycle_error)?;
            let g = OrientedGraph::directed_cycle(*r as usize).expect("r > 5");
            if !verify_coloring(&g, &c).is_ok_and(|v| v.is_valid()) {
                return Err(CliError::Broken(
                    "constructed coloring fails verification".to_string(),
                ));
            }
            report.push("r", r);
            report.push("palette", c.palette());
            report.push("fold", c.fold());
            report.push("ratio", c.ratio());
            ctx.write_artifact(&write_coloring(&c), &mut report)?;
            Ok((report, Status::Success))
        }
        CycleCmd::Analyze { r, coloring } => {
            let c = ctx.load_coloring(coloring)?;
            match analyze_miser(*r as usize, &c) {
                Ok(st) => {
                    report.push("verdict", "miser structure");
                    report.push("rotation", st.rotation);
                    report.push("triples", st.triple_count);
                    report.push("quads between triples", st.quads_between);
                    let shape: Vec<String> =
                        st.blocks.iter().map(|b| b.len().to_string()).collect();
                    report.push("blocks", shape.join(","));
                    report.push("intersection row 0", st.t_matrix.row_string(0));
                    let cap = (st.quads_between + 1) * st.triple_count;
                    let max_uses = (0..c.palette())
                        .map(|color| c.sets().iter().filter(|s| s.contains(color)).count())
                        .max()
                        .unwrap_or(0);
                    report.push("heaviest color uses", max_uses);
                    report.push("use cap", cap);
                    Ok((report, Status::Success))
                }
                Err(
                    e @ (MiserError::CycleTooShort { .. } | MiserError::DivisibleByThree { .. }),
                ) => Err(CliError::Usage(e.to_string())),
                Err(e) => {
                    report.push("verdict", "no miser structure");
                    report.push("reason", e);
                    Ok((report, Status::Refuted))
                }
            }
        }
    }
}

fn run_target(ctx: &mut Ctx, cmd: &TargetCmd) -> Result<(Report, Status), CliError> {
    let mut report = Report::new();
    match cmd {
        TargetCmd::Build { l } => {
            let target = build_target(*l).map_err(target_error)?;
            report.push("level", l);
            report.push("vertices", target.graph().vertex_count());
            report.push("arcs", target.graph().arc_count());
            report.push("tuple size", target.tuple_size());
            match target.graph().girth() {
                Some(gi) => report.push("girth", gi),
                None => report.push("girth", "none"),
            }
            ctx.write_artifact(&write_graph(target.graph()), &mut report)?;
            Ok((report, Status::Success))
        }
        TargetCmd::Nice { graph, k } => {
            let g = ctx.load_graph(graph)?;
            report.push("k", k);
            match check_nice(&g, *k, &ctx.budget).outcome {
                NicenessOutcome::Nice => {
                    report.push("verdict", "nice");
                    Ok((report, Status::Success))
                }
                NicenessOutcome::CounterExample(ce) => {
                    report.push("verdict", "not nice");
                    report.push("alpha", ce.alpha_string());
                    report.push("start", ce.start);
                    report.push("reached", images_line(&ce.reached));
                    Ok((report, Status::Refuted))
                }
                NicenessOutcome::Inconclusive => {
                    report.push("verdict", "inconclusive");
                    Ok((report, Status::Inconclusive))
                }
            }
        }
        TargetCmd::Coloring { l } => {
            let target = build_target(*l).map_err(target_error)?;
            let c = tuple_coloring(&target);
            if !verify_coloring(target.graph(), &c).is_ok_and(|v| v.is_valid()) {
                return Err(CliError::Broken(
                    "tuple coloring fails verification".to_string(),
                ));
            }
            report.push("level", l);
            report.push("palette", c.palette());
            report.push("fold", c.fold());
            report.push("ratio", c.ratio());
            ctx.write_artifact(&write_coloring(&c), &mut report)?;
            Ok((report, Status::Success))
        }
        TargetCmd::Epsilon { eps } => {
            let eps = parse_rational(eps)?;
            let r = epsilon_report(eps).map_err(target_error)?;
            report.push("accuracy", r.eps);
            report.push("level", r.level);
            report.push("tuple size", r.tuple_size);
            report.push("vertices", r.modulus);
            report.push("bound", r.bound);
            report.push("girth threshold", r.girth_threshold);
            report.push("note", EPSILON_NOTE);
            Ok((report, Status::Success))
        }
    }
}

fn run_kneser(ctx: &mut Ctx, cmd: &KneserCmd) -> Result<(Report, Status), CliError> {
    let mut report = Report::new();
    match cmd {
        KneserCmd::Extract { graph, coloring } => {
            let g = ctx.load_graph(graph)?;
            let c = ctx.load_coloring(coloring)?;
            match verify_coloring(&g, &c) {
                Ok(Verdict::Valid) => {}
                Ok(Verdict::Invalid(v)) => {
                    report.push("verdict", "coloring invalid");
                    report.push("violation", v);
                    return Ok((report, Status::Refuted));
                }
                Err(e) => {
                    report.push("verdict", "coloring invalid");
                    report.push("violation", e);
                    return Ok((report, Status::Refuted));
                }
            }
            let extraction =
                extract_suborientation(&g, &c).map_err(|e| CliError::Broken(e.to_string()))?;
            let sub = &extraction.suborientation;
            if !verify_consistency(sub).is_valid() {
                return Err(CliError::Broken(
                    "extracted suborientation fails consistency".to_string(),
                ));
            }
            if !verify_hom(&g, sub.graph(), &extraction.label_map) {
                return Err(CliError::Broken(
                    "label map is not a homomorphism".to_string(),
                ));
            }
            report.push("vertices", sub.graph().vertex_count());
            report.push("palette", sub.palette());
            report.push("subset size", sub.subset_size());
            report.push("label map", images_line(&extraction.label_map));
            report.push("consistency", "valid");
            ctx.write_artifact(&write_suborientation(sub), &mut report)?;
            Ok((report, Status::Success))
        }
        KneserCmd::Check { graph } => {
            ctx.record_input(graph)?;
            let sub = read_suborientation(graph)?;
            report.push("vertices", sub.graph().vertex_count());
            report.push("palette", sub.palette());
            report.push("subset size", sub.subset_size());
            match verify_consistency(&sub) {
                Verdict::Valid => {
                    report.push("verdict", "consistent");
                    Ok((report, Status::Success))
                }
                Verdict::Invalid(v) => {
                    report.push("verdict", "inconsistent");
                    report.push("violation", v);
                    Ok((report, Status::Refuted))
                }
            }
        }
        KneserCmd::Blowup { graph, c } => {
            ctx.record_input(graph)?;
            let sub = read_suborientation(graph)?;
            if let Verdict::Invalid(v) = verify_consistency(&sub) {
                report.push("verdict", "input inconsistent");
                report.push("violation", v);
                return Ok((report, Status::Refuted));
            }
            let blown = blow_up(&sub, *c).map_err(|e| CliError::Usage(e.to_string()))?;
            if !verify_consistency(&blown).is_valid() {
                return Err(CliError::Broken("blow-up fails consistency".to_string()));
            }
            report.push("factor", c);
            report.push("palette", blown.palette());
            report.push("subset size", blown.subset_size());
            report.push("vertices", blown.graph().vertex_count());
            ctx.write_artifact(&write_suborientation(&blown), &mut report)?;
            Ok((report, Status::Success))
        }
    }
}

fn run_reproduce(ctx: &mut Ctx, cmd: &ReproduceCmd) -> Result<(Report, Status), CliError> {
    let items: Vec<SuiteItem> = match cmd {
        ReproduceCmd::Cycles => cycles_suite(&ctx.budget).map_err(solver_error)?,
        ReproduceCmd::Planar => planar_suite(&ctx.budget),
        ReproduceCmd::Properties => {
            properties_suite(ctx.seed, &ctx.budget).map_err(solver_error)?
        }
    };
    let mut report = Report::new();
    if matches!(cmd, ReproduceCmd::Properties) {
        report.push("seed", ctx.seed);
    }
    let mut failures = 0usize;
    for item in &items {
        let flag = if item.pass { "ok" } else { "FAIL" };
        report.push(
            &item.name,
            format!(
                "expected {}, computed {} [{flag}]",
                item.expected, item.computed
            ),
        );
        if !item.pass {
            failures += 1;
        }
    }
    report.push("items", items.len());
    report.push("failures", failures);
    let status = if failures == 0 {
        Status::Success
    } else {
        Status::Refuted
    };
    Ok((report, status))
}

fn run(cli: &Cli, ctx: &mut Ctx) -> Result<(Report, Status), CliError> {
    match &cli.command {
        Command::Verify { graph, coloring } => run_verify(ctx, graph, coloring),
        Command::Solve(cmd) => run_solve(ctx, cmd),
        Command::Cycle(cmd) => run_cycle(ctx, cmd),
        Command::Target(cmd) => run_target(ctx, cmd),
        Command::Kneser(cmd) => run_kneser(ctx, cmd),
        Command::Reproduce(cmd) => run_reproduce(ctx, cmd),
    }
}

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let mut ctx = Ctx::new(&cli);
    match run(&cli, &mut ctx) {
        Ok((report, status)) => {
            if cli.json {
                let manifest = RunManifest {
                    command: argv,
                    seed: ctx.seed,
                    inputs: ctx.inputs,
                    report: report.entries().to_vec(),
                    outputs: ctx.outputs,
                    status: status.code(),
                };
                print!("{}", manifest.render());
            } else {
                print!("{}", report.render());
            }
            std::process::exit(status.code() as i32);
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                CliError::Format(_) | CliError::Usage(_) => 64,
                CliError::Broken(_) => 1,
            };
            std::process::exit(code);
        }
    }
}
