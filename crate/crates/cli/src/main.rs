//! `vclp`: exact vertex cover and related problems from the command line.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use vclp::exec::ExecMode;
use vclp::io;
use vclp::lpvc::{self, format_signed_halves};
use vclp::matching::maximum_matching;
use vclp::oracle;
use vclp::reduce;
use vclp::solve::{SolveError, SolveStats, Solver, SolverConfig, Variant};
use vclp::transversal::{self, DeletionKind, KernelStatus, TransversalError, XYKind};
use vclp::{Graph, VertexId};

use report::{Answer, KernelReport, RunReport};

#[derive(Parser)]
#[command(
    name = "vclp",
    version,
    about = "Exact vertex cover by LP-guided branch and reduce"
)]
struct Cli {
    /// Print the full run report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Use data-parallel rule scans and branches.
    #[arg(long, global = true)]
    parallel: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Simple,
    Improved,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Kvd,
    Oct,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleOp {
    Vc,
    Lp,
    Surplus,
    Oct,
    Svd,
    Matching,
    Konig,
}

#[derive(Subcommand)]
enum Cmd {
    /// Vertex cover of size at most k, or a minimum one.
    SolveVc {
        file: PathBuf,
        #[arg(short, required_unless_present = "minimum")]
        k: Option<i64>,
        #[arg(long, value_enum, default_value = "improved")]
        variant: VariantArg,
        /// Print search statistics.
        #[arg(long)]
        stats: bool,
        #[arg(long, conflicts_with = "k")]
        minimum: bool,
    },
    /// Vertex cover of size at most |M| + l for a maximum matching M.
    SolveAgvc {
        file: PathBuf,
        #[arg(short, allow_negative_numbers = true)]
        l: i64,
        #[arg(long)]
        stats: bool,
    },
    /// At most k deletions leaving a bipartite graph.
    SolveOct {
        file: PathBuf,
        #[arg(short)]
        k: i64,
    },
    /// At most k deletions leaving a split graph.
    SolveSvd {
        file: PathBuf,
        #[arg(short)]
        k: i64,
    },
    /// Vertex cover of size at most l given a König or bipartite deletion set.
    VcParam {
        file: PathBuf,
        /// Comma-separated input labels.
        #[arg(long, value_delimiter = ',')]
        set: Vec<u64>,
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(short, allow_negative_numbers = true)]
        l: i64,
    },
    /// Reduce to a kernel, or solve when the measure is already small.
    Kernelize {
        file: PathBuf,
        #[arg(short)]
        k: i64,
        #[arg(short, default_value_t = 1)]
        c: i64,
        /// Write the reduction trace to this file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Exhaustive reference computations for small graphs.
    Oracle {
        #[arg(value_enum)]
        op: OracleOp,
        file: PathBuf,
    },
    /// Minimum vertex cover of every graph file in a directory.
    Bench {
        dir: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

/// Errors mapped onto exit codes.
enum Failure {
    Usage(String),
    Internal(String),
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::Graph(e) => Failure::Usage(e.to_string()),
            other => Failure::Internal(other.to_string()),
        }
    }
}

impl From<TransversalError> for Failure {
    fn from(e: TransversalError) -> Self {
        match e {
            TransversalError::InvalidDeletionSet(_)
            | TransversalError::BadConstant
            | TransversalError::Graph(_) => Failure::Usage(e.to_string()),
            TransversalError::Solve(e) => e.into(),
            other => Failure::Internal(other.to_string()),
        }
    }
}

fn load(path: &Path) -> Result<Graph, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    io::parse_edge_list(&text, io::detect_format(&text))
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn labels(g: &Graph, set: &[VertexId]) -> Vec<u64> {
    let mut out: Vec<u64> = set
        .iter()
        .map(|&v| g.label(v).expect("input vertex"))
        .collect();
    out.sort_unstable();
    out
}

fn check(ok: bool, what: &str) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Internal(format!(
            "witness failed verification: {what}"
        )))
    }
}

struct Ctx {
    exec: ExecMode,
    start: Instant,
}

impl Ctx {
    fn config(&self, variant: Variant) -> SolverConfig {
        SolverConfig {
            exec: self.exec,
            ..SolverConfig::with_variant(variant)
        }
    }

    /// Report for a vertex cover question on `g`; the witness must already be verified.
    fn vc_report(
        &self,
        problem: &str,
        g: &Graph,
        k: i64,
        cover: Option<&[VertexId]>,
        stats: Option<SolveStats>,
    ) -> RunReport {
        let lp = lpvc::solve_lp(g).value;
        RunReport {
            problem: problem.into(),
            answer: if cover.is_some() {
                Answer::Yes
            } else {
                Answer::No
            },
            witness: cover.map(|c| labels(g, c)),
            k,
            vc_star: lp.to_string(),
            mu: format_signed_halves(2 * k - lp.halves() as i64),
            stats,
            kernel: None,
            wall_time_ms: self.start.elapsed().as_secs_f64() * 1e3,
        }
    }
}

fn solve_vc(ctx: &Ctx, g: &Graph, k: Option<i64>, variant: Variant) -> Result<RunReport, Failure> {
    let solver = Solver::new(ctx.config(variant));
    let (k, out) = match k {
        Some(k) => (k, solver.decide(g, k)?),
        None => {
            let out = solver.minimum(g)?;
            (out.cover.as_ref().map_or(0, |c| c.len() as i64), out)
        }
    };
    if let Some(c) = &out.cover {
        check(
            g.is_vertex_cover(c) && c.len() as i64 <= k,
            "not a vertex cover within k",
        )?;
    }
    Ok(ctx.vc_report("vc", g, k, out.cover.as_deref(), Some(out.stats)))
}

fn solve_agvc(ctx: &Ctx, g: &Graph, l: i64) -> Result<RunReport, Failure> {
    let k = maximum_matching(g).len() as i64 + l;
    let mut r = solve_vc(ctx, g, Some(k), Variant::Improved)?;
    r.problem = "agvc".into();
    Ok(r)
}

fn solve_deletion(ctx: &Ctx, g: &Graph, k: i64, kind: XYKind) -> Result<RunReport, Failure> {
    let name = if kind == XYKind::OCT { "oct" } else { "svd" };
    let set = transversal::solve_xy_deletion_with(g, k, kind, &ctx.config(Variant::Improved))?;
    if let Some(s) = &set {
        let rest = g
            .delete_vertices(s)
            .map_err(|e| Failure::Internal(e.to_string()))?;
        let ok = if kind == XYKind::OCT {
            rest.is_bipartite()
        } else {
            is_split(&rest)
        };
        check(
            ok && s.len() as i64 <= k,
            "deletion set does not leave the required class",
        )?;
    }
    // measures refer to the encoded vertex cover instance
    let h = transversal::build_xy(g, kind).h;
    let kh = g.vertex_count() as i64 + k;
    let mut r = ctx.vc_report(name, &h, kh, None, None);
    r.answer = if set.is_some() {
        Answer::Yes
    } else {
        Answer::No
    };
    r.witness = set.map(|s| labels(g, &s));
    r.k = k;
    Ok(r)
}

/// Degree-sequence characterisation of split graphs.
fn is_split(g: &Graph) -> bool {
    let mut deg: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    deg.sort_unstable_by(|a, b| b.cmp(a));
    let m = deg.iter().enumerate().filter(|&(i, &d)| d + 1 > i).count();
    let lhs: usize = deg[..m].iter().sum();
    let rhs: usize = deg[m..].iter().sum();
    lhs == m * (m.saturating_sub(1)) + rhs
}

fn vc_param(
    ctx: &Ctx,
    g: &Graph,
    set: &[u64],
    kind: DeletionKind,
    l: i64,
) -> Result<RunReport, Failure> {
    let s = set
        .iter()
        .map(|&lab| {
            g.vertex_by_label(lab)
                .ok_or_else(|| Failure::Usage(format!("no vertex labelled {lab}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let cover = transversal::vc_param_budget(g, &s, l, kind)?;
    if let Some(c) = &cover {
        check(
            g.is_vertex_cover(c) && c.len() as i64 <= l,
            "not a vertex cover within l",
        )?;
    }
    let mut r = ctx.vc_report("vc-param", g, l, cover.as_deref(), None);
    r.problem = format!(
        "vc-param-{}",
        if kind == DeletionKind::Kvd {
            "kvd"
        } else {
            "oct"
        }
    );
    Ok(r)
}

fn kernelize(
    ctx: &Ctx,
    g: &Graph,
    k: i64,
    c: i64,
    trace_out: Option<&Path>,
) -> Result<RunReport, Failure> {
    let kern = transversal::kernelize(g, k, c)?;
    let trace = reduce::trace_to_text(&kern.trace);
    if let Some(p) = trace_out {
        fs::write(p, &trace).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    let mut r = match &kern.status {
        KernelStatus::SolvedYes(cover) => {
            check(
                g.is_vertex_cover(cover) && cover.len() as i64 <= k,
                "lifted cover",
            )?;
            ctx.vc_report("kernelize", g, k, Some(cover), None)
        }
        KernelStatus::SolvedNo => ctx.vc_report("kernelize", g, k, None, None),
        KernelStatus::Kernel => {
            let bound = 2 * kern.k - 2 * c * transversal::ceil_log2(kern.k);
            check(
                (kern.graph.vertex_count() as i64) <= bound,
                "kernel exceeds its size bound",
            )?;
            let mut r = ctx.vc_report("kernelize", g, k, None, None);
            r.answer = Answer::Kernel;
            r.kernel = Some(KernelReport {
                k_prime: kern.k,
                vertices: kern.graph.vertex_count(),
                edges: kern.graph.edge_count(),
                dimacs: io::to_dimacs(&kern.graph),
                trace,
            });
            r
        }
    };
    r.wall_time_ms = ctx.start.elapsed().as_secs_f64() * 1e3;
    Ok(r)
}

fn run_oracle(op: OracleOp, g: &Graph, json: bool) -> Result<ExitCode, Failure> {
    let usage = |e: oracle::OracleError| Failure::Usage(e.to_string());
    let value = match op {
        OracleOp::Vc => {
            let (n, w) = oracle::bf_min_vc(g).map_err(usage)?;
            serde_json::json!({ "op": "vc", "value": n, "witness": labels(g, &w) })
        }
        OracleOp::Lp => {
            let lp = oracle::bf_lp(g).map_err(usage)?;
            serde_json::json!({
                "op": "lp",
                "value": lpvc::HalfUnits(lp.value).to_string(),
                "all_half_unique": lp.all_half_unique,
            })
        }
        OracleOp::Surplus => match oracle::bf_min_surplus(g).map_err(usage)? {
            Some((s, w)) => {
                serde_json::json!({ "op": "surplus", "value": s, "witness": labels(g, &w) })
            }
            None => serde_json::json!({ "op": "surplus", "value": null }),
        },
        OracleOp::Oct => {
            let (n, w) = oracle::bf_min_oct(g).map_err(usage)?;
            serde_json::json!({ "op": "oct", "value": n, "witness": labels(g, &w) })
        }
        OracleOp::Svd => {
            let (n, w) = oracle::bf_min_svd(g).map_err(usage)?;
            serde_json::json!({ "op": "svd", "value": n, "witness": labels(g, &w) })
        }
        OracleOp::Matching => {
            serde_json::json!({ "op": "matching", "value": oracle::bf_max_matching(g).map_err(usage)? })
        }
        OracleOp::Konig => {
            serde_json::json!({ "op": "konig", "value": oracle::bf_is_konig(g).map_err(usage)? })
        }
    };
    if json {
        println!("{value}");
    } else {
        let mut line = format!("{}: {}", value["op"].as_str().unwrap_or(""), value["value"]);
        if let Some(w) = value.get("witness") {
            line.push_str(&format!(" witness {w}"));
        }
        println!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

fn bench(dir: &Path, jobs: usize, exec: ExecMode, json: bool) -> Result<ExitCode, Failure> {
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Failure::Usage(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    files.sort();
    let one = |p: &PathBuf| -> Result<RunReport, Failure> {
        let ctx = Ctx {
            exec,
            start: Instant::now(),
        };
        let g = load(p)?;
        let mut r = solve_vc(&ctx, &g, None, Variant::Improved)?;
        r.problem = p
            .file_name()
            .map_or_else(String::new, |n| n.to_string_lossy().into_owned());
        Ok(r)
    };
    let results = run_jobs(&files, jobs, one)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&results).expect("serialisable")
        );
    } else {
        println!(
            "{:<32} {:>6} {:>8} {:>10} {:>12}",
            "instance", "vc", "vc*", "nodes", "time_ms"
        );
        for r in &results {
            let nodes = r.stats.as_ref().map_or(0, |s| s.nodes_visited);
            println!(
                "{:<32} {:>6} {:>8} {:>10} {:>12.2}",
                r.problem, r.k, r.vc_star, nodes, r.wall_time_ms
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// Runs `f` over `items` on `jobs` workers; results stay in input order.
#[cfg(feature = "parallel")]
fn run_jobs<T: Sync, R: Send>(
    items: &[T],
    jobs: usize,
    f: impl Fn(&T) -> Result<R, Failure> + Sync + Send,
) -> Result<Vec<R>, Failure> {
    use rayon::prelude::*;
    if jobs <= 1 {
        return items.iter().map(f).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Failure::Internal(e.to_string()))?;
    pool.install(|| items.par_iter().map(f).collect())
}

#[cfg(not(feature = "parallel"))]
fn run_jobs<T, R>(
    items: &[T],
    _jobs: usize,
    f: impl Fn(&T) -> Result<R, Failure>,
) -> Result<Vec<R>, Failure> {
    items.iter().map(f).collect()
}

fn emit(r: &RunReport, json: bool, show_stats: bool) -> ExitCode {
    if json {
        println!("{}", serde_json::to_string_pretty(r).expect("serialisable"));
    } else {
        println!("{}", r.summary());
        if let Some(kern) = &r.kernel {
            println!(
                "kernel: {} vertices, {} edges, k' = {}",
                kern.vertices, kern.edges, kern.k_prime
            );
            print!("{}", kern.dimacs);
        }
        if show_stats {
            if let Some(s) = &r.stats {
                println!(
                    "nodes {} max_depth {} mu_root {}",
                    s.nodes_visited,
                    s.max_depth,
                    format_signed_halves(s.mu_root)
                );
                let fired: Vec<String> = s
                    .rule_fire_counts
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                println!("rules {}", fired.join(" "));
            }
        }
    }
    ExitCode::from(r.answer.exit_code())
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let ctx = Ctx {
        exec: if cli.parallel {
            ExecMode::best_available()
        } else {
            ExecMode::Sequential
        },
        start: Instant::now(),
    };
    match cli.cmd {
        Cmd::SolveVc {
            file,
            k,
            variant,
            stats,
            minimum,
        } => {
            let g = load(&file)?;
            let variant = match variant {
                VariantArg::Simple => Variant::Simple,
                VariantArg::Improved => Variant::Improved,
            };
            let r = solve_vc(&ctx, &g, if minimum { None } else { k }, variant)?;
            Ok(emit(&r, cli.json, stats))
        }
        Cmd::SolveAgvc { file, l, stats } => {
            Ok(emit(&solve_agvc(&ctx, &load(&file)?, l)?, cli.json, stats))
        }
        Cmd::SolveOct { file, k } => Ok(emit(
            &solve_deletion(&ctx, &load(&file)?, k, XYKind::OCT)?,
            cli.json,
            false,
        )),
        Cmd::SolveSvd { file, k } => Ok(emit(
            &solve_deletion(&ctx, &load(&file)?, k, XYKind::SVD)?,
            cli.json,
            false,
        )),
        Cmd::VcParam { file, set, kind, l } => {
            let kind = match kind {
                KindArg::Kvd => DeletionKind::Kvd,
                KindArg::Oct => DeletionKind::Oct,
            };
            Ok(emit(
                &vc_param(&ctx, &load(&file)?, &set, kind, l)?,
                cli.json,
                false,
            ))
        }
        Cmd::Kernelize { file, k, c, trace } => Ok(emit(
            &kernelize(&ctx, &load(&file)?, k, c, trace.as_deref())?,
            cli.json,
            false,
        )),
        Cmd::Oracle { op, file } => run_oracle(op, &load(&file)?, cli.json),
        Cmd::Bench { dir, jobs } => bench(&dir, jobs, ctx.exec, cli.json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(3)
        }
    }
}
