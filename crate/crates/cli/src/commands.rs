//! Subcommands. Each writes its result to `out` and returns the exit status;
//! errors are returned to the caller, which prints them and maps them to a
//! status.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use flood_core::generate::{gen_random, GraphKind};
use flood_core::instances::{emit, read_file, InstanceDocument};
use flood_core::reductions::{vc_to_caterpillar, vc_to_proper_interval, VcInstance};
use flood_core::solve::{solve, Engine};
use flood_core::{verify_solution, FloodError, Move, Result, SearchBudget, Variant};

#[derive(Debug, Parser)]
#[command(name = "flood", version, about = "Exact solvers for the free and fixed flooding games")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve an instance with the chosen engine.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Solve an instance by exhaustive search.
    Oracle {
        file: PathBuf,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Replay a witness against an instance.
    Verify {
        file: PathBuf,
        /// JSON array of {"vertex", "color"} objects.
        #[arg(long)]
        moves: PathBuf,
    },
    /// Build an instance from a Vertex Cover source.
    Reduce {
        #[arg(value_enum)]
        reduction: Reduction,
        /// JSON object {"n", "edges"}.
        source: PathBuf,
    },
    /// Generate a seeded random instance.
    Gen {
        #[arg(value_enum)]
        kind: KindArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Pin every move to this vertex (fixed variant).
        #[arg(long)]
        pivot: Option<usize>,
    },
    /// Run a benchmark suite and print a table.
    Bench {
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Start the HTTP game service.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
        #[arg(long, default_value = "127.0.0.1")]
        host: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EngineArg {
    Auto,
    Oracle,
    Interval,
    ProperInterval,
    Split,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Engine {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Oracle => Engine::Oracle,
            EngineArg::Interval => Engine::Interval,
            EngineArg::ProperInterval => Engine::ProperInterval,
            EngineArg::Split => Engine::Split,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    ProperInterval,
    Interval,
    Caterpillar,
    Split,
    Path,
}

impl From<KindArg> for GraphKind {
    fn from(k: KindArg) -> GraphKind {
        match k {
            KindArg::ProperInterval => GraphKind::ProperInterval,
            KindArg::Interval => GraphKind::Interval,
            KindArg::Caterpillar => GraphKind::Caterpillar,
            KindArg::Split => GraphKind::Split,
            KindArg::Path => GraphKind::Path,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reduction {
    VcCaterpillar,
    VcInterval,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Gadget,
    Reductions,
    Split,
    Scaling,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Most states the exhaustive search may store.
    #[arg(long)]
    pub max_states: Option<usize>,
    /// Deepest layer the exhaustive search may expand.
    #[arg(long)]
    pub max_depth: Option<usize>,
    /// Wall-clock limit in seconds.
    #[arg(long)]
    pub time_limit: Option<f64>,
}

impl BudgetArgs {
    pub fn budget(&self) -> SearchBudget {
        let mut b = SearchBudget::default();
        if let Some(s) = self.max_states {
            b.max_states = s;
        }
        if let Some(d) = self.max_depth {
            b.max_depth = d;
        }
        if let Some(t) = self.time_limit {
            b.time_limit = Duration::from_secs_f64(t.max(0.0));
        }
        b
    }
}

fn io_error(path: &Path, e: std::io::Error) -> FloodError {
    FloodError::InvalidInput(format!("{}: {e}", path.display()))
}

fn write_out(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| FloodError::InvalidInput(format!("writing output: {e}")))
}

fn json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("values serialize")
}

pub fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Solve { file, engine, budget } => run_solve(&file, engine.into(), budget.budget(), out),
        Command::Oracle { file, budget } => run_solve(&file, Engine::Oracle, budget.budget(), out),
        Command::Verify { file, moves } => run_verify(&file, &moves, out),
        Command::Reduce { reduction, source } => run_reduce(reduction, &source, out),
        Command::Gen { kind, n, k, seed, pivot } => {
            let mut doc = gen_random(kind.into(), n, k, seed)?;
            if let Some(pivot) = pivot {
                doc = doc.with_variant(Variant::Fixed { pivot });
                doc.validate()?;
            }
            write_out(out, &emit(&doc))?;
            Ok(0)
        }
        Command::Bench { suite } => run_bench(suite, out),
        Command::Serve { port, host } => {
            let addr = format!("{host}:{port}");
            let runtime = tokio::runtime::Runtime::new().map_err(|e| FloodError::InvalidInput(e.to_string()))?;
            runtime.block_on(crate::service::serve(&addr)).map_err(|e| FloodError::InvalidInput(format!("{addr}: {e}")))?;
            Ok(0)
        }
    }
}

fn run_solve(file: &Path, engine: Engine, budget: SearchBudget, out: &mut dyn Write) -> Result<i32> {
    let doc = read_file(file)?;
    let g = doc.graph()?;
    let outcome = solve(&g, doc.game_variant(), engine, budget)?;
    let text = format!("opt {}\nengine {}\nwitness {}\n", outcome.solution.opt, outcome.engine, json(&outcome.solution.witness));
    write_out(out, &text)?;
    Ok(0)
}

fn run_verify(file: &Path, moves: &Path, out: &mut dyn Write) -> Result<i32> {
    let doc = read_file(file)?;
    let g = doc.graph()?;
    let text = std::fs::read_to_string(moves).map_err(|e| io_error(moves, e))?;
    let moves: Vec<Move> = serde_json::from_str(&text)
        .map_err(|e| FloodError::Parse { field: "moves".into(), message: e.to_string() })?;
    let verdict = verify_solution(&g, doc.game_variant(), &moves);
    match (&verdict.violation, verdict.final_color) {
        (None, Some(c)) => {
            write_out(out, &format!("valid length {} final color {c}\n", verdict.length))?;
            Ok(0)
        }
        (Some(v), _) => {
            write_out(out, &format!("invalid at move {}: {}\n", v.index, v.reason))?;
            Ok(1)
        }
        (None, None) => Err(FloodError::Internal("verdict without violation or final color".into())),
    }
}

#[derive(Deserialize)]
struct Source {
    n: usize,
    edges: Vec<(usize, usize)>,
}

fn run_reduce(reduction: Reduction, source: &Path, out: &mut dyn Write) -> Result<i32> {
    let text = std::fs::read_to_string(source).map_err(|e| io_error(source, e))?;
    let src: Source = serde_json::from_str(&text)
        .map_err(|e| FloodError::Parse { field: format!("line {} column {}", e.line(), e.column()), message: e.to_string() })?;
    let vc = VcInstance::new(src.n, src.edges)?;
    let (doc, cert, name) = match reduction {
        Reduction::VcCaterpillar => {
            let (g, cert) = vc_to_caterpillar(&vc)?;
            (InstanceDocument::from_graph(&g), cert, "vc-caterpillar")
        }
        Reduction::VcInterval => {
            let (rep, cert) = vc_to_proper_interval(&vc)?;
            (InstanceDocument::from_representation(&rep)?, cert, "vc-interval")
        }
    };
    let doc = doc.with_meta("generator", name).with_meta("certificate", &cert);
    write_out(out, &emit(&doc))?;
    Ok(0)
}

struct Row {
    instance: String,
    n: usize,
    k: u32,
    engine: Engine,
    opt: usize,
    time: Duration,
}

fn bench_row(instance: String, doc: &InstanceDocument, engine: Engine) -> Result<Row> {
    let g = doc.graph()?;
    let start = Instant::now();
    let outcome = solve(&g, doc.game_variant(), engine, SearchBudget::default())?;
    Ok(Row { instance, n: g.n(), k: g.k(), engine: outcome.engine, opt: outcome.solution.opt, time: start.elapsed() })
}

fn run_bench(suite: Suite, out: &mut dyn Write) -> Result<i32> {
    let mut rows = Vec::new();
    let vc = |n: usize, e: &[(usize, usize)]| VcInstance::new(n, e.to_vec());
    match suite {
        Suite::Gadget => {
            let (g, _) = vc_to_caterpillar(&vc(2, &[(0, 1)])?)?;
            let doc = InstanceDocument::from_graph(&g);
            for engine in [Engine::Oracle, Engine::Interval] {
                rows.push(bench_row("gadget".into(), &doc, engine)?);
            }
        }
        Suite::Reductions => {
            let sources = [
                ("P3", vc(3, &[(0, 1), (1, 2)])?),
                ("K3", vc(3, &[(0, 1), (1, 2), (0, 2)])?),
                ("P4", vc(4, &[(0, 1), (1, 2), (2, 3)])?),
                ("star", vc(4, &[(0, 1), (0, 2), (0, 3)])?),
                ("C4", vc(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])?),
            ];
            for (name, source) in &sources {
                let (g, _) = vc_to_caterpillar(source)?;
                rows.push(bench_row(format!("caterpillar({name})"), &InstanceDocument::from_graph(&g), Engine::Interval)?);
                let (rep, _) = vc_to_proper_interval(source)?;
                rows.push(bench_row(
                    format!("proper-interval({name})"),
                    &InstanceDocument::from_representation(&rep)?,
                    Engine::ProperInterval,
                )?);
            }
        }
        Suite::Split => {
            for seed in 0..10 {
                let doc = gen_random(GraphKind::Split, 10, 4, seed)?;
                for engine in [Engine::Split, Engine::Oracle] {
                    rows.push(bench_row(format!("split(seed {seed})"), &doc, engine)?);
                }
            }
        }
        Suite::Scaling => {
            for (n, k) in [(50, 3), (100, 3), (200, 3), (50, 5)] {
                let doc = gen_random(GraphKind::ProperInterval, n, k, 1)?;
                rows.push(bench_row(format!("proper-interval(n {n}, k {k})"), &doc, Engine::ProperInterval)?);
            }
        }
    }
    let width = rows.iter().map(|r| r.instance.len()).max().unwrap_or(8).max(8);
    let mut text = format!("{:<width$}  {:>4}  {:>3}  {:<15}  {:>4}  {:>10}\n", "instance", "n", "k", "engine", "opt", "time_ms");
    for r in &rows {
        text += &format!(
            "{:<width$}  {:>4}  {:>3}  {:<15}  {:>4}  {:>10.3}\n",
            r.instance,
            r.n,
            r.k,
            r.engine.name(),
            r.opt,
            r.time.as_secs_f64() * 1e3
        );
    }
    write_out(out, &text)?;
    Ok(0)
}
