//! Command-line front end: verification, bounds reports, search and format
//! conversion. Each command is a thin adapter over the `k3irreg` library.
//!
//! Exit codes: 0 success or certified, 1 negative result, 2 usage or input
//! error, 3 search budget exhausted.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

use k3irreg::bounds::{
    feasibility_report, k3_lower_bound, k3_upper_bound, partition_stats, FeasibilityReport,
    KnownResult, PartitionStats,
};
use k3irreg::evolve::{
    search_with, Checkpoint, IndividualSummary, Outcome, SearchConfig, SearchResult, TraceEntry,
};
use k3irreg::exec::Executor;
use k3irreg::io::{self, Format};
use k3irreg::verify::{certify, Certificate};
use k3irreg::Graph;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_EXHAUSTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "k3irreg",
    version,
    about = "Regular graphs with pairwise distinct triangle-degrees"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify a graph file (adjacency list or graph6).
    Verify(VerifyArgs),
    /// Run the evolutionary search.
    Search(Box<SearchArgs>),
    /// Print the feasibility report for a regularity.
    Bounds(BoundsArgs),
    /// Convert between adjacency-list and graph6 files.
    Convert(ConvertArgs),
    /// Write the complement of a graph.
    Complement(ConvertArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub path: PathBuf,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// JSON file with `SearchConfig` fields; flags override it.
    #[arg(long)]
    pub config: Option<PathBuf>,
    #[arg(long)]
    pub r: Option<u64>,
    #[arg(long, conflicts_with_all = ["n_lo", "n_hi"])]
    pub n: Option<u64>,
    #[arg(long, requires = "n_hi")]
    pub n_lo: Option<u64>,
    #[arg(long, requires = "n_lo")]
    pub n_hi: Option<u64>,
    #[arg(long)]
    pub pop: Option<usize>,
    #[arg(long)]
    pub offspring: Option<usize>,
    #[arg(long)]
    pub carryover: Option<f64>,
    /// Comma-separated subset of `switch` (or `edge_switch`) and `resize`.
    #[arg(long, value_delimiter = ',')]
    pub mutations: Option<Vec<String>>,
    #[arg(long)]
    pub max_gens: Option<u64>,
    /// Seconds.
    #[arg(long)]
    pub time_budget: Option<f64>,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub init_switches: Option<usize>,
    #[arg(long)]
    pub retry_budget: Option<usize>,
    #[arg(long)]
    pub threads: Option<usize>,
    /// Checkpoint file, rewritten every `--checkpoint-every` generations.
    #[arg(long)]
    pub checkpoint: Option<PathBuf>,
    #[arg(long, default_value_t = 10)]
    pub checkpoint_every: u64,
    /// Continue from a checkpoint file.
    #[arg(long)]
    pub resume: Option<PathBuf>,
    /// Witnesses are appended here, one graph6 line each.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Per-generation trace as CSV.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub r: u64,
    /// Also print the partition table for this order.
    #[arg(long)]
    pub n: Option<u64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Adj,
    Graph6,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    pub input: PathBuf,
    /// Output file; stdout when omitted.
    pub output: Option<PathBuf>,
    /// Output format; inferred from the output extension when omitted
    /// (`.g6`/`.graph6` is graph6), graph6 on stdout.
    #[arg(long, value_enum)]
    pub to: Option<OutFormat>,
}

/// Result of one command: exit code plus the text for stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(exit_code: i32, stdout: String) -> Self {
        CommandOutcome {
            exit_code,
            stdout,
            stderr: String::new(),
        }
    }

    fn input_error(msg: impl std::fmt::Display) -> Self {
        CommandOutcome {
            exit_code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }

    fn warn(mut self, msg: impl std::fmt::Display) -> Self {
        let _ = writeln!(self.stderr, "warning: {msg}");
        self
    }
}

/// Parses `args` (including the program name) and runs the command. Usage
/// errors become exit code 2 with clap's message.
pub fn run_from<I, T>(args: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                CommandOutcome::ok(code, text)
            } else {
                CommandOutcome {
                    exit_code: code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

pub fn run(cli: Cli) -> CommandOutcome {
    match cli.command {
        Command::Verify(a) => cmd_verify(&a),
        Command::Search(a) => cmd_search(&a),
        Command::Bounds(a) => cmd_bounds(&a),
        Command::Convert(a) => cmd_convert(&a, false),
        Command::Complement(a) => cmd_convert(&a, true),
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

/// Reads one or more graphs. `.g6`/`.graph6` files and files without a
/// leading `label:` line are graph6, one graph per line.
pub fn read_graphs(path: &Path) -> Result<Vec<Graph>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let format = match Format::from_path(path) {
        Format::Graph6 => Format::Graph6,
        Format::AdjacencyList => io::detect_format(&text),
    };
    let graphs = match format {
        Format::Graph6 => io::parse_graph6_lines(&text),
        Format::AdjacencyList => io::parse_adjacency_lists(&text).map(|g| vec![g]),
    }
    .map_err(|e| format!("{}: {e}", path.display()))?;
    if graphs.is_empty() {
        return Err(format!("{}: no graph found", path.display()));
    }
    Ok(graphs)
}

fn read_graph(path: &Path) -> Result<Graph, String> {
    let mut graphs = read_graphs(path)?;
    if graphs.len() > 1 {
        return Err(format!(
            "{}: expected one graph, found {}",
            path.display(),
            graphs.len()
        ));
    }
    Ok(graphs.remove(0))
}

fn describe_certificate(c: &Certificate) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}", c.summary());
    if !c.distinct {
        for d in &c.duplicate_values {
            let vs: Vec<String> = d.vertices.iter().map(i64::to_string).collect();
            let _ = writeln!(
                s,
                "  triangle-degree {} at vertices {}",
                d.value,
                vs.join(", ")
            );
        }
        let _ = writeln!(s, "  duplicate pairs P = {}", c.pair_count);
    }
    let degs: Vec<String> = c
        .k3_degrees
        .iter()
        .map(|v| format!("{}:{}", v.label, v.k3_degree))
        .collect();
    let _ = writeln!(s, "triangle-degrees {}", degs.join(" "));
    let _ = writeln!(s, "edges {}, triangles {}", c.edge_count, c.triangle_count);
    if let Some(b) = &c.bound_audit {
        let _ = writeln!(
            s,
            "bounds [{}, {}]: {}",
            b.k3_lower,
            b.k3_upper,
            if b.all_within {
                "all within"
            } else {
                "violated"
            }
        );
    }
    if c.certified {
        let passed = c.partition_audit.iter().filter(|a| a.passed()).count();
        let _ = writeln!(
            s,
            "partition audit {passed}/{} vertices pass",
            c.partition_audit.len()
        );
        let _ = writeln!(
            s,
            "complement check {}",
            if c.complement_check { "pass" } else { "fail" }
        );
    }
    s
}

pub fn cmd_verify(a: &VerifyArgs) -> CommandOutcome {
    let graphs = match read_graphs(&a.path) {
        Ok(g) => g,
        Err(e) => return CommandOutcome::input_error(e),
    };
    let certs: Vec<Certificate> = graphs.iter().map(certify).collect();
    let code = if certs.iter().all(|c| c.certified) {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    };
    let out = if a.json {
        if certs.len() == 1 {
            to_json(&certs[0])
        } else {
            to_json(&certs)
        }
    } else {
        certs
            .iter()
            .map(describe_certificate)
            .collect::<Vec<_>>()
            .join("\n")
    };
    CommandOutcome::ok(code, out)
}

fn describe_report(rep: &FeasibilityReport) -> String {
    let mut s = String::new();
    let known = match rep.known {
        KnownResult::Nonexistent => "none exist (known result)".to_string(),
        KnownResult::Open {
            n_min,
            n_max,
            k3_cap,
        } => {
            format!("open; orders {n_min}..={n_max}, triangle-degrees <= {k3_cap}")
        }
        KnownResult::Exists {
            witness_order: Some(n),
        } => format!("examples exist; a witness of order {n} ships as a fixture"),
        KnownResult::Exists {
            witness_order: None,
        } => "examples exist".to_string(),
        KnownResult::Unknown => "unknown".to_string(),
    };
    let _ = writeln!(s, "r = {}: {known}", rep.r);
    let _ = writeln!(s, "candidates:");
    if rep.candidates.is_empty() {
        let _ = writeln!(s, "  none");
    }
    for c in &rep.candidates {
        let _ = writeln!(
            s,
            "  n = {:<4} triangle-degrees {}..={}",
            c.n, c.k3_lo, c.k3_hi
        );
    }
    let _ = writeln!(s, "exclusions:");
    if rep.exclusions.is_empty() {
        let _ = writeln!(s, "  none");
    }
    for e in &rep.exclusions {
        let _ = writeln!(s, "  n = {:<4} {}", e.n, e.reason);
    }
    s
}

#[derive(serde::Serialize)]
struct PartitionRow {
    d: u64,
    #[serde(flatten)]
    stats: PartitionStats,
}

fn partition_table(r: u64, n: u64) -> Result<Vec<PartitionRow>, String> {
    let hi = k3_upper_bound(r).map_err(|e| e.to_string())?;
    let lo = k3_lower_bound(r, n).map_err(|e| e.to_string())?.max(0) as u64;
    (lo..=hi)
        .map(|d| {
            partition_stats(r, n, d)
                .map(|stats| PartitionRow { d, stats })
                .map_err(|e| e.to_string())
        })
        .collect()
}

pub fn cmd_bounds(a: &BoundsArgs) -> CommandOutcome {
    let rep = match feasibility_report(a.r) {
        Ok(r) => r,
        Err(e) => return CommandOutcome::input_error(e),
    };
    let table = match a.n {
        Some(n) => match partition_table(a.r, n) {
            Ok(t) => Some(t),
            Err(e) => return CommandOutcome::input_error(e),
        },
        None => None,
    };
    if a.json {
        let mut v = serde_json::to_value(&rep).expect("serialisable");
        if let (Some(t), Some(n)) = (&table, a.n) {
            v["n"] = json!(n);
            v["partition"] = serde_json::to_value(t).expect("serialisable");
        }
        return CommandOutcome::ok(EXIT_OK, to_json(&v));
    }
    let mut s = describe_report(&rep);
    if let (Some(t), Some(n)) = (table, a.n) {
        let _ = writeln!(s, "partition around a vertex, r = {}, n = {n}:", a.r);
        let _ = writeln!(
            s,
            "  {:>4} {:>4} {:>6} {:>7} {:>4} {:>6}  feasible",
            "d", "|A|", "|E(A)|", "|E(A,B)|", "|B|", "|E(B)|"
        );
        for row in t {
            let p = row.stats;
            let _ = writeln!(
                s,
                "  {:>4} {:>4} {:>6} {:>7} {:>4} {:>6}  {}",
                row.d,
                p.size_a,
                p.edges_a,
                p.edges_ab,
                p.size_b,
                p.edges_b,
                if p.infeasible { "no" } else { "yes" }
            );
        }
    }
    CommandOutcome::ok(EXIT_OK, s)
}

fn output_format(a: &ConvertArgs) -> Format {
    match (a.to, &a.output) {
        (Some(OutFormat::Adj), _) => Format::AdjacencyList,
        (Some(OutFormat::Graph6), _) => Format::Graph6,
        (None, Some(p)) => Format::from_path(p),
        (None, None) => Format::Graph6,
    }
}

pub fn cmd_convert(a: &ConvertArgs, complement: bool) -> CommandOutcome {
    let g = match read_graph(&a.input) {
        Ok(g) => g,
        Err(e) => return CommandOutcome::input_error(e),
    };
    let g = if complement { g.complement() } else { g };
    let text = io::write(&g, output_format(a));
    match &a.output {
        None => CommandOutcome::ok(EXIT_OK, text),
        Some(p) => match fs::write(p, text) {
            Ok(()) => CommandOutcome::ok(EXIT_OK, String::new()),
            Err(e) => CommandOutcome::input_error(format!("{}: {e}", p.display())),
        },
    }
}

/// Config file (if any) overlaid with the flags that were given.
pub fn build_config(a: &SearchArgs) -> Result<SearchConfig, String> {
    let mut obj = match &a.config {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            match serde_json::from_str::<Value>(&text) {
                Ok(Value::Object(m)) => m,
                Ok(_) => return Err(format!("{}: expected a JSON object", p.display())),
                Err(e) => return Err(format!("{}: {e}", p.display())),
            }
        }
        None => Map::new(),
    };
    let mut set = |k: &str, v: Value| {
        obj.insert(k.to_string(), v);
    };
    if let Some(x) = a.r {
        set("r", json!(x));
    }
    if let Some(x) = a.n {
        set("n", json!(x));
        set("n_lo", Value::Null);
        set("n_hi", Value::Null);
    }
    if let (Some(lo), Some(hi)) = (a.n_lo, a.n_hi) {
        set("n", Value::Null);
        set("n_lo", json!(lo));
        set("n_hi", json!(hi));
    }
    if let Some(x) = a.pop {
        set("population_size", json!(x));
    }
    if let Some(x) = a.offspring {
        set("offspring_factor", json!(x));
    }
    if let Some(x) = a.carryover {
        set("carryover_fraction", json!(x));
    }
    if let Some(ms) = &a.mutations {
        let kinds = ms
            .iter()
            .map(|m| m.parse::<k3irreg::evolve::MutationKind>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        set("mutation_set", json!(kinds));
    }
    if let Some(x) = a.max_gens {
        set("max_generations", json!(x));
    }
    if let Some(x) = a.time_budget {
        set("time_budget", json!(x));
    }
    if let Some(x) = a.seed {
        set("seed", json!(x));
    }
    if let Some(x) = a.init_switches {
        set("init_randomization_switches", json!(x));
    }
    if let Some(x) = a.retry_budget {
        set("retry_budget", json!(x));
    }
    if let Some(x) = a.threads {
        set("threads", json!(x));
    }
    if !obj.contains_key("r") {
        return Err("--r is required (or give it in --config)".into());
    }
    serde_json::from_value(Value::Object(obj)).map_err(|e| format!("configuration: {e}"))
}

fn write_trace(path: &Path, trace: &[TraceEntry]) -> std::io::Result<()> {
    let mut s =
        String::from("generation,best_fitness,best_pair_count,best_order,mean_pair_count\n");
    for t in trace {
        let _ = writeln!(
            s,
            "{},{},{},{},{}",
            t.generation, t.best_fitness, t.best_pair_count, t.best_order, t.mean_pair_count
        );
    }
    fs::write(path, s)
}

fn append_witness(path: &Path, g: &Graph) -> std::io::Result<()> {
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)?;
    writeln!(f, "{}", io::write_graph6(g))
}

pub fn cmd_search(a: &SearchArgs) -> CommandOutcome {
    let config = match build_config(a) {
        Ok(c) => c,
        Err(e) => return CommandOutcome::input_error(e),
    };
    if let Err(e) = config.validate() {
        return CommandOutcome::input_error(e);
    }
    if a.checkpoint_every == 0 {
        return CommandOutcome::input_error("--checkpoint-every must be positive");
    }
    let resume = match &a.resume {
        Some(p) => match Checkpoint::load(p) {
            Ok(cp) => Some(cp),
            Err(e) => return CommandOutcome::input_error(e),
        },
        None => None,
    };
    let exec = match Executor::parallel(config.threads) {
        Ok(x) => x,
        Err(e) => return CommandOutcome::input_error(e),
    };

    let mut io_errors: Vec<String> = Vec::new();
    let every = a.checkpoint_every;
    let result = search_with(&config, &exec, resume.as_ref(), |p| {
        if let Some(path) = &a.checkpoint {
            if p.generation % every == 0 {
                if let Err(e) = p.checkpoint().save(path) {
                    io_errors.push(format!("checkpoint {}: {e}", path.display()));
                }
            }
        }
    });
    let result: SearchResult = match result {
        Ok(r) => r,
        Err(e) => return CommandOutcome::input_error(e),
    };

    if let Some(path) = &a.trace {
        if let Err(e) = write_trace(path, &result.trace) {
            io_errors.push(format!("trace {}: {e}", path.display()));
        }
    }
    if let (Some(path), Some(w)) = (&a.out, &result.witness) {
        if let Err(e) = append_witness(path, w) {
            io_errors.push(format!("witness {}: {e}", path.display()));
        }
    }

    let cert = certify(&result.best.graph);
    let code = match result.outcome {
        Outcome::Found => EXIT_OK,
        Outcome::BudgetExhausted => EXIT_EXHAUSTED,
    };
    let stdout = if a.json {
        to_json(&json!({
            "result": result.report(true),
            "certificate": cert,
        }))
    } else {
        let best = IndividualSummary::from(&result.best);
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{} after {} generations ({} evaluations, {:.2} s, seed {})",
            match result.outcome {
                Outcome::Found => "witness found",
                Outcome::BudgetExhausted => "budget exhausted",
            },
            result.generations_run,
            result.evaluations,
            result.wall_time.as_secs_f64(),
            result.seed
        );
        let _ = writeln!(
            s,
            "best: {} (fitness {})",
            cert.summary(),
            result.best.fitness
        );
        let _ = writeln!(s, "graph6: {}", best.graph6);
        s
    };
    let mut out = CommandOutcome::ok(code, stdout);
    for e in io_errors {
        out = out.warn(e);
    }
    out
}
