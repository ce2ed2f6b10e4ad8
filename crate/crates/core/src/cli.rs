//! The `eternal-pursuit` command line.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 invalid input, 3 state
//! budget exceeded.

use std::fs;
use std::io::{BufRead, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::bounds::{report_all, report_family, BoundSet, BOUND_NAMES};
use crate::engine::{
    capt_k, eternal_cop_number, extract_strategy, Budget, Session, Solver, StrategyTable,
};
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};
use crate::reduction::{build_reduction, SetCoverInstance};
use crate::verify::{self, Limits, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Largest graph for which `bound` also runs the exact solver.
const CROSS_CHECK_MAX_N: usize = 16;

#[derive(Debug, Parser)]
#[command(name = "eternal-pursuit", version, about = "Cops and eternal robbers: exact values and bounds")]
pub struct Cli {
    /// Worker threads for the solver (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph as an edge list.
    Gen {
        /// Generator spec (e.g. `spider:3x4`) or graph file.
        graph: String,
        #[arg(long)]
        json: bool,
    },
    /// Eternal cop number, or whether K cops suffice.
    Solve {
        graph: String,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Save the winning strategy table as JSON.
        #[arg(long)]
        strategy_out: Option<PathBuf>,
    },
    /// Capture time of K cops in a single play.
    Capt {
        graph: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Closed-form and constructive bounds.
    Bound {
        graph: String,
        #[arg(long)]
        t: usize,
        /// Comma-separated bound names, or `all`.
        #[arg(long, default_value = "all")]
        which: String,
        #[arg(long)]
        json: bool,
        /// Skip the exact cross-check.
        #[arg(long)]
        no_exact: bool,
    },
    /// Build the set cover reduction graph from an instance file.
    Reduce {
        instance: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run formula-versus-solver suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        #[arg(long, default_value_t = 4)]
        max_t: usize,
        #[arg(long)]
        json: bool,
    },
    /// Play the robber against an optimal cop strategy.
    Play {
        graph: String,
        #[arg(long)]
        t: usize,
        /// Number of cops (default: the eternal cop number).
        #[arg(long, conflicts_with = "table")]
        k: Option<usize>,
        /// Strategy table saved by `solve --strategy-out`.
        #[arg(long)]
        table: Option<PathBuf>,
    },
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    hash: Option<String>,
}

/// A generator spec, or a file holding an edge list or `{"n", "edges"}` JSON.
pub fn load_graph(arg: &str) -> Result<(Graph, Option<Family>)> {
    let path = std::path::Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        let g = if text.trim_start().starts_with('{') {
            let j: GraphJson = serde_json::from_str(&text)?;
            Graph::new(j.n, &j.edges)?
        } else {
            Graph::from_edge_list(&text)?
        };
        return Ok((g, None));
    }
    let family: Family = arg.parse()?;
    Ok((family.build()?, Some(family)))
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } | Error::TooManyVertices { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, S>(args: I, input: &mut (dyn BufRead + Send), out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = cli.jobs {
        pool = pool.num_threads(j);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: cannot start worker threads: {e}");
            return EXIT_INVALID;
        }
    };
    match pool.install(|| execute(cli.command, input, out, err)) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cmd: Command, input: &mut (dyn BufRead + Send), out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<i32> {
    let budget = Budget::from_env();
    match cmd {
        Command::Gen { graph, json } => {
            let (g, _) = load_graph(&graph)?;
            if json {
                let j = GraphJson { n: g.n(), edges: g.edges().collect(), hash: Some(g.hash()) };
                writeln!(out, "{}", serde_json::to_string_pretty(&j)?)?;
            } else {
                write!(out, "{}", g.to_edge_list())?;
            }
        }
        Command::Solve { graph, t, k, json, strategy_out } => {
            let (g, _) = load_graph(&graph)?;
            solve(&g, t, k, json, strategy_out, budget, out)?;
        }
        Command::Capt { graph, k, json } => {
            let (g, _) = load_graph(&graph)?;
            let capt = capt_k(&g, k, budget)?;
            if json {
                writeln!(out, "{}", json!({ "k": k, "capt": capt }))?;
            } else {
                match capt {
                    Some(c) => writeln!(out, "capt_{k} = {c}")?,
                    None => writeln!(out, "capt_{k} = infinite")?,
                }
            }
        }
        Command::Bound { graph, t, which, json, no_exact } => {
            let (g, family) = load_graph(&graph)?;
            return bound(&g, family.as_ref(), t, &which, json, no_exact, budget, out, err);
        }
        Command::Reduce { instance, t, json } => {
            let inst: SetCoverInstance = fs::read_to_string(instance)?.parse()?;
            let red = build_reduction(&inst, t)?;
            if json {
                let mut doc: serde_json::Value = serde_json::from_str(&red.roles_json()?)?;
                doc["edge_list"] = red.graph.to_edge_list().into();
                doc["hash"] = red.graph.hash().into();
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                write!(out, "{}", red.graph.to_edge_list())?;
                for (v, role) in red.roles.iter().enumerate() {
                    writeln!(out, "# {v} {}", serde_json::to_string(role)?)?;
                }
            }
        }
        Command::Verify { suite, max_n, max_t, json } => {
            let suite: Suite = suite.parse()?;
            let report = verify::run(suite, Limits { max_n, max_t, budget })?;
            if json {
                let doc = json!({
                    "checked": report.records.len(),
                    "mismatches": report.mismatches(),
                    "records": report.records,
                });
                writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
            } else {
                for r in &report.records {
                    writeln!(out, "{r}")?;
                }
                writeln!(out, "{} checked, {} mismatches", report.records.len(), report.mismatches())?;
            }
            return Ok(if report.passed() { EXIT_OK } else { EXIT_MISMATCH });
        }
        Command::Play { graph, t, k, table } => {
            let (g, _) = load_graph(&graph)?;
            let table = match table {
                Some(path) => {
                    let table = StrategyTable::from_json(&fs::read_to_string(path)?)?;
                    table.check_graph(&g)?;
                    if table.t != t {
                        return Err(Error::InvalidParameter(format!("table was built for t = {}", table.t)));
                    }
                    table
                }
                None => {
                    let k = match k {
                        Some(k) => k,
                        None => eternal_cop_number(&g, t, budget)?.k,
                    };
                    extract_strategy(&g, k, t, budget)?
                }
            };
            play(&g, &table, input, out, err)?;
        }
    }
    Ok(EXIT_OK)
}

fn solve(
    g: &Graph,
    t: usize,
    k: Option<usize>,
    json: bool,
    strategy_out: Option<PathBuf>,
    budget: Budget,
    out: &mut (dyn Write + Send),
) -> Result<()> {
    g.ensure_connected()?;
    if t == 0 {
        return Err(Error::InvalidParameter("time bound t must be at least 1".into()));
    }
    let decide = k.is_some();
    let (k, wins, stats) = match k {
        Some(k) => {
            let solver = Solver::new(g, k, budget)?;
            let run = solver.eternal(t)?;
            (k, run.win.iter().filter(|&&w| w).count(), run.stats)
        }
        None => {
            let v = eternal_cop_number(g, t, budget)?;
            (v.k, 1, v.stats)
        }
    };
    if let Some(path) = strategy_out {
        if wins > 0 {
            fs::write(path, extract_strategy(g, k, t, budget)?.to_json()?)?;
        }
    }
    if json {
        let doc = json!({
            "graph_hash": g.hash(),
            "n": g.n(),
            "t": t,
            "k": k,
            "wins": wins > 0,
            "stats": { "configs": stats.configs, "states": stats.states, "rounds": stats.rounds },
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        writeln!(out, "n = {}, m = {}, t = {t}", g.n(), g.edge_count())?;
        if decide {
            let verdict = if wins > 0 { format!("win eternally from {wins} configuration(s)") } else { "lose".into() };
            writeln!(out, "{k} cop(s): {verdict}")?;
        } else {
            writeln!(out, "eternal cop number: {k}")?;
        }
        writeln!(out, "configs explored: {}, states: {}, fixpoint rounds: {}", stats.configs, stats.states, stats.rounds)?;
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn bound(
    g: &Graph,
    family: Option<&Family>,
    t: usize,
    which: &str,
    json: bool,
    no_exact: bool,
    budget: Budget,
    out: &mut (dyn Write + Send),
    err: &mut (dyn Write + Send),
) -> Result<i32> {
    let mut set: BoundSet = match family {
        Some(f) => report_family(f, t as u64, budget)?,
        None => report_all(g, t as u64, budget)?,
    };
    if which != "all" {
        let names: Vec<&str> = which.split(',').map(str::trim).collect();
        if let Some(bad) = names.iter().find(|n| !BOUND_NAMES.contains(n)) {
            return Err(Error::InvalidParameter(format!("unknown bound `{bad}`; known: {}", BOUND_NAMES.join(", "))));
        }
        set = set.select(&names);
    }
    let exact = if no_exact || g.n() > CROSS_CHECK_MAX_N {
        None
    } else {
        match eternal_cop_number(g, t, budget) {
            Ok(v) => Some(v.k as u64),
            Err(Error::BudgetExceeded { .. }) => None,
            Err(e) => return Err(e),
        }
    };
    let violated: Vec<&str> = match exact {
        Some(x) => set.reports.iter().filter(|r| !r.admits(x)).map(|r| r.name.as_str()).collect(),
        None => Vec::new(),
    };
    if json {
        let skipped: Vec<_> = set.skipped.iter().map(|(n, why)| json!({ "name": n, "reason": why })).collect();
        let doc = json!({ "t": t, "reports": set.reports, "skipped": skipped, "exact": exact, "violated": violated });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
    } else {
        for r in &set.reports {
            writeln!(out, "{r}")?;
        }
        for (name, why) in &set.skipped {
            writeln!(err, "skipped {name}: {why}")?;
        }
        if let Some(x) = exact {
            writeln!(out, "exact eternal cop number: {x}")?;
        }
    }
    if violated.is_empty() {
        Ok(EXIT_OK)
    } else {
        writeln!(err, "bounds contradicted by the exact value: {}", violated.join(", "))?;
        Ok(EXIT_MISMATCH)
    }
}

/// Reads robber input line by line: a vertex, `.` or an empty line to stay
/// put, `q` to quit.
fn play(g: &Graph, table: &StrategyTable, input: &mut (dyn BufRead + Send), out: &mut (dyn Write + Send), err: &mut (dyn Write + Send)) -> Result<()> {
    let mut session = Session::new(table, g)?;
    writeln!(out, "{} cop(s), capture within {} step(s); enter q to quit", table.k, table.t)?;
    let mut shown = 0;
    let mut line = String::new();
    loop {
        let events = &session.transcript().events;
        for e in &events[shown..] {
            writeln!(out, "{e}")?;
        }
        shown = events.len();
        if !session.robber_can_place() {
            writeln!(out, "the cops occupy every vertex; no robber can appear")?;
            return Ok(());
        }
        match session.robber() {
            None => write!(out, "place robber> ")?,
            Some(r) => write!(out, "robber on {r}, {} step(s) left, move> ", session.steps_left())?,
        }
        out.flush()?;
        line.clear();
        if input.read_line(&mut line)? == 0 {
            writeln!(out)?;
            return Ok(());
        }
        let cmd = line.trim();
        if cmd == "q" {
            return Ok(());
        }
        let target = match (session.robber(), cmd) {
            (Some(r), "" | ".") => r,
            _ => match cmd.parse::<usize>() {
                Ok(v) => v,
                Err(_) => {
                    writeln!(err, "expected a vertex number, `.` to stay, or q")?;
                    continue;
                }
            },
        };
        let result = if session.robber().is_some() { session.robber_move(target) } else { session.place(target) };
        if let Err(e) = result {
            match e {
                Error::MissingState { .. } => return Err(e),
                _ => writeln!(err, "rejected: {e}")?,
            }
        }
    }
}
