//! Exact solving of the bounded-time pursuit game and its eternal variant.
//!
//! A play starts with the robber placing himself on an unoccupied vertex.
//! Each time-step is a cop turn (every cop moves to a closed neighbour,
//! simultaneously) followed by a robber turn. The robber is caught when a cop
//! lands on him or he steps onto a cop. Winning within `t` time-steps means
//! the capture happens no later than the `t`-th cop turn.
//!
//! In the eternal game the cops must also finish every play in a
//! configuration from which they can keep winning. That set is the greatest
//! fixpoint computed by [`Solver::eternal`].

mod config;
mod replay;
mod solver;
mod strategy;

use std::collections::BTreeSet;

pub use config::{binomial, config_count, enumerate_configs, CopConfig, MultisetIter};
pub use replay::{
    replay, run_policy, Event, PlayOutcome, PlayScript, RobberPolicy, ScriptedRobber, Session, SpiderSacrifice,
    Transcript,
};
pub use solver::{CaptureTimes, EternalRun, Layers, SolveStats, Solver, MAX_ENGINE_VERTICES};
pub use strategy::{
    extract_single_play_strategy, extract_strategy, is_legal_move, StateKey, StrategyTable, TableKind, TABLE_VERSION,
};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on memoised game states.
pub const DEFAULT_BUDGET: u64 = 50_000_000;

/// Environment variable overriding [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "ETERNAL_PURSUIT_BUDGET";

/// Upper limit on the number of memoised states a single solve may allocate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(DEFAULT_BUDGET)
    }
}

impl Budget {
    /// Reads [`BUDGET_ENV`], falling back to the default when unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(Budget)
            .unwrap_or_default()
    }

    pub fn check(self, needed: u128) -> Result<()> {
        if needed > self.0 as u128 {
            Err(Error::BudgetExceeded { needed, budget: self.0 })
        } else {
            Ok(())
        }
    }
}

/// Which capture configurations end a play successfully.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    All,
    Set(BTreeSet<CopConfig>),
}

/// Result of a single bounded play from a fixed start.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedOutcome {
    pub win: bool,
    /// Capture configurations reachable when the cops follow the fastest
    /// winning strategy against every robber reply. Empty on a loss.
    pub end_configs: BTreeSet<CopConfig>,
}

fn check_t(t: usize) -> Result<()> {
    if t == 0 {
        Err(Error::InvalidParameter("time bound t must be at least 1".into()))
    } else {
        Ok(())
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        Err(Error::InvalidParameter("cop count k must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Can the cops, starting from `start` against a robber on `robber`, force a
/// capture within `t` time-steps whose capture configuration lies in `target`?
pub fn bounded_capture(
    g: &Graph,
    start: &CopConfig,
    robber: usize,
    t: usize,
    target: &Target,
    budget: Budget,
) -> Result<BoundedOutcome> {
    check_t(t)?;
    g.ensure_connected()?;
    if robber >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: robber, n: g.n() });
    }
    if start.occupies(robber) {
        return Err(Error::RobberOnCop(robber));
    }
    let solver = Solver::new(g, start.k(), budget)?;
    let c = solver
        .index_of(start)
        .ok_or_else(|| Error::InvalidParameter(format!("config {start} is not on this graph")))?;
    let in_target = solver.target_mask(target);
    let layers = solver.layers(t, &in_target)?;
    if !layers.cop_wins(t, c, robber) {
        return Ok(BoundedOutcome { win: false, end_configs: BTreeSet::new() });
    }
    let end_configs = solver
        .capture_configs(&layers, &in_target, c, robber, t)
        .into_iter()
        .map(|i| solver.config(i).clone())
        .collect();
    Ok(BoundedOutcome { win: true, end_configs })
}

/// Does some placement of `k` cops catch every robber within `t` time-steps?
pub fn single_play_value(g: &Graph, k: usize, t: usize, budget: Budget) -> Result<bool> {
    check_t(t)?;
    check_k(k)?;
    g.ensure_connected()?;
    if k >= g.n() {
        return Ok(true);
    }
    let solver = Solver::new(g, k, budget)?;
    let layers = solver.layers(t, &vec![true; solver.len()])?;
    Ok((0..solver.len()).any(|c| solver.covers(&layers, t, c)))
}

/// `c_t(G)`: fewest cops that win a single play within `t` time-steps.
pub fn c_t(g: &Graph, t: usize, budget: Budget) -> Result<usize> {
    check_t(t)?;
    g.ensure_connected()?;
    for k in 1..=g.n() {
        if single_play_value(g, k, t, budget)? {
            return Ok(k);
        }
    }
    unreachable!("n cops always win")
}

/// `capt_k(G)`: the least `t` for which `k` cops win a single play, or `None`
/// when `k` cops never catch the robber. Zero when `k` cops can occupy every vertex.
pub fn capt_k(g: &Graph, k: usize, budget: Budget) -> Result<Option<usize>> {
    check_k(k)?;
    g.ensure_connected()?;
    let solver = Solver::new(g, k, budget)?;
    Ok(solver.capture_times()?.capture_time())
}

/// Classic cop number `c(G)`, from the unbounded capture game.
pub fn cop_number(g: &Graph, budget: Budget) -> Result<usize> {
    g.ensure_connected()?;
    for k in 1..=g.n() {
        let solver = Solver::new(g, k, budget)?;
        if solver.capture_times()?.capture_time().is_some() {
            return Ok(k);
        }
    }
    unreachable!("n cops always win")
}

/// Configurations from which `k` cops win every play within `t` time-steps.
pub fn eternal_win_set(g: &Graph, k: usize, t: usize, budget: Budget) -> Result<Vec<CopConfig>> {
    check_t(t)?;
    check_k(k)?;
    g.ensure_connected()?;
    let solver = Solver::new(g, k, budget)?;
    let run = solver.eternal(t)?;
    Ok(run.winning_configs(&solver))
}

/// `c_t^∞(G)` together with the solver statistics of the deciding run.
#[derive(Debug, Clone)]
pub struct EternalValue {
    pub k: usize,
    pub stats: SolveStats,
}

/// `c_t^∞(G)`: fewest cops winning every play within `t` time-steps.
pub fn eternal_cop_number(g: &Graph, t: usize, budget: Budget) -> Result<EternalValue> {
    check_t(t)?;
    g.ensure_connected()?;
    let mut total = SolveStats::default();
    for k in 1..=g.n() {
        let solver = Solver::new(g, k, budget)?;
        let run = solver.eternal(t)?;
        total.absorb(&run.stats);
        if run.win.iter().any(|&w| w) {
            return Ok(EternalValue { k, stats: total });
        }
    }
    unreachable!("n cops always win eternally")
}

/// `c_t^∞(G)` and a certified strategy table for that many cops.
pub fn solve_eternal(g: &Graph, t: usize, budget: Budget) -> Result<(EternalValue, StrategyTable)> {
    let value = eternal_cop_number(g, t, budget)?;
    let table = extract_strategy(g, value.k, t, budget)?;
    Ok((value, table))
}
