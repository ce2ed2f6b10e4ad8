use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::config::CopConfig;
use super::solver::{Layers, Solver};
use super::Budget;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const TABLE_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    /// Built against the eternal win set; every play ends back inside it.
    Eternal,
    /// Built against single-play capture only; later plays may start from
    /// configurations the table does not cover.
    SinglePlay,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateKey {
    pub config: CopConfig,
    pub robber: usize,
    pub steps_left: usize,
}

/// A positional cop strategy: cop-turn state → next configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyTable {
    pub graph_hash: String,
    pub n: usize,
    pub k: usize,
    pub t: usize,
    pub kind: TableKind,
    /// Sorted. Plays may start from any of these.
    pub winning: Vec<CopConfig>,
    pub moves: BTreeMap<StateKey, CopConfig>,
}

#[derive(Serialize, Deserialize)]
struct WireMove {
    config: CopConfig,
    robber: usize,
    steps_left: usize,
    #[serde(rename = "move")]
    to: CopConfig,
}

#[derive(Serialize, Deserialize)]
struct WireTable {
    version: u32,
    graph_hash: String,
    n: usize,
    k: usize,
    t: usize,
    kind: TableKind,
    winning_configs: Vec<CopConfig>,
    moves: Vec<WireMove>,
}

impl StrategyTable {
    pub fn lookup(&self, config: &CopConfig, robber: usize, steps_left: usize) -> Option<&CopConfig> {
        self.moves.get(&StateKey { config: config.clone(), robber, steps_left })
    }

    pub fn to_json(&self) -> Result<String> {
        let wire = WireTable {
            version: TABLE_VERSION,
            graph_hash: self.graph_hash.clone(),
            n: self.n,
            k: self.k,
            t: self.t,
            kind: self.kind,
            winning_configs: self.winning.clone(),
            moves: self
                .moves
                .iter()
                .map(|(key, to)| WireMove {
                    config: key.config.clone(),
                    robber: key.robber,
                    steps_left: key.steps_left,
                    to: to.clone(),
                })
                .collect(),
        };
        Ok(serde_json::to_string_pretty(&wire)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let wire: WireTable = serde_json::from_str(text)?;
        if wire.version != TABLE_VERSION {
            return Err(Error::TableVersion(wire.version));
        }
        let moves = wire
            .moves
            .into_iter()
            .map(|m| (StateKey { config: m.config, robber: m.robber, steps_left: m.steps_left }, m.to))
            .collect();
        Ok(StrategyTable {
            graph_hash: wire.graph_hash,
            n: wire.n,
            k: wire.k,
            t: wire.t,
            kind: wire.kind,
            winning: wire.winning_configs,
            moves,
        })
    }

    pub fn check_graph(&self, g: &Graph) -> Result<()> {
        let actual = g.hash();
        if actual != self.graph_hash {
            return Err(Error::GraphMismatch { expected: self.graph_hash.clone(), actual });
        }
        Ok(())
    }

    /// Exhaustively plays the table against every robber from every winning
    /// configuration. Checks move legality, capture within `t`, and (for
    /// eternal tables) that every capture configuration is winning again.
    pub fn certify(&self, g: &Graph) -> Result<()> {
        self.check_graph(g)?;
        let winning: BTreeSet<&CopConfig> = self.winning.iter().collect();
        let fail = |why: String| Err(Error::Hypothesis(format!("strategy table fails certification: {why}")));
        for w in &self.winning {
            for r in (0..g.n()).filter(|&r| !w.occupies(r)) {
                let mut stack = vec![(w.clone(), r, self.t)];
                let mut seen = BTreeSet::new();
                while let Some((c, r, s)) = stack.pop() {
                    if !seen.insert((c.clone(), r, s)) {
                        continue;
                    }
                    if s == 0 {
                        return fail(format!("robber on {r} survives {} steps against {w}", self.t));
                    }
                    let Some(d) = self.lookup(&c, r, s) else {
                        return Err(Error::MissingState { config: c.positions().to_vec(), robber: r, steps_left: s });
                    };
                    if !is_legal_move(g, &c, d) {
                        return fail(format!("illegal move {c} -> {d}"));
                    }
                    let captured_now = d.occupies(r);
                    for r2 in g.closed_neighbors(r).iter().copied() {
                        if captured_now || d.occupies(r2) {
                            if self.kind == TableKind::Eternal && !winning.contains(d) {
                                return fail(format!("capture ends in non-winning {d}"));
                            }
                        } else {
                            stack.push((d.clone(), r2, s - 1));
                        }
                        if captured_now {
                            break;
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Can the cops of `from` move to `to` in one turn (each cop to a closed neighbour)?
pub fn is_legal_move(g: &Graph, from: &CopConfig, to: &CopConfig) -> bool {
    fn assign(g: &Graph, from: &[usize], to: &[usize], used: &mut [bool], i: usize) -> bool {
        if i == from.len() {
            return true;
        }
        for j in 0..to.len() {
            if !used[j] && (from[i] == to[j] || g.has_edge(from[i], to[j])) {
                used[j] = true;
                if assign(g, from, to, used, i + 1) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    from.k() == to.k() && assign(g, from.positions(), to.positions(), &mut vec![false; to.k()], 0)
}

fn explore(solver: &Solver<'_>, layers: &Layers, target: &[bool], starts: &[usize], t: usize) -> BTreeMap<StateKey, CopConfig> {
    let g = solver.graph();
    let mut moves = BTreeMap::new();
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();
    for &w in starts {
        for r in 0..g.n() {
            if solver.occupancy(w) >> r & 1 == 0 {
                stack.push((w, r, t));
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    while let Some((c, r, s)) = stack.pop() {
        if !seen.insert((c, r, s)) {
            continue;
        }
        let Some(d) = solver.best_move(layers, target, c, r, s) else { continue };
        moves.insert(
            StateKey { config: solver.config(c).clone(), robber: r, steps_left: s },
            solver.config(d).clone(),
        );
        if solver.occupancy(d) >> r & 1 == 1 {
            continue;
        }
        for &r2 in g.closed_neighbors(r) {
            if solver.occupancy(d) >> r2 & 1 == 0 {
                stack.push((d, r2, s - 1));
            }
        }
    }
    moves
}

/// Positional strategy for `k` cops winning every play within `t` steps.
/// At each state the fastest winning move is chosen, ties going to the
/// lexicographically least configuration.
pub fn extract_strategy(g: &Graph, k: usize, t: usize, budget: Budget) -> Result<StrategyTable> {
    if t == 0 {
        return Err(Error::InvalidParameter("time bound t must be at least 1".into()));
    }
    g.ensure_connected()?;
    let solver = Solver::new(g, k, budget)?;
    let run = solver.eternal(t)?;
    let starts: Vec<usize> = (0..solver.len()).filter(|&c| run.win[c]).collect();
    if starts.is_empty() {
        return Err(Error::EmptyWinSet { k, t });
    }
    let moves = explore(&solver, &run.layers, &run.win, &starts, t);
    Ok(StrategyTable {
        graph_hash: g.hash(),
        n: g.n(),
        k,
        t,
        kind: TableKind::Eternal,
        winning: starts.iter().map(|&c| solver.config(c).clone()).collect(),
        moves,
    })
}

/// Like [`extract_strategy`] but only guarantees each single play. Useful to
/// watch a scripted robber break a strategy that ignores later plays.
pub fn extract_single_play_strategy(g: &Graph, k: usize, t: usize, budget: Budget) -> Result<StrategyTable> {
    if t == 0 {
        return Err(Error::InvalidParameter("time bound t must be at least 1".into()));
    }
    g.ensure_connected()?;
    let solver = Solver::new(g, k, budget)?;
    let all = vec![true; solver.len()];
    let layers = solver.layers(t, &all)?;
    let starts: Vec<usize> = (0..solver.len()).filter(|&c| solver.covers(&layers, t, c)).collect();
    if starts.is_empty() {
        return Err(Error::EmptyWinSet { k, t });
    }
    let moves = explore(&solver, &layers, &all, &(0..solver.len()).collect::<Vec<_>>(), t);
    Ok(StrategyTable {
        graph_hash: g.hash(),
        n: g.n(),
        k,
        t,
        kind: TableKind::SinglePlay,
        winning: starts.iter().map(|&c| solver.config(c).clone()).collect(),
        moves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{cycle, generate, path};

    #[test]
    fn path_three_moves_toward_robber() {
        let g = path(3).unwrap();
        let table = extract_strategy(&g, 1, 2, Budget::default()).unwrap();
        let center = CopConfig::new(vec![1]);
        assert_eq!(table.lookup(&center, 0, 2), Some(&CopConfig::new(vec![0])));
        assert_eq!(table.lookup(&center, 2, 2), Some(&CopConfig::new(vec![2])));
        table.certify(&g).unwrap();
    }

    #[test]
    fn c7_three_cops_one_step() {
        let g = cycle(7).unwrap();
        let table = extract_strategy(&g, 3, 1, Budget::default()).unwrap();
        table.certify(&g).unwrap();
        for w in &table.winning {
            for r in (0..7).filter(|&r| !w.occupies(r)) {
                assert!(table.lookup(w, r, 1).unwrap().occupies(r));
            }
        }
    }

    #[test]
    fn empty_win_set_is_an_error() {
        let g = generate("spider:3x4").unwrap();
        assert_eq!(extract_strategy(&g, 1, 5, Budget::default()), Err(Error::EmptyWinSet { k: 1, t: 5 }));
    }

    #[test]
    fn json_round_trip_and_hash_check() {
        let g = path(4).unwrap();
        let table = extract_strategy(&g, 1, 3, Budget::default()).unwrap();
        let back = StrategyTable::from_json(&table.to_json().unwrap()).unwrap();
        assert_eq!(back, table);
        assert!(matches!(back.check_graph(&path(5).unwrap()), Err(Error::GraphMismatch { .. })));
    }

    #[test]
    fn version_is_checked() {
        let g = path(2).unwrap();
        let json = extract_strategy(&g, 1, 1, Budget::default()).unwrap().to_json().unwrap();
        let bumped = json.replacen("\"version\": 1", "\"version\": 9", 1);
        assert_eq!(StrategyTable::from_json(&bumped), Err(Error::TableVersion(9)));
    }

    #[test]
    fn legality() {
        let g = path(4).unwrap();
        let c = |v: &[usize]| CopConfig::new(v.to_vec());
        assert!(is_legal_move(&g, &c(&[0, 3]), &c(&[1, 2])));
        assert!(!is_legal_move(&g, &c(&[0, 0]), &c(&[1, 2])));
        assert!(is_legal_move(&g, &c(&[1, 1]), &c(&[0, 2])));
    }
}
