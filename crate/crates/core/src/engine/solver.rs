use rayon::prelude::*;

use super::config::{config_count, CopConfig, MultisetIter};
use super::{Budget, Target};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Robber positions are tracked in `u128` bitsets.
pub const MAX_ENGINE_VERTICES: usize = 128;

/// Counters reported by the solver.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Cop configurations in the state space.
    pub configs: usize,
    /// Game states evaluated (cop and robber turns).
    pub states: u64,
    /// Fixpoint rounds, including the seeding round.
    pub rounds: usize,
}

impl SolveStats {
    pub fn absorb(&mut self, other: &SolveStats) {
        self.configs += other.configs;
        self.states += other.states;
        self.rounds += other.rounds;
    }
}

/// State space for `k` cops on one graph: configurations, occupancy masks
/// and the move relation between configurations.
pub struct Solver<'g> {
    graph: &'g Graph,
    k: usize,
    configs: Vec<CopConfig>,
    occ: Vec<u128>,
    succ: Vec<Vec<u32>>,
    closed: Vec<u128>,
    full: u128,
    budget: Budget,
}

/// Win bitsets for every step count of one bounded play.
///
/// `cop[s][c]` has bit `r` set when the cops, to move in configuration `c`
/// with `s` time-steps left, win against a robber on `r`. `robber[s][c]` is
/// the same for robber-turn states after the cops moved into `c`.
#[derive(Debug, Clone)]
pub struct Layers {
    pub cop: Vec<Vec<u128>>,
    pub robber: Vec<Vec<u128>>,
}

impl Layers {
    pub fn t(&self) -> usize {
        self.cop.len() - 1
    }

    pub fn cop_wins(&self, s: usize, c: usize, r: usize) -> bool {
        self.cop[s][c] >> r & 1 == 1
    }

    pub fn robber_loses(&self, s: usize, c: usize, r: usize) -> bool {
        self.robber[s][c] >> r & 1 == 1
    }
}

/// Minimal capture times for every cop-turn state of the unbounded game.
#[derive(Debug, Clone)]
pub struct CaptureTimes {
    n: usize,
    occ: Vec<u128>,
    /// `time[c * n + r]`, `u32::MAX` when the robber escapes forever.
    time: Vec<u32>,
}

impl CaptureTimes {
    pub fn get(&self, c: usize, r: usize) -> Option<u32> {
        let v = self.time[c * self.n + r];
        (v != u32::MAX).then_some(v)
    }

    /// Worst-case capture time from configuration `c`; `Some(0)` when `c` covers every vertex.
    pub fn worst_case(&self, c: usize) -> Option<u32> {
        let mut worst = 0;
        for r in 0..self.n {
            if self.occ[c] >> r & 1 == 1 {
                continue;
            }
            worst = worst.max(self.get(c, r)?);
        }
        Some(worst)
    }

    /// `min_c max_r time(c, r)`.
    pub fn capture_time(&self) -> Option<usize> {
        (0..self.occ.len()).filter_map(|c| self.worst_case(c)).min().map(|v| v as usize)
    }
}

/// Result of the eternal fixpoint.
#[derive(Debug, Clone)]
pub struct EternalRun {
    pub win: Vec<bool>,
    /// Layers of the last round, computed against the final win set.
    pub layers: Layers,
    pub stats: SolveStats,
}

impl EternalRun {
    pub fn winning_configs(&self, solver: &Solver<'_>) -> Vec<CopConfig> {
        (0..solver.len()).filter(|&c| self.win[c]).map(|c| solver.config(c).clone()).collect()
    }
}

impl<'g> Solver<'g> {
    pub fn new(graph: &'g Graph, k: usize, budget: Budget) -> Result<Self> {
        let n = graph.n();
        if n > MAX_ENGINE_VERTICES {
            return Err(Error::TooManyVertices { n, limit: MAX_ENGINE_VERTICES });
        }
        if k == 0 {
            return Err(Error::InvalidParameter("cop count k must be at least 1".into()));
        }
        let count = config_count(n, k).unwrap_or(u128::MAX);
        budget.check(count.saturating_mul(n as u128))?;
        let configs: Vec<CopConfig> = MultisetIter::new(n, k).map(CopConfig::new).collect();
        let occ: Vec<u128> = configs
            .iter()
            .map(|c| c.positions().iter().fold(0u128, |m, &v| m | 1 << v))
            .collect();
        let closed: Vec<u128> = (0..n)
            .map(|v| graph.closed_neighbors(v).iter().fold(0u128, |m, &w| m | 1 << w))
            .collect();
        let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
        let mut solver = Solver { graph, k, configs, occ, succ: Vec::new(), closed, full, budget };
        solver.succ = solver.build_successors()?;
        Ok(solver)
    }

    fn build_successors(&self) -> Result<Vec<Vec<u32>>> {
        let mut total: u128 = 0;
        let mut out = Vec::with_capacity(self.configs.len());
        for c in &self.configs {
            // grow sorted partial multisets cop by cop
            let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
            for &pos in c.positions() {
                let mut next = Vec::new();
                for p in &partial {
                    for &w in self.graph.closed_neighbors(pos) {
                        let mut q = p.clone();
                        let at = q.partition_point(|&x| x <= w);
                        q.insert(at, w);
                        next.push(q);
                    }
                }
                next.sort_unstable();
                next.dedup();
                partial = next;
            }
            let mut idx: Vec<u32> = partial
                .iter()
                .map(|p| self.index_of_slice(p).expect("successor is a valid config") as u32)
                .collect();
            idx.sort_unstable();
            total += idx.len() as u128;
            self.budget.check(total)?;
            out.push(idx);
        }
        Ok(out)
    }

    pub fn graph(&self) -> &Graph {
        self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn config(&self, c: usize) -> &CopConfig {
        &self.configs[c]
    }

    pub fn occupancy(&self, c: usize) -> u128 {
        self.occ[c]
    }

    /// Configurations reachable in one cop turn, sorted (lexicographic order).
    pub fn successors(&self, c: usize) -> &[u32] {
        &self.succ[c]
    }

    pub fn index_of(&self, config: &CopConfig) -> Option<usize> {
        self.index_of_slice(config.positions())
    }

    fn index_of_slice(&self, positions: &[usize]) -> Option<usize> {
        self.configs.binary_search_by(|c| c.positions().cmp(positions)).ok()
    }

    pub fn target_mask(&self, target: &Target) -> Vec<bool> {
        match target {
            Target::All => vec![true; self.len()],
            Target::Set(set) => self.configs.iter().map(|c| set.contains(c)).collect(),
        }
    }

    /// Does configuration `c` beat every robber placement with `s` steps left?
    pub fn covers(&self, layers: &Layers, s: usize, c: usize) -> bool {
        (layers.cop[s][c] | self.occ[c]) == self.full
    }

    /// Backward induction over `t` time-steps with capture allowed only into `target`.
    pub fn layers(&self, t: usize, target: &[bool]) -> Result<Layers> {
        let m = self.len();
        self.budget
            .check((t as u128 + 1) * 2 * m as u128 * self.graph.n() as u128)?;
        let mut cop = vec![vec![0u128; m]];
        let mut robber = vec![vec![0u128; m]];
        for s in 1..=t {
            let next_cop = self.cop_layer(&robber[s - 1], target);
            let next_robber = self.robber_layer(&next_cop, target);
            cop.push(next_cop);
            robber.push(next_robber);
        }
        Ok(Layers { cop, robber })
    }

    fn cop_layer(&self, robber_prev: &[u128], target: &[bool]) -> Vec<u128> {
        (0..self.len())
            .into_par_iter()
            .map(|c| {
                let mut acc = 0u128;
                for &d in &self.succ[c] {
                    let d = d as usize;
                    acc |= robber_prev[d];
                    if target[d] {
                        acc |= self.occ[d];
                    }
                }
                acc & !self.occ[c]
            })
            .collect()
    }

    fn robber_layer(&self, cop: &[u128], target: &[bool]) -> Vec<u128> {
        (0..self.len())
            .into_par_iter()
            .map(|c| {
                let good = cop[c] | if target[c] { self.occ[c] } else { 0 };
                let mut out = 0u128;
                for r in 0..self.graph.n() {
                    if self.occ[c] >> r & 1 == 0 && self.closed[r] & !good == 0 {
                        out |= 1 << r;
                    }
                }
                out
            })
            .collect()
    }

    /// Capture times of the unbounded game. Iterates until the win sets stop
    /// growing, which happens within `n * C(n+k-1, k)` steps.
    pub fn capture_times(&self) -> Result<CaptureTimes> {
        let (m, n) = (self.len(), self.graph.n());
        self.budget.check(m as u128 * n as u128 * 3)?;
        let all = vec![true; m];
        let mut time = vec![u32::MAX; m * n];
        let mut robber = vec![0u128; m];
        let mut prev_cop = vec![0u128; m];
        let mut s: u32 = 0;
        loop {
            s += 1;
            let cop = self.cop_layer(&robber, &all);
            for c in 0..m {
                let fresh = cop[c] & !prev_cop[c];
                for r in 0..n {
                    if fresh >> r & 1 == 1 {
                        time[c * n + r] = s;
                    }
                }
            }
            if cop == prev_cop {
                break;
            }
            robber = self.robber_layer(&cop, &all);
            prev_cop = cop;
        }
        Ok(CaptureTimes { n, occ: self.occ.clone(), time })
    }

    /// Greatest set `W` of configurations such that from each member every
    /// robber placement is caught within `t` steps with the capture
    /// configuration again in `W`. Seeded with the single-play winners.
    pub fn eternal(&self, t: usize) -> Result<EternalRun> {
        let m = self.len();
        let mut win = vec![true; m];
        let mut stats = SolveStats { configs: m, ..Default::default() };
        let per_round = (t as u64) * 2 * m as u64 * self.graph.n() as u64;
        loop {
            let layers = self.layers(t, &win)?;
            stats.rounds += 1;
            stats.states += per_round;
            let next: Vec<bool> = (0..m).map(|c| win[c] && self.covers(&layers, t, c)).collect();
            if next == win {
                return Ok(EternalRun { win, layers, stats });
            }
            win = next;
        }
    }

    /// The least `s` at which robber-turn state `(c, r)` is won by the cops.
    pub fn robber_depth(&self, layers: &Layers, c: usize, r: usize, max: usize) -> Option<usize> {
        (0..=max).find(|&s| layers.robber_loses(s, c, r))
    }

    /// The cops' move at cop-turn state `(c, r, s)`: among winning
    /// successors, the fastest, then the lexicographically least.
    pub fn best_move(&self, layers: &Layers, target: &[bool], c: usize, r: usize, s: usize) -> Option<usize> {
        if s == 0 || !layers.cop_wins(s, c, r) {
            return None;
        }
        let mut best: Option<(usize, usize)> = None;
        for &d in &self.succ[c] {
            let d = d as usize;
            let depth = if self.occ[d] >> r & 1 == 1 {
                if target[d] {
                    Some(0)
                } else {
                    None
                }
            } else {
                self.robber_depth(layers, d, r, s - 1).map(|x| x + 1)
            };
            if let Some(depth) = depth {
                if best.is_none_or(|(bd, _)| depth < bd) {
                    best = Some((depth, d));
                }
            }
        }
        best.map(|(_, d)| d)
    }

    /// Capture configurations reachable from `(c, r, s)` under [`Self::best_move`].
    pub fn capture_configs(&self, layers: &Layers, target: &[bool], c: usize, r: usize, s: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(c, r, s)];
        let mut seen = std::collections::HashSet::new();
        while let Some((c, r, s)) = stack.pop() {
            if !seen.insert((c, r, s)) {
                continue;
            }
            let Some(d) = self.best_move(layers, target, c, r, s) else { continue };
            if self.occ[d] >> r & 1 == 1 {
                out.push(d);
                continue;
            }
            for &r2 in self.graph.closed_neighbors(r) {
                if self.occ[d] >> r2 & 1 == 1 {
                    out.push(d);
                } else {
                    stack.push((d, r2, s - 1));
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{cycle, path};

    #[test]
    fn successors_of_single_cop_are_closed_neighbourhood() {
        let g = path(4).unwrap();
        let s = Solver::new(&g, 1, Budget::default()).unwrap();
        let succ: Vec<u32> = s.successors(1).to_vec();
        assert_eq!(succ, vec![0, 1, 2]);
    }

    #[test]
    fn successors_of_two_cops_dedupe() {
        // both cops on vertex 0 of P_2: (0,0), (0,1), (1,1)
        let g = path(2).unwrap();
        let s = Solver::new(&g, 2, Budget::default()).unwrap();
        assert_eq!(s.successors(0), &[0, 1, 2]);
    }

    #[test]
    fn capture_times_on_path() {
        let g = path(5).unwrap();
        let s = Solver::new(&g, 1, Budget::default()).unwrap();
        let ct = s.capture_times().unwrap();
        let c = s.index_of(&CopConfig::new(vec![0])).unwrap();
        assert_eq!(ct.get(c, 4), Some(4));
        assert_eq!(ct.get(c, 1), Some(1));
        assert_eq!(ct.capture_time(), Some(2));
    }

    #[test]
    fn cycle_never_captured_by_one_cop() {
        let g = cycle(5).unwrap();
        let s = Solver::new(&g, 1, Budget::default()).unwrap();
        assert_eq!(s.capture_times().unwrap().capture_time(), None);
    }

    #[test]
    fn layers_are_monotone_in_steps() {
        let g = cycle(6).unwrap();
        let s = Solver::new(&g, 2, Budget::default()).unwrap();
        let l = s.layers(4, &vec![true; s.len()]).unwrap();
        for step in 1..4 {
            for c in 0..s.len() {
                assert_eq!(l.cop[step][c] & !l.cop[step + 1][c], 0);
            }
        }
    }

    #[test]
    fn too_many_vertices() {
        let g = path(130).unwrap();
        assert!(matches!(Solver::new(&g, 1, Budget::default()), Err(Error::TooManyVertices { .. })));
    }
}
