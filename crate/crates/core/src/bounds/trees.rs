//! Bounds specific to trees.
//!
//! Every connected subtree is a retract, and a tree of radius `r` is caught
//! by one cop in `r` steps. Partitioning a tree into subtrees and charging
//! each the least level `i` with `radius <= ell_i` gives an upper bound; the
//! partition minimising that charge is found by a dynamic program over the
//! rooted tree, tracking for the part that contains the current vertex its
//! height below that vertex and its diameter so far.

use std::collections::BTreeMap;

use super::decomposition::Decomposition;
use super::domination::max_far_set;
use super::formulas::{level_for_radius, sacrifice_threshold};
use super::report::{BoundKind, BoundReport, Certificate};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// `(height below the vertex, diameter)` of the part still open at a vertex.
type State = (u32, u32);

#[derive(Debug, Clone, Copy)]
enum Choice {
    Start,
    Cut,
    Join(State),
}

#[derive(Debug, Clone, Copy)]
struct Entry {
    cost: u64,
    prev: State,
    choice: Choice,
}

/// Level charged to a subtree of diameter `d`: least `i` with `ceil(d/2) <= ell_i`.
fn weight(d: u32, t: u64) -> Option<u32> {
    level_for_radius(d.div_ceil(2) as u64, t)
}

struct Solver<'a> {
    g: &'a Graph,
    t: u64,
    children: Vec<Vec<usize>>,
    /// `tables[v][j]`: states after merging the first `j` children of `v`.
    tables: Vec<Vec<BTreeMap<State, Entry>>>,
    /// Cheapest way to close the part at `v`: cost and final state.
    close: Vec<Option<(u64, State)>>,
}

impl<'a> Solver<'a> {
    fn new(g: &'a Graph, t: u64) -> Self {
        let n = g.n();
        let mut children = vec![Vec::new(); n];
        let mut order = vec![0];
        let mut parent = vec![usize::MAX; n];
        parent[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for &w in g.neighbors(v) {
                if parent[w] == usize::MAX {
                    parent[w] = v;
                    children[v].push(w);
                    order.push(w);
                }
            }
        }
        let mut s = Solver { g, t, children, tables: vec![Vec::new(); n], close: vec![None; n] };
        for &v in order.iter().rev() {
            s.solve_vertex(v);
        }
        s
    }

    fn solve_vertex(&mut self, v: usize) {
        let max_d = (2 * self.t).min(self.g.n() as u64) as u32;
        let mut tables = Vec::with_capacity(self.children[v].len() + 1);
        let start = BTreeMap::from([((0, 0), Entry { cost: 0, prev: (0, 0), choice: Choice::Start })]);
        tables.push(start);
        for &c in &self.children[v] {
            let cur = tables.last().unwrap();
            let child = self.tables[c].last().unwrap();
            let mut next: BTreeMap<State, Entry> = BTreeMap::new();
            let mut offer = |state: State, entry: Entry| {
                if next.get(&state).is_none_or(|e| entry.cost < e.cost) {
                    next.insert(state, entry);
                }
            };
            for (&(h, d), e) in cur {
                if let Some((close_cost, _)) = self.close[c] {
                    offer((h, d), Entry { cost: e.cost + close_cost, prev: (h, d), choice: Choice::Cut });
                }
                for (&(hc, dc), ec) in child {
                    let d2 = d.max(dc).max(h + hc + 1);
                    if d2 <= max_d {
                        let joined = (h.max(hc + 1), d2);
                        offer(joined, Entry { cost: e.cost + ec.cost, prev: (h, d), choice: Choice::Join((hc, dc)) });
                    }
                }
            }
            tables.push(next);
        }
        self.close[v] = tables
            .last()
            .unwrap()
            .iter()
            .filter_map(|(&s, e)| weight(s.1, self.t).map(|w| (e.cost + w as u64, s)))
            .min_by_key(|&(cost, _)| cost);
        self.tables[v] = tables;
    }

    fn assign(&self, v: usize, state: State, part: usize, labels: &mut Vec<usize>, next_part: &mut usize) {
        labels[v] = part;
        let mut state = state;
        for j in (0..self.children[v].len()).rev() {
            let c = self.children[v][j];
            let e = self.tables[v][j + 1][&state];
            match e.choice {
                Choice::Cut => {
                    let fresh = *next_part;
                    *next_part += 1;
                    let (_, cs) = self.close[c].unwrap();
                    self.assign(c, cs, fresh, labels, next_part);
                }
                Choice::Join(cs) => self.assign(c, cs, part, labels, next_part),
                Choice::Start => unreachable!("start entries only in the first table"),
            }
            state = e.prev;
        }
    }
}

/// Optimal partition of a tree into subtrees of radius at most `t`, each
/// charged its level. Returns the decomposition (every part with `k = 1`)
/// and the bound.
pub fn tree_bound(tree: &Graph, t: u64) -> Result<(Decomposition, BoundReport)> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    if t == 0 {
        return Err(Error::InvalidParameter("time bound t must be at least 1".into()));
    }
    let solver = Solver::new(tree, t);
    // a single vertex is always a valid part, so closing never fails
    let (cost, state) = solver.close[0].expect("partition into single vertices exists");
    let mut labels = vec![0; tree.n()];
    let mut next_part = 1;
    solver.assign(0, state, 0, &mut labels, &mut next_part);
    let mut parts = vec![Vec::new(); next_part];
    for (v, &p) in labels.iter().enumerate() {
        parts[p].push(v);
    }
    let parts = parts
        .into_iter()
        .map(|vertices| {
            let h = tree.induced(&vertices)?;
            let diameter = (0..h.n()).map(|v| h.eccentricity(v)).max().unwrap();
            let i = weight(diameter, t).expect("parts respect the radius limit");
            Ok((vertices, i, 1))
        })
        .collect::<Result<Vec<_>>>()?;
    let d = Decomposition::with_nearest_retractions(tree, parts)?;
    debug_assert_eq!(d.cost(), cost);
    let report = BoundReport::new(
        "tree_decomposition",
        BoundKind::Upper,
        cost,
        Certificate::Decomposition { parts: d.summary() },
    );
    Ok((d, report))
}

/// `c_t^inf(T) >= i + 1` when `T` has `i + 1` vertices pairwise at distance
/// at least `2 l` with `l >= (1 - 2^-i)(t + 1)`; reports the largest such `i`.
pub fn tree_lower_bound(tree: &Graph, t: u64) -> Result<BoundReport> {
    if !tree.is_tree() {
        return Err(Error::NotATree);
    }
    if t == 0 {
        return Err(Error::InvalidParameter("time bound t must be at least 1".into()));
    }
    let diameter = (0..tree.n()).map(|v| tree.eccentricity(v)).max().unwrap() as u64;
    let mut best = BoundReport::new(
        "tree_far_set",
        BoundKind::Lower,
        1,
        Certificate::FarSet { vertices: vec![0], i: 0, min_distance: 0 },
    );
    for i in 1..tree.n() as u32 {
        let l = sacrifice_threshold(i, t).ceil();
        if 2 * l > diameter {
            break;
        }
        let far = max_far_set(tree, 2 * l as u32)?;
        if far.len() > i as usize {
            best = BoundReport::new(
                "tree_far_set",
                BoundKind::Lower,
                i as u64 + 1,
                Certificate::FarSet { vertices: far[..=i as usize].to_vec(), i: i as usize, min_distance: 2 * l as u32 },
            );
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::formulas::ell;
    use crate::graph::generators::{generate, path};

    #[test]
    fn single_vertex() {
        let (d, rep) = tree_bound(&path(1).unwrap(), 3).unwrap();
        assert_eq!((rep.value, d.parts.len()), (1, 1));
    }

    #[test]
    fn long_path_splits_in_two() {
        // a path with 2 ell_i edges costs i as one part, but its two halves
        // cost 1 each once their radius fits within ell_1
        for t in 2..12u64 {
            for i in 2..6u32 {
                let l = ell(i, t) as usize;
                let (_, rep) = tree_bound(&path(2 * l + 1).unwrap(), t).unwrap();
                assert!(rep.value <= i as u64);
                if l.div_ceil(2) <= ell(1, t) as usize && l > ell(1, t) as usize {
                    assert_eq!(rep.value, 2, "t={t} i={i}");
                }
            }
        }
    }

    #[test]
    fn spider_beats_single_part() {
        let g = generate("spider:3x4").unwrap();
        let (d, rep) = tree_bound(&g, 4).unwrap();
        // one part would have radius 4 = ell_4; a leg with the root plus two
        // bare legs all have radius 2 = ell_1
        assert_eq!(rep.value, 3);
        assert_eq!(d.parts.len(), 3);
    }

    #[test]
    fn not_a_tree() {
        assert_eq!(tree_bound(&generate("cycle:4").unwrap(), 2).unwrap_err(), Error::NotATree);
        assert_eq!(tree_lower_bound(&generate("cycle:4").unwrap(), 2).unwrap_err(), Error::NotATree);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(tree_lower_bound(&path(2).unwrap(), 5).unwrap().value, 1);
        let spider = generate("spider:3x4").unwrap();
        let rep = tree_lower_bound(&spider, 4).unwrap();
        assert_eq!(rep.value, 3);
        assert!(matches!(rep.certificate, Certificate::FarSet { i: 2, min_distance: 8, .. }));
        // legs of length 4 beat one cop at t = 5 but not two
        assert_eq!(tree_lower_bound(&spider, 5).unwrap().value, 2);
    }
}
