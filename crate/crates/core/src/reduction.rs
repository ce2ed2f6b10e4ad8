//! Set cover to eternal cops: the hardness construction and a brute-force
//! check of its equivalence on tiny instances.
//!
//! Given `beta` subsets of a universe of `alpha` elements and a time bound
//! `t`, the graph has one vertex per subset (forming a clique), one vertex
//! per element (adjacent to the subsets containing it) carrying a pendant
//! path of `t - 1` vertices, and `L = floor(log2 t) + 1` additional paths of
//! `t` vertices whose first vertex is adjacent to every subset vertex. A
//! cover of size `k` exists iff `k + L` cops win eternally within `t` steps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bounds::maxseq;
use crate::engine::{Budget, Solver};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest `beta` the brute-force cover search accepts.
pub const ORACLE_MAX_SUBSETS: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    pub alpha: usize,
    /// 0-based element ids.
    pub subsets: Vec<Vec<usize>>,
    pub k: usize,
}

impl SetCoverInstance {
    pub fn new(alpha: usize, mut subsets: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        if alpha == 0 || subsets.is_empty() || k == 0 {
            return Err(Error::InvalidInstance("alpha, beta and k must be at least 1".into()));
        }
        let mut covered = vec![false; alpha];
        for s in &mut subsets {
            s.sort_unstable();
            s.dedup();
            for &e in s.iter() {
                if e >= alpha {
                    return Err(Error::InvalidInstance(format!("element {} outside universe of {alpha}", e + 1)));
                }
                covered[e] = true;
            }
        }
        if let Some(e) = covered.iter().position(|&c| !c) {
            return Err(Error::InvalidInstance(format!("element {} is in no subset", e + 1)));
        }
        Ok(SetCoverInstance { alpha, subsets, k })
    }

    pub fn beta(&self) -> usize {
        self.subsets.len()
    }
}

/// Text format: `alpha beta k`, then `beta` lines of 1-based element ids.
impl FromStr for SetCoverInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.starts_with('#'));
        let parse_nums = |line: usize, text: &str| -> Result<Vec<usize>> {
            text.split_whitespace()
                .map(|w| w.parse().map_err(|_| Error::Parse { line, reason: format!("not a number: `{w}`") }))
                .collect()
        };
        let (line, header) = lines
            .by_ref()
            .find(|(_, l)| !l.is_empty())
            .ok_or(Error::Parse { line: 1, reason: "empty input".into() })?;
        let head = parse_nums(line, header)?;
        let [alpha, beta, k] = head[..] else {
            return Err(Error::Parse { line, reason: "expected `alpha beta k`".into() });
        };
        let mut subsets = Vec::with_capacity(beta);
        for _ in 0..beta {
            let (line, text) = lines
                .next()
                .ok_or(Error::Parse { line: line + subsets.len() + 1, reason: "missing subset line".into() })?;
            let ids = parse_nums(line, text)?;
            if ids.contains(&0) {
                return Err(Error::Parse { line, reason: "element ids are 1-based".into() });
            }
            subsets.push(ids.into_iter().map(|e| e - 1).collect());
        }
        SetCoverInstance::new(alpha, subsets, k)
    }
}

impl fmt::Display for SetCoverInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.alpha, self.beta(), self.k)?;
        for s in &self.subsets {
            let ids: Vec<String> = s.iter().map(|e| (e + 1).to_string()).collect();
            writeln!(f, "{}", ids.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "role", rename_all = "snake_case")]
pub enum Role {
    Subset { index: usize },
    Element { index: usize },
    /// `depth` is the distance from the element vertex.
    Attached { element: usize, depth: usize },
    /// `position` 0 is the end adjacent to the subset clique.
    Additional { path: usize, position: usize },
}

#[derive(Debug, Clone)]
pub struct ReductionGraph {
    pub graph: Graph,
    pub roles: Vec<Role>,
    pub t: usize,
    pub additional_paths: usize,
}

/// Number of vertices of the construction.
pub fn reduction_order(alpha: usize, beta: usize, t: usize) -> usize {
    beta + alpha * t + (maxseq(t as u64) as usize) * t
}

pub fn build_reduction(inst: &SetCoverInstance, t: usize) -> Result<ReductionGraph> {
    if t == 0 {
        return Err(Error::InvalidParameter("time bound t must be at least 1".into()));
    }
    let beta = inst.beta();
    let paths = maxseq(t as u64) as usize;
    let mut roles: Vec<Role> = (0..beta).map(|index| Role::Subset { index }).collect();
    roles.extend((0..inst.alpha).map(|index| Role::Element { index }));
    for element in 0..inst.alpha {
        roles.extend((1..t).map(|depth| Role::Attached { element, depth }));
    }
    for path in 0..paths {
        roles.extend((0..t).map(|position| Role::Additional { path, position }));
    }
    let element_vertex = |e: usize| beta + e;
    let attached_vertex = |e: usize, depth: usize| beta + inst.alpha + e * (t - 1) + depth - 1;
    let additional_vertex = |p: usize, pos: usize| beta + inst.alpha * t + p * t + pos;

    let mut edges = Vec::new();
    for a in 0..beta {
        for b in a + 1..beta {
            edges.push((a, b));
        }
    }
    for (j, s) in inst.subsets.iter().enumerate() {
        edges.extend(s.iter().map(|&e| (j, element_vertex(e))));
    }
    for e in 0..inst.alpha {
        let mut prev = element_vertex(e);
        for depth in 1..t {
            edges.push((prev, attached_vertex(e, depth)));
            prev = attached_vertex(e, depth);
        }
    }
    for p in 0..paths {
        edges.extend((0..beta).map(|j| (j, additional_vertex(p, 0))));
        edges.extend((1..t).map(|pos| (additional_vertex(p, pos - 1), additional_vertex(p, pos))));
    }
    let graph = Graph::new(roles.len(), &edges)?;
    let red = ReductionGraph { graph, roles, t, additional_paths: paths };
    red.check_structure(inst)?;
    Ok(red)
}

impl ReductionGraph {
    /// Confirms the clique, membership, path and edge-kind invariants.
    pub fn check_structure(&self, inst: &SetCoverInstance) -> Result<()> {
        let g = &self.graph;
        let fail = |why: String| Err(Error::Hypothesis(format!("reduction graph malformed: {why}")));
        if self.roles.len() != g.n() || g.n() != reduction_order(inst.alpha, inst.beta(), self.t) {
            return fail("vertex count".into());
        }
        let role = |v: usize| self.roles[v];
        for (u, v) in g.edges() {
            let ok = match (role(u), role(v)) {
                (Role::Subset { .. }, Role::Subset { .. }) => true,
                (Role::Subset { index }, Role::Element { index: e }) | (Role::Element { index: e }, Role::Subset { index }) => {
                    inst.subsets[index].contains(&e)
                }
                (Role::Element { index }, Role::Attached { element, depth })
                | (Role::Attached { element, depth }, Role::Element { index }) => index == element && depth == 1,
                (Role::Attached { element: a, depth: x }, Role::Attached { element: b, depth: y }) => {
                    a == b && x.abs_diff(y) == 1
                }
                (Role::Additional { path: a, position: x }, Role::Additional { path: b, position: y }) => {
                    a == b && x.abs_diff(y) == 1
                }
                (Role::Subset { .. }, Role::Additional { position, .. })
                | (Role::Additional { position, .. }, Role::Subset { .. }) => position == 0,
                _ => false,
            };
            if !ok {
                return fail(format!("edge {u}-{v} joins {:?} and {:?}", role(u), role(v)));
            }
        }
        let subsets: Vec<usize> = (0..g.n()).filter(|&v| matches!(role(v), Role::Subset { .. })).collect();
        for (x, &a) in subsets.iter().enumerate() {
            for &b in &subsets[x + 1..] {
                if !g.has_edge(a, b) {
                    return fail(format!("subset vertices {a} and {b} not adjacent"));
                }
            }
        }
        for v in 0..g.n() {
            match role(v) {
                Role::Subset { index } => {
                    let members = g.neighbors(v).iter().filter(|&&w| matches!(role(w), Role::Element { .. })).count();
                    if members != inst.subsets[index].len() {
                        return fail(format!("subset {index} has wrong members"));
                    }
                }
                Role::Additional { position: 0, .. } if g.degree(v) != subsets.len() + usize::from(self.t > 1) => {
                    return fail(format!("additional path end {v} not attached to every subset"));
                }
                _ => {}
            }
        }
        let paths = (0..g.n()).filter(|&v| matches!(role(v), Role::Additional { position: 0, .. })).count();
        if paths != self.additional_paths || paths != maxseq(self.t as u64) as usize {
            return fail("wrong number of additional paths".into());
        }
        Ok(())
    }

    /// Role list as JSON, indexed by vertex.
    pub fn roles_json(&self) -> Result<String> {
        #[derive(Serialize)]
        struct RoleMap<'a> {
            t: usize,
            additional_paths: usize,
            roles: &'a [Role],
        }
        Ok(serde_json::to_string_pretty(&RoleMap {
            t: self.t,
            additional_paths: self.additional_paths,
            roles: &self.roles,
        })?)
    }
}

/// Minimum number of subsets covering the universe, by trying every selection.
pub fn set_cover_oracle(inst: &SetCoverInstance) -> Result<usize> {
    let beta = inst.beta();
    if beta > ORACLE_MAX_SUBSETS {
        return Err(Error::BudgetExceeded { needed: 1u128 << beta, budget: 1 << ORACLE_MAX_SUBSETS });
    }
    if inst.alpha > 128 {
        return Err(Error::InvalidInstance("universe larger than 128 elements".into()));
    }
    let masks: Vec<u128> = inst.subsets.iter().map(|s| s.iter().fold(0u128, |m, &e| m | 1 << e)).collect();
    let full = if inst.alpha == 128 { u128::MAX } else { (1u128 << inst.alpha) - 1 };
    let best = (1u32..1 << beta)
        .filter(|sel| {
            (0..beta).filter(|&j| sel >> j & 1 == 1).fold(0u128, |m, j| m | masks[j]) == full
        })
        .map(|sel| sel.count_ones() as usize)
        .min();
    best.ok_or_else(|| Error::InvalidInstance("subsets do not cover the universe".into()))
}

/// Outcome of checking the equivalence on one instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionCheck {
    pub vertices: usize,
    /// Minimum cover size.
    pub cover: usize,
    pub additional_paths: usize,
    /// `cover + L` cops have a nonempty eternal win set.
    pub wins_at_threshold: bool,
    /// `cover + L - 1` cops have an empty eternal win set.
    pub loses_below: bool,
}

impl ReductionCheck {
    pub fn holds(&self) -> bool {
        self.wins_at_threshold && self.loses_below
    }
}

pub fn verify_reduction(inst: &SetCoverInstance, t: usize, budget: Budget) -> Result<ReductionCheck> {
    let red = build_reduction(inst, t)?;
    let cover = set_cover_oracle(inst)?;
    let threshold = cover + red.additional_paths;
    let wins = |k: usize| -> Result<bool> {
        let solver = Solver::new(&red.graph, k, budget)?;
        Ok(solver.eternal(t)?.win.iter().any(|&w| w))
    };
    Ok(ReductionCheck {
        vertices: red.graph.n(),
        cover,
        additional_paths: red.additional_paths,
        wins_at_threshold: wins(threshold)?,
        loses_below: !wins(threshold - 1)?,
    })
}

/// Every instance with nonempty subsets covering the universe, up to the
/// given sizes. Subsets are listed in non-decreasing order of their bit masks
/// (so permuted duplicates are skipped) and `k` is the minimum cover size.
pub fn small_instances(max_alpha: usize, max_beta: usize) -> Vec<SetCoverInstance> {
    let mut out = Vec::new();
    for alpha in 1..=max_alpha {
        let masks = (1usize << alpha) - 1;
        for beta in 1..=max_beta {
            for combo in crate::engine::MultisetIter::new(masks, beta) {
                let subsets: Vec<Vec<usize>> = combo
                    .iter()
                    .map(|&m| (0..alpha).filter(|&e| (m + 1) >> e & 1 == 1).collect())
                    .collect();
                let Ok(mut inst) = SetCoverInstance::new(alpha, subsets, 1) else { continue };
                inst.k = set_cover_oracle(&inst).expect("instance covers");
                out.push(inst);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inst(alpha: usize, subsets: &[&[usize]]) -> SetCoverInstance {
        SetCoverInstance::new(alpha, subsets.iter().map(|s| s.to_vec()).collect(), 1).unwrap()
    }

    #[test]
    fn parse_round_trip() {
        let text = "3 2 2\n1 2\n3\n";
        let i: SetCoverInstance = text.parse().unwrap();
        assert_eq!(i.subsets, vec![vec![0, 1], vec![2]]);
        assert_eq!(i.to_string(), text);
        assert!("2 1 1\n1\n".parse::<SetCoverInstance>().is_err());
        assert!("1 1 1\n0\n".parse::<SetCoverInstance>().is_err());
        assert!("1 2 1\n1\n".parse::<SetCoverInstance>().is_err());
    }

    #[test]
    fn counts() {
        let r = build_reduction(&inst(1, &[&[0]]), 2).unwrap();
        assert_eq!(r.graph.n(), 7);
        assert_eq!(r.additional_paths, 2);
        let r = build_reduction(&inst(1, &[&[0]]), 1).unwrap();
        assert_eq!(r.graph.n(), 3);
        assert_eq!(r.additional_paths, 1);
        for t in 1..6 {
            let r = build_reduction(&inst(3, &[&[0, 1], &[1, 2], &[2]]), t).unwrap();
            let l = maxseq(t as u64) as usize;
            assert_eq!(r.graph.n(), 3 + 3 + 3 * (t - 1) + l * t);
            // clique + membership + attached chains + additional chains + additional ends
            assert_eq!(r.graph.edge_count(), 3 + 5 + 3 * (t - 1) + l * (t - 1) + l * 3);
        }
    }

    #[test]
    fn oracle() {
        assert_eq!(set_cover_oracle(&inst(1, &[&[0]])).unwrap(), 1);
        assert_eq!(set_cover_oracle(&inst(2, &[&[0], &[1], &[0, 1]])).unwrap(), 1);
        assert_eq!(set_cover_oracle(&inst(4, &[&[0], &[1], &[2], &[3]])).unwrap(), 4);
    }

    #[test]
    fn tiny_equivalences() {
        let b = Budget::default();
        let c = verify_reduction(&inst(1, &[&[0]]), 1, b).unwrap();
        assert!(c.holds(), "{c:?}");
        assert!(verify_reduction(&inst(2, &[&[0], &[1]]), 1, b).unwrap().holds());
        assert!(verify_reduction(&inst(1, &[&[0]]), 2, b).unwrap().holds());
    }

    #[test]
    fn enumeration() {
        // alpha = 1: {1}; {1},{1}.  alpha = 2, beta = 1: {1,2}; beta = 2: 4 covering pairs
        assert_eq!(small_instances(1, 2).len(), 2);
        assert_eq!(small_instances(2, 2).len(), 2 + 1 + 4);
    }
}
