//! Distance domination and far-apart vertex sets.

use super::report::{BoundKind, BoundReport, Certificate};
use crate::engine::MultisetIter;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Is every vertex within distance `t` of some vertex of `s`?
pub fn distance_dominates(g: &Graph, s: &[usize], t: u32) -> bool {
    (0..g.n()).all(|v| s.iter().any(|&u| g.dist(u, v) <= t))
}

fn balls(g: &Graph, t: u32) -> Result<Vec<u128>> {
    if g.n() > 128 {
        return Err(Error::TooManyVertices { n: g.n(), limit: 128 });
    }
    Ok((0..g.n())
        .map(|u| (0..g.n()).filter(|&v| g.dist(u, v) <= t).fold(0u128, |m, v| m | 1 << v))
        .collect())
}

/// A smallest distance-`t` dominating set, by exhaustive search over sets of
/// growing size. `budget` caps the number of candidate sets examined.
pub fn min_distance_dominating_set(g: &Graph, t: u32, budget: u64) -> Result<Vec<usize>> {
    let n = g.n();
    let ball = balls(g, t)?;
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    let mut examined: u64 = 0;
    for size in 1..=n {
        // strictly increasing index sets: combinations via multisets of n - size + 1
        for c in MultisetIter::new(n - size + 1, size) {
            examined += 1;
            if examined > budget {
                return Err(Error::BudgetExceeded { needed: examined as u128, budget });
            }
            let set: Vec<usize> = c.iter().enumerate().map(|(j, &x)| x + j).collect();
            if set.iter().fold(0u128, |m, &v| m | ball[v]) == full {
                return Ok(set);
            }
        }
    }
    unreachable!("all vertices dominate")
}

/// Robber placement forces the cops to distance-`t` dominate, so the
/// domination number bounds the eternal value from below.
pub fn distance_domination_bound(g: &Graph, t: u32, budget: u64) -> Result<BoundReport> {
    let set = min_distance_dominating_set(g, t, budget)?;
    Ok(BoundReport::new(
        "distance_domination",
        BoundKind::Lower,
        set.len() as u64,
        Certificate::Dominating { vertices: set, radius: t as usize },
    ))
}

/// A largest set of vertices with pairwise distance at least `d`.
pub fn max_far_set(g: &Graph, d: u32) -> Result<Vec<usize>> {
    let n = g.n();
    if n > 128 {
        return Err(Error::TooManyVertices { n, limit: 128 });
    }
    let compat: Vec<u128> = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && g.dist(u, v) >= d).fold(0u128, |m, v| m | 1 << v))
        .collect();
    let mut best = Vec::new();
    let mut cur = Vec::new();
    let all = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    grow(&compat, all, &mut cur, &mut best);
    Ok(best)
}

fn grow(compat: &[u128], mut cand: u128, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    while cand != 0 {
        if cur.len() + cand.count_ones() as usize <= best.len() {
            return;
        }
        let v = cand.trailing_zeros() as usize;
        cand &= !(1 << v);
        cur.push(v);
        grow(compat, cand & compat[v], cur, best);
        cur.pop();
    }
}
