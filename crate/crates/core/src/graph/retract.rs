//! Vertex maps onto subgraphs and the retraction check.
//!
//! A retraction fixes every target vertex and sends each edge to an edge or
//! to a single vertex (loops are implicit).

use std::collections::BTreeSet;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexMap {
    /// Sorted target vertices.
    pub target: Vec<usize>,
    /// `map[v]` is the image of source vertex `v`.
    pub map: Vec<usize>,
}

/// Outcome of [`verify_retraction`]; the violation fields hold the first offender.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RetractionCheck {
    Ok,
    WrongLength { expected: usize, found: usize },
    ImageOutsideTarget { vertex: usize, image: usize },
    MovesTargetVertex { vertex: usize, image: usize },
    BrokenEdge { edge: (usize, usize), image: (usize, usize) },
}

impl RetractionCheck {
    pub fn is_ok(&self) -> bool {
        matches!(self, RetractionCheck::Ok)
    }
}

impl VertexMap {
    pub fn identity(g: &Graph) -> Self {
        let all: Vec<usize> = (0..g.n()).collect();
        VertexMap { target: all.clone(), map: all }
    }

    /// Sends every vertex to its nearest target vertex, lowest index on ties.
    /// On trees (and many tree-like graphs) this is a retraction onto any
    /// connected target; always run [`verify_retraction`] on the result.
    pub fn nearest_point(g: &Graph, target: &[usize]) -> Result<Self> {
        if target.is_empty() {
            return Err(Error::InvalidParameter("empty retraction target".into()));
        }
        let mut target = target.to_vec();
        target.sort_unstable();
        target.dedup();
        let map = (0..g.n())
            .map(|v| *target.iter().min_by_key(|&&u| (g.dist(v, u), u)).unwrap())
            .collect();
        Ok(VertexMap { target, map })
    }

    pub fn image(&self, v: usize) -> usize {
        self.map[v]
    }
}

pub fn verify_retraction(g: &Graph, m: &VertexMap) -> RetractionCheck {
    if m.map.len() != g.n() {
        return RetractionCheck::WrongLength { expected: g.n(), found: m.map.len() };
    }
    let target: BTreeSet<usize> = m.target.iter().copied().collect();
    for (v, &img) in m.map.iter().enumerate() {
        if !target.contains(&img) {
            return RetractionCheck::ImageOutsideTarget { vertex: v, image: img };
        }
    }
    for &v in &m.target {
        if v >= g.n() || m.map[v] != v {
            let image = m.map.get(v).copied().unwrap_or(usize::MAX);
            return RetractionCheck::MovesTargetVertex { vertex: v, image };
        }
    }
    for (u, v) in g.edges() {
        let (a, b) = (m.map[u], m.map[v]);
        if a != b && !g.has_edge(a, b) {
            return RetractionCheck::BrokenEdge { edge: (u, v), image: (a, b) };
        }
    }
    RetractionCheck::Ok
}

/// `second ∘ first`: apply `first`, then `second`. The target is `second`'s.
pub fn compose(first: &VertexMap, second: &VertexMap) -> VertexMap {
    VertexMap {
        target: second.target.clone(),
        map: first.map.iter().map(|&v| second.map[v]).collect(),
    }
}

/// Retraction of the `m x n` grid (`grid:mxn`) onto its `a x b` corner subgrid
/// (rows `0..a`, columns `0..b`), built by peeling the last row repeatedly and
/// then the last column. Removing row `m` sends `(m, y)` to `(m-1, y+1)` and
/// the corner `(m, n)` to `(m-1, n-1)`; columns are symmetric.
pub fn subgrid_retraction(m: usize, n: usize, a: usize, b: usize) -> Result<VertexMap> {
    if !(2 < a && a <= m && 2 < b && b <= n) {
        return Err(Error::InvalidParameter(format!(
            "subgrid {a}x{b} of {m}x{n} needs 2 < a <= m and 2 < b <= n"
        )));
    }
    let idx = |x: usize, y: usize| x * n + y;
    // current image of every vertex, as (row, col)
    let mut img: Vec<(usize, usize)> = (0..m * n).map(|v| (v / n, v % n)).collect();
    let cols = n;
    for rows in (a + 1..=m).rev() {
        // peel row `rows - 1` (0-based) from a rows x cols grid
        let last = rows - 1;
        for p in &mut img {
            if p.0 == last {
                *p = if p.1 + 1 < cols { (last - 1, p.1 + 1) } else { (last - 1, p.1 - 1) };
            }
        }
    }
    for c in (b + 1..=cols).rev() {
        let last = c - 1;
        for p in &mut img {
            if p.1 == last {
                *p = if p.0 + 1 < a { (p.0 + 1, last - 1) } else { (p.0 - 1, last - 1) };
            }
        }
    }
    let mut target: Vec<usize> = Vec::with_capacity(a * b);
    for x in 0..a {
        for y in 0..b {
            target.push(idx(x, y));
        }
    }
    Ok(VertexMap { target, map: img.into_iter().map(|(x, y)| idx(x, y)).collect() })
}
