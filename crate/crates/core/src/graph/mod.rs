//! Simple undirected graphs with an eagerly computed distance matrix.
//!
//! Loops are never stored. Every player may stay put, but that is a rule of
//! the game engine, so `neighbors` is the open neighbourhood and
//! [`Graph::closed_neighbors`] adds the vertex itself.

use std::collections::VecDeque;
use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};

pub mod catalog;
pub mod generators;
pub mod products;
pub mod retract;

pub use generators::{generate, Family};
pub use products::{cartesian_product, strong_product, DEFAULT_PRODUCT_LIMIT};
pub use retract::{compose, subgrid_retraction, verify_retraction, RetractionCheck, VertexMap};

/// Distance between vertices in different components.
pub const INF: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    closed: Vec<Vec<usize>>,
    dist: Vec<u32>,
}

impl Graph {
    /// Builds a graph on vertices `0..n`. Duplicate edges are merged.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        let closed = adj
            .iter()
            .enumerate()
            .map(|(v, list)| {
                let mut c = list.clone();
                c.push(v);
                c.sort_unstable();
                c
            })
            .collect();
        let dist = all_pairs_bfs(&adj);
        Ok(Graph { n, adj, closed, dist })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// `N[v]`: the neighbours of `v` together with `v`, sorted.
    pub fn closed_neighbors(&self, v: usize) -> &[usize] {
        &self.closed[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn dist(&self, u: usize, v: usize) -> u32 {
        self.dist[u * self.n + v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        (0..self.n).all(|v| self.dist(0, v) != INF)
    }

    pub fn ensure_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edge_count() + 1 == self.n
    }

    pub fn eccentricity(&self, v: usize) -> u32 {
        (0..self.n).map(|u| self.dist(v, u)).max().unwrap_or(0)
    }

    /// `(radius, diameter, center)`. Fails on disconnected graphs.
    pub fn eccentricity_profile(&self) -> Result<(u32, u32, Vec<usize>)> {
        self.ensure_connected()?;
        let ecc: Vec<u32> = (0..self.n).map(|v| self.eccentricity(v)).collect();
        let radius = *ecc.iter().min().unwrap();
        let diameter = *ecc.iter().max().unwrap();
        let center = (0..self.n).filter(|&v| ecc[v] == radius).collect();
        Ok((radius, diameter, center))
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Graph> {
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
            local[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.adj[v] {
                let j = local[w];
                if j != usize::MAX && i < j {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), &edges)
    }

    /// Edge-list text: `n m` followed by one `u v` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{} {}", self.n, self.edge_count()).unwrap();
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }

    pub fn from_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            reason: "missing `n m` header".into(),
        })?;
        let nums = parse_ints(line, header, 2)?;
        let (n, m) = (nums[0], nums[1]);
        let mut edges = Vec::with_capacity(m);
        for (line, body) in lines {
            let uv = parse_ints(line, body, 2)?;
            edges.push((uv[0], uv[1]));
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: 1,
                reason: format!("header announces {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }

    /// SHA-256 of the canonical edge list. Stable across runs and platforms.
    pub fn hash(&self) -> String {
        hex::encode(Sha256::digest(self.to_edge_list().as_bytes()))
    }
}

fn parse_ints(line: usize, body: &str, count: usize) -> Result<Vec<usize>> {
    let vals = body
        .split_whitespace()
        .map(|tok| {
            tok.parse::<usize>().map_err(|_| Error::Parse {
                line,
                reason: format!("expected a non-negative integer, found `{tok}`"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if vals.len() != count {
        return Err(Error::Parse {
            line,
            reason: format!("expected {count} integers, found {}", vals.len()),
        });
    }
    Ok(vals)
}

fn all_pairs_bfs(adj: &[Vec<usize>]) -> Vec<u32> {
    let n = adj.len();
    let mut dist = vec![INF; n * n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        let row = &mut dist[s * n..(s + 1) * n];
        row[s] = 0;
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if row[w] == INF {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}
