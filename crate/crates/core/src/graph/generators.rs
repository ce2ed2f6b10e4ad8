//! Named graph families and the `family:params` spec grammar.
//!
//! Numbering per family:
//! - `path:n`, `cycle:n`, `clique:n`: `0..n` in order along the path/cycle.
//! - `spider:bxl` (or `spider:l1,l2,...`): `0` is the root, legs follow
//!   leg-major, each leg listed from the root outward.
//! - `tree:p0,p1,...`: vertex `i` hangs off `p_i`; the root has parent `-1`.
//! - `grid:axbx...` / `king:axbx...`: Cartesian / strong products of paths,
//!   composed left to right with row-major indices.

use std::fmt;
use std::str::FromStr;

use super::products::{cartesian_product, strong_product, DEFAULT_PRODUCT_LIMIT};
use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Clique(usize),
    /// Leg lengths, in edges.
    Spider(Vec<usize>),
    /// Parent array; `None` marks the root.
    Tree(Vec<Option<usize>>),
    Grid(Vec<usize>),
    King(Vec<usize>),
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Family::Path(n) => path(*n),
            Family::Cycle(n) => cycle(*n),
            Family::Clique(n) => clique(*n),
            Family::Spider(legs) => spider(legs),
            Family::Tree(parents) => tree(parents),
            Family::Grid(dims) => product_of_paths(dims, cartesian_product),
            Family::King(dims) => product_of_paths(dims, strong_product),
        }
    }
}

pub fn generate(spec: &str) -> Result<Graph> {
    spec.parse::<Family>()?.build()
}

pub fn path(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::new(n, &edges)
}

pub fn clique(n: usize) -> Result<Graph> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::new(n, &edges)
}

pub fn spider(legs: &[usize]) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut next = 1;
    for &len in legs {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::new(next, &edges)
}

pub fn tree(parents: &[Option<usize>]) -> Result<Graph> {
    let roots = parents.iter().filter(|p| p.is_none()).count();
    if roots != 1 {
        return Err(Error::InvalidParameter(format!("parent array needs exactly one root, found {roots}")));
    }
    let edges: Vec<_> = parents
        .iter()
        .enumerate()
        .filter_map(|(v, p)| p.map(|p| (v, p)))
        .collect();
    let g = Graph::new(parents.len(), &edges)?;
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    Ok(g)
}

fn product_of_paths(dims: &[usize], op: fn(&Graph, &Graph, usize) -> Result<Graph>) -> Result<Graph> {
    let mut acc = path(dims[0])?;
    for &d in &dims[1..] {
        acc = op(&acc, &path(d)?, DEFAULT_PRODUCT_LIMIT)?;
    }
    Ok(acc)
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = |reason: &str| Error::BadSpec { spec: spec.to_string(), reason: reason.to_string() };
        let (name, params) = spec.split_once(':').ok_or_else(|| bad("expected `family:params`"))?;
        let int = |s: &str| s.trim().parse::<usize>().map_err(|_| bad("expected positive integers"));
        let positive = |v: usize| if v == 0 { Err(bad("parameters must be at least 1")) } else { Ok(v) };
        let dims = |s: &str| -> Result<Vec<usize>> {
            s.split('x').map(|d| int(d).and_then(positive)).collect()
        };
        match name.trim() {
            "path" => Ok(Family::Path(positive(int(params)?)?)),
            "clique" => Ok(Family::Clique(positive(int(params)?)?)),
            "cycle" => {
                let n = int(params)?;
                if n < 3 {
                    return Err(bad("cycle needs at least 3 vertices"));
                }
                Ok(Family::Cycle(n))
            }
            "spider" => {
                if let Some((b, l)) = params.split_once('x') {
                    let legs = positive(int(b)?)?;
                    let len = positive(int(l)?)?;
                    Ok(Family::Spider(vec![len; legs]))
                } else {
                    let legs = params
                        .split(',')
                        .map(|l| int(l).and_then(positive))
                        .collect::<Result<Vec<_>>>()?;
                    Ok(Family::Spider(legs))
                }
            }
            "tree" => {
                let parents = params
                    .split(',')
                    .map(|p| match p.trim() {
                        "-1" => Ok(None),
                        other => int(other).map(Some),
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Family::Tree(parents))
            }
            "grid" => Ok(Family::Grid(dims(params)?)),
            "king" => Ok(Family::King(dims(params)?)),
            _ => Err(bad("unknown family")),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize], sep: &str| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep);
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Clique(n) => write!(f, "clique:{n}"),
            Family::Spider(legs) => {
                if legs.windows(2).all(|w| w[0] == w[1]) && !legs.is_empty() {
                    write!(f, "spider:{}x{}", legs.len(), legs[0])
                } else {
                    write!(f, "spider:{}", join(legs, ","))
                }
            }
            Family::Tree(parents) => {
                let s: Vec<String> = parents
                    .iter()
                    .map(|p| p.map_or("-1".to_string(), |p| p.to_string()))
                    .collect();
                write!(f, "tree:{}", s.join(","))
            }
            Family::Grid(d) => write!(f, "grid:{}", join(d, "x")),
            Family::King(d) => write!(f, "king:{}", join(d, "x")),
        }
    }
}
