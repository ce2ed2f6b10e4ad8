//! Retract decompositions and the recurrent attack bound.
//!
//! A graph in which `k` cops catch any robber within `ell_i` steps can be
//! guarded eternally by `i` units of `k` cops. Decomposing a graph into
//! retracts and guarding each one separately adds up these costs.

use std::collections::BTreeSet;

use super::formulas::ell;
use super::report::{BoundKind, BoundReport, Certificate, PartSummary};
use crate::engine::{c_t, eternal_cop_number, single_play_value, Budget};
use crate::error::{Error, Result};
use crate::graph::{verify_retraction, Graph, VertexMap};

/// Does `c_{ell_i}(h) <= k` hold? With `ell_i = 0` the cops must cover every vertex.
pub fn in_class(h: &Graph, i: u32, k: usize, t: u64, budget: Budget) -> Result<bool> {
    let l = ell(i, t) as usize;
    if l == 0 {
        return Ok(k >= h.n());
    }
    single_play_value(h, k, l, budget)
}

/// The `(i, k)` with `h` in the class for `i` and `k`, minimising `i * k`,
/// ties going to the smaller `i`.
pub fn best_parameters(h: &Graph, t: u64, budget: Budget) -> Result<(u32, usize)> {
    let mut best: Option<(u32, usize)> = None;
    let mut last_ell = None;
    for i in 1..=66u32 {
        let l = ell(i, t);
        if last_ell == Some(l) {
            if l == t {
                break;
            }
            continue;
        }
        last_ell = Some(l);
        let k = if l == 0 { h.n() } else { c_t(h, l as usize, budget)? };
        if best.is_none_or(|(bi, bk)| (i as usize) * k < bi as usize * bk) {
            best = Some((i, k));
        }
        if l == t {
            break;
        }
    }
    Ok(best.expect("at least one level is tried"))
}

/// `c_t^inf(g) <= i k`, after checking that `g` is in the class for `(i, k)`.
pub fn recurrent_attack_bound(g: &Graph, t: u64, i: u32, k: usize, budget: Budget) -> Result<BoundReport> {
    if i == 0 || k == 0 || t == 0 {
        return Err(Error::InvalidParameter("i, k and t must be at least 1".into()));
    }
    if !in_class(g, i, k, t, budget)? {
        return Err(Error::Hypothesis(format!(
            "{k} cop(s) cannot catch every robber within ell_{i} = {} steps",
            ell(i, t)
        )));
    }
    Ok(BoundReport::new(
        "recurrent_attack",
        BoundKind::Upper,
        (i as u64) * k as u64,
        Certificate::Parameters { i: i as usize, k, ell: ell(i, t) as usize },
    ))
}

/// [`recurrent_attack_bound`] at the best parameters.
pub fn best_recurrent_attack_bound(g: &Graph, t: u64, budget: Budget) -> Result<BoundReport> {
    let (i, k) = best_parameters(g, t, budget)?;
    recurrent_attack_bound(g, t, i, k, budget)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Part {
    /// Sorted.
    pub vertices: Vec<usize>,
    pub i: u32,
    pub k: usize,
    pub retraction: VertexMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub parts: Vec<Part>,
}

impl Decomposition {
    /// Parts with nearest-point maps as their retractions.
    pub fn with_nearest_retractions(g: &Graph, parts: Vec<(Vec<usize>, u32, usize)>) -> Result<Self> {
        let parts = parts
            .into_iter()
            .map(|(mut vertices, i, k)| {
                vertices.sort_unstable();
                let retraction = VertexMap::nearest_point(g, &vertices)?;
                Ok(Part { vertices, i, k, retraction })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Decomposition { parts })
    }

    /// Parts are disjoint, cover `g`, induce connected subgraphs, carry
    /// valid retractions and belong to their declared classes.
    pub fn validate(&self, g: &Graph, t: u64, budget: Budget) -> Result<()> {
        let bad = |part: usize, reason: String| Err(Error::InvalidDecomposition { part, reason });
        let mut seen = BTreeSet::new();
        for (p, part) in self.parts.iter().enumerate() {
            if part.vertices.is_empty() {
                return bad(p, "empty part".into());
            }
            for &v in &part.vertices {
                if v >= g.n() {
                    return bad(p, format!("vertex {v} out of range"));
                }
                if !seen.insert(v) {
                    return bad(p, format!("vertex {v} lies in two parts"));
                }
            }
        }
        if seen.len() != g.n() {
            let missing = (0..g.n()).find(|v| !seen.contains(v)).unwrap();
            return bad(self.parts.len(), format!("vertex {missing} is not covered"));
        }
        for (p, part) in self.parts.iter().enumerate() {
            let h = g.induced(&part.vertices)?;
            if !h.is_connected() {
                return bad(p, "part is not connected".into());
            }
            if part.retraction.target != part.vertices {
                return bad(p, "retraction targets a different vertex set".into());
            }
            let check = verify_retraction(g, &part.retraction);
            if !check.is_ok() {
                return bad(p, format!("not a retraction: {check:?}"));
            }
            if part.i == 0 || part.k == 0 {
                return bad(p, "parameters must be positive".into());
            }
            if !in_class(&h, part.i, part.k, t, budget)? {
                return bad(p, format!("{} cop(s) do not win within ell_{} = {}", part.k, part.i, ell(part.i, t)));
            }
        }
        Ok(())
    }

    pub fn cost(&self) -> u64 {
        self.parts.iter().map(|p| p.i as u64 * p.k as u64).sum()
    }

    /// Number of parts with parameters `(i, k)`.
    pub fn alpha(&self, i: u32, k: usize) -> usize {
        self.parts.iter().filter(|p| p.i == i && p.k == k).count()
    }

    pub fn summary(&self) -> Vec<PartSummary> {
        self.parts
            .iter()
            .map(|p| PartSummary { vertices: p.vertices.clone(), i: p.i as usize, k: p.k })
            .collect()
    }
}

/// `sum alpha_i^k * i * k` over a validated decomposition.
pub fn retract_parameter_bound(g: &Graph, d: &Decomposition, t: u64, budget: Budget) -> Result<BoundReport> {
    d.validate(g, t, budget)?;
    Ok(BoundReport::new(
        "retract_parameters",
        BoundKind::Upper,
        d.cost(),
        Certificate::Decomposition { parts: d.summary() },
    ))
}

/// Exact value of a strong product whose first factor needs `k` cops and
/// whose other factors need one. The factor values are computed here.
pub fn strong_product_value(factors: &[Graph], t: u64, budget: Budget) -> Result<BoundReport> {
    let (first, rest) = factors
        .split_first()
        .ok_or_else(|| Error::InvalidParameter("no factors".into()))?;
    let mut values = vec![eternal_cop_number(first, t as usize, budget)?.k];
    for (j, h) in rest.iter().enumerate() {
        let v = eternal_cop_number(h, t as usize, budget)?.k;
        if v != 1 {
            return Err(Error::Hypothesis(format!("factor {} needs {v} cops, expected 1", j + 2)));
        }
        values.push(v);
    }
    Ok(BoundReport::new("strong_product", BoundKind::Exact, values[0] as u64, Certificate::Factors { values }))
}

/// A 43-vertex graph made of four retracts: a grid-like block (12 vertices),
/// a spider with five legs of length 4 (21), and two paths on 5 vertices.
/// Returns the graph and its decomposition, which at `t = 4` has
/// parameters (1,2), (4,1), (1,1), (1,1).
pub fn showcase() -> Result<(Graph, Decomposition)> {
    let mut edges = vec![
        // block: two rows of four, plus a square above and below the middle
        (0, 1), (1, 2), (2, 3), (4, 5), (5, 6), (6, 7), (8, 9), (10, 11),
        (4, 0), (8, 5), (5, 1), (1, 10), (9, 6), (6, 2), (2, 11), (7, 3),
    ];
    let root = 12;
    for leg in 0..5 {
        let first = 13 + 4 * leg;
        edges.push((root, first));
        for j in 0..3 {
            edges.push((first + j, first + j + 1));
        }
    }
    for start in [33, 38] {
        for j in 0..4 {
            edges.push((start + j, start + j + 1));
        }
    }
    // left leaf of the spider to the block, right leaf to both paths
    edges.extend([(16, 3), (20, 33), (20, 38)]);
    let g = Graph::new(43, &edges)?;
    let d = Decomposition::with_nearest_retractions(
        &g,
        vec![
            ((0..12).collect(), 1, 2),
            ((12..33).collect(), 4, 1),
            ((33..38).collect(), 1, 1),
            ((38..43).collect(), 1, 1),
        ],
    )?;
    Ok((g, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators::{generate, path};

    #[test]
    fn showcase_bound_is_eight() {
        let (g, d) = showcase().unwrap();
        assert_eq!(g.edge_count(), 16 + 20 + 8 + 3);
        let rep = retract_parameter_bound(&g, &d, 4, Budget::default()).unwrap();
        assert_eq!(rep.value, 8);
        assert_eq!((d.alpha(1, 2), d.alpha(4, 1), d.alpha(1, 1)), (1, 1, 2));
    }

    #[test]
    fn split_path_matches_formula() {
        // P_10 at t = 4: two halves of radius 2 = ell_1
        let g = path(10).unwrap();
        let d = Decomposition::with_nearest_retractions(&g, vec![((0..5).collect(), 1, 1), ((5..10).collect(), 1, 1)])
            .unwrap();
        assert_eq!(retract_parameter_bound(&g, &d, 4, Budget::default()).unwrap().value, 2);
    }

    #[test]
    fn broken_decompositions() {
        let g = path(6).unwrap();
        let b = Budget::default();
        let overlap = Decomposition::with_nearest_retractions(&g, vec![((0..4).collect(), 2, 1), ((3..6).collect(), 1, 1)])
            .unwrap();
        assert!(matches!(overlap.validate(&g, 4, b), Err(Error::InvalidDecomposition { part: 1, .. })));
        let gap = Decomposition::with_nearest_retractions(&g, vec![((0..3).collect(), 1, 1)]).unwrap();
        assert!(matches!(gap.validate(&g, 4, b), Err(Error::InvalidDecomposition { .. })));
        let split = Decomposition::with_nearest_retractions(&g, vec![(vec![0, 1, 5], 2, 1), ((2..5).collect(), 1, 1)])
            .unwrap();
        assert!(split.validate(&g, 4, b).is_err());
        // radius 3 needs ell_i >= 3, so i = 1 (ell_1 = 2) is too optimistic
        let tight = Decomposition::with_nearest_retractions(&g, vec![((0..6).collect(), 1, 1)]).unwrap();
        assert!(tight.validate(&g, 4, b).is_err());
    }

    #[test]
    fn recurrent_attack() {
        let b = Budget::default();
        let spider = generate("spider:3x4").unwrap();
        // t = 5: ell = 2, 4, 4, 5, ... and the spider has radius 4
        let rep = best_recurrent_attack_bound(&spider, 5, b).unwrap();
        assert_eq!(rep.certificate, Certificate::Parameters { i: 2, k: 1, ell: 4 });
        assert!(recurrent_attack_bound(&spider, 5, 1, 1, b).is_err());
        assert_eq!(recurrent_attack_bound(&spider, 5, 3, 1, b).unwrap().value, 3);
    }

    #[test]
    fn strong_product_law_on_small_factors() {
        let b = Budget::default();
        let rep = strong_product_value(&[path(3).unwrap(), path(3).unwrap()], 2, b).unwrap();
        assert_eq!(rep.value, 1);
        assert!(strong_product_value(&[path(3).unwrap(), path(6).unwrap()], 2, b).is_err());
    }
}
