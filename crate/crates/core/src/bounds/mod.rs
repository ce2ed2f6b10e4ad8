//! Closed-form values and constructive upper and lower bounds on the
//! eternal cop number, each reported with the data needed to check it.

pub mod decomposition;
pub mod domination;
pub mod formulas;
pub mod report;
pub mod trees;

pub use decomposition::{
    best_parameters, best_recurrent_attack_bound, in_class, recurrent_attack_bound, retract_parameter_bound,
    showcase, strong_product_value, Decomposition, Part,
};
pub use domination::{distance_dominates, distance_domination_bound, max_far_set, min_distance_dominating_set};
pub use formulas::{
    cartesian_grid_bounds, cycle_value, ell, epsilon, maxseq, maxseq_oracle, path_value, retract_sum_bound,
    sacrifice_threshold, level_for_radius,
    strong_grid_bounds,
};
pub use report::{BoundKind, BoundReport, Certificate, PartSummary, Rational};
pub use trees::{tree_bound, tree_lower_bound};

use crate::engine::Budget;
use crate::error::{Error, Result};
use crate::graph::{Family, Graph};

/// Names accepted by [`BoundSet::select`].
pub const BOUND_NAMES: &[&str] = &[
    "vertex_count",
    "distance_domination",
    "recurrent_attack",
    "path",
    "cycle",
    "tree_decomposition",
    "tree_far_set",
    "strong_grid",
    "cartesian_grid",
];

/// Reports for one instance, plus the bounds that could not be evaluated.
#[derive(Debug, Clone, Default)]
pub struct BoundSet {
    pub reports: Vec<BoundReport>,
    /// `(name, reason)` for bounds skipped because of size or budget limits.
    pub skipped: Vec<(String, String)>,
}

impl BoundSet {
    fn push(&mut self, name: &str, r: Result<BoundReport>) -> Result<()> {
        match r {
            Ok(rep) => self.reports.push(rep),
            Err(e @ (Error::BudgetExceeded { .. } | Error::TooManyVertices { .. })) => {
                self.skipped.push((name.to_string(), e.to_string()))
            }
            Err(e) => return Err(e),
        }
        Ok(())
    }

    pub fn select(mut self, names: &[&str]) -> Self {
        self.reports.retain(|r| names.contains(&r.name.as_str()));
        self.skipped.retain(|(n, _)| names.contains(&n.as_str()));
        self
    }

    /// Tightest upper and lower values among the reports.
    pub fn bracket(&self) -> (u64, Option<u64>) {
        let lower = self
            .reports
            .iter()
            .filter(|r| r.kind != BoundKind::Upper)
            .map(|r| r.value)
            .max()
            .unwrap_or(1);
        let upper = self.reports.iter().filter(|r| r.kind != BoundKind::Lower).map(|r| r.value).min();
        (lower, upper)
    }
}

fn is_path(g: &Graph) -> bool {
    g.is_tree() && (0..g.n()).all(|v| g.degree(v) <= 2)
}

fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

/// Every bound that applies to `g` at time `t`. Paths, cycles and trees are
/// recognised structurally.
pub fn report_all(g: &Graph, t: u64, budget: Budget) -> Result<BoundSet> {
    if t == 0 {
        return Err(Error::InvalidParameter("time bound t must be at least 1".into()));
    }
    g.ensure_connected()?;
    let mut set = BoundSet::default();
    let n = g.n() as u64;
    set.reports.push(BoundReport::new(
        "vertex_count",
        BoundKind::Upper,
        n,
        Certificate::Formula { formula: "n".into(), operands: vec![("n".into(), n)] },
    ));
    let t32 = t.min(u32::MAX as u64) as u32;
    set.push("distance_domination", distance_domination_bound(g, t32, budget.0))?;
    set.push("recurrent_attack", best_recurrent_attack_bound(g, t, budget))?;
    if is_path(g) {
        set.reports.push(formulas::path_report(n, t)?);
    }
    if is_cycle(g) {
        set.reports.push(formulas::cycle_report(n, t)?);
    }
    if g.is_tree() {
        set.push("tree_decomposition", tree_bound(g, t).map(|(_, r)| r))?;
        set.push("tree_far_set", tree_lower_bound(g, t))?;
    }
    Ok(set)
}

/// [`report_all`] on the generated graph, plus the grid formulas when the
/// family is a grid or a king graph.
pub fn report_family(family: &Family, t: u64, budget: Budget) -> Result<BoundSet> {
    let g = family.build()?;
    let mut set = report_all(&g, t, budget)?;
    match family {
        Family::King(dims) => {
            let dims: Vec<u64> = dims.iter().map(|&d| d as u64).collect();
            let (lo, up) = strong_grid_bounds(&dims, t)?;
            set.reports.extend([lo, up]);
        }
        Family::Grid(dims) if dims.len() == 2 && dims.iter().all(|&d| d >= 2) => {
            let (lo, up) = cartesian_grid_bounds(dims[0] as u64, dims[1] as u64, t)?;
            set.reports.extend([lo, up]);
        }
        _ => {}
    }
    Ok(set)
}
