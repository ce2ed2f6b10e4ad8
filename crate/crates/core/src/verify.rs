//! Formula-versus-solver suites, shared by the command line and the tests.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bounds::{cycle_value, path_value, report_all, report_family};
use crate::engine::{eternal_cop_number, Budget};
use crate::error::{Error, Result};
use crate::graph::catalog::{trees, MAX_CATALOG_ORDER};
use crate::graph::generators::{cycle, path};
use crate::graph::{Family, Graph};
use crate::reduction::{small_instances, verify_reduction};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Paths,
    Cycles,
    Trees,
    Grids,
    Reduction,
    All,
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "paths" => Suite::Paths,
            "cycles" => Suite::Cycles,
            "trees" => Suite::Trees,
            "grids" => Suite::Grids,
            "reduction" => Suite::Reduction,
            "all" => Suite::All,
            _ => return Err(Error::InvalidParameter(format!("unknown suite `{s}`"))),
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Record {
    pub suite: &'static str,
    pub instance: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

impl fmt::Display for Record {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.ok { "ok  " } else { "FAIL" };
        write!(f, "{mark} {:<9} {:<28} expected {:<14} got {}", self.suite, self.instance, self.expected, self.actual)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub records: Vec<Record>,
}

impl VerifyReport {
    pub fn mismatches(&self) -> usize {
        self.records.iter().filter(|r| !r.ok).count()
    }

    pub fn passed(&self) -> bool {
        self.mismatches() == 0
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    pub max_n: usize,
    pub max_t: usize,
    pub budget: Budget,
}

pub fn run(suite: Suite, limits: Limits) -> Result<VerifyReport> {
    let mut report = VerifyReport::default();
    let all = suite == Suite::All;
    if all || suite == Suite::Paths {
        paths(&limits, &mut report)?;
    }
    if all || suite == Suite::Cycles {
        cycles(&limits, &mut report)?;
    }
    if all || suite == Suite::Trees {
        tree_bounds(&limits, &mut report)?;
    }
    if all || suite == Suite::Grids {
        grids(&limits, &mut report)?;
    }
    if all || suite == Suite::Reduction {
        reduction(&limits, &mut report)?;
    }
    Ok(report)
}

fn paths(l: &Limits, out: &mut VerifyReport) -> Result<()> {
    for n in 1..=l.max_n {
        let g = path(n)?;
        for t in 1..=l.max_t {
            let expected = path_value(n as u64, t as u64)?;
            let actual = eternal_cop_number(&g, t, l.budget)?.k as u64;
            out.records.push(Record {
                suite: "paths",
                instance: format!("path:{n} t={t}"),
                expected: expected.to_string(),
                actual: actual.to_string(),
                ok: expected == actual,
            });
        }
    }
    Ok(())
}

fn cycles(l: &Limits, out: &mut VerifyReport) -> Result<()> {
    for n in 3..=l.max_n {
        let g = cycle(n)?;
        for t in 1..=l.max_t {
            let expected = cycle_value(n as u64, t as u64)?;
            let actual = eternal_cop_number(&g, t, l.budget)?.k as u64;
            out.records.push(Record {
                suite: "cycles",
                instance: format!("cycle:{n} t={t}"),
                expected: expected.to_string(),
                actual: actual.to_string(),
                ok: expected == actual,
            });
        }
    }
    Ok(())
}

/// One record per instance: every report must admit the exact value.
fn sandwich(suite: &'static str, name: String, g: &Graph, reports: &[crate::bounds::BoundReport], t: usize, l: &Limits, out: &mut VerifyReport) -> Result<()> {
    let exact = eternal_cop_number(g, t, l.budget)?.k as u64;
    let broken: Vec<String> = reports
        .iter()
        .filter(|r| !r.admits(exact))
        .map(|r| format!("{} {} {}", r.name, r.kind, r.value))
        .collect();
    out.records.push(Record {
        suite,
        instance: format!("{name} t={t}"),
        expected: format!("{} bounds hold", reports.len()),
        actual: if broken.is_empty() { format!("exact {exact}") } else { format!("exact {exact}, violated: {}", broken.join(", ")) },
        ok: broken.is_empty(),
    });
    Ok(())
}

fn tree_bounds(l: &Limits, out: &mut VerifyReport) -> Result<()> {
    for n in 1..=l.max_n.min(MAX_CATALOG_ORDER) {
        for (j, g) in trees(n).iter().enumerate() {
            for t in 1..=l.max_t {
                let set = report_all(g, t as u64, l.budget)?;
                sandwich("trees", format!("tree n={n} #{j}"), g, &set.reports, t, l, out)?;
            }
        }
    }
    Ok(())
}

fn grids(l: &Limits, out: &mut VerifyReport) -> Result<()> {
    for a in 2..=l.max_n {
        for b in a..=l.max_n {
            if a * b > l.max_n {
                break;
            }
            for family in [Family::Grid(vec![a, b]), Family::King(vec![a, b])] {
                let g = family.build()?;
                for t in 1..=l.max_t {
                    let set = report_family(&family, t as u64, l.budget)?;
                    sandwich("grids", family.to_string(), &g, &set.reports, t, l, out)?;
                }
            }
        }
    }
    Ok(())
}

fn reduction(l: &Limits, out: &mut VerifyReport) -> Result<()> {
    for inst in small_instances(2, 2) {
        for t in 1..=l.max_t {
            let check = verify_reduction(&inst, t, l.budget)?;
            let subsets: Vec<String> = inst
                .subsets
                .iter()
                .map(|s| s.iter().map(|e| (e + 1).to_string()).collect::<Vec<_>>().join(","))
                .collect();
            out.records.push(Record {
                suite: "reduction",
                instance: format!("{{{}}} t={t}", subsets.join("|")),
                expected: format!("value {}", check.cover + check.additional_paths),
                actual: match (check.wins_at_threshold, check.loses_below) {
                    (true, true) => format!("value {}", check.cover + check.additional_paths),
                    (false, _) => format!("above {}", check.cover + check.additional_paths),
                    (true, false) => format!("below {}", check.cover + check.additional_paths),
                },
                ok: check.holds(),
            });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let limits = Limits { max_n: 5, max_t: 2, budget: Budget::default() };
        for suite in [Suite::Paths, Suite::Cycles, Suite::Trees, Suite::Grids] {
            let rep = run(suite, limits).unwrap();
            assert!(rep.passed(), "{:#?}", rep.records.iter().filter(|r| !r.ok).collect::<Vec<_>>());
            assert!(!rep.records.is_empty());
        }
    }

    #[test]
    fn suite_names() {
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }
}
