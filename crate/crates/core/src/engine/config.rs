use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Positions of `k` cops as a sorted multiset; several cops may share a vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CopConfig(Vec<usize>);

impl CopConfig {
    pub fn new(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        CopConfig(positions)
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn occupies(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl fmt::Display for CopConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

/// `C(n, r)`, or `None` on overflow.
pub fn binomial(n: u128, r: u128) -> Option<u128> {
    if r > n {
        return Some(0);
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Number of multisets of size `k` over `n` vertices.
pub fn config_count(n: usize, k: usize) -> Option<u128> {
    binomial((n + k - 1) as u128, k as u128)
}

/// Every cop configuration of `k` cops on `n` vertices, in lexicographic order.
pub fn enumerate_configs(n: usize, k: usize, budget: u64) -> Result<Vec<CopConfig>> {
    if n == 0 || k == 0 {
        return Err(Error::InvalidParameter("enumerate_configs needs n >= 1 and k >= 1".into()));
    }
    let count = config_count(n, k).unwrap_or(u128::MAX);
    if count > budget as u128 {
        return Err(Error::BudgetExceeded { needed: count, budget });
    }
    Ok(MultisetIter::new(n, k).map(CopConfig).collect())
}

/// Lexicographic iterator over non-decreasing sequences of length `k` in `0..n`.
pub struct MultisetIter {
    n: usize,
    cur: Option<Vec<usize>>,
}

impl MultisetIter {
    pub fn new(n: usize, k: usize) -> Self {
        MultisetIter { n, cur: (n > 0).then(|| vec![0; k]) }
    }
}

impl Iterator for MultisetIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let cur = self.cur.as_mut().unwrap();
        match cur.iter().rposition(|&v| v + 1 < self.n) {
            Some(i) => {
                let v = cur[i] + 1;
                for x in &mut cur[i..] {
                    *x = v;
                }
            }
            None => self.cur = None,
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_cops_two_vertices() {
        let c = enumerate_configs(2, 2, 100).unwrap();
        let raw: Vec<Vec<usize>> = c.iter().map(|c| c.positions().to_vec()).collect();
        assert_eq!(raw, vec![vec![0, 0], vec![0, 1], vec![1, 1]]);
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_configs(3, 1, 100).unwrap().len(), 3);
        assert_eq!(enumerate_configs(4, 3, 100).unwrap().len(), 20);
        for n in 1..7 {
            for k in 1..5 {
                let all = enumerate_configs(n, k, 1 << 20).unwrap();
                assert_eq!(all.len() as u128, config_count(n, k).unwrap());
                assert!(all.windows(2).all(|w| w[0] < w[1]));
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert_eq!(
            enumerate_configs(10, 3, 100),
            Err(Error::BudgetExceeded { needed: 220, budget: 100 })
        );
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), Some(20));
        assert_eq!(binomial(5, 0), Some(1));
        assert_eq!(binomial(3, 5), Some(0));
    }

    #[test]
    fn canonical_ordering() {
        assert_eq!(CopConfig::new(vec![3, 1, 2]), CopConfig::new(vec![1, 2, 3]));
        assert_eq!(CopConfig::new(vec![2, 0]).to_string(), "(0,2)");
    }
}
