use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundKind {
    Exact,
    Upper,
    Lower,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundKind::Exact => "exact",
            BoundKind::Upper => "upper",
            BoundKind::Lower => "lower",
        })
    }
}

/// Exact non-negative fraction in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rational {
    pub numerator: u64,
    pub denominator: u64,
}

impl Rational {
    /// Reduces `numerator / denominator`; `None` if the reduced terms overflow `u64`.
    pub fn checked(numerator: u128, denominator: u128) -> Option<Self> {
        if denominator == 0 {
            return None;
        }
        let g = numerator.gcd(&denominator).max(1);
        Some(Rational {
            numerator: u64::try_from(numerator / g).ok()?,
            denominator: u64::try_from(denominator / g).ok()?,
        })
    }

    pub fn new(numerator: u64, denominator: u64) -> Self {
        Self::checked(numerator as u128, denominator as u128).expect("nonzero denominator")
    }

    pub fn ceil(&self) -> u64 {
        self.numerator.div_ceil(self.denominator)
    }

    pub fn floor(&self) -> u64 {
        self.numerator / self.denominator
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator == 1 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// One part of a decomposition as recorded in a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSummary {
    pub vertices: Vec<usize>,
    pub i: usize,
    pub k: usize,
}

/// What a bound was computed from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    /// A closed formula and its operands.
    Formula { formula: String, operands: Vec<(String, u64)> },
    /// Membership `c_{ell_i}(G) <= k` checked on the whole graph.
    Parameters { i: usize, k: usize, ell: usize },
    Decomposition { parts: Vec<PartSummary> },
    /// Vertices pairwise at least `min_distance` apart.
    FarSet { vertices: Vec<usize>, i: usize, min_distance: u32 },
    /// A distance dominating set of minimum size.
    Dominating { vertices: Vec<usize>, radius: usize },
    /// Eternal values of product factors, first one carrying the cops.
    Factors { values: Vec<usize> },
    Sum { values: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub kind: BoundKind,
    pub value: u64,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    pub rational: Option<Rational>,
    pub certificate: Certificate,
}

impl BoundReport {
    pub fn new(name: &str, kind: BoundKind, value: u64, certificate: Certificate) -> Self {
        BoundReport { name: name.to_string(), kind, value, rational: None, certificate }
    }

    /// A bound whose value is the ceiling of `r`.
    pub fn rational(name: &str, kind: BoundKind, r: Rational, certificate: Certificate) -> Self {
        BoundReport {
            name: name.to_string(),
            kind,
            value: r.ceil(),
            rational: Some(r),
            certificate,
        }
    }

    /// Is `exact` consistent with this report?
    pub fn admits(&self, exact: u64) -> bool {
        match self.kind {
            BoundKind::Exact => exact == self.value,
            BoundKind::Upper => exact <= self.value,
            BoundKind::Lower => exact >= self.value,
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<20} {:<5} {}", self.name, self.kind, self.value)?;
        if let Some(r) = self.rational {
            if r.denominator != 1 {
                write!(f, " (ceil of {r})")?;
            }
        }
        Ok(())
    }
}
