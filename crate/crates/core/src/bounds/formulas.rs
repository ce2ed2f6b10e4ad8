//! Closed-form values and bounds.

use super::report::{BoundKind, BoundReport, Certificate, Rational};
use crate::error::{Error, Result};

/// Largest `t` accepted by [`maxseq_oracle`].
pub const MAXSEQ_ORACLE_LIMIT: u64 = 1 << 14;

fn positive(name: &str, v: u64) -> Result<()> {
    if v == 0 {
        Err(Error::InvalidParameter(format!("{name} must be at least 1")))
    } else {
        Ok(())
    }
}

/// `ell_i = ceil((1 - 2^-i) t - 1/2)`, the single-play budget of a unit when
/// `i` units share the work. `ell_0 = 0`.
pub fn ell(i: u32, t: u64) -> u64 {
    if i == 0 {
        return 0;
    }
    // ceil(t - 1/2 - t/2^i) = t - floor((t + 2^(i-1)) / 2^i)
    if i > 65 {
        return t;
    }
    let half = 1u128 << (i - 1);
    t - ((t as u128 + half) >> i) as u64
}

/// Least `i` with `ell_i >= r`, or `None` when `r > t`.
pub fn level_for_radius(r: u64, t: u64) -> Option<u32> {
    if r > t {
        return None;
    }
    (1..=65).find(|&i| ell(i, t) >= r)
}

/// `(1 - 2^-i)(t + 1)`: the leg length a sacrificial robber needs to beat `i`
/// cops, as an exact fraction.
pub fn sacrifice_threshold(i: u32, t: u64) -> Rational {
    // beyond 2^-100 the fraction is indistinguishable from t + 1 for any u64 t
    let i = i.min(100);
    let p = 1u128 << i;
    Rational::checked((p - 1) * (t as u128 + 1), p).unwrap_or(Rational::new(t + 1, 1))
}

/// `epsilon_i = (1 - 2^-i) t + 1 - 2^-i - ell_i`, as numerator and denominator
/// of a possibly negative fraction.
pub fn epsilon(i: u32, t: u64) -> (i128, i128) {
    let th = sacrifice_threshold(i, t);
    let num = th.numerator as i128 - ell(i, t) as i128 * th.denominator as i128;
    (num, th.denominator as i128)
}

/// Longest sequence starting at `t` in which every term exceeds the sum of
/// all later terms.
pub fn maxseq(t: u64) -> u32 {
    assert!(t >= 1, "maxseq is defined for t >= 1");
    64 - t.leading_zeros()
}

/// [`maxseq`] by exhaustive search. `best[m]` is the longest admissible
/// sequence with total at most `m`; a first term `x` leaves room
/// `min(m - x, x - 1)` for the rest.
pub fn maxseq_oracle(t: u64) -> Result<u32> {
    positive("t", t)?;
    if t > MAXSEQ_ORACLE_LIMIT {
        return Err(Error::InvalidParameter(format!("maxseq oracle is limited to t <= {MAXSEQ_ORACLE_LIMIT}")));
    }
    let m = (t - 1) as usize;
    let mut best = vec![0u32; m + 1];
    for total in 1..=m {
        best[total] = (1..=total).map(|x| 1 + best[(total - x).min(x - 1)]).max().unwrap();
    }
    Ok(1 + best[m])
}

/// Exact eternal value on the path with `n` vertices.
pub fn path_value(n: u64, t: u64) -> Result<u64> {
    positive("n", n)?;
    positive("t", t)?;
    Ok(n.div_ceil(t + 1))
}

/// Exact eternal value on the cycle with `n` vertices. `C_3` is a clique and
/// one cop suffices.
pub fn cycle_value(n: u64, t: u64) -> Result<u64> {
    positive("t", t)?;
    if n < 3 {
        return Err(Error::InvalidParameter("a cycle needs at least 3 vertices".into()));
    }
    Ok(match n {
        3 => 1,
        4..=6 => 2,
        _ if t + 2 >= n.div_ceil(2) => 2,
        _ => (n - 3).div_ceil(2 * t + 1) + 1,
    })
}

pub fn path_report(n: u64, t: u64) -> Result<BoundReport> {
    Ok(BoundReport::new(
        "path",
        BoundKind::Exact,
        path_value(n, t)?,
        Certificate::Formula {
            formula: "ceil(n/(t+1))".into(),
            operands: vec![("n".into(), n), ("t".into(), t)],
        },
    ))
}

pub fn cycle_report(n: u64, t: u64) -> Result<BoundReport> {
    let formula = match n {
        3 => "clique",
        4..=6 => "2",
        _ if t + 2 >= n.div_ceil(2) => "2 when t >= ceil(n/2)-2",
        _ => "ceil((n-3)/(2t+1))+1",
    };
    Ok(BoundReport::new(
        "cycle",
        BoundKind::Exact,
        cycle_value(n, t)?,
        Certificate::Formula { formula: formula.into(), operands: vec![("n".into(), n), ("t".into(), t)] },
    ))
}

/// Sum of eternal values over a cover by retracts.
pub fn retract_sum_bound(values: &[usize]) -> Result<BoundReport> {
    if values.is_empty() || values.contains(&0) {
        return Err(Error::InvalidParameter("retract values must be a nonempty list of positive integers".into()));
    }
    Ok(BoundReport::new(
        "retract_sum",
        BoundKind::Upper,
        values.iter().sum::<usize>() as u64,
        Certificate::Sum { values: values.to_vec() },
    ))
}

fn checked_product(factors: impl IntoIterator<Item = u128>) -> Result<u128> {
    factors
        .into_iter()
        .try_fold(1u128, |acc, f| acc.checked_mul(f))
        .ok_or_else(|| Error::InvalidParameter("product overflows".into()))
}

/// `(prod n_i / (2t+1)^p, prod ceil(n_i / (t+1)))` for the strong product of paths.
pub fn strong_grid_bounds(dims: &[u64], t: u64) -> Result<(BoundReport, BoundReport)> {
    positive("t", t)?;
    if dims.is_empty() || dims.contains(&0) {
        return Err(Error::InvalidParameter("grid dimensions must be positive".into()));
    }
    let vertices = checked_product(dims.iter().map(|&d| d as u128))?;
    let ball = checked_product(dims.iter().map(|_| 2 * t as u128 + 1))?;
    let upper = checked_product(dims.iter().map(|&d| d.div_ceil(t + 1) as u128))?;
    let mut operands: Vec<(String, u64)> = dims.iter().enumerate().map(|(j, &d)| (format!("n{}", j + 1), d)).collect();
    operands.push(("t".into(), t));
    let lower = BoundReport::rational(
        "strong_grid",
        BoundKind::Lower,
        ratio(vertices, ball)?,
        Certificate::Formula { formula: "prod n_i/(2t+1)".into(), operands: operands.clone() },
    );
    let upper = BoundReport::new(
        "strong_grid",
        BoundKind::Upper,
        u64::try_from(upper).map_err(|_| Error::InvalidParameter("grid too large".into()))?,
        Certificate::Formula { formula: "prod ceil(n_i/(t+1))".into(), operands },
    );
    Ok((lower, upper))
}

fn ratio(num: u128, den: u128) -> Result<Rational> {
    Rational::checked(num, den).ok_or_else(|| Error::InvalidParameter("grid too large".into()))
}

/// `(mn / (2t^2+2t+1), 64mn / (9t^2+12t+4))` for the `m x n` grid. The lower
/// bound counts vertices: a ball of radius `t` holds at most `2t(t+1)+1`.
pub fn cartesian_grid_bounds(m: u64, n: u64, t: u64) -> Result<(BoundReport, BoundReport)> {
    positive("t", t)?;
    if m < 2 || n < 2 {
        return Err(Error::InvalidParameter("grid sides must be at least 2".into()));
    }
    let (m, n, t) = (m as u128, n as u128, t as u128);
    let operands = vec![("m".into(), m as u64), ("n".into(), n as u64), ("t".into(), t as u64)];
    let lower = BoundReport::rational(
        "cartesian_grid",
        BoundKind::Lower,
        ratio(m * n, 2 * t * t + 2 * t + 1)?,
        Certificate::Formula { formula: "mn/(2t^2+2t+1)".into(), operands: operands.clone() },
    );
    let upper = BoundReport::rational(
        "cartesian_grid",
        BoundKind::Upper,
        ratio(64 * m * n, 9 * t * t + 12 * t + 4)?,
        Certificate::Formula { formula: "64mn/(9t^2+12t+4)".into(), operands },
    );
    Ok((lower, upper))
}
