//! Matrix encoding and reduction for type A: each full anti-diagonal of
//! the (n+1)-row matrix is neutral, so reduction subtracts the minimum of
//! every anti-diagonal.

use crate::error::Result;
use crate::matrix::ExpoMatrix;
use crate::monomial::Monomial;
use crate::series::{series_stats, SeriesStats};
use std::collections::BTreeSet;

/// Expands a monomial into generator multiplicities: Y_i(j) with positive
/// exponent contributes rows 1..=i along the anti-diagonal through
/// (1, j+i-1), a negative exponent contributes rows i+1..=n+1 along the
/// anti-diagonal through (n+1, j+i-n-1).
pub fn encode_raw(m: &Monomial) -> Result<ExpoMatrix> {
    let spec = m.spec();
    let n = spec.rank;
    let mut out = ExpoMatrix::zero(spec);
    for (i, j, e) in m.factors() {
        if e > 0 {
            for k in 1..=i {
                out.add(k, j + (i as i64 - k as i64), e)?;
            }
        } else {
            for k in (i + 1)..=(n + 1) {
                out.add(k, j - (k as i64 - i as i64), -e)?;
            }
        }
    }
    Ok(out)
}

/// Inverts the encoding: the product of X_r(c)^{m_rc} with
/// X_r(c) = Y_r(c).Y_{r-1}(c+1)^{-1}, where out-of-range Y factors are 1.
pub fn decode(m: &ExpoMatrix) -> Result<Monomial> {
    let spec = m.spec();
    let n = spec.rank;
    let mut out = Monomial::one(spec);
    for (r, c, v) in m.iter() {
        if r <= n {
            out.mul_y(r, c, v)?;
        }
        if r >= 2 {
            out.mul_y(r - 1, c + 1, -v)?;
        }
    }
    Ok(out)
}

fn diagonal_min(m: &ExpoMatrix, d: i64) -> i64 {
    (1..=m.row_count())
        .map(|r| m.get(r, d - r as i64))
        .min()
        .unwrap_or(0)
}

/// Subtracts the minimum of every full anti-diagonal r + c = d. Distinct
/// diagonals are disjoint, so one pass reaches the normal form.
pub fn reduce(m: &ExpoMatrix) -> Result<ExpoMatrix> {
    let mut out = m.clone();
    let diagonals: BTreeSet<i64> = m.iter().map(|(r, c, _)| r as i64 + c).collect();
    for d in diagonals {
        let low = diagonal_min(&out, d);
        if low > 0 {
            for r in 1..=out.row_count() {
                out.add(r, d - r as i64, -low)?;
            }
        }
    }
    Ok(out)
}

#[must_use]
pub fn is_reduced(m: &ExpoMatrix) -> bool {
    let diagonals: BTreeSet<i64> = m.iter().map(|(r, c, _)| r as i64 + c).collect();
    diagonals.into_iter().all(|d| diagonal_min(m, d) == 0)
}

/// The signed bracket series for node i: pluses from row i, minuses from
/// row i+1, per column.
pub fn stats(m: &ExpoMatrix, i: usize) -> Result<SeriesStats> {
    m.spec().check_index(i)?;
    let cols: BTreeSet<i64> = m
        .iter()
        .filter(|&(r, _, _)| r == i || r == i + 1)
        .map(|(_, c, _)| c)
        .collect();
    let items: Vec<(i64, i64, i64)> = cols
        .into_iter()
        .map(|c| (c, m.get(i, c), m.get(i + 1, c)))
        .collect();
    Ok(series_stats(&items))
}

/// Lowering: moves one unit from (i, k) to (i+1, k) at the minimal column
/// k realizing phi_i.
pub fn apply_f(m: &ExpoMatrix, i: usize) -> Result<Option<ExpoMatrix>> {
    let s = stats(m, i)?;
    if s.phi == 0 {
        return Ok(None);
    }
    let k = s.f_pos.expect("phi > 0 has an achieving column");
    let mut out = m.clone();
    out.add(i, k, -1)?;
    out.add(i + 1, k, 1)?;
    Ok(Some(out))
}

/// Raising: moves one unit from (i+1, p) to (i, p) at the maximal column
/// p realizing eps_i.
pub fn apply_e(m: &ExpoMatrix, i: usize) -> Result<Option<ExpoMatrix>> {
    let s = stats(m, i)?;
    if s.eps == 0 {
        return Ok(None);
    }
    let p = s.e_pos.expect("eps > 0 has an achieving column");
    let mut out = m.clone();
    out.add(i + 1, p, -1)?;
    out.add(i, p, 1)?;
    Ok(Some(out))
}
