//! Matrix encoding and reduction for type C. Rows follow the alphabet
//! 1 < ... < n < barred n < ... < barred 1 (positions 1..=2n). Reduction
//! rewrites with four monomial-invariant moves until no mass can cancel:
//! neutral pairs can migrate between adjacent letter levels, full
//! generalized diagonals cancel outright, and a lone anchor on one side
//! can cancel against the complete opposite half of its diagonal.

use crate::error::{Error, Result};
use crate::matrix::ExpoMatrix;
use crate::monomial::Monomial;
use crate::series::{series_stats, SeriesStats};
use std::collections::{BTreeSet, VecDeque};

/// Row position of the barred letter t.
#[must_use]
pub fn bar_row(rank: usize, t: usize) -> usize {
    2 * rank + 1 - t
}

/// Expands a monomial into generator multiplicities. Y_i(j) with positive
/// exponent contributes unbarred rows 1..=i along an anti-diagonal;
/// a negative exponent contributes barred rows 1..=i at columns
/// j - n + k - 1.
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
            for k in 1..=i {
                out.add(bar_row(n, k), j - n as i64 + k as i64 - 1, -e)?;
            }
        }
    }
    Ok(out)
}

/// Inverts the encoding: unbarred X_r(c) = Y_r(c).Y_{r-1}(c+1)^{-1}, and
/// barred X_t(c) = Y_{t-1}(c+n-t+1).Y_t(c+n-t+1)^{-1}, with out-of-range
/// Y factors equal to 1.
pub fn decode(m: &ExpoMatrix) -> Result<Monomial> {
    let spec = m.spec();
    let n = spec.rank;
    let mut out = Monomial::one(spec);
    for (r, c, v) in m.iter() {
        if r <= n {
            out.mul_y(r, c, v)?;
            if r >= 2 {
                out.mul_y(r - 1, c + 1, -v)?;
            }
        } else {
            let t = 2 * n + 1 - r;
            let slot = c + n as i64 - t as i64 + 1;
            if t >= 2 {
                out.mul_y(t - 1, slot, v)?;
            }
            out.mul_y(t, slot, -v)?;
        }
    }
    Ok(out)
}

/// The unbarred half of the level-i generalized diagonal anchored at
/// (i, k): rows 1..=i at columns i + k - r.
fn unbarred_slots(i: usize, k: i64) -> Vec<(usize, i64)> {
    (1..=i).map(|r| (r, i as i64 + k - r as i64)).collect()
}

/// The barred half of the same diagonal: barred letters 1..=i at columns
/// k - n - 1 + t.
fn barred_slots(rank: usize, i: usize, k: i64) -> Vec<(usize, i64)> {
    (1..=i)
        .map(|t| (bar_row(rank, t), k - n_i64(rank) - 1 + t as i64))
        .collect()
}

fn n_i64(rank: usize) -> i64 {
    rank as i64
}

fn check_delta(delta: i64) -> Result<()> {
    if delta < 1 {
        return Err(Error::RulePrecondition(format!(
            "multiplicity {delta} must be at least 1"
        )));
    }
    Ok(())
}

fn check_slot(m: &ExpoMatrix, slot: (usize, i64), delta: i64, what: &str) -> Result<()> {
    if m.get(slot.0, slot.1) < delta {
        return Err(Error::RulePrecondition(format!(
            "{what} at ({}, {}) holds {} < {delta}",
            slot.0,
            slot.1,
            m.get(slot.0, slot.1)
        )));
    }
    Ok(())
}

/// Moves a neutral pair one level inward: consumes (b, p) and
/// (barred b, p - (n - b)), produces (b+1, p) and (barred b+1, p - (n - b)).
/// Both sides encode Y_b(p).Y_b(p+1)^{-1}.
pub fn pair_inward(m: &ExpoMatrix, b: usize, p: i64, delta: i64) -> Result<ExpoMatrix> {
    let n = m.spec().rank;
    check_delta(delta)?;
    if b < 1 || b + 1 > n {
        return Err(Error::RulePrecondition(format!(
            "inward move needs 1 <= level {b} < rank {n}"
        )));
    }
    let q = p - (n_i64(n) - b as i64);
    check_slot(m, (b, p), delta, "unbarred pair member")?;
    check_slot(m, (bar_row(n, b), q), delta, "barred pair member")?;
    let mut out = m.clone();
    out.add(b, p, -delta)?;
    out.add(bar_row(n, b), q, -delta)?;
    out.add(b + 1, p, delta)?;
    out.add(bar_row(n, b + 1), q, delta)?;
    Ok(out)
}

/// Moves a neutral pair one level outward: consumes (b, p) and
/// (barred b, p - n + b - 1), produces (b-1, p) and (barred b-1, p - n + b - 1).
/// Both sides encode Y_{b-1}(p).Y_{b-1}(p+1)^{-1}.
pub fn pair_outward(m: &ExpoMatrix, b: usize, p: i64, delta: i64) -> Result<ExpoMatrix> {
    let n = m.spec().rank;
    check_delta(delta)?;
    if b < 2 || b > n {
        return Err(Error::RulePrecondition(format!(
            "outward move needs 2 <= level {b} <= rank {n}"
        )));
    }
    let q = p - n_i64(n) + b as i64 - 1;
    check_slot(m, (b, p), delta, "unbarred pair member")?;
    check_slot(m, (bar_row(n, b), q), delta, "barred pair member")?;
    let mut out = m.clone();
    out.add(b, p, -delta)?;
    out.add(bar_row(n, b), q, -delta)?;
    out.add(b - 1, p, delta)?;
    out.add(bar_row(n, b - 1), q, delta)?;
    Ok(out)
}

/// Cancels a full level-i generalized diagonal anchored at (i, k): every
/// one of its 2i slots loses `delta`. The diagonal encodes the neutral
/// product Y_i(k).Y_i(k)^{-1}.
pub fn cancel_diagonal(m: &ExpoMatrix, i: usize, k: i64, delta: i64) -> Result<ExpoMatrix> {
    let n = m.spec().rank;
    check_delta(delta)?;
    m.spec().check_index(i)?;
    let mut out = m.clone();
    for slot in unbarred_slots(i, k).into_iter().chain(barred_slots(n, i, k)) {
        check_slot(m, slot, delta, "diagonal slot")?;
        out.add(slot.0, slot.1, -delta)?;
    }
    Ok(out)
}

/// Cancels the unbarred anchor (i, k) against the complete barred half of
/// its diagonal: the anchor and the outermost barred slot lose `delta`,
/// and the remaining barred mass shifts one letter outward. Only the
/// anchor is needed on the unbarred side. Net encoded change: none.
pub fn cancel_against_barred(m: &ExpoMatrix, i: usize, k: i64, delta: i64) -> Result<ExpoMatrix> {
    let n = m.spec().rank;
    check_delta(delta)?;
    if i < 2 || i > n {
        return Err(Error::RulePrecondition(format!(
            "half cancellation needs 2 <= level {i} <= rank {n}"
        )));
    }
    check_slot(m, (i, k), delta, "unbarred anchor")?;
    for slot in barred_slots(n, i, k) {
        check_slot(m, slot, delta, "barred slot")?;
    }
    let mut out = m.clone();
    out.add(i, k, -delta)?;
    out.add(bar_row(n, 1), k - n_i64(n), -delta)?;
    for t in 1..i {
        out.add(bar_row(n, t), k - n_i64(n) + t as i64, delta)?;
        out.add(bar_row(n, t + 1), k - n_i64(n) + t as i64, -delta)?;
    }
    Ok(out)
}

/// Cancels the barred anchor (barred i, k + i - n - 1) against the
/// complete unbarred half of its diagonal: the anchor and the outermost
/// unbarred slot lose `delta`, and the remaining unbarred mass shifts one
/// letter outward. Net encoded change: none.
pub fn cancel_against_unbarred(m: &ExpoMatrix, i: usize, k: i64, delta: i64) -> Result<ExpoMatrix> {
    let n = m.spec().rank;
    check_delta(delta)?;
    if i < 2 || i > n {
        return Err(Error::RulePrecondition(format!(
            "half cancellation needs 2 <= level {i} <= rank {n}"
        )));
    }
    let anchor = (bar_row(n, i), k + i as i64 - n_i64(n) - 1);
    check_slot(m, anchor, delta, "barred anchor")?;
    for slot in unbarred_slots(i, k) {
        check_slot(m, slot, delta, "unbarred slot")?;
    }
    let mut out = m.clone();
    out.add(anchor.0, anchor.1, -delta)?;
    for (r, c) in unbarred_slots(i, k) {
        out.add(r, c, -delta)?;
    }
    for r in 1..i {
        out.add(r, i as i64 + k - 1 - r as i64, delta)?;
    }
    Ok(out)
}

/// Tries to make `slot` nonzero by migrating neutral pairs toward it,
/// recursively creating the sources it needs. Moves are committed to `m`
/// even when the attempt ultimately fails; callers work on a scratch copy.
fn ensure(
    m: &mut ExpoMatrix,
    slot: (usize, i64),
    in_progress: &mut BTreeSet<(usize, i64)>,
    depth: usize,
) -> Result<bool> {
    if m.get(slot.0, slot.1) >= 1 {
        return Ok(true);
    }
    if depth == 0 || in_progress.contains(&slot) {
        return Ok(false);
    }
    in_progress.insert(slot);
    let n = m.spec().rank;
    let (row, col) = slot;
    let mut done = false;

    if row <= n {
        let r = row;
        if !done && r >= 2 {
            let s1 = (r - 1, col);
            let s2 = (bar_row(n, r - 1), col - n_i64(n) + r as i64 - 1);
            if ensure(m, s1, in_progress, depth - 1)? && ensure(m, s2, in_progress, depth - 1)? {
                *m = pair_inward(m, r - 1, col, 1)?;
                done = true;
            }
        }
        if !done && r < n {
            let s1 = (r + 1, col);
            let s2 = (bar_row(n, r + 1), col - n_i64(n) + r as i64);
            if ensure(m, s1, in_progress, depth - 1)? && ensure(m, s2, in_progress, depth - 1)? {
                *m = pair_outward(m, r + 1, col, 1)?;
                done = true;
            }
        }
    } else {
        let t = 2 * n + 1 - row;
        if !done && t < n {
            let s1 = (t + 1, col + n_i64(n) - t as i64);
            let s2 = (bar_row(n, t + 1), col);
            if ensure(m, s1, in_progress, depth - 1)? && ensure(m, s2, in_progress, depth - 1)? {
                *m = pair_outward(m, t + 1, col + n_i64(n) - t as i64, 1)?;
                done = true;
            }
        }
        if !done && t >= 2 {
            let s1 = (t - 1, col + n_i64(n) - t as i64 + 1);
            let s2 = (bar_row(n, t - 1), col);
            if ensure(m, s1, in_progress, depth - 1)? && ensure(m, s2, in_progress, depth - 1)? {
                *m = pair_inward(m, t - 1, col + n_i64(n) - t as i64 + 1, 1)?;
                done = true;
            }
        }
    }

    in_progress.remove(&slot);
    Ok(done)
}

/// Repeatedly ensures every target slot is nonzero, tolerating later
/// ensures consuming earlier targets, within a bounded number of rounds.
fn ensure_all(m: &mut ExpoMatrix, targets: &[(usize, i64)]) -> Result<bool> {
    let n = m.spec().rank;
    let depth = 4 * n + 4;
    for _ in 0..(2 * targets.len() + 2) {
        let missing: Vec<(usize, i64)> = targets
            .iter()
            .copied()
            .filter(|&(r, c)| m.get(r, c) == 0)
            .collect();
        if missing.is_empty() {
            return Ok(true);
        }
        let mut progressed = false;
        for slot in missing {
            let mut guard = BTreeSet::new();
            if ensure(m, slot, &mut guard, depth)? {
                progressed = true;
            }
        }
        if !progressed {
            return Ok(false);
        }
    }
    Ok(false)
}

fn slot_min(m: &ExpoMatrix, slots: &[(usize, i64)]) -> i64 {
    slots
        .iter()
        .map(|&(r, c)| m.get(r, c))
        .min()
        .unwrap_or(0)
}

/// Performs one cancellation at the level-i diagonal anchored at (i, k)
/// if any variant applies, possibly after migrating pairs to fill the
/// needed half. Returns whether the matrix changed.
fn try_cancel_at(cur: &mut ExpoMatrix, i: usize, k: i64) -> Result<bool> {
    let n = cur.spec().rank;
    let unb = unbarred_slots(i, k);
    let brd = barred_slots(n, i, k);

    let full: Vec<(usize, i64)> = unb.iter().chain(brd.iter()).copied().collect();
    let d3 = slot_min(cur, &full);
    if d3 >= 1 {
        *cur = cancel_diagonal(cur, i, k, d3)?;
        return Ok(true);
    }
    if i < 2 {
        return Ok(false);
    }

    let anchor_u = (i, k);
    let anchor_b = (bar_row(n, i), k + i as i64 - n_i64(n) - 1);

    let d1 = cur.get(anchor_u.0, anchor_u.1).min(slot_min(cur, &brd));
    if d1 >= 1 {
        *cur = cancel_against_barred(cur, i, k, d1)?;
        return Ok(true);
    }
    let d2 = cur.get(anchor_b.0, anchor_b.1).min(slot_min(cur, &unb));
    if d2 >= 1 {
        *cur = cancel_against_unbarred(cur, i, k, d2)?;
        return Ok(true);
    }

    if cur.get(anchor_u.0, anchor_u.1) >= 1 {
        let mut scratch = cur.clone();
        let mut targets = brd.clone();
        targets.push(anchor_u);
        if ensure_all(&mut scratch, &targets)? {
            let df = slot_min(&scratch, &full);
            if df >= 1 {
                *cur = cancel_diagonal(&scratch, i, k, df)?;
                return Ok(true);
            }
            let d = scratch
                .get(anchor_u.0, anchor_u.1)
                .min(slot_min(&scratch, &brd));
            if d >= 1 {
                *cur = cancel_against_barred(&scratch, i, k, d)?;
                return Ok(true);
            }
        }
    }

    if cur.get(anchor_b.0, anchor_b.1) >= 1 {
        let mut scratch = cur.clone();
        let mut targets = unb.clone();
        targets.push(anchor_b);
        if ensure_all(&mut scratch, &targets)? {
            let df = slot_min(&scratch, &full);
            if df >= 1 {
                *cur = cancel_diagonal(&scratch, i, k, df)?;
                return Ok(true);
            }
            let d = scratch
                .get(anchor_b.0, anchor_b.1)
                .min(slot_min(&scratch, &unb));
            if d >= 1 {
                *cur = cancel_against_unbarred(&scratch, i, k, d)?;
                return Ok(true);
            }
        }
    }

    Ok(false)
}

/// Anchor columns worth probing for level i: columns holding unbarred
/// mass in row i, and columns k whose barred anchor holds mass.
fn anchor_columns(m: &ExpoMatrix, i: usize) -> Vec<i64> {
    let n = m.spec().rank;
    let mut ks: BTreeSet<i64> = BTreeSet::new();
    for (r, c, _) in m.iter() {
        if r == i {
            ks.insert(c);
        }
        if r == bar_row(n, i) {
            ks.insert(c + n_i64(n) + 1 - i as i64);
        }
    }
    ks.into_iter().rev().collect()
}

fn scan_pass(cur: &mut ExpoMatrix) -> Result<bool> {
    let n = cur.spec().rank;
    let mut changed = false;
    loop {
        let mut pass = false;
        for i in (1..=n).rev() {
            for k in anchor_columns(cur, i) {
                while try_cancel_at(cur, i, k)? {
                    pass = true;
                    changed = true;
                }
            }
        }
        if !pass {
            break;
        }
    }
    Ok(changed)
}

/// Pushes every neutral pair as far outward as it goes; the normal form
/// keeps pair mass at the outermost level where it can sit.
fn outward_normalize(cur: &mut ExpoMatrix) -> Result<bool> {
    let n = cur.spec().rank;
    let mut changed = false;
    loop {
        let mut pass = false;
        for b in 2..=n {
            let ps: Vec<i64> = cur
                .iter()
                .filter(|&(r, _, _)| r == b)
                .map(|(_, c, _)| c)
                .collect();
            for p in ps {
                let q = p - n_i64(n) + b as i64 - 1;
                let d = cur.get(b, p).min(cur.get(bar_row(n, b), q));
                if d >= 1 {
                    *cur = pair_outward(cur, b, p, d)?;
                    pass = true;
                    changed = true;
                }
            }
        }
        if !pass {
            break;
        }
    }
    Ok(changed)
}

/// Moves every neutral pair whose unbarred member lands in the staircase
/// part while its barred member stays in the remainder one level inward.
/// Such a split changes the bracket series once the remainder shifts, so
/// the decomposition is retried until no pair straddles that way.
pub(crate) fn park_split_pairs(
    pre: &mut ExpoMatrix,
    m1: &ExpoMatrix,
    m2: &ExpoMatrix,
) -> Result<bool> {
    let n = pre.spec().rank;
    let mut moved = false;
    for b in 1..n {
        let ps: Vec<i64> = pre
            .iter()
            .filter(|&(r, _, _)| r == b)
            .map(|(_, c, _)| c)
            .collect();
        for p in ps {
            let q = p - (n_i64(n) - b as i64);
            let rb = bar_row(n, b);
            if m1.get(b, p) > 0 && m2.get(rb, q) > 0 {
                let d = pre.get(b, p).min(pre.get(rb, q));
                if d >= 1 {
                    *pre = pair_inward(pre, b, p, d)?;
                    moved = true;
                }
            }
        }
    }
    Ok(moved)
}

/// Rewrites to the reduced normal form: no cancellation applies (directly
/// or after pair migration) and every neutral pair sits outermost.
pub fn reduce(m: &ExpoMatrix) -> Result<ExpoMatrix> {
    let mut cur = m.clone();
    let cap = (cur.entry_sum() as usize + 2) * (m.spec().rank + 2) + 4;
    for _ in 0..cap {
        let a = scan_pass(&mut cur)?;
        let b = outward_normalize(&mut cur)?;
        if !a && !b {
            return Ok(cur);
        }
    }
    Err(Error::NonTermination(cap))
}

pub fn is_reduced(m: &ExpoMatrix) -> Result<bool> {
    let mut probe = m.clone();
    let a = scan_pass(&mut probe)?;
    if a {
        return Ok(false);
    }
    let b = outward_normalize(&mut probe)?;
    Ok(!b)
}

/// The signed bracket series for node i. For i < n pluses come from
/// (i, j) and (barred i+1, j-n+i), minuses from (i+1, j) and
/// (barred i, j-n+i); for i = n from (n, j) and (barred n, j).
pub fn stats(m: &ExpoMatrix, i: usize) -> Result<SeriesStats> {
    let spec = m.spec();
    spec.check_index(i)?;
    let n = spec.rank;
    let mut cols: BTreeSet<i64> = BTreeSet::new();
    for (r, c, _) in m.iter() {
        if i < n {
            if r == i || r == i + 1 {
                cols.insert(c);
            }
            if r == bar_row(n, i) || r == bar_row(n, i + 1) {
                cols.insert(c + n_i64(n) - i as i64);
            }
        } else if r == n || r == bar_row(n, n) {
            cols.insert(c);
        }
    }
    let items: Vec<(i64, i64, i64)> = cols
        .into_iter()
        .map(|j| {
            if i < n {
                let shifted = j - n_i64(n) + i as i64;
                (
                    j,
                    m.get(i, j) + m.get(bar_row(n, i + 1), shifted),
                    m.get(i + 1, j) + m.get(bar_row(n, i), shifted),
                )
            } else {
                (j, m.get(n, j), m.get(bar_row(n, n), j))
            }
        })
        .collect();
    Ok(series_stats(&items))
}

/// Lowering at the minimal column k realizing phi_i: when the barred plus
/// slot is empty the unbarred unit (i, k) moves to (i+1, k), otherwise
/// the barred unit (barred i+1) moves to (barred i) in place.
pub fn apply_f(m: &ExpoMatrix, i: usize) -> Result<Option<ExpoMatrix>> {
    let spec = m.spec();
    let n = spec.rank;
    let s = stats(m, i)?;
    if s.phi == 0 {
        return Ok(None);
    }
    let k = s.f_pos.expect("phi > 0 has an achieving column");
    let mut out = m.clone();
    if i == n {
        out.add(n, k, -1)?;
        out.add(bar_row(n, n), k, 1)?;
    } else {
        let shifted = k - n_i64(n) + i as i64;
        if m.get(bar_row(n, i + 1), shifted) == 0 {
            out.add(i, k, -1)?;
            out.add(i + 1, k, 1)?;
        } else {
            out.add(bar_row(n, i + 1), shifted, -1)?;
            out.add(bar_row(n, i), shifted, 1)?;
        }
    }
    Ok(Some(out))
}

/// Raising at the maximal column p realizing eps_i: when the unbarred
/// minus slot holds mass the unit (i+1, p) moves back to (i, p),
/// otherwise the barred unit (barred i) moves to (barred i+1) in place.
pub fn apply_e(m: &ExpoMatrix, i: usize) -> Result<Option<ExpoMatrix>> {
    let spec = m.spec();
    let n = spec.rank;
    let s = stats(m, i)?;
    if s.eps == 0 {
        return Ok(None);
    }
    let p = s.e_pos.expect("eps > 0 has an achieving column");
    let mut out = m.clone();
    if i == n {
        out.add(bar_row(n, n), p, -1)?;
        out.add(n, p, 1)?;
    } else {
        let shifted = p - n_i64(n) + i as i64;
        if m.get(i + 1, p) >= 1 {
            out.add(i + 1, p, -1)?;
            out.add(i, p, 1)?;
        } else {
            out.add(bar_row(n, i), shifted, -1)?;
            out.add(bar_row(n, i + 1), shifted, 1)?;
        }
    }
    Ok(Some(out))
}

/// Exhaustively explores every sequence of single rewriting moves from a
/// starting matrix, returning the minimal entry sum reachable. Intended
/// for small test instances only.
pub fn exhaustive_min_entry_sum(m: &ExpoMatrix, state_cap: usize) -> Result<i64> {
    let n = m.spec().rank;
    let mut best = m.entry_sum();
    let mut seen: BTreeSet<String> = BTreeSet::new();
    let mut queue: VecDeque<ExpoMatrix> = VecDeque::new();
    let key = |m: &ExpoMatrix| -> String {
        m.iter()
            .map(|(r, c, v)| format!("{r},{c}:{v}"))
            .collect::<Vec<_>>()
            .join(";")
    };
    seen.insert(key(m));
    queue.push_back(m.clone());
    while let Some(x) = queue.pop_front() {
        best = best.min(x.entry_sum());
        let mut nexts: Vec<ExpoMatrix> = Vec::new();
        for b in 1..n {
            for (r, p, _) in x.iter().filter(|&(r, _, _)| r == b).collect::<Vec<_>>() {
                if let Ok(y) = pair_inward(&x, r, p, 1) {
                    nexts.push(y);
                }
            }
        }
        for b in 2..=n {
            for (r, p, _) in x.iter().filter(|&(r, _, _)| r == b).collect::<Vec<_>>() {
                if let Ok(y) = pair_outward(&x, r, p, 1) {
                    nexts.push(y);
                }
            }
        }
        for i in 1..=n {
            for k in anchor_columns(&x, i) {
                if let Ok(y) = cancel_diagonal(&x, i, k, 1) {
                    nexts.push(y);
                }
                if i >= 2 {
                    if let Ok(y) = cancel_against_barred(&x, i, k, 1) {
                        nexts.push(y);
                    }
                    if let Ok(y) = cancel_against_unbarred(&x, i, k, 1) {
                        nexts.push(y);
                    }
                }
            }
        }
        for y in nexts {
            let yk = key(&y);
            if seen.insert(yk) {
                if seen.len() > state_cap {
                    return Err(Error::CapExceeded(state_cap));
                }
                queue.push_back(y);
            }
        }
    }
    Ok(best)
}
