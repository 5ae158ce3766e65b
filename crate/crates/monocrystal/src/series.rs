/// Bracket-counting statistics shared by the monomial and matrix crystal
/// operators.
///
/// The input is a finite list of positions, sorted strictly increasing, each
/// carrying a plus count `x >= 0` and a minus count `y >= 0`. Scanning left
/// to right, position `k` is evaluated after adding its plus count and
/// before subtracting its minus count:
///
///   g(k) = sum_{j <= k} x_j - sum_{j < k} y_j
///
/// and symmetrically from the right:
///
///   h(p) = sum_{j >= p} y_j - sum_{j > p} x_j.
///
/// `phi = max(0, max_k g(k))` and `eps = max(0, max_p h(p))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeriesStats {
    pub phi: i64,
    pub eps: i64,
    /// Minimal position achieving `phi` via `g`, present when `phi > 0`.
    /// That position always carries a plus count >= 1.
    pub f_pos: Option<i64>,
    /// Maximal position achieving `eps` via `h`, present when `eps > 0`.
    /// That position always carries a minus count >= 1.
    pub e_pos: Option<i64>,
}

/// Computes the statistics for a sorted series of `(position, plus, minus)`
/// triples.
#[must_use]
pub fn series_stats(items: &[(i64, i64, i64)]) -> SeriesStats {
    debug_assert!(items.windows(2).all(|w| w[0].0 < w[1].0));
    debug_assert!(items.iter().all(|&(_, x, y)| x >= 0 && y >= 0));

    let mut phi = 0i64;
    let mut f_pos = None;
    let mut cur = 0i64;
    for &(pos, x, y) in items {
        cur += x;
        if cur > phi {
            phi = cur;
            f_pos = Some(pos);
        }
        cur -= y;
    }

    let mut eps = 0i64;
    let mut e_pos = None;
    cur = 0;
    for &(pos, x, y) in items.iter().rev() {
        cur += y;
        if cur > eps {
            eps = cur;
            e_pos = Some(pos);
        }
        cur -= x;
    }

    SeriesStats {
        phi,
        eps,
        f_pos,
        e_pos,
    }
}
