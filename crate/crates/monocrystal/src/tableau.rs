//! Reversed tableaux built from staircase matrices, a signature-rule
//! oracle for type A, and a piecewise-linear path export. Rows are stored
//! in display order: the top row is the shortest, lengths weakly increase
//! downward, and each row is weakly increasing in the alphabet order.

use crate::cartan::{Family, Letter, RankSpec, Weight};
use crate::error::{Error, Result};
use crate::matrix::ExpoMatrix;
use serde_json::json;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    spec: RankSpec,
    shift: i64,
    rows: Vec<Vec<Letter>>,
    unnormalized: bool,
}

/// A piecewise-linear path: each segment is a step vector in the
/// beta-coordinate lattice, traversed in order from the origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathPolyline {
    spec: RankSpec,
    segments: Vec<Vec<i64>>,
}

/// Cell positions of the leftmost surviving plus and the rightmost
/// surviving minus after a bracketing pass over the reading word.
type Survivors = (Option<(usize, usize)>, Option<(usize, usize)>);

fn letter_position(spec: RankSpec, l: Letter) -> usize {
    l.position(spec).expect("letters in a tableau fit the spec")
}

fn sort_row(spec: RankSpec, row: &mut [Letter]) {
    row.sort_by_key(|&l| letter_position(spec, l));
}

impl Tableau {
    /// Reads a staircase-form matrix into its tableau: the letters of
    /// column s+r-1 become logical row r, displayed bottom-up.
    pub fn from_matrix(m: &ExpoMatrix) -> Result<Tableau> {
        let spec = m.spec();
        let (_, shift) = m.staircase_params().ok_or_else(|| {
            Error::RulePrecondition("matrix is not in staircase form".to_string())
        })?;
        let logical_rows = match (m.min_col(), m.max_col()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize,
            _ => 0,
        };
        let mut rows: Vec<Vec<Letter>> = Vec::with_capacity(logical_rows);
        for r in (1..=logical_rows).rev() {
            let col = shift + r as i64 - 1;
            let mut row = Vec::new();
            for pos in 1..=spec.row_count() {
                let v = m.get(pos, col);
                for _ in 0..v {
                    row.push(Letter::from_position(pos, spec)?);
                }
            }
            rows.push(row);
        }
        let t = Tableau {
            spec,
            shift,
            rows,
            unnormalized: spec.family == Family::C,
        };
        for pair in t.rows.windows(2) {
            if pair[0].len() > pair[1].len() {
                return Err(Error::Invariant(
                    "tableau row lengths must weakly increase downward".to_string(),
                ));
            }
        }
        if spec.family == Family::A && !t.columns_strictly_increase() {
            return Err(Error::Invariant(
                "tableau columns must strictly increase downward".to_string(),
            ));
        }
        Ok(t)
    }

    #[must_use]
    pub fn spec(&self) -> RankSpec {
        self.spec
    }

    #[must_use]
    pub fn shift(&self) -> i64 {
        self.shift
    }

    #[must_use]
    pub fn rows(&self) -> &[Vec<Letter>] {
        &self.rows
    }

    #[must_use]
    pub fn is_unnormalized(&self) -> bool {
        self.unnormalized
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    #[must_use]
    pub fn box_count(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn width(&self) -> usize {
        self.rows.last().map_or(0, Vec::len)
    }

    /// Whether every display column increases strictly top to bottom in
    /// the right-justified arrangement.
    #[must_use]
    pub fn columns_strictly_increase(&self) -> bool {
        let w = self.width();
        for pair in self.rows.windows(2) {
            let (upper, lower) = (&pair[0], &pair[1]);
            let (off_u, off_l) = (w - upper.len(), w - lower.len());
            for c in off_u..w {
                let a = letter_position(self.spec, upper[c - off_u]);
                let b = letter_position(self.spec, lower[c - off_l]);
                if a >= b {
                    return false;
                }
            }
        }
        true
    }

    /// Rebuilds the staircase matrix this tableau displays.
    pub fn to_matrix(&self) -> Result<ExpoMatrix> {
        let mut m = ExpoMatrix::zero(self.spec);
        let total = self.rows.len();
        for (d, row) in self.rows.iter().enumerate() {
            let logical = total - d;
            let col = self.shift + logical as i64 - 1;
            for &l in row {
                m.add(l.position(self.spec)?, col, 1)?;
            }
        }
        Ok(m)
    }

    /// The sum of beta weights over all boxes; barred letters count
    /// negatively.
    pub fn weight(&self) -> Result<Weight> {
        let mut w = Weight::zero(self.spec.rank);
        for row in &self.rows {
            for &l in row {
                let step = match l {
                    Letter::Unbarred(k) => self.spec.beta_weight(k)?,
                    Letter::Barred(k) => {
                        let b = self.spec.beta_weight(k)?;
                        Weight {
                            lambda: b.lambda.iter().map(|x| -x).collect(),
                        }
                    }
                };
                w = w.checked_add(&step)?;
            }
        }
        Ok(w)
    }

    /// The column reading word: display columns right to left, top to
    /// bottom within each column.
    #[must_use]
    pub fn reading_word(&self) -> Vec<Letter> {
        self.reading_cells()
            .into_iter()
            .map(|(d, idx)| self.rows[d][idx])
            .collect()
    }

    fn reading_cells(&self) -> Vec<(usize, usize)> {
        let w = self.width();
        let mut cells = Vec::with_capacity(self.box_count());
        for c in (0..w).rev() {
            for (d, row) in self.rows.iter().enumerate() {
                let off = w - row.len();
                if c >= off {
                    cells.push((d, c - off));
                }
            }
        }
        cells
    }

    fn signature_survivors(&self, i: usize) -> Result<Survivors> {
        if self.spec.family != Family::A {
            return Err(Error::RulePrecondition(
                "the signature rule oracle covers type A only".to_string(),
            ));
        }
        self.spec.check_index(i)?;
        let cells = self.reading_cells();
        let mut plus_stack: Vec<(usize, usize)> = Vec::new();
        let mut minus_survivors: Vec<(usize, usize)> = Vec::new();
        for (d, idx) in cells {
            let Letter::Unbarred(k) = self.rows[d][idx] else {
                continue;
            };
            if k == i {
                plus_stack.push((d, idx));
            } else if k == i + 1 && plus_stack.pop().is_none() {
                minus_survivors.push((d, idx));
            }
        }
        Ok((plus_stack.first().copied(), minus_survivors.last().copied()))
    }

    /// Signature-rule lowering for type A: brackets the reading word with
    /// "+" for the letter i and "-" for i+1, cancels "+-" pairs, and
    /// turns the leftmost surviving "+" into i+1. The survivor choice
    /// mirrors the matrix model, where lowering hits the smallest slot
    /// realizing phi and the reading word runs through slots descending.
    pub fn f_signature(&self, i: usize) -> Result<Option<Tableau>> {
        let (plus, _) = self.signature_survivors(i)?;
        let Some((d, idx)) = plus else {
            return Ok(None);
        };
        let mut out = self.clone();
        out.rows[d][idx] = Letter::Unbarred(i + 1);
        sort_row(out.spec, &mut out.rows[d]);
        Ok(Some(out))
    }

    /// Signature-rule raising for type A: the rightmost surviving "-"
    /// becomes the letter i.
    pub fn e_signature(&self, i: usize) -> Result<Option<Tableau>> {
        let (_, minus) = self.signature_survivors(i)?;
        let Some((d, idx)) = minus else {
            return Ok(None);
        };
        let mut out = self.clone();
        out.rows[d][idx] = Letter::Unbarred(i);
        sort_row(out.spec, &mut out.rows[d]);
        Ok(Some(out))
    }

    /// Exports the reading word as a polyline: one beta-coordinate unit
    /// step per box.
    pub fn to_path(&self) -> Result<PathPolyline> {
        let width = self.spec.beta_count();
        let mut segments = Vec::with_capacity(self.box_count());
        for l in self.reading_word() {
            let mut step = vec![0i64; width];
            match l {
                Letter::Unbarred(k) => step[k - 1] = 1,
                Letter::Barred(k) => step[k - 1] = -1,
            }
            segments.push(step);
        }
        Ok(PathPolyline {
            spec: self.spec,
            segments,
        })
    }

    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        let rows: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(Letter::to_string).collect())
            .collect();
        json!({
            "family": self.spec.family.to_string(),
            "rank": self.spec.rank,
            "shift": self.shift,
            "rows": rows,
            "unnormalized": self.unnormalized,
        })
    }

    /// Renders the right-justified display grid, one row per line, with
    /// `.` in the empty leading cells.
    #[must_use]
    pub fn to_text(&self) -> String {
        let w = self.width();
        let cell_width = self
            .rows
            .iter()
            .flatten()
            .map(|l| l.to_string().len())
            .max()
            .unwrap_or(1);
        let mut lines = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let off = w - row.len();
            let mut cells = Vec::with_capacity(w);
            for c in 0..w {
                let cell = if c < off {
                    ".".to_string()
                } else {
                    row[c - off].to_string()
                };
                cells.push(format!("{cell:>cell_width$}"));
            }
            lines.push(cells.join(" "));
        }
        lines.join("\n")
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl PathPolyline {
    #[must_use]
    pub fn spec(&self) -> RankSpec {
        self.spec
    }

    #[must_use]
    pub fn segments(&self) -> &[Vec<i64>] {
        &self.segments
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.segments.len()
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    /// Componentwise sum of all segments, in beta coordinates.
    #[must_use]
    pub fn endpoint(&self) -> Vec<i64> {
        let mut acc = vec![0i64; self.spec.beta_count()];
        for seg in &self.segments {
            for (a, s) in acc.iter_mut().zip(seg) {
                *a += s;
            }
        }
        acc
    }

    /// The endpoint converted back to fundamental-weight coordinates.
    pub fn endpoint_weight(&self) -> Result<Weight> {
        self.spec.beta_to_weight(&self.endpoint())
    }

    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "family": self.spec.family.to_string(),
            "rank": self.spec.rank,
            "segments": self.segments,
            "endpoint": self.endpoint(),
        })
    }
}
