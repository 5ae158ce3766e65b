use crate::cartan::{Family, RankSpec, Weight};
use crate::crystal::Crystal;
use crate::error::{Error, Result};
use crate::{matrix_a, matrix_c};
use crate::monomial::Monomial;
use std::collections::BTreeMap;
use std::fmt;

/// A nonnegative integer matrix with rows indexed by the crystal alphabet
/// (positions 1..=row_count) and columns by arbitrary integers. Entries
/// store the multiplicity of the generator X_letter(column); only nonzero
/// entries are kept.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpoMatrix {
    spec: RankSpec,
    entries: BTreeMap<(usize, i64), i64>,
}

impl ExpoMatrix {
    #[must_use]
    pub fn zero(spec: RankSpec) -> Self {
        ExpoMatrix {
            spec,
            entries: BTreeMap::new(),
        }
    }

    #[must_use]
    pub fn spec(&self) -> RankSpec {
        self.spec
    }

    #[must_use]
    pub fn row_count(&self) -> usize {
        self.spec.row_count()
    }

    #[must_use]
    pub fn get(&self, row: usize, col: i64) -> i64 {
        self.entries.get(&(row, col)).copied().unwrap_or(0)
    }

    /// Adds `delta` to an entry, failing if the result would be negative.
    pub fn add(&mut self, row: usize, col: i64, delta: i64) -> Result<()> {
        if row < 1 || row > self.row_count() {
            return Err(Error::IndexOutOfRange {
                what: "row position",
                got: row as i64,
                min: 1,
                max: self.row_count() as i64,
            });
        }
        let slot = self.entries.entry((row, col)).or_insert(0);
        *slot += delta;
        if *slot < 0 {
            return Err(Error::Invariant(format!(
                "entry ({row},{col}) driven negative"
            )));
        }
        if *slot == 0 {
            self.entries.remove(&(row, col));
        }
        Ok(())
    }

    /// Iterates nonzero entries as (row, col, value).
    pub fn iter(&self) -> impl Iterator<Item = (usize, i64, i64)> + '_ {
        self.entries.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    #[must_use]
    pub fn entry_sum(&self) -> i64 {
        self.entries.values().sum()
    }

    #[must_use]
    pub fn min_col(&self) -> Option<i64> {
        self.entries.keys().map(|&(_, c)| c).min()
    }

    #[must_use]
    pub fn max_col(&self) -> Option<i64> {
        self.entries.keys().map(|&(_, c)| c).max()
    }

    #[must_use]
    pub fn nonzero_col_count(&self) -> usize {
        self.entries
            .keys()
            .map(|&(_, c)| c)
            .collect::<std::collections::BTreeSet<_>>()
            .len()
    }

    #[must_use]
    pub fn col_sum(&self, col: i64) -> i64 {
        self.entries
            .iter()
            .filter(|(&(_, c), _)| c == col)
            .map(|(_, &v)| v)
            .sum()
    }

    #[must_use]
    pub fn row_sum(&self, row: usize) -> i64 {
        self.entries
            .iter()
            .filter(|(&(r, _), _)| r == row)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Entrywise sum.
    pub fn add_matrix(&self, other: &ExpoMatrix) -> Result<ExpoMatrix> {
        self.check_same_spec(other)?;
        let mut out = self.clone();
        for (r, c, v) in other.iter() {
            out.add(r, c, v)?;
        }
        Ok(out)
    }

    /// Entrywise difference, failing if any entry would go negative.
    pub fn sub_matrix(&self, other: &ExpoMatrix) -> Result<ExpoMatrix> {
        self.check_same_spec(other)?;
        let mut out = self.clone();
        for (r, c, v) in other.iter() {
            out.add(r, c, -v)?;
        }
        Ok(out)
    }

    /// Translates every column by t.
    #[must_use]
    pub fn shift_cols(&self, t: i64) -> ExpoMatrix {
        ExpoMatrix {
            spec: self.spec,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), &v)| ((r, c + t), v))
                .collect(),
        }
    }

    fn check_same_spec(&self, other: &ExpoMatrix) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch {
                left: self.spec.to_string(),
                right: other.spec.to_string(),
            });
        }
        Ok(())
    }

    /// Builds a matrix from dense rows starting at `col_offset`.
    pub fn from_rows(spec: RankSpec, col_offset: i64, rows: &[Vec<i64>]) -> Result<Self> {
        if rows.len() != spec.row_count() {
            return Err(Error::LengthMismatch {
                expected: spec.row_count(),
                got: rows.len(),
            });
        }
        let width = rows.first().map_or(0, Vec::len);
        let mut m = ExpoMatrix::zero(spec);
        for (ridx, row) in rows.iter().enumerate() {
            if row.len() != width {
                return Err(Error::LengthMismatch {
                    expected: width,
                    got: row.len(),
                });
            }
            for (cidx, &v) in row.iter().enumerate() {
                if v < 0 {
                    return Err(Error::Parse {
                        pos: cidx,
                        msg: format!("negative entry {v} in row {}", ridx + 1),
                    });
                }
                if v > 0 {
                    m.add(ridx + 1, col_offset + cidx as i64, v)?;
                }
            }
        }
        Ok(m)
    }

    /// Dense row representation: (col_offset, rows). The zero matrix is a
    /// single column of zeros at offset 0.
    #[must_use]
    pub fn to_rows(&self) -> (i64, Vec<Vec<i64>>) {
        let lo = self.min_col().unwrap_or(0);
        let hi = self.max_col().unwrap_or(0);
        let width = (hi - lo + 1) as usize;
        let mut rows = vec![vec![0i64; width]; self.row_count()];
        for (r, c, v) in self.iter() {
            rows[r - 1][(c - lo) as usize] = v;
        }
        (lo, rows)
    }

    #[must_use]
    pub fn to_json(&self) -> serde_json::Value {
        let (offset, rows) = self.to_rows();
        serde_json::json!({
            "family": self.spec.family.to_string(),
            "rank": self.spec.rank,
            "col_offset": offset,
            "rows": rows,
        })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let obj = value.as_object().ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "expected a JSON object".into(),
        })?;
        let family: Family = obj
            .get("family")
            .and_then(|v| v.as_str())
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "missing \"family\"".into(),
            })?
            .parse()?;
        let rank = obj
            .get("rank")
            .and_then(serde_json::Value::as_u64)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "missing \"rank\"".into(),
            })? as usize;
        let col_offset = obj
            .get("col_offset")
            .and_then(serde_json::Value::as_i64)
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "missing \"col_offset\"".into(),
            })?;
        let rows_val = obj
            .get("rows")
            .and_then(|v| v.as_array())
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "missing \"rows\"".into(),
            })?;
        let mut rows = Vec::with_capacity(rows_val.len());
        for row in rows_val {
            let row = row.as_array().ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "rows must be arrays".into(),
            })?;
            let mut out = Vec::with_capacity(row.len());
            for v in row {
                out.push(v.as_i64().ok_or_else(|| Error::Parse {
                    pos: 0,
                    msg: "entries must be integers".into(),
                })?);
            }
            rows.push(out);
        }
        let spec = RankSpec::new(family, rank);
        spec.validate()?;
        ExpoMatrix::from_rows(spec, col_offset, &rows)
    }

    /// Text form: a header line `matrix family=A rank=4 col_offset=0`
    /// followed by one line of space-separated entries per row letter.
    #[must_use]
    pub fn to_text(&self) -> String {
        let (offset, rows) = self.to_rows();
        let mut out = format!(
            "matrix family={} rank={} col_offset={}\n",
            self.spec.family, self.spec.rank, offset
        );
        for row in rows {
            let line: Vec<String> = row.iter().map(i64::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse {
            pos: 0,
            msg: "empty matrix text".into(),
        })?;
        let mut family = None;
        let mut rank = None;
        let mut col_offset = None;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("matrix") {
            return Err(Error::Parse {
                pos: 0,
                msg: "header must start with \"matrix\"".into(),
            });
        }
        for field in fields {
            let (k, v) = field.split_once('=').ok_or_else(|| Error::Parse {
                pos: 0,
                msg: format!("bad header field {field:?}"),
            })?;
            match k {
                "family" => family = Some(v.parse::<Family>()?),
                "rank" => {
                    rank = Some(v.parse::<usize>().map_err(|_| Error::Parse {
                        pos: 0,
                        msg: "bad rank".into(),
                    })?)
                }
                "col_offset" => {
                    col_offset = Some(v.parse::<i64>().map_err(|_| Error::Parse {
                        pos: 0,
                        msg: "bad col_offset".into(),
                    })?)
                }
                other => {
                    return Err(Error::Parse {
                        pos: 0,
                        msg: format!("unknown header field {other:?}"),
                    })
                }
            }
        }
        let (family, rank, col_offset) = match (family, rank, col_offset) {
            (Some(f), Some(r), Some(c)) => (f, r, c),
            _ => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "header needs family, rank, col_offset".into(),
                })
            }
        };
        let spec = RankSpec::new(family, rank);
        spec.validate()?;
        let mut rows = Vec::new();
        for line in lines {
            let mut row = Vec::new();
            for tok in line.split_whitespace() {
                row.push(tok.parse::<i64>().map_err(|_| Error::Parse {
                    pos: 0,
                    msg: format!("bad entry {tok:?}"),
                })?);
            }
            rows.push(row);
        }
        ExpoMatrix::from_rows(spec, col_offset, &rows)
    }

    /// The weight of the encoded monomial, computed from row sums in the
    /// beta basis.
    #[must_use]
    pub fn weight(&self) -> Weight {
        let n = self.spec.rank;
        let count = self.spec.beta_count();
        let mut b = vec![0i64; count];
        match self.spec.family {
            Family::A => {
                for (k, slot) in b.iter_mut().enumerate() {
                    *slot = self.row_sum(k + 1);
                }
            }
            Family::C => {
                for (k, slot) in b.iter_mut().enumerate() {
                    *slot = self.row_sum(k + 1) - self.row_sum(2 * n - k);
                }
            }
        }
        self.spec
            .beta_to_weight(&b)
            .expect("beta coordinate count matches the rank")
    }

    /// The canonical matrix of a monomial: the raw generator expansion
    /// followed by reduction.
    pub fn encode(m: &Monomial) -> Result<ExpoMatrix> {
        Self::encode_raw(m)?.reduce()
    }

    /// The raw generator expansion of a monomial, without reduction.
    pub fn encode_raw(m: &Monomial) -> Result<ExpoMatrix> {
        match m.spec().family {
            Family::A => matrix_a::encode_raw(m),
            Family::C => matrix_c::encode_raw(m),
        }
    }

    /// The monomial this matrix encodes: the product of X_letter(col) over
    /// all entries.
    pub fn decode(&self) -> Result<Monomial> {
        match self.spec.family {
            Family::A => matrix_a::decode(self),
            Family::C => matrix_c::decode(self),
        }
    }

    /// Rewrites the matrix to its reduced normal form. The encoded
    /// monomial is unchanged.
    pub fn reduce(&self) -> Result<ExpoMatrix> {
        match self.spec.family {
            Family::A => matrix_a::reduce(self),
            Family::C => matrix_c::reduce(self),
        }
    }

    pub fn is_reduced(&self) -> Result<bool> {
        match self.spec.family {
            Family::A => Ok(matrix_a::is_reduced(self)),
            Family::C => matrix_c::is_reduced(self),
        }
    }

    /// If the matrix lies in the normalized staircase family, returns its
    /// dominant weight and shift: entries confined to columns
    /// [s, s+rank-1] and every column dominated by the previous one below
    /// each letter. The zero matrix reports weight 0 at shift 0.
    #[must_use]
    pub fn staircase_params(&self) -> Option<(Weight, i64)> {
        let n = self.spec.rank;
        let rows = self.row_count();
        let Some(s) = self.min_col() else {
            return Some((Weight::zero(n), 0));
        };
        let hi = self.max_col().expect("nonzero matrix has a max column");
        if hi > s + n as i64 - 1 {
            return None;
        }
        for j in (s + 1)..=(s + n as i64 - 1) {
            let mut tail_j = 0;
            let mut tail_prev = 0;
            for r in (1..=rows).rev() {
                tail_j += self.get(r, j);
                if tail_j > tail_prev {
                    return None;
                }
                tail_prev += self.get(r, j - 1);
            }
        }
        let mut lambda = vec![0i64; n];
        for (k, slot) in lambda.iter_mut().enumerate() {
            let here = self.col_sum(s + k as i64);
            let next = if k + 1 < n {
                self.col_sum(s + k as i64 + 1)
            } else {
                0
            };
            *slot = here - next;
            debug_assert!(*slot >= 0);
        }
        Some((Weight { lambda }, s))
    }

    /// Splits a reduced matrix into a staircase part M1 (greedily maximal
    /// column by column) and the remainder M2.
    pub fn lower_decomposition(&self) -> Result<(ExpoMatrix, ExpoMatrix)> {
        let rows = self.row_count();
        let Some(lo) = self.min_col() else {
            return Ok((self.clone(), ExpoMatrix::zero(self.spec)));
        };
        let hi = self.max_col().expect("nonzero matrix has a max column");

        let col_vec = |m: &ExpoMatrix, c: i64| -> Vec<i64> {
            (1..=rows).map(|r| m.get(r, c)).collect()
        };

        let mut m1 = ExpoMatrix::zero(self.spec);
        for r in 1..=rows {
            let v = self.get(r, lo);
            if v > 0 {
                m1.add(r, lo, v)?;
            }
        }
        let mut prev = col_vec(&m1, lo);
        for j in (lo + 1)..=hi {
            let cur = col_vec(self, j);
            let mut out = vec![0i64; rows];
            let mut t = 0i64;
            let mut b = 0i64;
            for r in (0..rows).rev() {
                let cap = t - b;
                debug_assert!(cap >= 0);
                let v = cur[r].min(cap);
                if v > 0 {
                    out[r] = v;
                    m1.add(r + 1, j, v)?;
                }
                t += prev[r];
                b += out[r];
            }
            prev = out;
        }

        let m2 = self.sub_matrix(&m1).map_err(|_| {
            Error::DecompositionOverlap("staircase part exceeds the matrix".into())
        })?;

        if m1.nonzero_col_count() > self.spec.rank {
            return Err(Error::DecompositionOverlap(format!(
                "staircase part spans {} columns, more than the rank {}",
                m1.nonzero_col_count(),
                self.spec.rank
            )));
        }
        if m1.staircase_params().is_none() {
            return Err(Error::DecompositionOverlap(
                "staircase part is not a normalized staircase".into(),
            ));
        }
        Ok((m1, m2))
    }

    /// One compression step: split off the staircase part, slide the
    /// remainder one column left, recombine, and reduce. Neutral pairs
    /// that the split would separate are parked one level inward first.
    pub fn compress_step(&self) -> Result<ExpoMatrix> {
        let mut pre = self.clone();
        let cap = self.spec.rank * self.entry_sum() as usize + 2;
        for _ in 0..cap {
            let (m1, m2) = pre.lower_decomposition()?;
            let moved = match self.spec.family {
                Family::A => false,
                Family::C => matrix_c::park_split_pairs(&mut pre, &m1, &m2)?,
            };
            if !moved {
                return m1.add_matrix(&m2.shift_cols(-1))?.reduce();
            }
        }
        Err(Error::NonTermination(cap))
    }

    /// Iterates compression steps until the matrix is a normalized
    /// staircase.
    pub fn compress(&self) -> Result<ExpoMatrix> {
        let mut cur = self.reduce()?;
        let span = match (cur.min_col(), cur.max_col()) {
            (Some(lo), Some(hi)) => (hi - lo + 1) as usize,
            _ => 0,
        };
        let cap = span * cur.entry_sum() as usize + self.spec.rank + 2;
        for _ in 0..cap {
            if cur.staircase_params().is_some() {
                return Ok(cur);
            }
            cur = cur.compress_step()?;
        }
        Err(Error::NonTermination(cap))
    }
}

impl fmt::Display for ExpoMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl Crystal for ExpoMatrix {
    fn spec(&self) -> RankSpec {
        self.spec
    }

    fn weight(&self) -> Weight {
        ExpoMatrix::weight(self)
    }

    fn phi(&self, i: usize) -> Result<i64> {
        let stats = match self.spec.family {
            Family::A => matrix_a::stats(self, i)?,
            Family::C => matrix_c::stats(self, i)?,
        };
        Ok(stats.phi)
    }

    fn eps(&self, i: usize) -> Result<i64> {
        let stats = match self.spec.family {
            Family::A => matrix_a::stats(self, i)?,
            Family::C => matrix_c::stats(self, i)?,
        };
        Ok(stats.eps)
    }

    fn f(&self, i: usize) -> Result<Option<Self>> {
        if !self.is_reduced()? {
            return Err(Error::ReductionViolated(
                "lowering applied to an unreduced matrix".into(),
            ));
        }
        let out = match self.spec.family {
            Family::A => matrix_a::apply_f(self, i)?,
            Family::C => matrix_c::apply_f(self, i)?,
        };
        if let Some(ref m) = out {
            if !m.is_reduced()? {
                return Err(Error::ReductionViolated(format!(
                    "lowering at {i} left the matrix unreduced"
                )));
            }
        }
        Ok(out)
    }

    fn e(&self, i: usize) -> Result<Option<Self>> {
        if !self.is_reduced()? {
            return Err(Error::ReductionViolated(
                "raising applied to an unreduced matrix".into(),
            ));
        }
        let out = match self.spec.family {
            Family::A => matrix_a::apply_e(self, i)?,
            Family::C => matrix_c::apply_e(self, i)?,
        };
        if let Some(ref m) = out {
            if !m.is_reduced()? {
                return Err(Error::ReductionViolated(format!(
                    "raising at {i} left the matrix unreduced"
                )));
            }
        }
        Ok(out)
    }

    fn key(&self) -> String {
        let (offset, rows) = self.to_rows();
        let body: Vec<String> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(i64::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect();
        format!("{}|o{}|{}", self.spec, offset, body.join(";"))
    }
}
