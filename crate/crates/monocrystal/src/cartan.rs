use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Lie type family supported by this crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::C => write!(f, "C"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Family::A),
            "C" | "c" => Ok(Family::C),
            other => Err(Error::Parse {
                pos: 0,
                msg: format!("unknown family {other:?}, expected A or C"),
            }),
        }
    }
}

/// A family together with a rank, e.g. A_4 or C_3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RankSpec {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for RankSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.family, self.rank)
    }
}

impl RankSpec {
    #[must_use]
    pub fn new(family: Family, rank: usize) -> Self {
        RankSpec { family, rank }
    }

    pub fn validate(&self) -> Result<()> {
        let min_rank = 1;
        if self.rank < min_rank {
            return Err(Error::IndexOutOfRange {
                what: "rank",
                got: self.rank as i64,
                min: min_rank as i64,
                max: i64::MAX,
            });
        }
        Ok(())
    }

    /// Checks a node index i against 1..=rank.
    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < 1 || i > self.rank {
            return Err(Error::IndexOutOfRange {
                what: "node index",
                got: i as i64,
                min: 1,
                max: self.rank as i64,
            });
        }
        Ok(())
    }

    /// Number of row letters in the matrix encoding: n+1 for A_n, 2n for C_n.
    #[must_use]
    pub fn row_count(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::C => 2 * self.rank,
        }
    }

    /// Number of basis weights beta_k: n+1 for A_n, n for C_n.
    #[must_use]
    pub fn beta_count(&self) -> usize {
        match self.family {
            Family::A => self.rank + 1,
            Family::C => self.rank,
        }
    }

    /// Cartan pairing <h_j, alpha_i> of a coroot with a simple root.
    #[must_use]
    pub fn cartan_entry(&self, j: usize, i: usize) -> i64 {
        debug_assert!(j >= 1 && j <= self.rank && i >= 1 && i <= self.rank);
        if i == j {
            return 2;
        }
        if self.family == Family::C && j + 1 == self.rank && i == self.rank {
            return -2;
        }
        if i.abs_diff(j) == 1 {
            return -1;
        }
        0
    }

    /// The simple root alpha_i written in the fundamental-weight basis.
    pub fn simple_root(&self, i: usize) -> Result<Weight> {
        self.check_index(i)?;
        let lambda = (1..=self.rank).map(|j| self.cartan_entry(j, i)).collect();
        Ok(Weight { lambda })
    }

    /// The weight of the basis vector beta_k in the fundamental-weight basis.
    ///
    /// For A_n: beta_1 = L_1, beta_k = L_k - L_{k-1} (k <= n), beta_{n+1} = -L_n.
    /// For C_n: beta_1 = L_1, beta_k = L_k - L_{k-1}.
    pub fn beta_weight(&self, k: usize) -> Result<Weight> {
        let count = self.beta_count();
        if k < 1 || k > count {
            return Err(Error::IndexOutOfRange {
                what: "beta index",
                got: k as i64,
                min: 1,
                max: count as i64,
            });
        }
        let mut lambda = vec![0i64; self.rank];
        if k <= self.rank {
            lambda[k - 1] += 1;
        }
        if k >= 2 {
            lambda[k - 2] -= 1;
        }
        Ok(Weight { lambda })
    }

    /// Converts beta-basis coefficients to fundamental-weight coefficients.
    pub fn beta_to_weight(&self, b: &[i64]) -> Result<Weight> {
        let count = self.beta_count();
        if b.len() != count {
            return Err(Error::LengthMismatch {
                expected: count,
                got: b.len(),
            });
        }
        let mut lambda = vec![0i64; self.rank];
        for (k, lam) in lambda.iter_mut().enumerate() {
            let hi = b[k];
            let lo = if k + 1 < count { b[k + 1] } else { 0 };
            *lam = hi - lo;
        }
        Ok(Weight { lambda })
    }

    /// Converts fundamental-weight coefficients to beta-basis coefficients.
    ///
    /// For A_n the beta_k only span the weight lattice up to the relation
    /// beta_1 + ... + beta_{n+1} = 0, so the result is normalized to have
    /// minimum coordinate 0. For C_n the basis is free and the conversion
    /// is exact.
    pub fn weight_to_beta(&self, w: &Weight) -> Result<Vec<i64>> {
        if w.rank() != self.rank {
            return Err(Error::LengthMismatch {
                expected: self.rank,
                got: w.rank(),
            });
        }
        let count = self.beta_count();
        let mut b = vec![0i64; count];
        let mut acc = 0i64;
        for k in (0..count).rev() {
            if k < self.rank {
                acc += w.lambda[k];
            }
            b[k] = acc;
        }
        if self.family == Family::A {
            let min = b.iter().copied().min().unwrap_or(0);
            for x in &mut b {
                *x -= min;
            }
        }
        Ok(b)
    }
}

/// An integral weight written in the fundamental-weight basis; coordinate
/// j-1 is the coefficient of Lambda_j.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub lambda: Vec<i64>,
}

impl Weight {
    #[must_use]
    pub fn zero(rank: usize) -> Self {
        Weight {
            lambda: vec![0; rank],
        }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    /// The pairing <h_j, self>, i.e. the coefficient of Lambda_j.
    pub fn pairing(&self, j: usize) -> Result<i64> {
        if j < 1 || j > self.lambda.len() {
            return Err(Error::IndexOutOfRange {
                what: "coroot index",
                got: j as i64,
                min: 1,
                max: self.lambda.len() as i64,
            });
        }
        Ok(self.lambda[j - 1])
    }

    #[must_use]
    pub fn is_dominant(&self) -> bool {
        self.lambda.iter().all(|&c| c >= 0)
    }

    #[must_use]
    pub fn is_zero(&self) -> bool {
        self.lambda.iter().all(|&c| c == 0)
    }

    pub fn checked_add(&self, other: &Weight) -> Result<Weight> {
        if self.rank() != other.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        Ok(Weight {
            lambda: self
                .lambda
                .iter()
                .zip(&other.lambda)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Weight) -> Result<Weight> {
        if self.rank() != other.rank() {
            return Err(Error::LengthMismatch {
                expected: self.rank(),
                got: other.rank(),
            });
        }
        Ok(Weight {
            lambda: self
                .lambda
                .iter()
                .zip(&other.lambda)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, c) in self.lambda.iter().enumerate() {
            if idx > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A letter of the crystal alphabet: 1, ..., n+1 for A_n, and
/// 1 < ... < n < barred n < ... < barred 1 for C_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Letter {
    Unbarred(usize),
    Barred(usize),
}

impl Letter {
    /// Position of the letter in the total order, starting at 1.
    pub fn position(&self, spec: RankSpec) -> Result<usize> {
        let rows = spec.row_count();
        match (*self, spec.family) {
            (Letter::Unbarred(v), Family::A) if v >= 1 && v <= rows => Ok(v),
            (Letter::Unbarred(v), Family::C) if v >= 1 && v <= spec.rank => Ok(v),
            (Letter::Barred(v), Family::C) if v >= 1 && v <= spec.rank => {
                Ok(2 * spec.rank + 1 - v)
            }
            _ => Err(Error::IndexOutOfRange {
                what: "letter",
                got: match self {
                    Letter::Unbarred(v) | Letter::Barred(v) => *v as i64,
                },
                min: 1,
                max: rows as i64,
            }),
        }
    }

    /// The letter at a given position of the total order.
    pub fn from_position(pos: usize, spec: RankSpec) -> Result<Letter> {
        let rows = spec.row_count();
        if pos < 1 || pos > rows {
            return Err(Error::IndexOutOfRange {
                what: "letter position",
                got: pos as i64,
                min: 1,
                max: rows as i64,
            });
        }
        match spec.family {
            Family::A => Ok(Letter::Unbarred(pos)),
            Family::C => {
                if pos <= spec.rank {
                    Ok(Letter::Unbarred(pos))
                } else {
                    Ok(Letter::Barred(2 * spec.rank + 1 - pos))
                }
            }
        }
    }

    #[must_use]
    pub fn is_barred(&self) -> bool {
        matches!(self, Letter::Barred(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Unbarred(v) => write!(f, "{v}"),
            Letter::Barred(v) => write!(f, "{v}~"),
        }
    }
}

impl std::str::FromStr for Letter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (core, barred) = match s.strip_suffix('~') {
            Some(rest) => (rest, true),
            None => (s, false),
        };
        let v: usize = core.parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("invalid letter {s:?}"),
        })?;
        if v == 0 {
            return Err(Error::Parse {
                pos: 0,
                msg: "letter value must be positive".into(),
            });
        }
        Ok(if barred {
            Letter::Barred(v)
        } else {
            Letter::Unbarred(v)
        })
    }
}
