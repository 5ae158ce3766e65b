use crate::cartan::{RankSpec, Weight};
use crate::error::{Error, Result};
use crate::series::{series_stats, SeriesStats};
use std::collections::BTreeMap;
use std::fmt;

/// A Laurent monomial in the variables Y_i(n), stored as the sparse map
/// (i, n) -> exponent with zero exponents removed. The empty map is the
/// unit monomial.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    spec: RankSpec,
    exps: BTreeMap<(usize, i64), i64>,
}

impl Monomial {
    #[must_use]
    pub fn one(spec: RankSpec) -> Self {
        Monomial {
            spec,
            exps: BTreeMap::new(),
        }
    }

    /// Builds a product of factors Y_i(n)^e.
    pub fn from_factors(spec: RankSpec, factors: &[(usize, i64, i64)]) -> Result<Self> {
        let mut m = Monomial::one(spec);
        for &(i, n, e) in factors {
            m.mul_y(i, n, e)?;
        }
        Ok(m)
    }

    #[must_use]
    pub fn spec(&self) -> RankSpec {
        self.spec
    }

    /// The exponent of Y_i(n).
    #[must_use]
    pub fn exponent(&self, i: usize, n: i64) -> i64 {
        self.exps.get(&(i, n)).copied().unwrap_or(0)
    }

    #[must_use]
    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    /// Iterates over the nonzero exponents as ((i, n), e).
    pub fn factors(&self) -> impl Iterator<Item = (usize, i64, i64)> + '_ {
        self.exps.iter().map(|(&(i, n), &e)| (i, n, e))
    }

    /// Multiplies self by Y_i(n)^e in place.
    pub fn mul_y(&mut self, i: usize, n: i64, e: i64) -> Result<()> {
        self.spec.check_index(i)?;
        if e == 0 {
            return Ok(());
        }
        let slot = self.exps.entry((i, n)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&(i, n));
        }
        Ok(())
    }

    /// The product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        if self.spec != other.spec {
            return Err(Error::SpecMismatch {
                left: self.spec.to_string(),
                right: other.spec.to_string(),
            });
        }
        let mut out = self.clone();
        for (i, n, e) in other.factors() {
            out.mul_y(i, n, e)?;
        }
        Ok(out)
    }

    /// The inverse monomial (all exponents negated).
    #[must_use]
    pub fn inverse(&self) -> Monomial {
        Monomial {
            spec: self.spec,
            exps: self
                .exps
                .iter()
                .map(|(&k, &e)| (k, -e))
                .collect(),
        }
    }

    /// Translates every slot argument by t: Y_i(n) -> Y_i(n + t).
    #[must_use]
    pub fn shift(&self, t: i64) -> Monomial {
        Monomial {
            spec: self.spec,
            exps: self
                .exps
                .iter()
                .map(|(&(i, n), &e)| ((i, n + t), e))
                .collect(),
        }
    }

    /// wt(M) = sum_i (sum_n exponent of Y_i(n)) Lambda_i.
    #[must_use]
    pub fn weight(&self) -> Weight {
        let mut lambda = vec![0i64; self.spec.rank];
        for (&(i, _), &e) in &self.exps {
            lambda[i - 1] += e;
        }
        Weight { lambda }
    }

    /// The monomial A_i(n) = Y_i(n) Y_i(n+1) prod_{j != i} Y_j(n + c_ji)^{<h_j, alpha_i>}
    /// with c_ji = 0 for j > i and c_ji = 1 for j < i.
    pub fn a_monomial(spec: RankSpec, i: usize, n: i64) -> Result<Monomial> {
        spec.check_index(i)?;
        let mut m = Monomial::one(spec);
        m.mul_y(i, n, 1)?;
        m.mul_y(i, n + 1, 1)?;
        for j in 1..=spec.rank {
            if j == i {
                continue;
            }
            let coeff = spec.cartan_entry(j, i);
            if coeff != 0 {
                let c = if j < i { 1 } else { 0 };
                m.mul_y(j, n + c, coeff)?;
            }
        }
        Ok(m)
    }

    /// The highest weight monomial prod_i Y_i(s)^{l_i} for a dominant weight.
    pub fn highest_weight(spec: RankSpec, weight: &Weight, s: i64) -> Result<Monomial> {
        if weight.rank() != spec.rank {
            return Err(Error::LengthMismatch {
                expected: spec.rank,
                got: weight.rank(),
            });
        }
        if !weight.is_dominant() {
            return Err(Error::NonDominant(weight.to_string()));
        }
        let mut m = Monomial::one(spec);
        for i in 1..=spec.rank {
            m.mul_y(i, s, weight.lambda[i - 1])?;
        }
        Ok(m)
    }

    fn stats(&self, i: usize) -> Result<SeriesStats> {
        self.spec.check_index(i)?;
        let items: Vec<(i64, i64, i64)> = self
            .exps
            .range((i, i64::MIN)..=(i, i64::MAX))
            .map(|(&(_, n), &e)| (n, e.max(0), (-e).max(0)))
            .collect();
        Ok(series_stats(&items))
    }

    pub fn phi(&self, i: usize) -> Result<i64> {
        Ok(self.stats(i)?.phi)
    }

    pub fn eps(&self, i: usize) -> Result<i64> {
        Ok(self.stats(i)?.eps)
    }

    /// The lowering operator: multiplies by A_i(n_f)^{-1} at the minimal
    /// slot n_f realizing phi_i, or returns None when phi_i = 0.
    pub fn f(&self, i: usize) -> Result<Option<Monomial>> {
        let stats = self.stats(i)?;
        if stats.phi == 0 {
            return Ok(None);
        }
        let nf = stats
            .f_pos
            .ok_or_else(|| Error::Invariant("phi > 0 without an achieving slot".into()))?;
        let a = Monomial::a_monomial(self.spec, i, nf)?;
        Ok(Some(self.mul(&a.inverse())?))
    }

    /// The raising operator: multiplies by A_i(n_e) at the maximal slot n_e
    /// realizing eps_i, or returns None when eps_i = 0.
    pub fn e(&self, i: usize) -> Result<Option<Monomial>> {
        let stats = self.stats(i)?;
        if stats.eps == 0 {
            return Ok(None);
        }
        let pe = stats
            .e_pos
            .ok_or_else(|| Error::Invariant("eps > 0 without an achieving slot".into()))?;
        let a = Monomial::a_monomial(self.spec, i, pe - 1)?;
        Ok(Some(self.mul(&a)?))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        for (idx, (&(i, n), &e)) in self.exps.iter().enumerate() {
            if idx > 0 {
                write!(f, "*")?;
            }
            write!(f, "Y{i}({n})")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses monomial text such as `Y1(4)^-1*Y3(1)*Y2(0)^2` or `1`.
pub fn parse_monomial(spec: RankSpec, text: &str) -> Result<Monomial> {
    let bytes = text.as_bytes();
    let mut pos = 0usize;

    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    let parse_int = |pos: &mut usize| -> Result<i64> {
        let start = *pos;
        if *pos < bytes.len() && (bytes[*pos] == b'-' || bytes[*pos] == b'+') {
            *pos += 1;
        }
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        text[start..*pos].parse().map_err(|_| Error::Parse {
            pos: start,
            msg: "expected an integer".into(),
        })
    };
    let expect = |pos: &mut usize, ch: u8| -> Result<()> {
        if *pos < bytes.len() && bytes[*pos] == ch {
            *pos += 1;
            Ok(())
        } else {
            Err(Error::Parse {
                pos: *pos,
                msg: format!("expected {:?}", ch as char),
            })
        }
    };

    skip_ws(&mut pos);
    if pos < bytes.len() && bytes[pos] == b'1' && {
        let mut after = pos + 1;
        skip_ws(&mut after);
        after == bytes.len()
    } {
        return Ok(Monomial::one(spec));
    }

    let mut m = Monomial::one(spec);
    loop {
        skip_ws(&mut pos);
        expect(&mut pos, b'Y')?;
        let i = parse_int(&mut pos)?;
        if i < 1 {
            return Err(Error::Parse {
                pos,
                msg: "variable index must be positive".into(),
            });
        }
        expect(&mut pos, b'(')?;
        let n = parse_int(&mut pos)?;
        expect(&mut pos, b')')?;
        let e = if pos < bytes.len() && bytes[pos] == b'^' {
            pos += 1;
            parse_int(&mut pos)?
        } else {
            1
        };
        m.mul_y(i as usize, n, e)?;
        skip_ws(&mut pos);
        if pos == bytes.len() {
            break;
        }
        expect(&mut pos, b'*')?;
    }
    Ok(m)
}
