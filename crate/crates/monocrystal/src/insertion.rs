//! Star product of reduced matrices and the induced insertion of monomials.
//!
//! The star product juxtaposes two reduced matrices with a buffer of zero
//! columns between them, realizing the tensor product of the corresponding
//! crystal elements inside a single matrix. Compressing the star product and
//! decoding yields the insertion of one monomial into another, which always
//! lands in a staircase class.

use crate::cartan::Family;
use crate::error::{Error, Result};
use crate::matrix::ExpoMatrix;
use crate::monomial::Monomial;

/// Number of zero columns separating the two blocks of a star product.
#[must_use]
pub fn star_gap(family: Family, rank: usize) -> i64 {
    match family {
        Family::A => 1,
        Family::C => rank as i64,
    }
}

/// The star product m1 * m2 of two reduced matrices.
///
/// m2's block is placed to the left, m1's block to the right, separated by
/// exactly `star_gap` zero columns. m1 keeps its absolute column positions;
/// m2 is translated. If either matrix is zero the other is returned
/// unchanged. The result is verified to be reduced.
pub fn star(m1: &ExpoMatrix, m2: &ExpoMatrix) -> Result<ExpoMatrix> {
    if m1.spec() != m2.spec() {
        return Err(Error::SpecMismatch {
            left: m1.spec().to_string(),
            right: m2.spec().to_string(),
        });
    }
    if !m1.is_reduced()? {
        return Err(Error::RulePrecondition(
            "star product requires a reduced first factor".into(),
        ));
    }
    if !m2.is_reduced()? {
        return Err(Error::RulePrecondition(
            "star product requires a reduced second factor".into(),
        ));
    }
    if m2.is_zero() {
        return Ok(m1.clone());
    }
    if m1.is_zero() {
        return Ok(m2.clone());
    }
    let spec = m1.spec();
    let gap = star_gap(spec.family, spec.rank);
    let target_max = m1.min_col().expect("nonzero matrix has columns") - gap - 1;
    let shift = target_max - m2.max_col().expect("nonzero matrix has columns");
    let product = m1.add_matrix(&m2.shift_cols(shift))?;
    if !product.is_reduced()? {
        return Err(Error::ReductionViolated(format!(
            "star product of reduced blocks is not reduced: {}",
            product.to_text()
        )));
    }
    Ok(product)
}

/// Inserts m2 into m1: decode(compress(star(encode(m1), encode(m2)))).
///
/// The result always belongs to a staircase class, and the map
/// m1 (x) m2 -> insert(m1, m2) is a morphism of crystals.
pub fn insert(m1: &Monomial, m2: &Monomial) -> Result<Monomial> {
    let e1 = ExpoMatrix::encode(m1)?;
    let e2 = ExpoMatrix::encode(m2)?;
    star(&e1, &e2)?.compress()?.decode()
}
