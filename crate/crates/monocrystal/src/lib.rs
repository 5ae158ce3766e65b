//! Nakajima monomial crystals for types A and C: matrix encodings, the
//! compression map onto monomial realizations, tableau and path bridges,
//! star-product insertion, and a generic crystal-graph engine.

pub mod cartan;
pub mod crystal;
pub mod error;
pub mod insertion;
pub mod matrix;
pub mod matrix_a;
pub mod matrix_c;
pub mod monomial;
pub mod series;
pub mod tableau;

pub use cartan::{Family, Letter, RankSpec, Weight};
pub use crystal::{
    canonical_form, dim_highest_weight, explore_component, is_isomorphic, Crystal, CrystalGraph,
    Tensor, DEFAULT_NODE_CAP,
};
pub use error::{Error, Result};
pub use insertion::{insert, star, star_gap};
pub use matrix::ExpoMatrix;
pub use monomial::{parse_monomial, Monomial};
pub use tableau::{PathPolyline, Tableau};
