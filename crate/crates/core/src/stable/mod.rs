//! Interior algebras, stable bases and the unit criterion for unital stable
//! bases.

mod basis;
mod construct;
mod criterion;
mod interior;
mod iso;

pub use basis::{find_stable_basis, matrix_in_basis, ActionBasis};
pub use construct::{crossed_product, lift_basis, unitalize, CrossedProduct, LiftedBasis};
pub use criterion::{
    bifree_stable_basis, brauer_quotient_dim, brauer_quotient_dim_of, criterion, isofusion_factorize, CriterionReport,
    Isofusion, PhiClass, Verdict,
};
pub use interior::InteriorAlgebra;
pub use iso::{h_classes, h_family, iso_to_subgroup, stabilizer_iso, subgroup_to_iso};
