//! Partial crossed products as group-graded rings, scalar factor sets, the
//! obstruction 3-cocycle and the maps relating crossed products to cohomology.

mod aut;
mod factor;
mod graded;
mod iso;
mod product;

pub use aut::{component_automorphisms, graded_automorphisms, AutReport};
pub use factor::{
    decompositions, extend_additively, obstruction, tilde_on, twist_by_cocycle, verify_factor_set, Decompositions,
    ScalarFactorSet,
};
pub use graded::{Component, GradedRing};
pub use iso::{crossed_iso_test, unit_families, unit_family_maps, zeta, IsoSearch};
pub use product::{build_crossed_product, crossed_product_unchecked};
