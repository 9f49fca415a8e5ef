//! Partial representations into finite monoids and into the monoid of
//! subbimodules of a ring, with the partial actions they induce.

mod monoid;
mod rep;
mod srs;

pub use monoid::{partial_bijection_monoid, validate_semigroup_action, FiniteMonoid, SemigroupPartialAction};
pub use rep::{induced_alpha_star, partial_bijection_rep, validate_prep, PartialRep};
pub use srs::{
    bimodule_closure, build_delta_theta, decompose_unit, induced_center_action, is_subbimodule, product, srs_monoid,
    theta_from_twisted, validate_srs_rep, SubBimoduleRep,
};
