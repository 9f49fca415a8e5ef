//! Finite abelian groups, homomorphisms between them and the integer linear
//! algebra behind kernels, images and quotients.

mod group;
mod matrix;
mod snf;
mod table;

pub use group::{present, quotient, standard_gens, AbHom, FinAbGroup, Presented, Subgroup, Subquotient};
pub use matrix::{IntScalar, Matrix};
pub use snf::{smith_normal_form, Snf};
pub use table::TableGroup;
