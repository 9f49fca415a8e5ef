//! Finite commutative rings in CRT-canonical form, and table rings for
//! ambient (possibly noncommutative) rings.

mod comm;
mod table;

pub use comm::FiniteCommRing;
pub use table::FiniteRing;
