//! Partial group actions on finite commutative rings, their partial
//! cohomology, and partial crossed products, all computed exactly at small
//! ("desk") scale.
//!
//! Element indices are plain `usize` throughout: group elements index a
//! multiplication table with the identity at 0, ring elements index a
//! mixed-radix encoding of residue tuples.

pub mod abgrp;
pub mod bimod;
mod caps;
pub mod cohomology;
pub mod crossed;
mod error;
pub mod group;
pub mod paction;
pub mod prep;
pub mod ring;
pub mod seq;

pub use abgrp::{AbHom, FinAbGroup, IntScalar, Matrix, Snf};
pub use caps::Caps;
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use ring::{FiniteCommRing, FiniteRing};

/// Exact integer used by the abelian-group engine.
pub type Int = num_bigint::BigInt;
pub type IntMatrix = Matrix<Int>;
/// Machine-integer matrices, for callers that know entries stay small.
pub type SmallMatrix = Matrix<i64>;
