//! Unital partial actions of a finite group on a finite commutative ring,
//! optionally twisted.

mod action;
mod twisted;

pub use action::{invariants, restrict_global, validate_paction, Report, Restriction, UnitalPartialAction, Violation};
pub use twisted::{validate_twisted, TwistedUnitalPartialAction};

/// Shipped small instances, shared by tests, examples and the CLI.
pub mod instances {
    use super::{TwistedUnitalPartialAction, UnitalPartialAction};
    use crate::{FiniteCommRing, FiniteGroup};

    /// `C2` on `Z/3 x Z/3` with `1_g = (1,0)` and `alpha_g` the identity on `K (1,0)`.
    pub fn desk() -> UnitalPartialAction {
        let g = FiniteGroup::cyclic(2).expect("C2");
        let k = FiniteCommRing::new(&[3, 3]).expect("Z/3 x Z/3");
        let e = k.elem(&[1, 0]);
        let ideal = k.ideal_elements(e).expect("idempotent");
        let alpha = vec![k.elements().map(|a| (a, a)).collect(), ideal.iter().map(|&a| (a, a)).collect()];
        UnitalPartialAction::new(g, k.clone(), vec![k.one(), e], alpha).expect("desk instance")
    }

    /// The desk action twisted by `omega_{g,g} = (2,0)`.
    pub fn desk_twisted() -> TwistedUnitalPartialAction {
        let pa = desk();
        let w = pa.ring().elem(&[2, 0]);
        let mut omega = TwistedUnitalPartialAction::trivial_twist(pa.clone()).omegas().to_vec();
        omega[3] = w;
        TwistedUnitalPartialAction::new(pa, omega).expect("desk twist")
    }

    /// `C2` swapping the two factors of `Z/3 x Z/3` (a global action).
    pub fn global_swap() -> UnitalPartialAction {
        let g = FiniteGroup::cyclic(2).expect("C2");
        let k = FiniteCommRing::new(&[3, 3]).expect("Z/3 x Z/3");
        UnitalPartialAction::from_component_permutations(g, k, vec![vec![0, 1], vec![1, 0]]).expect("swap")
    }
}

#[cfg(test)]
pub(crate) mod tests_support {
    pub use super::instances::desk;
}
