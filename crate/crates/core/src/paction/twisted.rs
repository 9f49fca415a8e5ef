use rayon::prelude::*;

use super::action::{Report, UnitalPartialAction, Violation};
use super::validate_paction;
use crate::{Error, Result};

/// A unital partial action together with a twist `omega_{x,y}` in
/// `U(K 1_x 1_{xy})`, stored by pair index `x |G| + y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedUnitalPartialAction {
    base: UnitalPartialAction,
    omega: Vec<usize>,
}

impl TwistedUnitalPartialAction {
    pub fn new(base: UnitalPartialAction, omega: Vec<usize>) -> Result<Self> {
        let n = base.group().order();
        if omega.len() != n * n {
            return Err(Error::InvalidInput(format!("twist needs {} values, got {}", n * n, omega.len())));
        }
        if let Some(&w) = omega.iter().find(|&&w| w >= base.ring().size()) {
            return Err(Error::InvalidInput(format!("twist value {w} is not a ring element")));
        }
        Ok(TwistedUnitalPartialAction { base, omega })
    }

    /// `omega_{x,y} = 1_x 1_{xy}`.
    pub fn trivial_twist(base: UnitalPartialAction) -> Self {
        let g = base.group();
        let omega = g.tuples(2).map(|t| base.tuple_idem(&t)).collect();
        TwistedUnitalPartialAction { base, omega }
    }

    pub fn base(&self) -> &UnitalPartialAction {
        &self.base
    }

    pub fn omega(&self, x: usize, y: usize) -> usize {
        self.omega[x * self.base.group().order() + y]
    }

    pub fn omegas(&self) -> &[usize] {
        &self.omega
    }

    pub fn validated(self) -> Result<Self> {
        match validate_twisted(&self).first_error() {
            None => Ok(self),
            Some(e) => Err(Error::InvalidAction(e)),
        }
    }
}

/// Base axioms plus unit membership, normalization and the twisted cocycle identity
/// `alpha_x(omega_{y,z} 1_{x^-1}) omega_{x,yz} = omega_{xy,z} omega_{x,y}`.
pub fn validate_twisted(tpa: &TwistedUnitalPartialAction) -> Report {
    let pa = &tpa.base;
    let (g, k) = (pa.group(), pa.ring());
    let n = g.order();
    let mut out = validate_paction(pa).violations;
    let v = |axiom: &str, w: Vec<usize>, m: &str| Violation { witness: w, axiom: axiom.into(), message: m.into() };
    let mut units_ok = vec![true; n * n];
    for x in 0..n {
        for y in 0..n {
            let w = tpa.omega(x, y);
            let e = pa.tuple_idem(&[x, y]);
            if !k.is_unit_in(w, e) {
                units_ok[x * n + y] = false;
                out.push(v("twist-unit", vec![x, y], "twist value outside unit group of ideal"));
            }
        }
        if tpa.omega(0, x) != pa.idem(x) {
            out.push(v("twist-normalized", vec![0, x], "omega_{1,x} != 1_x"));
        }
        if tpa.omega(x, 0) != pa.idem(x) {
            out.push(v("twist-normalized", vec![x, 0], "omega_{x,1} != 1_x"));
        }
    }
    let cocycle: Vec<Violation> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut found = vec![];
            for y in 0..n {
                for z in 0..n {
                    let (xy, yz) = (g.mul(x, y), g.mul(y, z));
                    let lhs = k.mul(pa.act(x, tpa.omega(y, z)), tpa.omega(x, yz));
                    let rhs = k.mul(tpa.omega(xy, z), tpa.omega(x, y));
                    if lhs != rhs {
                        found.push(v("twist-cocycle", vec![x, y, z], "twisted 2-cocycle identity fails"));
                    }
                }
            }
            found
        })
        .collect();
    out.extend(cocycle);
    Report::from_unsorted(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paction::tests_support::desk;

    fn desk_twisted(w: usize) -> TwistedUnitalPartialAction {
        let pa = desk();
        let mut omega = TwistedUnitalPartialAction::trivial_twist(pa.clone()).omegas().to_vec();
        omega[3] = w;
        TwistedUnitalPartialAction::new(pa, omega).unwrap()
    }

    #[test]
    fn trivial_twist_is_valid() {
        let t = TwistedUnitalPartialAction::trivial_twist(desk());
        assert!(validate_twisted(&t).is_valid());
    }

    #[test]
    fn desk_twist_is_valid() {
        let k = desk().ring().clone();
        let t = desk_twisted(k.elem(&[2, 0]));
        assert!(validate_twisted(&t).is_valid());
        assert_eq!(t.omega(1, 1), k.elem(&[2, 0]));
    }

    #[test]
    fn twist_outside_ideal_units() {
        let k = desk().ring().clone();
        let t = desk_twisted(k.elem(&[1, 1]));
        let r = validate_twisted(&t);
        assert!(r.violations.iter().any(|v| v.message == "twist value outside unit group of ideal"));
    }
}
