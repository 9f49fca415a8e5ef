use std::collections::BTreeMap;

use super::monoid::{partial_bijection_monoid, validate_semigroup_action, FiniteMonoid, SemigroupPartialAction};
use crate::paction::{Report, Violation};
use crate::{Caps, Error, FiniteGroup, Result};

/// A map `theta : G -> M` into a finite monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialRep {
    pub group: FiniteGroup,
    pub monoid: FiniteMonoid,
    pub theta: Vec<usize>,
}

impl PartialRep {
    pub fn new(group: FiniteGroup, monoid: FiniteMonoid, theta: Vec<usize>) -> Result<Self> {
        if theta.len() != group.order() || theta.iter().any(|&t| t >= monoid.size()) {
            return Err(Error::InvalidRep("theta must assign a monoid element to every group element".into()));
        }
        Ok(PartialRep { group, monoid, theta })
    }

    /// `epsilon_x = theta_x theta_{x^-1}`.
    pub fn epsilon(&self, x: usize) -> usize {
        self.monoid.mul(self.theta[x], self.theta[self.group.inv(x)])
    }
}

fn v(axiom: &str, witness: Vec<usize>, message: &str) -> Violation {
    Violation { witness, axiom: axiom.into(), message: message.into() }
}

/// Axioms (i) `theta_1 = 1`, (ii) `theta_x theta_y theta_{y^-1} = theta_{xy} theta_{y^-1}`,
/// (iii) `theta_{x^-1} theta_x theta_y = theta_{x^-1} theta_{xy}`, followed by the derived
/// identities. A derived identity failing while (i)-(iii) hold is reported under
/// the axiom name `derived` and indicates a bug.
pub fn validate_prep(rep: &PartialRep) -> Report {
    let (g, m, t) = (&rep.group, &rep.monoid, &rep.theta);
    let n = g.order();
    let mut out = vec![];
    if t[0] != m.identity() {
        out.push(v("(i)", vec![0], "theta_1 is not the identity"));
    }
    for x in 0..n {
        for y in 0..n {
            let (xy, xi, yi) = (g.mul(x, y), g.inv(x), g.inv(y));
            if m.mul3(t[x], t[y], t[yi]) != m.mul(t[xy], t[yi]) {
                out.push(v("(ii)", vec![x, y], "theta_x theta_y theta_{y^-1} != theta_{xy} theta_{y^-1}"));
            }
            if m.mul3(t[xi], t[x], t[y]) != m.mul(t[xi], t[xy]) {
                out.push(v("(iii)", vec![x, y], "theta_{x^-1} theta_x theta_y != theta_{x^-1} theta_{xy}"));
            }
        }
    }
    if !out.is_empty() {
        return Report::from_unsorted(out);
    }
    for x in 0..n {
        let ex = rep.epsilon(x);
        if m.mul3(t[x], t[g.inv(x)], t[x]) != t[x] {
            out.push(v("derived", vec![x], "theta_x theta_{x^-1} theta_x != theta_x"));
        }
        if !m.is_idempotent(ex) {
            out.push(v("derived", vec![x], "epsilon_x is not idempotent"));
        }
        for y in 0..n {
            let (ey, xy) = (rep.epsilon(y), g.mul(x, y));
            if m.mul(ex, ey) != m.mul(ey, ex) {
                out.push(v("derived", vec![x, y], "epsilon_x epsilon_y != epsilon_y epsilon_x"));
            }
            if m.mul(t[x], ey) != m.mul(rep.epsilon(xy), t[x]) {
                out.push(v("derived", vec![x, y], "theta_x epsilon_y != epsilon_{xy} theta_x"));
            }
            let txy = m.mul(t[x], t[y]);
            if txy != m.mul(ex, t[xy]) || txy != m.mul(t[xy], rep.epsilon(g.inv(y))) {
                out.push(v(
                    "derived",
                    vec![x, y],
                    "theta_x theta_y != epsilon_x theta_{xy} = theta_{xy} epsilon_{y^-1}",
                ));
            }
        }
    }
    Report::from_unsorted(out)
}

/// `alpha*_x(s) = theta_x s theta_{x^-1}` on `S_x = epsilon_x S epsilon_x`, validated.
pub fn induced_alpha_star(rep: &PartialRep) -> Result<SemigroupPartialAction> {
    if let Some(e) = validate_prep(rep).first_error() {
        return Err(Error::InvalidRep(e));
    }
    let (g, m) = (&rep.group, &rep.monoid);
    let domains: Vec<Vec<usize>> = g
        .elements()
        .map(|x| {
            let e = rep.epsilon(x);
            let mut d: Vec<usize> = (0..m.size()).map(|s| m.mul3(e, s, e)).collect();
            d.sort_unstable();
            d.dedup();
            d
        })
        .collect();
    let maps: Vec<BTreeMap<usize, usize>> = g
        .elements()
        .map(|x| {
            let xi = g.inv(x);
            domains[xi].iter().map(|&s| (s, m.mul3(rep.theta[x], s, rep.theta[xi]))).collect()
        })
        .collect();
    let pa = SemigroupPartialAction { group: g.clone(), monoid: m.clone(), domains, maps };
    if let Some(e) = validate_semigroup_action(&pa).first_error() {
        return Err(Error::InvalidAction(e));
    }
    Ok(pa)
}

/// Restricts a permutation action of `G` on `0..points` (`action[x][i] = x.i`)
/// to a subset `A`: `theta_x` is the partial bijection `a -> x.a` defined when
/// both lie in `A`. The monoid is the one generated by the `theta_x`.
pub fn partial_bijection_rep(
    group: &FiniteGroup,
    action: &[Vec<usize>],
    subset: &[usize],
    caps: &Caps,
) -> Result<PartialRep> {
    let points = action.first().map_or(0, |r| r.len());
    let in_a = |i: usize| subset.contains(&i);
    let gens: Vec<Vec<Option<usize>>> = group
        .elements()
        .map(|x| (0..points).map(|i| if in_a(i) && in_a(action[x][i]) { Some(action[x][i]) } else { None }).collect())
        .collect();
    // the identity of the monoid is the identity of 0..points, but theta_1 is the
    // identity of A; restrict the ambient set to A so the two coincide
    let idx: Vec<usize> = subset.to_vec();
    let pos = |i: usize| idx.iter().position(|&j| j == i).unwrap();
    let local: Vec<Vec<Option<usize>>> = gens.iter().map(|p| idx.iter().map(|&i| p[i].map(pos)).collect()).collect();
    let (monoid, theta) = partial_bijection_monoid(&local, idx.len(), caps.monoid_size)?;
    PartialRep::new(group.clone(), monoid, theta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn homomorphism_is_global() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let h = FiniteGroup::cyclic(2).unwrap();
        let rep = PartialRep::new(g.clone(), FiniteMonoid::from_group(&h), vec![0, 1, 0, 1]).unwrap();
        assert!(validate_prep(&rep).is_valid());
        assert!(g.elements().all(|x| rep.epsilon(x) == 0));
        let star = induced_alpha_star(&rep).unwrap();
        // conjugation in an abelian group is trivial
        assert!(star.maps.iter().all(|m| m.iter().all(|(a, b)| a == b)));
    }

    #[test]
    fn non_regular_theta_is_rejected() {
        // {1, a, 0} with a^2 = 0: a a a = 0 != a, so theta_g = a is not regular
        let table = vec![vec![0, 1, 2], vec![1, 2, 2], vec![2, 2, 2]];
        let m = FiniteMonoid::new(table, 0).unwrap();
        let rep = PartialRep::new(FiniteGroup::cyclic(2).unwrap(), m, vec![0, 1]).unwrap();
        let r = validate_prep(&rep);
        assert!(!r.is_valid());
        assert_eq!(r.violations[0].witness, vec![1, 1]);
    }

    #[test]
    fn restricted_set_action() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let action: Vec<Vec<usize>> = (0..3).map(|x| (0..3).map(|i| (i + x) % 3).collect()).collect();
        let rep = partial_bijection_rep(&g, &action, &[0, 1], &Caps::default()).unwrap();
        assert!(validate_prep(&rep).is_valid());
        let star = induced_alpha_star(&rep).unwrap();
        assert!(validate_semigroup_action(&star).is_valid());
        assert_ne!(rep.epsilon(1), rep.monoid.identity());
    }

    #[test]
    fn trivial_group_identity_action() {
        let rep =
            PartialRep::new(FiniteGroup::trivial(), FiniteMonoid::new(vec![vec![0]], 0).unwrap(), vec![0]).unwrap();
        let star = induced_alpha_star(&rep).unwrap();
        assert_eq!(star.domains, vec![vec![0]]);
    }
}
