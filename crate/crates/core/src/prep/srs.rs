use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;

use super::monoid::FiniteMonoid;
use super::rep::PartialRep;
use crate::crossed::{build_crossed_product, Component, Decompositions, GradedRing};
use crate::paction::{Report, TwistedUnitalPartialAction, UnitalPartialAction, Violation};
use crate::{Caps, Error, FiniteCommRing, FiniteGroup, FiniteRing, Result};

/// Closure of `gens` under addition and `s ↦ r s r'` for `r, r'` in the
/// embedded base ring. Sorted.
pub fn bimodule_closure(s: &FiniteRing, embed: &[usize], gens: &[usize]) -> Vec<usize> {
    let mut seen = vec![false; s.size()];
    let mut out = vec![s.zero()];
    seen[s.zero()] = true;
    let mut queue: Vec<usize> = gens.to_vec();
    let mut i = 0;
    while i < queue.len() {
        let a = queue[i];
        i += 1;
        if seen[a] {
            continue;
        }
        seen[a] = true;
        out.push(a);
        for &r in embed {
            queue.push(s.mul(r, a));
            queue.push(s.mul(a, r));
        }
        for j in 0..out.len() {
            queue.push(s.add(a, out[j]));
        }
    }
    out.sort_unstable();
    out
}

pub fn is_subbimodule(s: &FiniteRing, embed: &[usize], set: &[usize]) -> bool {
    let mut member = vec![false; s.size()];
    for &a in set {
        member[a] = true;
    }
    member[s.zero()]
        && set.iter().all(|&a| {
            set.iter().all(|&b| member[s.add(a, b)])
                && embed.iter().all(|&r| member[s.mul(r, a)] && member[s.mul(a, r)])
        })
}

/// `M N = {Σ m_i n_i}`.
pub fn product(s: &FiniteRing, embed: &[usize], m: &[usize], n: &[usize]) -> Vec<usize> {
    let gens: BTreeSet<usize> = m.iter().flat_map(|&a| n.iter().map(move |&b| s.mul(a, b))).collect();
    let gens: Vec<usize> = gens.into_iter().collect();
    bimodule_closure(s, embed, &gens)
}

/// A map `x ↦ Θ_x` into the subbimodules of a ring `S` containing a
/// commutative ring `R`, with idempotents `1_x` of `R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubBimoduleRep {
    group: FiniteGroup,
    ambient: FiniteRing,
    base: FiniteCommRing,
    embed: Vec<usize>,
    theta: Vec<Vec<usize>>,
    idem: Vec<usize>,
}

impl SubBimoduleRep {
    /// `embed[r]` is the image of `r ∈ R` in `S`; each `theta[x]` lists the
    /// elements of `Θ_x` (any order).
    pub fn new(
        group: FiniteGroup,
        ambient: FiniteRing,
        base: FiniteCommRing,
        embed: Vec<usize>,
        theta: Vec<Vec<usize>>,
        idem: Vec<usize>,
    ) -> Result<Self> {
        let n = group.order();
        if theta.len() != n || idem.len() != n || embed.len() != base.size() {
            return Err(Error::InvalidInput(
                "one Θ_x and one 1_x per group element, one image per base element".into(),
            ));
        }
        if embed.iter().any(|&a| a >= ambient.size()) || idem.iter().any(|&e| e >= base.size()) {
            return Err(Error::InvalidInput("index out of range".into()));
        }
        for (r, &a) in embed.iter().enumerate() {
            for (r2, &b) in embed.iter().enumerate() {
                if ambient.add(a, b) != embed[base.add(r, r2)] || ambient.mul(a, b) != embed[base.mul(r, r2)] {
                    return Err(Error::InvalidInput(format!("embedding is not a ring map at ({r},{r2})")));
                }
            }
        }
        if embed[base.one()] != ambient.one() {
            return Err(Error::InvalidInput("embedding is not unital".into()));
        }
        let mut sets = vec![];
        for (x, t) in theta.into_iter().enumerate() {
            let mut t = t;
            t.sort_unstable();
            t.dedup();
            if t.iter().any(|&a| a >= ambient.size()) || !is_subbimodule(&ambient, &embed, &t) {
                return Err(Error::NotASubbimodule(format!("Θ_{x}")));
            }
            sets.push(t);
        }
        Ok(SubBimoduleRep { group, ambient, base, embed, theta: sets, idem })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn ambient(&self) -> &FiniteRing {
        &self.ambient
    }

    pub fn base(&self) -> &FiniteCommRing {
        &self.base
    }

    pub fn embed(&self) -> &[usize] {
        &self.embed
    }

    pub fn theta(&self, x: usize) -> &[usize] {
        &self.theta[x]
    }

    pub fn idem(&self, x: usize) -> usize {
        self.idem[x]
    }

    pub fn idems(&self) -> &[usize] {
        &self.idem
    }

    pub fn product(&self, m: &[usize], n: &[usize]) -> Vec<usize> {
        product(&self.ambient, &self.embed, m, n)
    }

    /// `R e` as a subset of `S`.
    pub fn ideal(&self, e: usize) -> Result<Vec<usize>> {
        let mut v: Vec<usize> = self.base.ideal_elements(e)?.into_iter().map(|r| self.embed[r]).collect();
        v.sort_unstable();
        Ok(v)
    }

    fn base_set(&self) -> Vec<usize> {
        let mut v = self.embed.clone();
        v.sort_unstable();
        v
    }
}

fn v(axiom: &str, witness: Vec<usize>, message: impl Into<String>) -> Violation {
    Violation { witness, axiom: axiom.into(), message: message.into() }
}

/// Idempotency of the `1_x`, `Θ_1 = R`, `Θ_x Θ_{x^-1} = R 1_x`, the
/// partial-representation axioms in the monoid of subbimodules, and
/// `u_x 1_y = 1_{xy} u_x`.
pub fn validate_srs_rep(rep: &SubBimoduleRep) -> Report {
    let g = &rep.group;
    let (s, k) = (&rep.ambient, &rep.base);
    let n = g.order();
    let mut out = vec![];
    for x in 0..n {
        if !k.is_idempotent(rep.idem[x]) {
            out.push(v("idempotent", vec![x], "1_x is not idempotent"));
            return Report::from_unsorted(out);
        }
        let e = rep.embed[rep.idem[x]];
        if rep.embed.iter().any(|&r| s.mul(r, e) != s.mul(e, r)) {
            out.push(v("central", vec![x], "1_x is not central in R"));
        }
    }
    if rep.idem[0] != k.one() {
        out.push(v("identity", vec![0], "1_1 != 1"));
    }
    if rep.theta[0] != rep.base_set() {
        out.push(v("identity", vec![0], "Θ_1 != R"));
    }
    let pairs: Vec<Violation> = (0..n)
        .into_par_iter()
        .flat_map_iter(|x| {
            let mut found = vec![];
            let xi = g.inv(x);
            match rep.ideal(rep.idem[x]) {
                Ok(r1x) if rep.product(&rep.theta[x], &rep.theta[xi]) == r1x => {}
                _ => found.push(v("unital", vec![x], "Θ_x Θ_{x^-1} != R 1_x")),
            }
            for y in 0..n {
                let (xy, yi) = (g.mul(x, y), g.inv(y));
                let (tx, ty, tyi, txi, txy) =
                    (&rep.theta[x], &rep.theta[y], &rep.theta[yi], &rep.theta[xi], &rep.theta[xy]);
                if rep.product(&rep.product(tx, ty), tyi) != rep.product(txy, tyi) {
                    found.push(v("prep-ii", vec![x, y], "Θ_x Θ_y Θ_{y^-1} != Θ_{xy} Θ_{y^-1}"));
                }
                if rep.product(&rep.product(txi, tx), ty) != rep.product(txi, txy) {
                    found.push(v("prep-iii", vec![x, y], "Θ_{x^-1} Θ_x Θ_y != Θ_{x^-1} Θ_{xy}"));
                }
                let (ey, exy) = (rep.embed[rep.idem[y]], rep.embed[rep.idem[xy]]);
                if let Some(&u) = tx.iter().find(|&&u| s.mul(u, ey) != s.mul(exy, u)) {
                    found.push(v("idempotent-shift", vec![x, y, u], "u_x 1_y != 1_{xy} u_x"));
                }
            }
            found
        })
        .collect();
    out.extend(pairs);
    Report::from_unsorted(out)
}

/// `Θ_x = D_x δ_x` inside `S = K ⋊_{α,ω} G`. Also returns the crossed product.
pub fn theta_from_twisted(tpa: &TwistedUnitalPartialAction, caps: &Caps) -> Result<(SubBimoduleRep, GradedRing)> {
    let d = build_crossed_product(tpa)?;
    let s = d.flatten(caps)?;
    let k = d.base().clone();
    let embed: Vec<usize> = k.elements().map(|r| d.flat_index(0, d.iota(r))).collect();
    let theta = d.group().elements().map(|x| (0..d.component(x).len()).map(|i| d.flat_index(x, i)).collect()).collect();
    let rep = SubBimoduleRep::new(d.group().clone(), s, k, embed, theta, d.idems().to_vec())?;
    Ok((rep, d))
}

/// `Δ(Θ) = ⊕ Θ_x` with multiplication inherited from `S`, ring axioms verified.
pub fn build_delta_theta(rep: &SubBimoduleRep) -> Result<GradedRing> {
    let s = &rep.ambient;
    let comps: Vec<Component> =
        rep.theta.iter().map(|t| Component::new(t.clone(), s.zero(), |a, b| s.add(a, b))).collect::<Result<_>>()?;
    let pos: Vec<HashMap<usize, usize>> =
        rep.theta.iter().map(|t| t.iter().enumerate().map(|(i, &a)| (a, i)).collect()).collect();
    let iota = rep
        .embed
        .iter()
        .map(|a| pos[0].get(a).copied().ok_or_else(|| Error::InvalidRep("R is not contained in Θ_1".into())))
        .collect::<Result<Vec<_>>>()?;
    let g = &rep.group;
    let d = GradedRing::from_parts(g.clone(), rep.base.clone(), rep.idem.clone(), comps, iota, |x, i, y, j| {
        let p = s.mul(rep.theta[x][i], rep.theta[y][j]);
        pos[g.mul(x, y)].get(&p).copied().ok_or_else(|| Error::InvalidRep(format!("Θ_{x} Θ_{y} is not inside Θ_xy")))
    })?;
    d.verify()?;
    Ok(d)
}

/// Pairs `(ω_x, ω_{x^-1})` of elements of `S` with `Σ ω_x ω_{x^-1} = 1_x`.
pub fn decompose_unit(rep: &SubBimoduleRep, x: usize, variant: usize) -> Result<Vec<(usize, usize)>> {
    let d = build_delta_theta(rep)?;
    let xi = rep.group.inv(x);
    Ok(d.decompose_unit(x, variant)?.into_iter().map(|(a, b)| (rep.theta[x][a], rep.theta[xi][b])).collect())
}

/// `α_x(r) = Σ ω_x r ω_{x^-1}` on `R` (its own center), computed from the
/// decompositions of the given variant.
pub fn induced_center_action(rep: &SubBimoduleRep, variant: usize) -> Result<UnitalPartialAction> {
    let d = build_delta_theta(rep)?;
    let ds: Decompositions = rep.group.elements().map(|x| d.decompose_unit(x, variant)).collect::<Result<_>>()?;
    d.center_action_with(&ds)
}

/// The monoid `S_R(S)` of all subbimodules of `S` under `M N`, with the
/// subbimodules (sorted element sets) and the partial representation `x ↦ Θ_x`.
pub fn srs_monoid(rep: &SubBimoduleRep, caps: &Caps) -> Result<(FiniteMonoid, Vec<Vec<usize>>, PartialRep)> {
    let s = &rep.ambient;
    let mut all: Vec<Vec<usize>> = vec![vec![s.zero()]];
    let mut known: BTreeSet<Vec<usize>> = all.iter().cloned().collect();
    let mut i = 0;
    while i < all.len() {
        let m = all[i].clone();
        i += 1;
        let mut member = vec![false; s.size()];
        for &a in &m {
            member[a] = true;
        }
        for a in 0..s.size() {
            if member[a] {
                continue;
            }
            let gens: Vec<usize> = m.iter().copied().chain([a]).collect();
            let c = bimodule_closure(s, &rep.embed, &gens);
            if known.insert(c.clone()) {
                if known.len() > caps.monoid_size {
                    return Err(Error::cap("subbimodule monoid", known.len(), caps.monoid_size));
                }
                all.push(c);
            }
        }
    }
    all.sort();
    let index: HashMap<&Vec<usize>, usize> = all.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let table: Vec<Vec<usize>> =
        all.par_iter().map(|m| all.iter().map(|n| index[&rep.product(m, n)]).collect()).collect();
    let identity = index[&rep.base_set()];
    let monoid = FiniteMonoid::new(table, identity)?;
    let theta = rep.theta.iter().map(|t| index[t]).collect();
    let prep = PartialRep::new(rep.group.clone(), monoid.clone(), theta)?;
    Ok((monoid, all.clone(), prep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paction::instances::desk_twisted;

    fn desk() -> SubBimoduleRep {
        theta_from_twisted(&desk_twisted(), &Caps::default()).unwrap().0
    }

    #[test]
    fn desk_rep_is_valid() {
        let r = validate_srs_rep(&desk());
        assert!(r.is_valid(), "{:?}", r.first_error());
    }

    #[test]
    fn products_with_base_and_zero() {
        let rep = desk();
        let r = rep.base_set();
        assert_eq!(rep.product(&r, &r), r);
        let z = vec![rep.ambient().zero()];
        assert_eq!(rep.product(&z, rep.theta(1)), z);
    }

    #[test]
    fn theta_g_squared_is_r_one_g() {
        let rep = desk();
        let k = rep.base().clone();
        // R 1_g 1_{g^2}, built from the base ring directly
        let mut expected: Vec<usize> =
            k.elements().filter(|&a| k.mul(a, k.elem(&[1, 0])) == a).map(|a| rep.embed()[a]).collect();
        expected.sort_unstable();
        assert_eq!(rep.product(rep.theta(1), rep.theta(1)), expected);
    }

    #[test]
    fn desk_monoid_has_twelve_subbimodules() {
        let rep = desk();
        let (m, subs, prep) = srs_monoid(&rep, &Caps::default()).unwrap();
        assert_eq!(m.size(), 12);
        assert_eq!(subs.len(), 12);
        assert!(crate::prep::validate_prep(&prep).is_valid());
    }

    #[test]
    fn bad_theta_is_rejected() {
        let rep = desk();
        let mut t: Vec<Vec<usize>> = (0..2).map(|x| rep.theta(x).to_vec()).collect();
        t[1].pop();
        let e = SubBimoduleRep::new(
            rep.group().clone(),
            rep.ambient().clone(),
            rep.base().clone(),
            rep.embed().to_vec(),
            t,
            rep.idems().to_vec(),
        );
        assert!(matches!(e, Err(Error::NotASubbimodule(_))));
    }
}
