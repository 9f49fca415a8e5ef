use std::collections::HashMap;

use super::graded::{Component, GradedRing};
use crate::cohomology::{coboundary, Cochain};
use crate::paction::UnitalPartialAction;
use crate::{Error, Result};

/// A decomposition of every `1_x`: pairs `(ω_x, ω_{x^-1})` of local indices.
pub type Decompositions = Vec<Vec<(usize, usize)>>;

pub fn decompositions(d: &GradedRing, variant: usize) -> Result<Decompositions> {
    d.group().elements().map(|x| d.decompose_unit(x, variant)).collect()
}

/// Extends a relation `p ↦ q` on a component additively. Returns the map as
/// a table over local indices (`None` off the additive span of the `p`s), or
/// `NotBilinear` if the relation is not a function on that span.
pub fn extend_additively(
    comp: &Component,
    pairs: impl IntoIterator<Item = (usize, usize)>,
) -> Result<Vec<Option<usize>>> {
    let mut map: Vec<Option<usize>> = vec![None; comp.len()];
    map[comp.zero()] = Some(comp.zero());
    let mut span = vec![comp.zero()];
    let set = |p: usize, q: usize, map: &mut Vec<Option<usize>>, span: &mut Vec<usize>| -> Result<bool> {
        match map[p] {
            Some(old) if old != q => Err(Error::NotBilinear(format!("element {p} would map to both {old} and {q}"))),
            Some(_) => Ok(false),
            None => {
                map[p] = Some(q);
                span.push(p);
                Ok(true)
            }
        }
    };
    let mut gens = vec![];
    for (p, q) in pairs {
        if set(p, q, &mut map, &mut span)? {
            gens.push((p, q));
        }
    }
    let mut i = 0;
    while i < span.len() {
        let s = span[i];
        let fs = map[s].unwrap();
        for &(p, q) in &gens {
            set(comp.add(s, p), comp.add(fs, q), &mut map, &mut span)?;
        }
        i += 1;
    }
    Ok(map)
}

/// The central element by which an `R`-bimodule automorphism of `e Θ_x` acts:
/// `Σ σ(e ω_x) ω_{x^-1}`, checked to reconstruct `σ(e u) = σ̃ u`.
///
/// `map` is a table over the local indices of `Θ_x`; only entries on `e Θ_x` are read.
pub fn tilde_on(d: &GradedRing, decomp: &Decompositions, x: usize, e: usize, map: &[Option<usize>]) -> Result<usize> {
    let k = d.base();
    let c = d.component(x);
    let xi = d.group().inv(x);
    let domain: Vec<usize> = (0..c.len()).filter(|&u| d.left(e, x, u) == u).collect();
    let at = |u: usize| map[u].ok_or_else(|| Error::NotBilinear(format!("map undefined at {u}")));
    let mut seen = HashMap::new();
    for &u in &domain {
        let fu = at(u)?;
        if d.left(e, x, fu) != fu {
            return Err(Error::NotBilinear(format!("image of {u} leaves e Θ_{x}")));
        }
        if let Some(v) = seen.insert(fu, u) {
            return Err(Error::NotBijective(format!("{v} and {u} have the same image")));
        }
        for &v in &domain {
            if at(c.add(u, v))? != c.add(fu, at(v)?) {
                return Err(Error::NotBilinear(format!("not additive at ({u},{v})")));
            }
        }
        for r in k.elements() {
            if at(d.left(r, x, u))? != d.left(r, x, fu) || at(d.right(x, u, r))? != d.right(x, fu, r) {
                return Err(Error::NotBilinear(format!("not R-linear at {u} with scalar {r}")));
            }
        }
    }
    let c1 = d.component(0);
    let mut acc = c1.zero();
    for &(w, w2) in &decomp[x] {
        let ew = d.left(e, x, w);
        acc = c1.add(acc, d.mul(x, at(ew)?, xi, w2));
    }
    let t = d.iota_inv(acc).ok_or_else(|| Error::InvalidWitness("σ̃ is not in the base ring".into()))?;
    for &u in &domain {
        if at(u)? != d.left(t, x, u) {
            return Err(Error::InvalidWitness(format!("σ̃ does not reconstruct the map at {u}")));
        }
    }
    let ex = k.mul(e, d.idem(x));
    if !k.is_unit_in(t, ex) {
        return Err(Error::NotBijective("σ̃ is not a unit of Z 1_x e".into()));
    }
    Ok(t)
}

/// `f_{x,y} = σ_{x,y} f^Θ_{x,y}` for a base graded ring `Θ` and a scalar
/// family `σ` (a 2-cochain for the induced center action).
#[derive(Clone, Debug)]
pub struct ScalarFactorSet {
    base: GradedRing,
    center: UnitalPartialAction,
    decomp: Decompositions,
    sigma: Cochain,
}

impl ScalarFactorSet {
    pub fn new(base: GradedRing, sigma: Cochain) -> Result<Self> {
        let decomp = decompositions(&base, 0)?;
        let center = base.center_action_with(&decomp)?;
        Self::with_center(base, center, decomp, sigma)
    }

    pub fn with_center(
        base: GradedRing,
        center: UnitalPartialAction,
        decomp: Decompositions,
        sigma: Cochain,
    ) -> Result<Self> {
        if sigma.degree != 2 {
            return Err(Error::InvalidInput(format!("scalar family must have degree 2, got {}", sigma.degree)));
        }
        // re-check membership against this action
        Cochain::new(&center, 2, sigma.values.clone())?;
        Ok(ScalarFactorSet { base, center, decomp, sigma })
    }

    pub fn base(&self) -> &GradedRing {
        &self.base
    }

    pub fn center(&self) -> &UnitalPartialAction {
        &self.center
    }

    pub fn sigma(&self) -> &Cochain {
        &self.sigma
    }

    pub fn decompositions(&self) -> &Decompositions {
        &self.decomp
    }

    /// `u ∘_σ v = σ_{x,y} (u v)`.
    pub fn mul(&self, x: usize, i: usize, y: usize, j: usize) -> usize {
        let s = self.sigma.at(&self.center, &[x, y]);
        self.base.left(s, self.base.group().mul(x, y), self.base.mul(x, i, y, j))
    }

    /// The twisted product as a graded ring, not checked.
    pub fn ring_unchecked(&self) -> Result<GradedRing> {
        self.base.with_product(|x, i, y, j| Ok(self.mul(x, i, y, j)))
    }
}

/// Checks the associativity pentagon on all homogeneous triples; the
/// lexicographically least failing `(x, u_x, y, u_y, z, u_z)` otherwise.
pub fn verify_factor_set(fs: &ScalarFactorSet) -> std::result::Result<(), Vec<usize>> {
    let r = fs.ring_unchecked().expect("same components as the base");
    match r.associativity_failure() {
        None => Ok(()),
        Some(w) => Err(w),
    }
}

/// The 3-cochain `β̃` with `β_{x,y,z} ∘ f_{x,yz} ∘ (Θ_x ⊗ f_{y,z}) = f_{xy,z} ∘ (f_{x,y} ⊗ Θ_z)`,
/// each `β_{x,y,z}` an automorphism of `1_x 1_{xy} Θ_{xyz}` read off through [`tilde_on`].
pub fn obstruction(fs: &ScalarFactorSet) -> Result<Cochain> {
    let d = &fs.base;
    let g = d.group();
    let k = d.base();
    let pa = &fs.center;
    let mut values = vec![];
    for t in g.tuples(3) {
        let (x, y, z) = (t[0], t[1], t[2]);
        let (xy, yz) = (g.mul(x, y), g.mul(y, z));
        let w = g.mul(xy, z);
        let mut pairs = vec![];
        for i in 0..d.component(x).len() {
            for j in 0..d.component(y).len() {
                let uv = fs.mul(x, i, y, j);
                for l in 0..d.component(z).len() {
                    let p = fs.mul(x, i, yz, fs.mul(y, j, z, l));
                    let q = fs.mul(xy, uv, z, l);
                    pairs.push((p, q));
                }
            }
        }
        let e = k.mul(d.idem(x), d.idem(xy));
        let map = extend_additively(d.component(w), pairs)?;
        let ed: Vec<usize> = (0..d.component(w).len()).filter(|&u| d.left(e, w, u) == u).collect();
        if ed.iter().any(|&u| map[u].is_none()) {
            return Err(Error::NotBijective(format!("triple products do not span 1_x 1_xy Θ at {t:?}")));
        }
        values.push(tilde_on(d, &fs.decomp, w, e, &map)?);
    }
    let beta = Cochain::new(pa, 3, values)?;
    Ok(beta)
}

/// `Θ` with multiplication `u ∘_σ v = σ_{x,y}(u v)` for a normalized 2-cocycle `σ`
/// of the induced center action.
pub fn twist_by_cocycle(base: &GradedRing, sigma: &Cochain) -> Result<GradedRing> {
    let fs = ScalarFactorSet::new(base.clone(), sigma.clone())?;
    if !sigma.is_normalized(&fs.center) {
        return Err(Error::NotACocycle("σ is not normalized".into()));
    }
    if !coboundary(&fs.center, sigma)?.is_unit(&fs.center) {
        return Err(Error::NotACocycle("δσ is not the unit cochain".into()));
    }
    let r = fs.ring_unchecked()?;
    r.verify()?;
    Ok(r)
}
