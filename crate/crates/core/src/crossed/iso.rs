use rayon::prelude::*;

use super::factor::{extend_additively, tilde_on, Decompositions};
use super::graded::GradedRing;
use crate::cohomology::Cochain;
use crate::paction::UnitalPartialAction;
use crate::{Caps, Error, Result};

/// Outcome of an exhaustive search, with the number of candidates scanned.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoSearch {
    /// `h_x ∈ U(Z 1_x)` per group element, each `F_x` multiplication by `h_x`
    pub witness: Option<Vec<usize>>,
    pub scanned: u64,
}

fn same_shape(a: &GradedRing, b: &GradedRing) -> Result<()> {
    if a.group() != b.group() || a.base() != b.base() || a.idems() != b.idems() || a.components() != b.components() {
        return Err(Error::InvalidInput("graded rings have different component shapes".into()));
    }
    Ok(())
}

/// All families `(h_x)_x` with `h_x ∈ U(Z 1_x)`, in lexicographic order of
/// the unit lists.
pub fn unit_families(d: &GradedRing, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let k = d.base();
    let units: Vec<Vec<usize>> = d.group().elements().map(|x| k.units(d.idem(x))).collect::<Result<_>>()?;
    let count: u128 = units.iter().map(|u| u.len() as u128).product();
    if count > caps.families as u128 {
        return Err(Error::cap("candidate families", count, caps.families));
    }
    let mut out = vec![vec![]];
    for u in &units {
        out = out.into_iter().flat_map(|f: Vec<usize>| u.iter().map(move |&h| [f.clone(), vec![h]].concat())).collect();
    }
    Ok(out)
}

fn is_morphism(a: &GradedRing, b: &GradedRing, h: &[usize]) -> bool {
    let g = a.group();
    for x in g.elements() {
        for y in g.elements() {
            let xy = g.mul(x, y);
            for i in 0..a.component(x).len() {
                let hi = a.left(h[x], x, i);
                for j in 0..a.component(y).len() {
                    if a.left(h[xy], xy, a.mul(x, i, y, j)) != b.mul(x, hi, y, a.left(h[y], y, j)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Searches for a graded isomorphism `F: A → B` with each `F_x` multiplication
/// by a unit of `Z 1_x` and `F_{xy}(u v) = F_x(u) F_y(v)`. Returns the
/// lexicographically first witness.
pub fn crossed_iso_test(a: &GradedRing, b: &GradedRing, caps: &Caps) -> Result<IsoSearch> {
    same_shape(a, b)?;
    let fams = unit_families(a, caps)?;
    let witness = fams.par_iter().find_first(|h| is_morphism(a, b, h)).cloned();
    Ok(IsoSearch { witness, scanned: fams.len() as u64 })
}

/// Local tables of `F_x = h_x ·`.
pub fn unit_family_maps(d: &GradedRing, h: &[usize]) -> Vec<Vec<usize>> {
    d.group().elements().map(|x| (0..d.component(x).len()).map(|u| d.left(h[x], x, u)).collect()).collect()
}

/// `τ̃` with `a_{xy}(u ·_A v) = τ_{x,y}(a_x(u) ·_Θ a_y(v))`, for bimodule
/// isomorphisms `a_x: A_x → Θ_x` given as local tables.
pub fn zeta(
    base: &GradedRing,
    center: &UnitalPartialAction,
    decomp: &Decompositions,
    a: &GradedRing,
    iso: &[Vec<usize>],
) -> Result<Cochain> {
    same_shape(base, a)?;
    let g = base.group();
    let k = base.base();
    for x in g.elements() {
        let c = base.component(x);
        let m = &iso[x];
        let mut seen = vec![false; c.len()];
        for u in 0..c.len() {
            if m[u] >= c.len() || std::mem::replace(&mut seen[m[u]], true) {
                return Err(Error::NotAnIsoFamily(format!("a_{x} is not bijective")));
            }
            for v in 0..c.len() {
                if m[c.add(u, v)] != c.add(m[u], m[v]) {
                    return Err(Error::NotAnIsoFamily(format!("a_{x} is not additive")));
                }
            }
            for r in k.elements() {
                if m[a.left(r, x, u)] != base.left(r, x, m[u]) || m[a.right(x, u, r)] != base.right(x, m[u], r) {
                    return Err(Error::NotAnIsoFamily(format!("a_{x} is not R-bilinear")));
                }
            }
        }
    }
    let mut values = vec![];
    for t in g.tuples(2) {
        let (x, y) = (t[0], t[1]);
        let xy = g.mul(x, y);
        let mut pairs = vec![];
        for i in 0..a.component(x).len() {
            for j in 0..a.component(y).len() {
                pairs.push((base.mul(x, iso[x][i], y, iso[y][j]), iso[xy][a.mul(x, i, y, j)]));
            }
        }
        let map = extend_additively(base.component(xy), pairs).map_err(|e| Error::NotAnIsoFamily(e.to_string()))?;
        values.push(tilde_on(base, decomp, xy, base.idem(x), &map)?);
    }
    Cochain::new(center, 2, values)
}
