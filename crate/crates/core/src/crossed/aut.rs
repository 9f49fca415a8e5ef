use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use super::factor::{extend_additively, tilde_on, Decompositions};
use super::graded::GradedRing;
use crate::cohomology::{coboundary, Cochain};
use crate::paction::UnitalPartialAction;
use crate::{Caps, Error, Result};

/// Bimodule automorphisms of one component, found by trying every image of a
/// greedy additive generating set.
pub fn component_automorphisms(d: &GradedRing, x: usize, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    let c = d.component(x);
    let k = d.base();
    let gens = c.generators(0..c.len());
    let count = (c.len() as u128).pow(gens.len() as u32);
    if count > caps.families as u128 {
        return Err(Error::cap("component endomorphism candidates", count, caps.families));
    }
    let candidates: Vec<Vec<usize>> = (0..count as usize)
        .map(|mut code| {
            gens.iter()
                .map(|_| {
                    let v = code % c.len();
                    code /= c.len();
                    v
                })
                .collect()
        })
        .collect();
    let mut out: Vec<Vec<usize>> = candidates
        .par_iter()
        .filter_map(|images| {
            let map = extend_additively(c, gens.iter().copied().zip(images.iter().copied())).ok()?;
            let map: Vec<usize> = map.into_iter().collect::<Option<Vec<_>>>()?;
            let mut seen = vec![false; c.len()];
            for u in 0..c.len() {
                if std::mem::replace(&mut seen[map[u]], true) {
                    return None;
                }
                for r in k.elements() {
                    if map[d.left(r, x, u)] != d.left(r, x, map[u]) || map[d.right(x, u, r)] != d.right(x, map[u], r) {
                        return None;
                    }
                }
            }
            Some(map)
        })
        .collect();
    out.sort();
    Ok(out)
}

/// The automorphisms of `Δ(Θ)` fixing `R` elementwise and preserving every
/// component, with `Ψ(f) = (f̃_x)_x` and the inner ones `ℱ(r)(s) = r s r^-1`.
#[derive(Clone, Debug)]
pub struct AutReport {
    /// each automorphism as local tables per component
    pub automorphisms: Vec<Vec<Vec<usize>>>,
    pub psi: Vec<Cochain>,
    /// indices into `automorphisms` of the inner ones
    pub inner: Vec<usize>,
    pub candidates_scanned: u64,
    /// every `Ψ(f)` is a 1-cocycle
    pub psi_in_z1: bool,
    pub psi_injective: bool,
    pub psi_multiplicative: bool,
    /// `Ψ(Im ℱ)` as a set equals `{δr : r ∈ U(Z)}`
    pub inner_onto_b1: bool,
}

fn compose(f: &[Vec<usize>], g: &[Vec<usize>]) -> Vec<Vec<usize>> {
    f.iter().zip(g).map(|(fx, gx)| gx.iter().map(|&u| fx[u]).collect()).collect()
}

pub fn graded_automorphisms(
    d: &GradedRing,
    center: &UnitalPartialAction,
    decomp: &Decompositions,
    caps: &Caps,
) -> Result<AutReport> {
    let g = d.group();
    let k = d.base();
    let n = g.order();
    let identity: Vec<usize> = (0..d.component(0).len()).collect();
    let mut per: Vec<Vec<Vec<usize>>> = vec![vec![identity]];
    for x in 1..n {
        per.push(component_automorphisms(d, x, caps)?);
    }
    let count: u128 = per.iter().map(|p| p.len() as u128).product();
    if count > caps.families as u128 {
        return Err(Error::cap("automorphism families", count, caps.families));
    }
    let mut fams: Vec<Vec<Vec<usize>>> = vec![vec![]];
    for p in &per {
        fams = fams.into_iter().flat_map(|f| p.iter().map(move |m| [f.clone(), vec![m.clone()]].concat())).collect();
    }
    let multiplicative = |f: &Vec<Vec<usize>>| {
        g.elements().all(|x| {
            g.elements().all(|y| {
                let xy = g.mul(x, y);
                (0..d.component(x).len()).all(|i| {
                    (0..d.component(y).len()).all(|j| f[xy][d.mul(x, i, y, j)] == d.mul(x, f[x][i], y, f[y][j]))
                })
            })
        })
    };
    let automorphisms: Vec<Vec<Vec<usize>>> = fams.into_par_iter().filter(multiplicative).collect();
    let psi = automorphisms
        .iter()
        .map(|f| {
            let vals = g
                .elements()
                .map(|x| {
                    let m: Vec<Option<usize>> = f[x].iter().map(|&v| Some(v)).collect();
                    tilde_on(d, decomp, x, k.one(), &m)
                })
                .collect::<Result<Vec<_>>>()?;
            Cochain::new(center, 1, vals)
        })
        .collect::<Result<Vec<_>>>()?;
    let psi_in_z1 = psi
        .iter()
        .map(|p| coboundary(center, p).map(|c| c.is_unit(center)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .all(|b| b);
    let psi_injective = psi.iter().collect::<BTreeSet<_>>().len() == psi.len();
    let index: BTreeMap<&Vec<Vec<usize>>, usize> = automorphisms.iter().enumerate().map(|(i, f)| (f, i)).collect();
    let mut psi_multiplicative = true;
    for (i, f) in automorphisms.iter().enumerate() {
        for (j, h) in automorphisms.iter().enumerate() {
            match index.get(&compose(f, h)) {
                Some(&c) if psi[c] == psi[i].mul(center, &psi[j]) => {}
                _ => psi_multiplicative = false,
            }
        }
    }
    let mut inner = BTreeSet::new();
    let mut inner_images = BTreeSet::new();
    let mut b1 = BTreeSet::new();
    for r in k.units(k.one())? {
        let ri = k.inverse_in(r, k.one()).expect("unit");
        let f: Vec<Vec<usize>> = g
            .elements()
            .map(|x| (0..d.component(x).len()).map(|u| d.right(x, d.left(r, x, u), ri)).collect())
            .collect();
        match index.get(&f) {
            Some(&i) => {
                inner.insert(i);
                inner_images.insert(psi[i].clone());
            }
            None => {
                return Err(Error::InvalidWitness("conjugation by a central unit is not a graded automorphism".into()))
            }
        }
        b1.insert(coboundary(center, &Cochain::new(center, 0, vec![r])?)?);
    }
    Ok(AutReport {
        candidates_scanned: count as u64,
        automorphisms,
        psi,
        inner: inner.into_iter().collect(),
        psi_in_z1,
        psi_injective,
        psi_multiplicative,
        inner_onto_b1: inner_images == b1,
    })
}
