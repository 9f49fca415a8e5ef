//! Brute-force oracle for finite bimodules over a finite commutative ring:
//! tensor products, homomorphisms and isomorphism, the relation `M | N`, the
//! commuting map `T_{M,N}`, centralizers and the idempotent semilattice.
//!
//! Everything here is exhaustive and meant for desk-scale cross-checks.

use std::collections::HashMap;

use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::abgrp::{present, smith_normal_form, FinAbGroup, Presented, TableGroup};
use crate::{Caps, Error, FiniteCommRing, Int, IntMatrix, Result};

/// A finite `R`-bimodule on `0..size` with explicit tables.
#[derive(Clone, Debug)]
pub struct FinBimodule {
    base: FiniteCommRing,
    add: Vec<Vec<usize>>,
    zero: usize,
    /// left[r][m] = r m
    left: Vec<Vec<usize>>,
    /// right[r][m] = m r
    right: Vec<Vec<usize>>,
    group: TableGroup,
}

impl FinBimodule {
    /// Validates the abelian group and both actions exhaustively.
    pub fn new(
        base: FiniteCommRing,
        add: Vec<Vec<usize>>,
        zero: usize,
        left: Vec<Vec<usize>>,
        right: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let n = add.len();
        let group = TableGroup::build((0..n).collect(), zero, |a, b| add[a][b])?;
        let k = &base;
        if left.len() != k.size() || right.len() != k.size() || left.iter().chain(&right).any(|r| r.len() != n) {
            return Err(Error::InvalidInput("action tables have the wrong shape".into()));
        }
        for r in k.elements() {
            for m in 0..n {
                for s in k.elements() {
                    let ok = left[k.add(r, s)][m] == add[left[r][m]][left[s][m]]
                        && right[k.add(r, s)][m] == add[right[r][m]][right[s][m]]
                        && left[k.mul(r, s)][m] == left[r][left[s][m]]
                        && right[k.mul(r, s)][m] == right[s][right[r][m]]
                        && right[s][left[r][m]] == left[r][right[s][m]];
                    if !ok {
                        return Err(Error::InvalidInput(format!("bimodule axiom fails at ({r},{m},{s})")));
                    }
                }
                for m2 in 0..n {
                    if left[r][add[m][m2]] != add[left[r][m]][left[r][m2]]
                        || right[r][add[m][m2]] != add[right[r][m]][right[r][m2]]
                    {
                        return Err(Error::InvalidInput(format!("action of {r} is not additive")));
                    }
                }
            }
        }
        if (0..n).any(|m| left[k.one()][m] != m || right[k.one()][m] != m) {
            return Err(Error::InvalidInput("1 does not act as the identity".into()));
        }
        Ok(FinBimodule { base, add, zero, left, right, group })
    }

    /// `R` acting on itself.
    pub fn regular(k: &FiniteCommRing) -> Result<Self> {
        Self::ideal(k, k.one())
    }

    /// `R e`, elements in ascending order of `ideal_elements`.
    pub fn ideal(k: &FiniteCommRing, e: usize) -> Result<Self> {
        let elems = k.ideal_elements(e)?;
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let add = elems.iter().map(|&a| elems.iter().map(|&b| pos[&k.add(a, b)]).collect()).collect();
        let act: Vec<Vec<usize>> = k.elements().map(|r| elems.iter().map(|&a| pos[&k.mul(r, a)]).collect()).collect();
        Self::new(k.clone(), add, pos[&k.zero()], act.clone(), act)
    }

    /// `Z/p` with `r m = r_i m` and `m r = m r_j`, for components `i`, `j` of
    /// `R` that are both the prime field `Z/p`.
    pub fn one_dim(k: &FiniteCommRing, i: usize, j: usize) -> Result<Self> {
        let p = k.moduli()[i];
        if k.moduli()[j] != p || !(2..p).all(|d| !p.is_multiple_of(d)) {
            return Err(Error::InvalidInput("one_dim needs two prime-field components of the same order".into()));
        }
        let p = p as usize;
        let add = (0..p).map(|a| (0..p).map(|b| (a + b) % p).collect()).collect();
        let left = k.elements().map(|r| (0..p).map(|m| (k.residue(r, i) as usize * m) % p).collect()).collect();
        let right = k.elements().map(|r| (0..p).map(|m| (k.residue(r, j) as usize * m) % p).collect()).collect();
        Self::new(k.clone(), add, 0, left, right)
    }

    /// `{0}`.
    pub fn zero_module(k: &FiniteCommRing) -> Self {
        let t = vec![vec![0]; k.size()];
        Self::new(k.clone(), vec![vec![0]], 0, t.clone(), t).expect("zero module")
    }

    /// `M ⊕ N` with `(a, b)` at index `a |N| + b`.
    pub fn direct_sum(m: &Self, n: &Self) -> Result<Self> {
        let (a, b) = (m.size(), n.size());
        let idx = |i: usize, j: usize| i * b + j;
        let add =
            (0..a * b).map(|u| (0..a * b).map(|v| idx(m.add(u / b, v / b), n.add(u % b, v % b))).collect()).collect();
        let left =
            m.base.elements().map(|r| (0..a * b).map(|u| idx(m.left(r, u / b), n.left(r, u % b))).collect()).collect();
        let right = m
            .base
            .elements()
            .map(|r| (0..a * b).map(|u| idx(m.right(u / b, r), n.right(u % b, r))).collect())
            .collect();
        Self::new(m.base.clone(), add, idx(m.zero, n.zero), left, right)
    }

    /// The subbimodule on `elems` (must be closed), relabelled in the given order.
    pub fn submodule(&self, elems: &[usize]) -> Result<Self> {
        let pos: HashMap<usize, usize> = elems.iter().enumerate().map(|(i, &a)| (a, i)).collect();
        let look =
            |a: usize| pos.get(&a).copied().ok_or_else(|| Error::NotASubbimodule(format!("{a} is outside the subset")));
        let add = elems
            .iter()
            .map(|&a| elems.iter().map(|&b| look(self.add(a, b))).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let left = self
            .base
            .elements()
            .map(|r| elems.iter().map(|&a| look(self.left(r, a))).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        let right = self
            .base
            .elements()
            .map(|r| elems.iter().map(|&a| look(self.right(a, r))).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Self::new(self.base.clone(), add, look(self.zero)?, left, right)
    }

    pub fn base(&self) -> &FiniteCommRing {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.add.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn left(&self, r: usize, m: usize) -> usize {
        self.left[r][m]
    }

    pub fn right(&self, m: usize, r: usize) -> usize {
        self.right[r][m]
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group.group
    }

    pub fn coords(&self, m: usize) -> &[u64] {
        self.group.coords(m)
    }

    pub fn elem(&self, coords: &[u64]) -> usize {
        self.group.label(coords)
    }

    /// Elements at the standard generators of the additive group.
    pub fn generators(&self) -> Vec<usize> {
        (0..self.group().rank())
            .map(|i| {
                let mut c = vec![0; self.group().rank()];
                c[i] = 1;
                self.elem(&c)
            })
            .collect()
    }

    /// `c m`.
    pub fn scale(&self, c: u64, m: usize) -> usize {
        let coords: Vec<u64> =
            self.coords(m).iter().zip(self.group().factors()).map(|(&x, &d)| (x * (c % d)) % d).collect();
        self.elem(&coords)
    }

    pub fn is_central(&self) -> bool {
        self.base.elements().all(|r| (0..self.size()).all(|m| self.left(r, m) == self.right(m, r)))
    }

    /// `e M` for an idempotent `e`.
    pub fn idempotent_part(&self, e: usize) -> Result<Self> {
        let mut elems: Vec<usize> = (0..self.size()).filter(|&m| self.left(e, m) == m).collect();
        elems.sort_unstable();
        self.submodule(&elems)
    }
}

/// `C_M(R) = {m : r m = m r for all r}`.
pub fn centralizer(m: &FinBimodule) -> Result<FinBimodule> {
    let elems: Vec<usize> =
        (0..m.size()).filter(|&a| m.base.elements().all(|r| m.left(r, a) == m.right(a, r))).collect();
    m.submodule(&elems)
}

/// A bimodule homomorphism as a table `m ↦ f(m)`.
pub type Hom = Vec<usize>;

/// Extends generator images additively; `None` if the images violate the
/// generator orders.
fn extend(m: &FinBimodule, n: &FinBimodule, images: &[usize]) -> Option<Hom> {
    for (&img, &d) in images.iter().zip(m.group().factors()) {
        if n.scale(d, img) != n.zero() {
            return None;
        }
    }
    Some(
        (0..m.size())
            .map(|a| m.coords(a).iter().zip(images).fold(n.zero(), |acc, (&c, &img)| n.add(acc, n.scale(c, img))))
            .collect(),
    )
}

fn is_bilinear(m: &FinBimodule, n: &FinBimodule, f: &[usize]) -> bool {
    let gens = m.generators();
    m.base
        .elements()
        .all(|r| gens.iter().all(|&a| f[m.left(r, a)] == n.left(r, f[a]) && f[m.right(a, r)] == n.right(f[a], r)))
}

/// All bimodule homomorphisms `M → N`, sorted.
pub fn homs(m: &FinBimodule, n: &FinBimodule, caps: &Caps) -> Result<Vec<Hom>> {
    let rank = m.group().rank();
    let count = (n.size() as u128).pow(rank as u32);
    if count > caps.families as u128 {
        return Err(Error::cap("homomorphism candidates", count, caps.families));
    }
    let mut out: Vec<Hom> = (0..count as usize)
        .into_par_iter()
        .filter_map(|mut code| {
            let images: Vec<usize> = (0..rank)
                .map(|_| {
                    let v = code % n.size();
                    code /= n.size();
                    v
                })
                .collect();
            extend(m, n, &images).filter(|f| is_bilinear(m, n, f))
        })
        .collect();
    out.sort();
    Ok(out)
}

/// A bimodule isomorphism `M → N`, if any.
pub fn is_isomorphic(m: &FinBimodule, n: &FinBimodule, caps: &Caps) -> Result<Option<Hom>> {
    if m.size() != n.size() || m.group() != n.group() {
        return Ok(None);
    }
    Ok(homs(m, n, caps)?.into_iter().find(|f| {
        let mut seen = vec![false; n.size()];
        f.iter().all(|&b| !std::mem::replace(&mut seen[b], true))
    }))
}

/// Pairs `(f_i: M → N, g_i: N → M)` with `Σ g_i f_i = Id_M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionWitness {
    pub pairs: Vec<(Hom, Hom)>,
}

impl DivisionWitness {
    pub fn verify(&self, m: &FinBimodule, n: &FinBimodule) -> bool {
        (0..m.size()).all(|a| self.pairs.iter().fold(m.zero(), |acc, (f, g)| m.add(acc, g[f[a]])) == a)
            && self.pairs.iter().all(|(f, g)| is_bilinear(m, n, f) && is_bilinear(n, m, g))
    }
}

/// `M | N`: solves `Id_M = Σ c_i (g_i f_i)` over the integers in the additive
/// group `End(M) ⊆ M^rank`, then folds the coefficients into the `g_i`.
/// A single pair is preferred when one exists.
pub fn divides(m: &FinBimodule, n: &FinBimodule, k_max: usize, caps: &Caps) -> Result<Option<DivisionWitness>> {
    let hf = homs(m, n, caps)?;
    let hg = homs(n, m, caps)?;
    let id: Hom = (0..m.size()).collect();
    let mut comps: Vec<(Hom, usize, usize)> = vec![];
    let mut seen = HashMap::new();
    for (i, f) in hf.iter().enumerate() {
        for (j, g) in hg.iter().enumerate() {
            let c: Hom = f.iter().map(|&b| g[b]).collect();
            if c == id {
                let w = DivisionWitness { pairs: vec![(f.clone(), g.clone())] };
                return Ok(Some(w));
            }
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(c.clone()) {
                e.insert(comps.len());
                comps.push((c, i, j));
            }
        }
    }
    if m.size() == 1 {
        return Ok(Some(DivisionWitness { pairs: vec![] }));
    }
    let gens = m.generators();
    let rank = m.group().rank();
    let rows = gens.len() * rank;
    let flat =
        |h: &Hom| -> Vec<Int> { gens.iter().flat_map(|&a| m.coords(h[a]).iter().map(|&c| Int::from(c))).collect() };
    let mut cols: Vec<Vec<Int>> = comps.iter().map(|(c, _, _)| flat(c)).collect();
    let ncomp = cols.len();
    for blk in 0..gens.len() {
        for (i, &d) in m.group().factors().iter().enumerate() {
            let mut v = vec![Int::zero(); rows];
            v[blk * rank + i] = Int::from(d);
            cols.push(v);
        }
    }
    let snf = smith_normal_form(&IntMatrix::from_columns(&cols, rows));
    let Some(sol) = snf.solve(&flat(&id)) else { return Ok(None) };
    let mut pairs = vec![];
    for (coef, (_, i, j)) in sol[..ncomp].iter().zip(&comps) {
        let c = coef.mod_floor(&Int::from(m.size() as u64)).to_u64().unwrap();
        if c == 0 {
            continue;
        }
        let g: Hom = hg[*j].iter().map(|&a| m.scale(c, a)).collect();
        pairs.push((hf[*i].clone(), g));
    }
    let w = DivisionWitness { pairs };
    if !w.verify(m, n) {
        return Err(Error::InvalidWitness("division witness does not reconstruct the identity".into()));
    }
    Ok((w.pairs.len() <= k_max).then_some(w))
}

/// `M ⊗_R N` with its canonical map from pairs.
#[derive(Clone, Debug)]
pub struct Tensor {
    pub module: FinBimodule,
    pres: Presented,
    m_gens: usize,
    n_gens: usize,
    /// presentation coordinates of each element
    elems: Vec<Vec<u64>>,
    index: HashMap<Vec<u64>, usize>,
}

impl Tensor {
    fn gen_vector(&self, m: &FinBimodule, n: &FinBimodule, a: usize, b: usize) -> Vec<Int> {
        let (ca, cb) = (m.coords(a), n.coords(b));
        let mut v = vec![Int::zero(); self.m_gens * self.n_gens];
        for i in 0..self.m_gens {
            for j in 0..self.n_gens {
                v[i * self.n_gens + j] = Int::from(ca[i] * cb[j]);
            }
        }
        v
    }

    /// `a ⊗ b`.
    pub fn pure(&self, m: &FinBimodule, n: &FinBimodule, a: usize, b: usize) -> usize {
        self.index[&self.pres.project(&self.gen_vector(m, n, a, b))]
    }

    /// A lift of a tensor element to coefficients on the generator pairs `(a_i, b_j)`.
    pub fn lift(&self, t: usize) -> Vec<Int> {
        self.pres.lift(&self.elems[t])
    }
}

/// `M ⊗_R N`: the free abelian group on pairs of additive generators modulo
/// the orders, bilinearity being built in, and balancing `m r ⊗ n = m ⊗ r n`.
pub fn tensor(m: &FinBimodule, n: &FinBimodule, caps: &Caps) -> Result<Tensor> {
    for x in [m, n] {
        if x.size() > caps.bimodule_size {
            return Err(Error::cap("bimodule size", x.size(), caps.bimodule_size));
        }
    }
    let k = &m.base;
    let (mg, ng) = (m.generators(), n.generators());
    let (p, q) = (mg.len(), ng.len());
    let gens = p * q;
    let idx = |i: usize, j: usize| i * q + j;
    let mut rel: Vec<Vec<Int>> = vec![];
    for i in 0..p {
        for j in 0..q {
            let d = m.group().factors()[i].gcd(&n.group().factors()[j]);
            let mut v = vec![Int::zero(); gens];
            v[idx(i, j)] = Int::from(d);
            rel.push(v);
        }
    }
    let vec_of = |a: usize, b: usize| -> Vec<Int> {
        let (ca, cb) = (m.coords(a), n.coords(b));
        let mut v = vec![Int::zero(); gens];
        for i in 0..p {
            for j in 0..q {
                v[idx(i, j)] = Int::from(ca[i] * cb[j]);
            }
        }
        v
    };
    for r in k.elements() {
        for &a in &mg {
            for &b in &ng {
                let l = vec_of(m.right(a, r), b);
                let rr = vec_of(a, n.left(r, b));
                rel.push(l.iter().zip(&rr).map(|(x, y)| x - y).collect());
            }
        }
    }
    let pres = if gens == 0 { present(0, &[])? } else { present(gens, &rel)? };
    let size = pres.group.order_u64().unwrap_or(u64::MAX);
    if size > caps.bimodule_size as u64 {
        return Err(Error::cap("tensor product size", size, caps.bimodule_size));
    }
    let elems: Vec<Vec<u64>> = pres.group.elements().collect();
    let index: HashMap<Vec<u64>, usize> = elems.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
    let zero = index[&pres.group.zero()];
    let add: Vec<Vec<usize>> =
        elems.iter().map(|a| elems.iter().map(|b| index[&pres.group.add(a, b)]).collect()).collect();
    // action on the generator pairs, in group coordinates
    let act = |f: &dyn Fn(usize, usize) -> (usize, usize)| -> Vec<Vec<u64>> {
        (0..gens)
            .map(|g| {
                let (a, b) = f(mg[g / q], ng[g % q]);
                pres.project(&vec_of(a, b))
            })
            .collect()
    };
    let apply = |images: &[Vec<u64>], t: &[u64]| -> usize {
        let lift = pres.lift(t);
        let mut acc: Vec<Int> = vec![Int::zero(); pres.group.rank()];
        for (c, img) in lift.iter().zip(images) {
            for (s, &x) in acc.iter_mut().zip(img) {
                *s += c * Int::from(x);
            }
        }
        index[&pres.group.reduce(&acc)]
    };
    let mut left = vec![];
    let mut right = vec![];
    for r in k.elements() {
        let li = act(&|a, b| (m.left(r, a), b));
        let ri = act(&|a, b| (a, n.right(b, r)));
        left.push(elems.iter().map(|t| apply(&li, t)).collect());
        right.push(elems.iter().map(|t| apply(&ri, t)).collect());
    }
    let module = FinBimodule::new(k.clone(), add, zero, left, right)?;
    Ok(Tensor { module, pres, m_gens: p, n_gens: q, elems, index })
}

/// `T(x ⊗ y) = Σ f_i(x) y ⊗ g_i(1)` from a witness of `M | R`, as a table on
/// `M ⊗ N` with values in `N ⊗ M`. Checked to be well defined and bijective.
pub fn commuting_t(
    m: &FinBimodule,
    n: &FinBimodule,
    witness: &DivisionWitness,
    caps: &Caps,
) -> Result<(Tensor, Tensor, Vec<usize>)> {
    let r = FinBimodule::regular(&m.base)?;
    if !witness.verify(m, &r) {
        return Err(Error::InvalidWitness("not a witness of M | R".into()));
    }
    let mn = tensor(m, n, caps)?;
    let nm = tensor(n, m, caps)?;
    let k = &m.base;
    // labels of the regular module are ring elements
    let one = k.one();
    let (mg, ng) = (m.generators(), n.generators());
    let on_gen = |a: usize, b: usize| -> usize {
        witness
            .pairs
            .iter()
            .fold(nm.module.zero(), |acc, (f, g)| nm.module.add(acc, nm.pure(n, m, n.left(f[a], b), g[one])))
    };
    let table: Vec<usize> = (0..mn.module.size())
        .map(|t| {
            let lift = mn.lift(t);
            lift.iter().enumerate().fold(nm.module.zero(), |acc, (g, c)| {
                let c = c.mod_floor(&Int::from(nm.module.size() as u64)).to_u64().unwrap();
                let img = on_gen(mg[g / ng.len()], ng[g % ng.len()]);
                nm.module.add(acc, nm.module.scale(c, img))
            })
        })
        .collect();
    // well defined on pure tensors
    for a in 0..m.size() {
        for b in 0..n.size() {
            let direct = witness
                .pairs
                .iter()
                .fold(nm.module.zero(), |acc, (f, g)| nm.module.add(acc, nm.pure(n, m, n.left(f[a], b), g[one])));
            if table[mn.pure(m, n, a, b)] != direct {
                return Err(Error::InvalidWitness(format!("T is not well defined at ({a},{b})")));
            }
        }
    }
    let mut seen = vec![false; nm.module.size()];
    if mn.module.size() != nm.module.size() || table.iter().any(|&v| std::mem::replace(&mut seen[v], true)) {
        return Err(Error::NotBijective("T is not bijective".into()));
    }
    Ok((mn, nm, table))
}

/// The idempotent model of `PicS_0(R)`: classes `[R e]` with `[R e][R f] = [R e f]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Semilattice {
    pub idempotents: Vec<usize>,
    /// product table over positions in `idempotents`
    pub table: Vec<Vec<usize>>,
    /// number of pairwise non-isomorphic `R e`, by brute force
    pub iso_classes: usize,
}

pub fn pics_semilattice(k: &FiniteCommRing, caps: &Caps) -> Result<Semilattice> {
    let idempotents = k.idempotents();
    let pos: HashMap<usize, usize> = idempotents.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let table = idempotents.iter().map(|&e| idempotents.iter().map(|&f| pos[&k.mul(e, f)]).collect()).collect();
    let mods: Vec<FinBimodule> = idempotents.iter().map(|&e| FinBimodule::ideal(k, e)).collect::<Result<_>>()?;
    let mut reps: Vec<usize> = vec![];
    for (i, m) in mods.iter().enumerate() {
        let mut new = true;
        for &j in &reps {
            if is_isomorphic(m, &mods[j], caps)?.is_some() {
                new = false;
                break;
            }
        }
        if new {
            reps.push(i);
        }
    }
    Ok(Semilattice { idempotents, table, iso_classes: reps.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k() -> FiniteCommRing {
        FiniteCommRing::new(&[3, 3]).unwrap()
    }

    #[test]
    fn regular_tensor_regular() {
        let r = FinBimodule::regular(&k()).unwrap();
        let t = tensor(&r, &r, &Caps::default()).unwrap();
        assert_eq!(t.module.size(), 9);
        assert!(is_isomorphic(&t.module, &r, &Caps::default()).unwrap().is_some());
    }

    #[test]
    fn tensor_with_zero() {
        let r = FinBimodule::regular(&k()).unwrap();
        let z = FinBimodule::zero_module(&k());
        assert_eq!(tensor(&r, &z, &Caps::default()).unwrap().module.size(), 1);
    }

    #[test]
    fn mismatched_simples_tensor_to_zero() {
        let k = k();
        // S_{12} ⊗ S_{12}: balancing forces e_2 = e_1 on the middle
        let s = FinBimodule::one_dim(&k, 0, 1).unwrap();
        assert_eq!(tensor(&s, &s, &Caps::default()).unwrap().module.size(), 1);
        let s21 = FinBimodule::one_dim(&k, 1, 0).unwrap();
        assert_eq!(tensor(&s, &s21, &Caps::default()).unwrap().module.size(), 3);
    }

    #[test]
    fn divides_reflexive_and_ideal() {
        let k = k();
        let caps = Caps::default();
        let r = FinBimodule::regular(&k).unwrap();
        let re = FinBimodule::ideal(&k, k.elem(&[1, 0])).unwrap();
        assert!(divides(&r, &r, 1, &caps).unwrap().is_some());
        assert!(divides(&re, &r, 1, &caps).unwrap().is_some());
        let two = FinBimodule::direct_sum(&re, &re).unwrap();
        let w = divides(&two, &r, 4, &caps).unwrap().expect("Re ⊕ Re | R");
        assert!(w.verify(&two, &r));
        // a non-central simple does not divide R
        let s = FinBimodule::one_dim(&k, 0, 1).unwrap();
        assert!(divides(&s, &r, 4, &caps).unwrap().is_none());
    }

    #[test]
    fn centralizer_of_central_is_everything() {
        let r = FinBimodule::regular(&k()).unwrap();
        assert_eq!(centralizer(&r).unwrap().size(), 9);
        let s = FinBimodule::one_dim(&k(), 0, 1).unwrap();
        assert_eq!(centralizer(&s).unwrap().size(), 1);
    }

    #[test]
    fn semilattice_of_z3z3() {
        let s = pics_semilattice(&k(), &Caps::default()).unwrap();
        assert_eq!(s.idempotents.len(), 4);
        assert_eq!(s.iso_classes, 4);
        for i in 0..4 {
            assert_eq!(s.table[i][i], i);
            for j in 0..4 {
                assert_eq!(s.table[i][j], s.table[j][i]);
            }
        }
    }

    #[test]
    fn commuting_t_for_ideal() {
        let k = k();
        let caps = Caps::default();
        let r = FinBimodule::regular(&k).unwrap();
        let e = k.elem(&[1, 0]);
        let re = FinBimodule::ideal(&k, e).unwrap();
        let w = divides(&re, &r, 1, &caps).unwrap().unwrap();
        let n = FinBimodule::direct_sum(&r, &re).unwrap();
        let (mn, nm, t) = commuting_t(&re, &n, &w, &caps).unwrap();
        assert_eq!(t.len(), mn.module.size());
        // r e ⊗ m ↦ r m ⊗ e for central N
        let ideal = k.ideal_elements(e).unwrap();
        let e_local = ideal.iter().position(|&a| a == e).unwrap();
        for (li, &a) in ideal.iter().enumerate() {
            for m in 0..n.size() {
                assert_eq!(t[mn.pure(&re, &n, li, m)], nm.pure(&n, &re, n.left(a, m), e_local));
            }
        }
    }
}
