use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::abgrp::{smith_normal_form, FinAbGroup, TableGroup};
use crate::paction::UnitalPartialAction;
use crate::{Caps, Error, FiniteCommRing, FiniteGroup, FiniteRing, Int, IntMatrix, Result};

/// One homogeneous component: its elements (labels in some ambient
/// namespace) with a local addition table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub labels: Vec<usize>,
    add: Vec<Vec<usize>>,
    zero: usize,
    neg: Vec<usize>,
}

impl Component {
    /// `add` combines two labels; it must be closed on `labels`.
    pub fn new(labels: Vec<usize>, zero_label: usize, add: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let pos: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let zero = *pos.get(&zero_label).ok_or_else(|| Error::InvalidInput("component lacks zero".into()))?;
        let mut table = vec![vec![0; labels.len()]; labels.len()];
        for (i, &a) in labels.iter().enumerate() {
            for (j, &b) in labels.iter().enumerate() {
                table[i][j] = *pos
                    .get(&add(a, b))
                    .ok_or_else(|| Error::InvalidInput("component is not closed under addition".into()))?;
            }
        }
        let neg = (0..labels.len()).map(|i| (0..labels.len()).find(|&j| table[i][j] == zero).unwrap()).collect();
        Ok(Component { labels, add: table, zero, neg })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, i: usize, j: usize) -> usize {
        self.add[i][j]
    }

    pub fn neg(&self, i: usize) -> usize {
        self.neg[i]
    }

    /// `c * u` for an integer `c`.
    pub fn scale(&self, c: &Int, u: usize) -> usize {
        let (q, neg) = if c.sign() == num_bigint::Sign::Minus { (-c.clone(), true) } else { (c.clone(), false) };
        let mut k = q.mod_floor(&Int::from(self.len().max(1))).to_usize().unwrap();
        let mut acc = self.zero;
        while k > 0 {
            acc = self.add[acc][u];
            k -= 1;
        }
        if neg {
            self.neg[acc]
        } else {
            acc
        }
    }

    pub fn additive_group(&self) -> Result<TableGroup> {
        TableGroup::build((0..self.len()).collect(), self.zero, |a, b| self.add[a][b])
    }

    /// Greedy additive generating set, scanning candidates in the given order.
    pub fn generators(&self, order: impl Iterator<Item = usize>) -> Vec<usize> {
        let mut span = vec![false; self.len()];
        span[self.zero] = true;
        let mut members = vec![self.zero];
        let mut gens = vec![];
        for c in order {
            if span[c] {
                continue;
            }
            gens.push(c);
            let mut i = 0;
            // close members under adding the new generator
            let mut frontier: Vec<usize> = members.clone();
            while i < frontier.len() {
                let s = self.add[frontier[i]][c];
                if !span[s] {
                    span[s] = true;
                    members.push(s);
                    frontier.push(s);
                }
                i += 1;
            }
        }
        gens
    }
}

/// A `G`-graded ring `⊕_x Θ_x` over a commutative base ring `R` embedded in `Θ_1`.
///
/// Homogeneous elements are addressed as `(x, i)` with `i` a local index into
/// component `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedRing {
    group: FiniteGroup,
    base: FiniteCommRing,
    idem: Vec<usize>,
    comps: Vec<Component>,
    /// gmul[x * n + y][i * |Θ_y| + j] = local index of (x,i)(y,j) in Θ_{xy}
    gmul: Vec<Vec<usize>>,
    /// base element -> local index in Θ_1
    iota: Vec<usize>,
    iota_inv: HashMap<usize, usize>,
}

impl GradedRing {
    /// Assembles a graded ring from a homogeneous product. `mul(x, i, y, j)`
    /// returns the local index in `Θ_{xy}`. Nothing is verified here; see
    /// [`GradedRing::verify`].
    pub fn from_parts(
        group: FiniteGroup,
        base: FiniteCommRing,
        idem: Vec<usize>,
        comps: Vec<Component>,
        iota: Vec<usize>,
        mul: impl Fn(usize, usize, usize, usize) -> Result<usize> + Sync,
    ) -> Result<Self> {
        let n = group.order();
        let mut gmul = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let (mx, my) = (comps[x].len(), comps[y].len());
                let mut t = Vec::with_capacity(mx * my);
                for i in 0..mx {
                    for j in 0..my {
                        t.push(mul(x, i, y, j)?);
                    }
                }
                gmul.push(t);
            }
        }
        let iota_inv = iota.iter().enumerate().map(|(r, &i)| (i, r)).collect();
        Ok(GradedRing { group, base, idem, comps, gmul, iota, iota_inv })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn base(&self) -> &FiniteCommRing {
        &self.base
    }

    /// `1_x` as a base-ring element.
    pub fn idem(&self, x: usize) -> usize {
        self.idem[x]
    }

    pub fn idems(&self) -> &[usize] {
        &self.idem
    }

    pub fn component(&self, x: usize) -> &Component {
        &self.comps[x]
    }

    pub fn components(&self) -> &[Component] {
        &self.comps
    }

    pub fn mul(&self, x: usize, i: usize, y: usize, j: usize) -> usize {
        let n = self.group.order();
        self.gmul[x * n + y][i * self.comps[y].len() + j]
    }

    /// `ι(r)` as a local index of `Θ_1`.
    pub fn iota(&self, r: usize) -> usize {
        self.iota[r]
    }

    /// The base element `r` with `ι(r) = u`, for `u` in `Θ_1`.
    pub fn iota_inv(&self, u: usize) -> Option<usize> {
        self.iota_inv.get(&u).copied()
    }

    /// `r u` for a base element `r`.
    pub fn left(&self, r: usize, x: usize, u: usize) -> usize {
        self.mul(0, self.iota[r], x, u)
    }

    /// `u r` for a base element `r`.
    pub fn right(&self, x: usize, u: usize, r: usize) -> usize {
        self.mul(x, u, 0, self.iota[r])
    }

    /// The same ring with a different homogeneous product on the same components.
    pub fn with_product(&self, mul: impl Fn(usize, usize, usize, usize) -> Result<usize> + Sync) -> Result<Self> {
        Self::from_parts(
            self.group.clone(),
            self.base.clone(),
            self.idem.clone(),
            self.comps.clone(),
            self.iota.clone(),
            mul,
        )
    }

    /// Associativity on every homogeneous triple, the lexicographically least
    /// failure `(x, i, y, j, z, k)` if any.
    pub fn associativity_failure(&self) -> Option<Vec<usize>> {
        let n = self.group.order();
        let g = &self.group;
        (0..n).into_par_iter().find_map_first(|x| {
            for i in 0..self.comps[x].len() {
                for y in 0..n {
                    for j in 0..self.comps[y].len() {
                        let xy = g.mul(x, y);
                        let p = self.mul(x, i, y, j);
                        for z in 0..n {
                            let yz = g.mul(y, z);
                            for k in 0..self.comps[z].len() {
                                let lhs = self.mul(xy, p, z, k);
                                let rhs = self.mul(x, i, yz, self.mul(y, j, z, k));
                                if lhs != rhs {
                                    return Some(vec![x, i, y, j, z, k]);
                                }
                            }
                        }
                    }
                }
            }
            None
        })
    }

    /// Ring axioms on homogeneous elements: biadditivity, associativity,
    /// `ι(1)` a two-sided identity, `ι` a ring embedding.
    pub fn verify(&self) -> Result<()> {
        let n = self.group.order();
        let g = &self.group;
        for x in 0..n {
            for y in 0..n {
                let c = &self.comps[g.mul(x, y)];
                let (cx, cy) = (&self.comps[x], &self.comps[y]);
                for i in 0..cx.len() {
                    for j in 0..cy.len() {
                        for j2 in 0..cy.len() {
                            if self.mul(x, i, y, cy.add(j, j2)) != c.add(self.mul(x, i, y, j), self.mul(x, i, y, j2)) {
                                return Err(Error::InvalidInput(format!(
                                    "product not additive in the right factor at {:?}",
                                    (x, i, y, j, j2)
                                )));
                            }
                        }
                        for i2 in 0..cx.len() {
                            if self.mul(x, cx.add(i, i2), y, j) != c.add(self.mul(x, i, y, j), self.mul(x, i2, y, j)) {
                                return Err(Error::InvalidInput(format!(
                                    "product not additive in the left factor at {:?}",
                                    (x, i, i2, y, j)
                                )));
                            }
                        }
                    }
                }
            }
        }
        if let Some(w) = self.associativity_failure() {
            return Err(Error::AssociativityFailure(w));
        }
        let one = self.iota[self.base.one()];
        for x in 0..n {
            for u in 0..self.comps[x].len() {
                if self.mul(0, one, x, u) != u || self.mul(x, u, 0, one) != u {
                    return Err(Error::NotUnital(format!("ι(1) is not an identity on component {x} at {u}")));
                }
            }
        }
        let k = &self.base;
        let c1 = &self.comps[0];
        for a in k.elements() {
            for b in k.elements() {
                if self.iota[k.add(a, b)] != c1.add(self.iota[a], self.iota[b])
                    || self.iota[k.mul(a, b)] != self.mul(0, self.iota[a], 0, self.iota[b])
                {
                    return Err(Error::InvalidInput(format!("ι is not a ring map at ({a},{b})")));
                }
            }
        }
        Ok(())
    }

    /// Pairs `(u_i, v_i)` in `Θ_x x Θ_{x^-1}` with `Σ u_i v_i = ι(1_x)`.
    ///
    /// Solves an integer system over products of additive generators; `variant`
    /// selects the generator scan order (0: ascending, otherwise descending),
    /// which usually changes the decomposition found.
    pub fn decompose_unit(&self, x: usize, variant: usize) -> Result<Vec<(usize, usize)>> {
        let xi = self.group.inv(x);
        let target = self.iota[self.idem[x]];
        let (cx, cxi, c1) = (&self.comps[x], &self.comps[xi], &self.comps[0]);
        if target == c1.zero() {
            return Ok(vec![]);
        }
        let order = |len: usize| -> Vec<usize> {
            if variant == 0 {
                (0..len).collect()
            } else {
                (0..len).rev().collect()
            }
        };
        let gx = cx.generators(order(cx.len()).into_iter());
        let gxi = cxi.generators(order(cxi.len()).into_iter());
        let add1 = c1.additive_group()?;
        let rank = add1.group.rank();
        let mut cols: Vec<Vec<Int>> = vec![];
        let mut pairs = vec![];
        for &a in &gx {
            for &b in &gxi {
                cols.push(FinAbGroup::to_int(add1.coords(self.mul(x, a, xi, b))));
                pairs.push((a, b));
            }
        }
        let npairs = cols.len();
        for (i, &d) in add1.group.factors().iter().enumerate() {
            let mut v = vec![Int::from(0); rank];
            v[i] = Int::from(d);
            cols.push(v);
        }
        if rank == 0 || cols.is_empty() {
            return Err(Error::NoDecomposition(x));
        }
        let snf = smith_normal_form(&IntMatrix::from_columns(&cols, rank));
        let sol = snf.solve(&FinAbGroup::to_int(add1.coords(target))).ok_or(Error::NoDecomposition(x))?;
        let mut out = vec![];
        for (c, &(a, b)) in sol[..npairs].iter().zip(&pairs) {
            let ca = cx.scale(c, a);
            if ca != cx.zero() {
                out.push((ca, b));
            }
        }
        let sum = out.iter().fold(c1.zero(), |acc, &(a, b)| c1.add(acc, self.mul(x, a, xi, b)));
        if sum != target {
            return Err(Error::NoDecomposition(x));
        }
        Ok(out)
    }

    /// `α_x(r) = Σ ω_x r ω_{x^-1}` on the base ring, for one decomposition per `x`.
    pub fn center_action_with(&self, decompositions: &[Vec<(usize, usize)>]) -> Result<UnitalPartialAction> {
        let k = &self.base;
        let g = &self.group;
        let mut alpha = vec![];
        for x in g.elements() {
            let xi = g.inv(x);
            let mut m = BTreeMap::new();
            for r in k.ideal_elements(self.idem[xi])? {
                let mut acc = self.comps[0].zero();
                for &(a, b) in &decompositions[x] {
                    let ar = self.mul(x, a, 0, self.iota[r]);
                    acc = self.comps[0].add(acc, self.mul(x, ar, xi, b));
                }
                let v =
                    self.iota_inv(acc).ok_or_else(|| Error::InvalidRep("Σ ω r ω' is not in the base ring".into()))?;
                m.insert(r, v);
            }
            alpha.push(m);
        }
        UnitalPartialAction::new(g.clone(), k.clone(), self.idem.clone(), alpha)?.validated()
    }

    /// The induced partial action on the base ring using the variant-0 decompositions.
    pub fn center_action(&self) -> Result<UnitalPartialAction> {
        let ds = self.group.elements().map(|x| self.decompose_unit(x, 0)).collect::<Result<Vec<_>>>()?;
        self.center_action_with(&ds)
    }

    pub fn size(&self) -> u128 {
        self.comps.iter().map(|c| c.len() as u128).product()
    }

    /// Index of the homogeneous element `(x, i)` in [`GradedRing::flatten`].
    pub fn flat_index(&self, x: usize, i: usize) -> usize {
        let mut idx = 0;
        for (y, c) in self.comps.iter().enumerate() {
            idx = idx * c.len() + if y == x { i } else { c.zero() };
        }
        idx
    }

    /// Local coordinates `(i_x)_x` of a flat element.
    pub fn flat_parts(&self, mut a: usize) -> Vec<usize> {
        let mut parts = vec![0; self.comps.len()];
        for (y, c) in self.comps.iter().enumerate().rev() {
            parts[y] = a % c.len();
            a /= c.len();
        }
        parts
    }

    fn index_of_parts(&self, parts: &[usize]) -> usize {
        parts.iter().zip(&self.comps).fold(0, |acc, (&p, c)| acc * c.len() + p)
    }

    /// The total ring as explicit tables, elements encoded in mixed radix over
    /// the components (component of the identity most significant). Only
    /// meaningful after [`GradedRing::verify`] succeeded.
    pub fn flatten(&self, caps: &Caps) -> Result<FiniteRing> {
        let size = self.size();
        if size > caps.graded_ring as u128 {
            return Err(Error::cap("graded ring size", size, caps.graded_ring));
        }
        let size = size as usize;
        let n = self.group.order();
        let parts: Vec<Vec<usize>> = (0..size).map(|a| self.flat_parts(a)).collect();
        let add: Vec<Vec<usize>> = (0..size)
            .into_par_iter()
            .map(|a| {
                (0..size)
                    .map(|b| {
                        let s: Vec<usize> = (0..n).map(|y| self.comps[y].add(parts[a][y], parts[b][y])).collect();
                        self.index_of_parts(&s)
                    })
                    .collect()
            })
            .collect();
        let mul: Vec<Vec<usize>> = (0..size)
            .into_par_iter()
            .map(|a| {
                (0..size)
                    .map(|b| {
                        let mut s: Vec<usize> = self.comps.iter().map(|c| c.zero()).collect();
                        for x in 0..n {
                            for y in 0..n {
                                let xy = self.group.mul(x, y);
                                let p = self.mul(x, parts[a][x], y, parts[b][y]);
                                s[xy] = self.comps[xy].add(s[xy], p);
                            }
                        }
                        self.index_of_parts(&s)
                    })
                    .collect()
            })
            .collect();
        let one = self.flat_index(0, self.iota[self.base.one()]);
        let zero = self.index_of_parts(&self.comps.iter().map(|c| c.zero).collect::<Vec<_>>());
        Ok(FiniteRing::from_parts_unchecked(add, mul, zero, one))
    }

    /// Center of the total ring, as flat indices.
    pub fn center(&self, caps: &Caps) -> Result<Vec<usize>> {
        Ok(self.flatten(caps)?.center())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crossed::build_crossed_product;
    use crate::paction::instances::desk_twisted;

    #[test]
    fn desk_decompositions_differ_but_sum_to_one_x() {
        let t = desk_twisted();
        let d = build_crossed_product(&t).unwrap();
        let k = d.base().clone();
        let a = d.decompose_unit(1, 0).unwrap();
        let b = d.decompose_unit(1, 1).unwrap();
        assert_ne!(a, b);
        for dec in [&a, &b] {
            let s = dec.iter().fold(d.component(0).zero(), |acc, &(u, v)| d.component(0).add(acc, d.mul(1, u, 1, v)));
            assert_eq!(d.iota_inv(s), Some(k.elem(&[1, 0])));
        }
        let lab = |dec: &[(usize, usize)]| {
            dec.iter()
                .map(|&(u, v)| (k.show(d.component(1).labels[u]), k.show(d.component(1).labels[v])))
                .collect::<Vec<_>>()
        };
        assert_eq!(lab(&a), vec![("(2,0)".to_string(), "(1,0)".to_string())]);
        assert_eq!(lab(&b), vec![("(1,0)".to_string(), "(2,0)".to_string())]);
    }

    #[test]
    fn center_action_recovers_alpha() {
        let t = desk_twisted();
        let d = build_crossed_product(&t).unwrap();
        let c = d.center_action().unwrap();
        assert_eq!(&c, t.base());
    }

    #[test]
    fn desk_center_commutes() {
        let d = build_crossed_product(&desk_twisted()).unwrap();
        let r = d.flatten(&Caps::default()).unwrap();
        let z = d.center(&Caps::default()).unwrap();
        for &a in &z {
            for b in 0..r.size() {
                assert_eq!(r.mul(a, b), r.mul(b, a));
            }
        }
        // α_g is the identity and ω is symmetric, so the desk ring is commutative
        assert_eq!(z.len(), r.size());
        assert!(FiniteRing::new(r.add_table().to_vec(), r.mul_table().to_vec(), r.zero(), r.one()).is_ok());
    }

    #[test]
    fn flatten_respects_cap() {
        let d = build_crossed_product(&desk_twisted()).unwrap();
        let caps = Caps { graded_ring: 26, ..Caps::default() };
        assert!(matches!(d.flatten(&caps), Err(Error::SizeCapExceeded { .. })));
    }
}
