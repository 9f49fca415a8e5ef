use std::collections::HashMap;

use super::graded::{Component, GradedRing};
use crate::paction::TwistedUnitalPartialAction;
use crate::{Error, Result};

/// The graded ring `⊕ D_x δ_x` with
/// `(a δ_x)(b δ_y) = a α_x(b 1_{x^-1}) ω_{x,y} δ_{xy}`, without checking the
/// ring axioms. Local indices of component `x` follow `K 1_x` in ascending order.
pub fn crossed_product_unchecked(tpa: &TwistedUnitalPartialAction) -> Result<GradedRing> {
    let pa = tpa.base();
    let (g, k) = (pa.group(), pa.ring());
    let mut comps = vec![];
    let mut pos: Vec<HashMap<usize, usize>> = vec![];
    for x in g.elements() {
        let labels = k.ideal_elements(pa.idem(x))?;
        pos.push(labels.iter().enumerate().map(|(i, &a)| (a, i)).collect());
        comps.push(Component::new(labels, k.zero(), |a, b| k.add(a, b))?);
    }
    let iota = k
        .elements()
        .map(|r| pos[0].get(&r).copied().ok_or_else(|| Error::InvalidAction("1_1 is not the identity".into())))
        .collect::<Result<Vec<_>>>()?;
    let product = |x: usize, i: usize, y: usize, j: usize| -> Result<usize> {
        let (a, b) = (comps[x].labels[i], comps[y].labels[j]);
        let c = k.mul(k.mul(a, pa.act(x, b)), tpa.omega(x, y));
        pos[g.mul(x, y)]
            .get(&c)
            .copied()
            .ok_or_else(|| Error::InvalidAction(format!("product of components {x} and {y} leaves D_xy")))
    };
    GradedRing::from_parts(g.clone(), k.clone(), pa.idems().to_vec(), comps.clone(), iota, product)
}

/// The partial crossed product `K ⋊_{α,ω} G`, with associativity checked on
/// every homogeneous triple and `1 δ_1` checked to be the identity.
pub fn build_crossed_product(tpa: &TwistedUnitalPartialAction) -> Result<GradedRing> {
    let d = crossed_product_unchecked(tpa)?;
    d.verify()?;
    Ok(d)
}
