//! Brute-force cohomology straight from the definitions.

use std::collections::BTreeSet;

use pcross_core::paction::UnitalPartialAction;
use pcross_core::FiniteCommRing;

pub fn local_units(k: &FiniteCommRing, e: usize) -> Vec<usize> {
    k.elements().filter(|&u| k.mul(u, e) == u && k.elements().any(|v| k.mul(u, v) == e)).collect()
}

fn local_inverse(k: &FiniteCommRing, u: usize, e: usize) -> usize {
    k.elements().find(|&v| k.mul(v, e) == v && k.mul(u, v) == e).expect("unit")
}

pub fn tuples(n: usize, deg: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..deg {
        out = out.into_iter().flat_map(|t| (0..n).map(move |x| [t.clone(), vec![x]].concat())).collect();
    }
    out
}

pub fn tuple_idem(pa: &UnitalPartialAction, t: &[usize]) -> usize {
    let (g, k) = (pa.group(), pa.ring());
    let (mut p, mut e) = (0, k.one());
    for &x in t {
        p = g.mul(p, x);
        e = k.mul(e, pa.idem(p));
    }
    e
}

pub fn delta(pa: &UnitalPartialAction, n: usize, f: &[usize]) -> Vec<usize> {
    let (g, k) = (pa.group(), pa.ring());
    let order = g.order();
    let at = |t: &[usize]| f[t.iter().fold(0, |acc, &x| acc * order + x)];
    tuples(order, n + 1)
        .into_iter()
        .map(|t| {
            let e = tuple_idem(pa, &t);
            let mut acc = k.mul(pa.alpha(t[0], k.mul(at(&t[1..]), pa.idem(g.inv(t[0])))), e);
            for i in 0..n {
                let mut s = t[..i].to_vec();
                s.push(g.mul(t[i], t[i + 1]));
                s.extend_from_slice(&t[i + 2..]);
                let v = k.mul(at(&s), e);
                acc = k.mul(acc, if i % 2 == 0 { local_inverse(k, v, e) } else { v });
            }
            let last = k.mul(at(&t[..n]), e);
            k.mul(acc, if n.is_multiple_of(2) { last } else { local_inverse(k, last, e) })
        })
        .collect()
}

pub fn all_cochains(pa: &UnitalPartialAction, n: usize) -> Vec<Vec<usize>> {
    let k = pa.ring();
    let mut out = vec![vec![]];
    for t in tuples(pa.group().order(), n) {
        let us = local_units(k, tuple_idem(pa, &t));
        out = out.into_iter().flat_map(|c| us.iter().map(move |&u| [c.clone(), vec![u]].concat())).collect();
    }
    out
}

pub fn unit(pa: &UnitalPartialAction, n: usize) -> Vec<usize> {
    tuples(pa.group().order(), n).iter().map(|t| tuple_idem(pa, t)).collect()
}

/// `(|C^n|, |Z^n|, |B^n|)`.
pub fn orders(pa: &UnitalPartialAction, n: usize) -> (u64, u64, u64) {
    let one = unit(pa, n + 1);
    let c = all_cochains(pa, n);
    let z = c.iter().filter(|f| delta(pa, n, f) == one).count();
    let b: BTreeSet<Vec<usize>> = if n == 0 {
        [unit(pa, 0)].into()
    } else {
        all_cochains(pa, n - 1).iter().map(|f| delta(pa, n - 1, f)).collect()
    };
    (c.len() as u64, z as u64, b.len() as u64)
}
