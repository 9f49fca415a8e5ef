use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use super::{coboundary, Cochain, CochainSpace};
use crate::abgrp::{AbHom, FinAbGroup, Subgroup, Subquotient};
use crate::paction::UnitalPartialAction;
use crate::{Caps, Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Snf,
    Enum,
    Both,
}

/// The coboundary `delta^n : C^n -> C^{n+1}` as a homomorphism in canonical coordinates.
pub fn coboundary_hom(pa: &UnitalPartialAction, from: &CochainSpace, to: &CochainSpace) -> Result<AbHom> {
    assert_eq!(from.degree + 1, to.degree);
    let images: Vec<Vec<u64>> = (0..from.group().rank())
        .into_par_iter()
        .map(|j| {
            let mut e = from.group().zero();
            e[j] = 1;
            coboundary(pa, &from.cochain(&e)).map(|d| to.coords(&d))
        })
        .collect::<Result<_>>()?;
    AbHom::from_images(from.group().clone(), to.group().clone(), &images)
}

/// Counts from walking all of `C^n` (and `C^{n-1}` for the coboundaries).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumCounts {
    pub cochains: u64,
    pub cocycles: u64,
    pub coboundaries: u64,
    /// number of classes of each order in `Z^n / B^n`
    pub h_order_profile: BTreeMap<u64, u64>,
}

#[derive(Clone, Debug)]
pub struct CohomologyResult {
    pub degree: usize,
    pub c: FinAbGroup,
    pub z: FinAbGroup,
    pub b: FinAbGroup,
    pub h: FinAbGroup,
    pub enumeration: Option<EnumCounts>,
    space: CochainSpace,
    z_sub: Subgroup,
    b_gens: Vec<Vec<u64>>,
    quotient: Subquotient,
}

impl CohomologyResult {
    pub fn space(&self) -> &CochainSpace {
        &self.space
    }

    pub fn is_cocycle(&self, f: &Cochain) -> bool {
        self.z_sub.contains(&self.space.coords(f))
    }

    /// Class of a cocycle in `H^n` coordinates.
    pub fn class_of(&self, f: &Cochain) -> Result<Vec<u64>> {
        let c = self.space.coords(f);
        self.quotient.class_of(&c).ok_or_else(|| Error::NotACocycle(format!("{:?}", f.values)))
    }

    /// The lexicographically least normalized cocycle in the class `h`
    /// (least overall if the class has no normalized member), or the plain
    /// lift when `B^n` is too large to walk.
    pub fn representative(&self, pa: &UnitalPartialAction, h: &[u64], caps: &Caps) -> Cochain {
        let base = self.space.cochain(&self.quotient.lift(h));
        let b_sub = Subgroup::generated_by(self.space.group(), self.b_gens.clone()).expect("B^n is a subgroup");
        let size = b_sub.order().to_u64().unwrap_or(u64::MAX);
        if size > caps.enumeration {
            return base;
        }
        let members = b_sub.group().elements().map(|b| {
            let shift = self.space.cochain(&b_sub.include(&b));
            base.mul(pa, &shift)
        });
        let (norm, other): (Vec<Cochain>, Vec<Cochain>) = members.partition(|f| f.is_normalized(pa));
        norm.into_iter().min().or_else(|| other.into_iter().min()).expect("nonempty class")
    }

    /// All classes with their canonical representatives, in coordinate order.
    pub fn representatives(&self, pa: &UnitalPartialAction, caps: &Caps) -> Vec<(Vec<u64>, Cochain)> {
        self.h
            .elements()
            .map(|h| {
                let r = self.representative(pa, &h, caps);
                (h, r)
            })
            .collect()
    }

    pub fn b_subgroup(&self) -> Subgroup {
        Subgroup::generated_by(self.space.group(), self.b_gens.clone()).expect("B^n is a subgroup")
    }

    pub fn z_subgroup(&self) -> &Subgroup {
        &self.z_sub
    }
}

fn order_u64(n: &BigUint) -> u64 {
    n.to_u64().unwrap_or(u64::MAX)
}

/// `H^n(G, alpha, K)`. With [`Method::Both`] the two paths must agree or a
/// [`Error::InvalidWitness`] describing the disagreement is returned.
pub fn cohomology(pa: &UnitalPartialAction, n: usize, method: Method, caps: &Caps) -> Result<CohomologyResult> {
    if n > caps.degree {
        return Err(Error::cap("cohomological degree", n, caps.degree));
    }
    let space = CochainSpace::new(pa, n, caps)?;
    let next = CochainSpace::new(pa, n + 1, caps)?;
    let delta = coboundary_hom(pa, &space, &next)?;
    let z_sub = delta.kernel()?;
    let b_gens: Vec<Vec<u64>> = if n == 0 {
        vec![]
    } else {
        let prev = CochainSpace::new(pa, n - 1, caps)?;
        let d_prev = coboundary_hom(pa, &prev, &space)?;
        d_prev.image()?.gens.clone()
    };
    let z_gens: Vec<Vec<u64>> = z_sub.gens.clone();
    let quotient = Subquotient::new(space.group(), z_gens, b_gens.clone())?;
    let b_group = Subgroup::generated_by(space.group(), b_gens.clone())?.group().clone();
    let mut result = CohomologyResult {
        degree: n,
        c: space.group().clone(),
        z: z_sub.group().clone(),
        b: b_group,
        h: quotient.group().clone(),
        enumeration: None,
        space,
        z_sub,
        b_gens,
        quotient,
    };
    match method {
        Method::Snf => {}
        Method::Enum | Method::Both => {
            let counts = enumerate_cohomology(pa, n, caps)?;
            check_agreement(pa, &result, &counts, caps)?;
            result.enumeration = Some(counts);
        }
    }
    Ok(result)
}

/// Brute force: walk `C^n`, test the cocycle condition pointwise, and collect
/// `delta(C^{n-1})` as a set.
pub fn enumerate_cohomology(pa: &UnitalPartialAction, n: usize, caps: &Caps) -> Result<EnumCounts> {
    let space = CochainSpace::new(pa, n, caps)?;
    let size = order_u64(&space.order());
    if size > caps.enumeration {
        return Err(Error::cap(format!("|C^{n}|"), size, caps.enumeration));
    }
    let all: Vec<Cochain> = space.enumerate().collect();
    let cocycles: Vec<Cochain> = all
        .into_par_iter()
        .filter_map(|f| match coboundary(pa, &f) {
            Ok(d) if d.is_unit(pa) => Some(Ok(f)),
            Ok(_) => None,
            Err(e) => Some(Err(e)),
        })
        .collect::<Result<_>>()?;
    let boundaries: HashSet<Cochain> = if n == 0 {
        [Cochain::unit(pa, 0)].into_iter().collect()
    } else {
        let prev = CochainSpace::new(pa, n - 1, caps)?;
        let psize = order_u64(&prev.order());
        if psize > caps.enumeration {
            return Err(Error::cap(format!("|C^{}|", n - 1), psize, caps.enumeration));
        }
        let v: Vec<Cochain> = prev.enumerate().collect();
        v.par_iter().map(|g| coboundary(pa, g)).collect::<Result<HashSet<_>>>()?
    };
    // order of [f] in Z/B: least k with f^k in B
    let mut profile = BTreeMap::new();
    let mut seen: HashSet<Cochain> = HashSet::new();
    for f in &cocycles {
        if seen.contains(f) {
            continue;
        }
        // mark the whole coset f B as seen
        for b in &boundaries {
            seen.insert(f.mul(pa, b));
        }
        let mut k = 1;
        let mut p = f.clone();
        while !boundaries.contains(&p) {
            p = p.mul(pa, f);
            k += 1;
        }
        *profile.entry(k).or_insert(0) += 1;
    }
    Ok(EnumCounts {
        cochains: size,
        cocycles: cocycles.len() as u64,
        coboundaries: boundaries.len() as u64,
        h_order_profile: profile,
    })
}

fn check_agreement(pa: &UnitalPartialAction, r: &CohomologyResult, e: &EnumCounts, caps: &Caps) -> Result<()> {
    let mismatch = |what: &str, a: String, b: String| {
        Err(Error::InvalidWitness(format!("SNF and enumeration disagree on {what}: {a} vs {b}")))
    };
    if order_u64(&r.c.order()) != e.cochains {
        return mismatch("|C|", r.c.order().to_string(), e.cochains.to_string());
    }
    if order_u64(&r.z.order()) != e.cocycles {
        return mismatch("|Z|", r.z.order().to_string(), e.cocycles.to_string());
    }
    if order_u64(&r.b.order()) != e.coboundaries {
        return mismatch("|B|", r.b.order().to_string(), e.coboundaries.to_string());
    }
    if r.h.order_profile() != e.h_order_profile {
        return mismatch("H order profile", format!("{:?}", r.h.order_profile()), format!("{:?}", e.h_order_profile));
    }
    // class maps: coordinates of each enumerated coboundary must be the zero class,
    // and representatives must be cocycles in the right class
    if r.b.order_u64().is_some_and(|b| b <= caps.enumeration) {
        let bsub = r.b_subgroup();
        for b in bsub.group().elements() {
            let f = r.space.cochain(&bsub.include(&b));
            if r.class_of(&f)? != r.h.zero() {
                return mismatch("class of a coboundary", format!("{:?}", f.values), "0".into());
            }
        }
    }
    for (h, rep) in r.representatives(pa, caps) {
        if !coboundary(pa, &rep)?.is_unit(pa) || r.class_of(&rep)? != h {
            return mismatch("representative", format!("{h:?}"), format!("{:?}", rep.values));
        }
    }
    Ok(())
}

/// `(sigma', beta)` with `sigma'` normalized and `sigma = sigma' * delta(beta)`.
pub fn normalize_2cocycle(pa: &UnitalPartialAction, sigma: &Cochain) -> Result<(Cochain, Cochain)> {
    if sigma.degree != 2 {
        return Err(Error::InvalidInput("normalize_2cocycle expects a 2-cochain".into()));
    }
    let k = pa.ring();
    if !coboundary(pa, sigma)?.is_unit(pa) {
        return Err(Error::NotACocycle("delta(sigma) is not the unit cochain".into()));
    }
    // beta(x) = sigma(1,1) 1_x makes delta(beta) agree with sigma on (1,y) and (x,1)
    let c = sigma.at(pa, &[0, 0]);
    let beta = Cochain::new(pa, 1, pa.group().elements().map(|x| k.mul(c, pa.idem(x))).collect())?;
    let d = coboundary(pa, &beta)?;
    let normalized = sigma.mul(pa, &d.inv(pa));
    debug_assert!(normalized.is_normalized(pa));
    Ok((normalized, beta))
}

/// A cochain `g` of degree `n - 1` with `f = f2 * delta(g)`, if one exists.
pub fn cohomologous(
    pa: &UnitalPartialAction,
    f: &Cochain,
    f2: &Cochain,
    method: Method,
    caps: &Caps,
) -> Result<Option<Cochain>> {
    if f.degree != f2.degree || f.degree == 0 {
        return Err(Error::InvalidInput("cohomologous needs two cochains of the same positive degree".into()));
    }
    let n = f.degree;
    let quotient = f.mul(pa, &f2.inv(pa));
    let linear = || -> Result<Option<Cochain>> {
        let prev = CochainSpace::new(pa, n - 1, caps)?;
        let space = CochainSpace::new(pa, n, caps)?;
        let d = coboundary_hom(pa, &prev, &space)?;
        Ok(d.preimage(&space.coords(&quotient)).map(|c| prev.cochain(&c)))
    };
    let brute = || -> Result<Option<Cochain>> {
        let prev = CochainSpace::new(pa, n - 1, caps)?;
        let size = order_u64(&prev.order());
        if size > caps.enumeration {
            return Err(Error::cap(format!("|C^{}|", n - 1), size, caps.enumeration));
        }
        for g in prev.enumerate() {
            if coboundary(pa, &g)? == quotient {
                return Ok(Some(g));
            }
        }
        Ok(None)
    };
    let verify = |g: &Option<Cochain>| -> Result<()> {
        if let Some(g) = g {
            if f2.mul(pa, &coboundary(pa, g)?) != *f {
                return Err(Error::InvalidWitness("cohomology witness does not satisfy f = f' delta(g)".into()));
            }
        }
        Ok(())
    };
    let out = match method {
        Method::Snf => linear()?,
        Method::Enum => brute()?,
        Method::Both => {
            let (a, b) = (linear()?, brute()?);
            if a.is_some() != b.is_some() {
                return Err(Error::InvalidWitness("linear solve and enumeration disagree on cohomologous".into()));
            }
            verify(&b)?;
            a
        }
    };
    verify(&out)?;
    Ok(out)
}
