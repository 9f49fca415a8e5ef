use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;

use super::Cochain;
use crate::abgrp::{present, FinAbGroup, Presented, TableGroup};
use crate::paction::UnitalPartialAction;
use crate::{Caps, Error, Int, Result};

/// `C^n` as a finite abelian group: the product over all `n`-tuples of the
/// unit groups `U(K e_t)`, with coordinate maps in both directions.
///
/// "Concatenated" coordinates list each tuple's local invariant-factor
/// coordinates in tuple order; "canonical" coordinates are those of
/// [`CochainSpace::group`].
#[derive(Clone, Debug)]
pub struct CochainSpace {
    pub degree: usize,
    idems: Vec<usize>,
    local: Vec<Arc<TableGroup>>,
    offsets: Vec<usize>,
    concat_factors: Vec<u64>,
    presented: Presented,
}

impl CochainSpace {
    pub fn new(pa: &UnitalPartialAction, degree: usize, caps: &Caps) -> Result<Self> {
        let g = pa.group();
        let count = (g.order() as u128).pow(degree as u32);
        if count > caps.tuples as u128 {
            return Err(Error::cap(format!("number of {degree}-tuples"), count, caps.tuples));
        }
        let mut cache: HashMap<usize, Arc<TableGroup>> = HashMap::new();
        let mut idems = vec![];
        let mut local = vec![];
        let mut offsets = vec![];
        let mut concat_factors = vec![];
        for t in g.tuples(degree) {
            let e = pa.tuple_idem(&t);
            let tg = match cache.get(&e) {
                Some(tg) => tg.clone(),
                None => {
                    let tg = Arc::new(pa.ring().unit_group_structure(e, caps)?);
                    cache.insert(e, tg.clone());
                    tg
                }
            };
            offsets.push(concat_factors.len());
            concat_factors.extend_from_slice(tg.group.factors());
            idems.push(e);
            local.push(tg);
        }
        let relations: Vec<Vec<Int>> = (0..concat_factors.len())
            .map(|i| {
                let mut v = vec![Int::from(0); concat_factors.len()];
                v[i] = Int::from(concat_factors[i]);
                v
            })
            .collect();
        let presented = present(concat_factors.len(), &relations)?;
        Ok(CochainSpace { degree, idems, local, offsets, concat_factors, presented })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.presented.group
    }

    pub fn order(&self) -> BigUint {
        self.group().order()
    }

    pub fn concat_len(&self) -> usize {
        self.concat_factors.len()
    }

    pub fn num_tuples(&self) -> usize {
        self.idems.len()
    }

    pub fn tuple_idem(&self, i: usize) -> usize {
        self.idems[i]
    }

    pub fn local_units(&self, i: usize) -> &[usize] {
        &self.local[i].labels
    }

    pub fn concat_coords(&self, f: &Cochain) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.concat_len());
        for (i, &v) in f.values.iter().enumerate() {
            out.extend_from_slice(self.local[i].coords(v));
        }
        out
    }

    pub fn from_concat(&self, v: &[Int]) -> Cochain {
        let values = (0..self.num_tuples())
            .map(|i| {
                let tg = &self.local[i];
                let lo = self.offsets[i];
                let c = tg.group.reduce(&v[lo..lo + tg.group.rank()]);
                tg.label(&c)
            })
            .collect();
        Cochain { degree: self.degree, values }
    }

    /// Canonical coordinates of a cochain.
    pub fn coords(&self, f: &Cochain) -> Vec<u64> {
        self.presented.project(&FinAbGroup::to_int(&self.concat_coords(f)))
    }

    pub fn cochain(&self, c: &[u64]) -> Cochain {
        self.from_concat(&self.presented.lift(c))
    }

    /// Every cochain, in lexicographic order of local unit lists.
    pub fn enumerate(&self) -> impl Iterator<Item = Cochain> + '_ {
        let sizes: Vec<usize> = self.local.iter().map(|t| t.len()).collect();
        let total: usize = sizes.iter().product();
        (0..total).map(move |mut k| {
            let mut values = vec![0; sizes.len()];
            for i in (0..sizes.len()).rev() {
                values[i] = self.local[i].labels[k % sizes[i]];
                k /= sizes[i];
            }
            Cochain { degree: self.degree, values }
        })
    }
}
