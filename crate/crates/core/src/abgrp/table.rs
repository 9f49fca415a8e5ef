use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;

use super::group::{present, FinAbGroup};
use crate::{Error, Int, Result};

/// A finite abelian group given by an explicit operation on `0..n`, together
/// with an isomorphism to its invariant-factor form.
///
/// Used both for additive groups of rings and modules and for unit groups.
#[derive(Clone, Debug)]
pub struct TableGroup {
    /// ambient labels of the elements, in the order they were supplied
    pub labels: Vec<usize>,
    pub group: FinAbGroup,
    coords: Vec<Vec<u64>>,
    index: HashMap<Vec<u64>, usize>,
    label_pos: HashMap<usize, usize>,
}

impl TableGroup {
    /// `labels` lists the elements (as ambient indices); `op` combines two labels,
    /// `identity` is the neutral label. The operation must be abelian and closed on `labels`.
    pub fn build(labels: Vec<usize>, identity: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let n = labels.len();
        let label_pos: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        if label_pos.len() != n {
            return Err(Error::InvalidInput("duplicate labels in group table".into()));
        }
        let id = *label_pos
            .get(&identity)
            .ok_or_else(|| Error::InvalidInput("identity not among the group elements".into()))?;
        let opi = |a: usize, b: usize| -> Result<usize> {
            let c = op(labels[a], labels[b]);
            label_pos.get(&c).copied().ok_or_else(|| {
                Error::InvalidInput(format!("operation not closed: {} * {} = {c}", labels[a], labels[b]))
            })
        };

        // element orders: smallest k with a^k = id
        let mut orders = vec![0u64; n];
        for (a, ord) in orders.iter_mut().enumerate() {
            let mut cur = a;
            let mut k = 1u64;
            while cur != id {
                cur = opi(cur, a)?;
                k += 1;
                if k > n as u64 + 1 {
                    return Err(Error::InvalidInput("element without finite order (not a group)".into()));
                }
            }
            *ord = k;
        }

        // greedy generators, largest order first, each outside the current span
        let mut by_order: Vec<usize> = (0..n).collect();
        by_order.sort_by_key(|&a| (std::cmp::Reverse(orders[a]), a));
        let mut in_span = vec![false; n];
        in_span[id] = true;
        let mut span = vec![id];
        let mut gens: Vec<usize> = vec![];
        for &a in &by_order {
            if in_span[a] {
                continue;
            }
            gens.push(a);
            // span <- span + <a>
            let mut new_span = span.clone();
            let mut frontier = span.clone();
            while let Some(s) = frontier.pop() {
                let t = opi(s, a)?;
                if !in_span[t] {
                    in_span[t] = true;
                    new_span.push(t);
                    frontier.push(t);
                }
            }
            span = new_span;
        }
        if span.len() != n {
            return Err(Error::InvalidInput("generators do not span the table".into()));
        }

        // BFS with coordinate vectors; collisions give relations (Schreier)
        let k = gens.len();
        let mut vec_of: Vec<Option<Vec<i64>>> = vec![None; n];
        vec_of[id] = Some(vec![0; k]);
        let mut queue = VecDeque::from([id]);
        let mut relations: Vec<Vec<Int>> = vec![];
        while let Some(s) = queue.pop_front() {
            let sv = vec_of[s].clone().unwrap();
            for (gi, &g) in gens.iter().enumerate() {
                let t = opi(s, g)?;
                let mut tv = sv.clone();
                tv[gi] += 1;
                match &vec_of[t] {
                    None => {
                        vec_of[t] = Some(tv);
                        queue.push_back(t);
                    }
                    Some(existing) => {
                        let rel: Vec<Int> = tv.iter().zip(existing).map(|(a, b)| BigInt::from(a - b)).collect();
                        if rel.iter().any(|x| x != &BigInt::from(0)) {
                            relations.push(rel);
                        }
                    }
                }
            }
        }
        let presented = present(k, &relations)?;
        let mut coords = Vec::with_capacity(n);
        let mut index = HashMap::with_capacity(n);
        for (i, v) in vec_of.into_iter().enumerate() {
            let v: Vec<Int> = v.unwrap().into_iter().map(BigInt::from).collect();
            let c = presented.project(&v);
            if index.insert(c.clone(), i).is_some() {
                return Err(Error::InvalidInput("operation table is not abelian".into()));
            }
            coords.push(c);
        }
        Ok(TableGroup { labels, group: presented.group, coords, index, label_pos })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn contains(&self, label: usize) -> bool {
        self.label_pos.contains_key(&label)
    }

    pub fn coords(&self, label: usize) -> &[u64] {
        &self.coords[self.label_pos[&label]]
    }

    pub fn try_coords(&self, label: usize) -> Option<&[u64]> {
        self.label_pos.get(&label).map(|&p| self.coords[p].as_slice())
    }

    pub fn label(&self, coords: &[u64]) -> usize {
        self.labels[self.index[coords]]
    }
}
