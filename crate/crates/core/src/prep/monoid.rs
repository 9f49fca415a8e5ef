use std::collections::{BTreeMap, HashMap};

use crate::paction::{Report, Violation};
use crate::{Error, FiniteGroup, Result};

/// A finite monoid given by its multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMonoid {
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteMonoid {
    pub fn new(table: Vec<Vec<usize>>, identity: usize) -> Result<Self> {
        let n = table.len();
        if n == 0 || identity >= n || table.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
            return Err(Error::InvalidInput("monoid table must be square with entries in range".into()));
        }
        for a in 0..n {
            if table[identity][a] != a || table[a][identity] != a {
                return Err(Error::NoIdentity(a));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteMonoid { table, identity })
    }

    /// The group itself, viewed as a monoid.
    pub fn from_group(g: &FiniteGroup) -> Self {
        FiniteMonoid { table: g.table().to_vec(), identity: 0 }
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn mul3(&self, a: usize, b: usize, c: usize) -> usize {
        self.table[self.table[a][b]][c]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn is_idempotent(&self, e: usize) -> bool {
        self.table[e][e] == e
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.size();
        (0..n).all(|a| (0..n).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Inverse of `u` in the group of units of the local monoid `e M e`
    /// (identity `e`), if any.
    pub fn local_inverse(&self, u: usize, e: usize) -> Option<usize> {
        if self.mul3(e, u, e) != u {
            return None;
        }
        (0..self.size()).find(|&v| self.mul3(e, v, e) == v && self.mul(u, v) == e && self.mul(v, u) == e)
    }

    pub fn local_units(&self, e: usize) -> Vec<usize> {
        (0..self.size()).filter(|&u| self.local_inverse(u, e).is_some()).collect()
    }
}

/// A partial action of `G` on a finite semigroup (here a monoid): subsemigroups
/// `S_x` and isomorphisms `alpha_x : S_{x^-1} -> S_x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupPartialAction {
    pub group: FiniteGroup,
    pub monoid: FiniteMonoid,
    pub domains: Vec<Vec<usize>>,
    pub maps: Vec<BTreeMap<usize, usize>>,
}

impl SemigroupPartialAction {
    pub fn in_domain(&self, x: usize, s: usize) -> bool {
        self.domains[x].binary_search(&s).is_ok()
    }
}

fn violation(axiom: &str, witness: Vec<usize>, message: &str) -> Violation {
    Violation { witness, axiom: axiom.into(), message: message.into() }
}

/// Checks: `S_1 = S`, `alpha_1 = id`; each `S_x` is a subsemigroup and `alpha_x`
/// a semigroup isomorphism `S_{x^-1} -> S_x`;
/// `alpha_y^-1(S_y ∩ S_{x^-1}) ⊆ S_{(xy)^-1}`; `alpha_x alpha_y = alpha_{xy}` there.
pub fn validate_semigroup_action(pa: &SemigroupPartialAction) -> Report {
    let g = &pa.group;
    let m = &pa.monoid;
    let n = g.order();
    let mut out = vec![];
    if pa.domains.len() != n || pa.maps.len() != n {
        out.push(violation("shape", vec![], "one domain and one map per group element required"));
        return Report { violations: out };
    }
    if pa.domains[0].len() != m.size() {
        out.push(violation("identity", vec![0], "S_1 != S"));
    }
    if pa.maps[0].iter().any(|(a, b)| a != b) || pa.maps[0].len() != m.size() {
        out.push(violation("identity", vec![0], "alpha_1 is not the identity"));
    }
    for x in 0..n {
        let dom = &pa.domains[x];
        if dom.windows(2).any(|w| w[0] >= w[1]) {
            out.push(violation("shape", vec![x], "domain is not a sorted set"));
            continue;
        }
        for &a in dom {
            for &b in dom {
                if !pa.in_domain(x, m.mul(a, b)) {
                    out.push(violation("subsemigroup", vec![x, a, b], "S_x is not closed"));
                }
            }
        }
        let xi = g.inv(x);
        let f = &pa.maps[x];
        let keys: Vec<usize> = f.keys().copied().collect();
        if keys != pa.domains[xi] {
            out.push(violation("domain", vec![x], "alpha_x is not defined exactly on S_{x^-1}"));
            continue;
        }
        let mut image: Vec<usize> = f.values().copied().collect();
        image.sort_unstable();
        image.dedup();
        if image.len() != keys.len() {
            out.push(violation("bijective", vec![x], "not injective"));
        }
        if image != *dom {
            out.push(violation("bijective", vec![x], "image is not S_x"));
        }
        for &a in &keys {
            for &b in &keys {
                if f.get(&m.mul(a, b)) != Some(&m.mul(f[&a], f[&b])) {
                    out.push(violation("multiplicative", vec![x, a, b], "alpha_x is not multiplicative"));
                }
            }
        }
    }
    if !out.is_empty() {
        return Report::from_unsorted(out);
    }
    for x in 0..n {
        let xi = g.inv(x);
        for y in 0..n {
            let xy = g.mul(x, y);
            let xyi = g.inv(xy);
            for (&s, &t) in &pa.maps[y] {
                // s in alpha_y^-1(S_y ∩ S_{x^-1}) iff t = alpha_y(s) lies in S_{x^-1}
                if !pa.in_domain(xi, t) {
                    continue;
                }
                if !pa.in_domain(xyi, s) {
                    out.push(violation(
                        "domains",
                        vec![x, y, s],
                        "alpha_y^-1(S_y ∩ S_{x^-1}) is not inside S_{(xy)^-1}",
                    ));
                    continue;
                }
                if pa.maps[x][&t] != pa.maps[xy][&s] {
                    out.push(violation("composition", vec![x, y, s], "alpha_x alpha_y != alpha_{xy}"));
                }
            }
        }
    }
    Report::from_unsorted(out)
}

/// Builds the monoid generated by partial bijections of `0..points` under
/// composition (`(p q)(i) = p(q(i))`), with the identity as element 0.
pub fn partial_bijection_monoid(
    gens: &[Vec<Option<usize>>],
    points: usize,
    cap: usize,
) -> Result<(FiniteMonoid, Vec<usize>)> {
    let id: Vec<Option<usize>> = (0..points).map(Some).collect();
    let compose = |p: &[Option<usize>], q: &[Option<usize>]| -> Vec<Option<usize>> {
        q.iter().map(|&i| i.and_then(|i| p[i])).collect()
    };
    let mut elems = vec![id];
    let mut index: HashMap<Vec<Option<usize>>, usize> = HashMap::new();
    index.insert(elems[0].clone(), 0);
    let mut i = 0;
    while i < elems.len() {
        for gen in gens {
            for c in [compose(&elems[i], gen), compose(gen, &elems[i])] {
                if !index.contains_key(&c) {
                    if elems.len() >= cap {
                        return Err(Error::cap("monoid size", elems.len() + 1, cap));
                    }
                    index.insert(c.clone(), elems.len());
                    elems.push(c);
                }
            }
        }
        i += 1;
    }
    let table = elems.iter().map(|p| elems.iter().map(|q| index[&compose(p, q)]).collect()).collect();
    let gen_idx = gens.iter().map(|g| index[g]).collect();
    Ok((FiniteMonoid { table, identity: 0 }, gen_idx))
}
