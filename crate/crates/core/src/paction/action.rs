use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::{Error, FiniteCommRing, FiniteGroup, Result};

const OUTSIDE: usize = usize::MAX;

/// A unital partial action of `G` on `K`: ideals `K 1_x` and ring
/// isomorphisms `alpha_x : K 1_{x^-1} -> K 1_x` stored as lookup tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalPartialAction {
    group: FiniteGroup,
    ring: FiniteCommRing,
    idem: Vec<usize>,
    /// alpha[x][a] for a in K 1_{x^-1}; OUTSIDE elsewhere
    alpha: Vec<Vec<usize>>,
}

/// One failed axiom instance. `witness` lists the group elements (and ring
/// element last, when relevant) that exhibit the failure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub witness: Vec<usize>,
    pub axiom: String,
    pub message: String,
}

/// Empty means valid. Entries are sorted by witness.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub violations: Vec<Violation>,
}

impl Report {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn from_unsorted(mut violations: Vec<Violation>) -> Self {
        violations.sort();
        violations.dedup();
        Report { violations }
    }

    pub fn first_error(&self) -> Option<String> {
        self.violations.first().map(|v| format!("{} at {:?}: {}", v.axiom, v.witness, v.message))
    }
}

fn violation(axiom: &str, witness: Vec<usize>, message: impl Into<String>) -> Violation {
    Violation { witness, axiom: axiom.into(), message: message.into() }
}

impl UnitalPartialAction {
    /// Shape-checks the data; use [`validate_paction`] for the axioms.
    ///
    /// `alpha[x]` maps elements of `K 1_{x^-1}` to their images.
    pub fn new(
        group: FiniteGroup,
        ring: FiniteCommRing,
        idem: Vec<usize>,
        alpha: Vec<BTreeMap<usize, usize>>,
    ) -> Result<Self> {
        let n = group.order();
        if idem.len() != n || alpha.len() != n {
            return Err(Error::InvalidInput(format!("expected {n} idempotents and {n} maps")));
        }
        for (x, &e) in idem.iter().enumerate() {
            if !ring.is_idempotent(e) {
                return Err(Error::NotIdempotent(format!("1_{x} = {}", ring.show(e.min(ring.size() - 1)))));
            }
        }
        let mut tables = vec![vec![OUTSIDE; ring.size()]; n];
        for x in 0..n {
            let dom = ring.ideal_elements(idem[group.inv(x)])?;
            for &a in &dom {
                match alpha[x].get(&a) {
                    Some(&b) if b < ring.size() => tables[x][a] = b,
                    Some(&b) => return Err(Error::InvalidInput(format!("alpha_{x}({a}) = {b} is out of range"))),
                    None => return Err(Error::InvalidInput(format!("alpha_{x} is missing a value at {a}"))),
                }
            }
            if alpha[x].len() != dom.len() {
                return Err(Error::InvalidInput(format!("alpha_{x} is defined outside K 1_{{x^-1}}")));
            }
        }
        Ok(UnitalPartialAction { group, ring, idem, alpha: tables })
    }

    /// A global action given by full automorphism tables `maps[x][a]`.
    pub fn global(group: FiniteGroup, ring: FiniteCommRing, maps: Vec<Vec<usize>>) -> Result<Self> {
        let one = ring.one();
        let alpha = maps.into_iter().map(|m| m.into_iter().enumerate().collect()).collect();
        Self::new(group.clone(), ring, vec![one; group.order()], alpha)
    }

    /// Every `x` acts as the identity on all of `K`.
    pub fn trivial_global(group: FiniteGroup, ring: FiniteCommRing) -> Self {
        let n = group.order();
        let id: Vec<usize> = ring.elements().collect();
        UnitalPartialAction { idem: vec![ring.one(); n], alpha: vec![id; n], group, ring }
    }

    /// Global action permuting the CRT components: `x` sends component `i` to
    /// component `perm[x][i]`. The permuted components must have equal moduli.
    pub fn from_component_permutations(
        group: FiniteGroup,
        ring: FiniteCommRing,
        perm: Vec<Vec<usize>>,
    ) -> Result<Self> {
        let k = ring.moduli().len();
        let mut maps = vec![];
        for (x, p) in perm.iter().enumerate() {
            let mut sorted = p.clone();
            sorted.sort_unstable();
            let is_perm = sorted == (0..k).collect::<Vec<_>>();
            if !is_perm || (0..k).any(|i| ring.moduli()[p[i]] != ring.moduli()[i]) {
                return Err(Error::InvalidInput(format!("permutation for {x} is not a valid component permutation")));
            }
            let map = ring
                .elements()
                .map(|a| {
                    let r = ring.residues(a);
                    let mut out = vec![0; k];
                    for i in 0..k {
                        out[p[i]] = r[i];
                    }
                    ring.elem(&out)
                })
                .collect();
            maps.push(map);
        }
        Self::global(group, ring, maps)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn ring(&self) -> &FiniteCommRing {
        &self.ring
    }

    /// `1_x`.
    pub fn idem(&self, x: usize) -> usize {
        self.idem[x]
    }

    pub fn idems(&self) -> &[usize] {
        &self.idem
    }

    /// `alpha_x(a)` for `a` in `K 1_{x^-1}`.
    pub fn alpha(&self, x: usize, a: usize) -> usize {
        let v = self.alpha[x][a];
        assert!(v != OUTSIDE, "alpha_{x} applied outside its domain");
        v
    }

    /// `alpha_x(a 1_{x^-1})`, defined for every `a`.
    pub fn act(&self, x: usize, a: usize) -> usize {
        self.alpha(x, self.ring.mul(a, self.idem[self.group.inv(x)]))
    }

    /// `alpha_x` as a map from its domain, for serialization.
    pub fn alpha_map(&self, x: usize) -> BTreeMap<usize, usize> {
        self.alpha[x].iter().enumerate().filter(|(_, &b)| b != OUTSIDE).map(|(a, &b)| (a, b)).collect()
    }

    /// Product `1_{x_1} 1_{x_1 x_2} ... 1_{x_1...x_n}` (the ring's 1 for the empty tuple).
    pub fn tuple_idem(&self, t: &[usize]) -> usize {
        let mut acc = self.ring.one();
        let mut prefix = 0;
        for &x in t {
            prefix = self.group.mul(prefix, x);
            acc = self.ring.mul(acc, self.idem[prefix]);
        }
        acc
    }

    /// Fails with the first violation when the axioms do not hold.
    pub fn validated(self) -> Result<Self> {
        match validate_paction(&self).first_error() {
            None => Ok(self),
            Some(e) => Err(Error::InvalidAction(e)),
        }
    }
}

/// Checks the partial-action axioms and reports every violation.
pub fn validate_paction(pa: &UnitalPartialAction) -> Report {
    let g = &pa.group;
    let k = &pa.ring;
    let n = g.order();
    let mut out = vec![];
    if pa.idem[0] != k.one() {
        out.push(violation("identity", vec![0], "1_1 is not the unity of K"));
    }
    if k.elements().any(|a| pa.alpha[0][a] != a) {
        out.push(violation("identity", vec![0], "alpha_1 is not the identity"));
    }
    // per-x checks: ring isomorphism K1_{x^-1} -> K1_x
    let per_x: Vec<Vec<Violation>> = (0..n)
        .into_par_iter()
        .map(|x| {
            let mut v = vec![];
            let xi = g.inv(x);
            let dom: Vec<usize> = k.elements().filter(|&a| k.mul(a, pa.idem[xi]) == a).collect();
            let f = |a: usize| pa.alpha[x][a];
            let mut hit = vec![false; k.size()];
            for &a in &dom {
                let b = f(a);
                if k.mul(b, pa.idem[x]) != b {
                    v.push(violation("codomain", vec![x, a], "image lies outside K 1_x"));
                }
                if std::mem::replace(&mut hit[b], true) {
                    v.push(violation("bijective", vec![x, a], "not injective"));
                }
            }
            let image_size = hit.iter().filter(|&&h| h).count();
            let target = k.elements().filter(|&a| k.mul(a, pa.idem[x]) == a).count();
            if image_size != target {
                v.push(violation("bijective", vec![x], "not surjective onto K 1_x"));
            }
            if f(pa.idem[xi]) != pa.idem[x] {
                v.push(violation("unital", vec![x], "alpha_x(1_{x^-1}) != 1_x"));
            }
            for &a in &dom {
                for &b in &dom {
                    if f(k.add(a, b)) != k.add(f(a), f(b)) {
                        v.push(violation("additive", vec![x, a, b], "alpha_x is not additive"));
                    }
                    if f(k.mul(a, b)) != k.mul(f(a), f(b)) {
                        v.push(violation("multiplicative", vec![x, a, b], "alpha_x is not multiplicative"));
                    }
                }
            }
            // alpha_{x^-1} inverts alpha_x
            for &a in &dom {
                let b = f(a);
                if k.mul(b, pa.idem[x]) == b && pa.alpha[xi][b] != a {
                    v.push(violation("inverse", vec![x, a], "alpha_{x^-1} alpha_x != id"));
                }
            }
            for y in 0..n {
                let xy = g.mul(x, y);
                let lhs = f(k.mul(pa.idem[y], pa.idem[xi]));
                if lhs != k.mul(pa.idem[x], pa.idem[xy]) {
                    v.push(violation("idempotents", vec![x, y], "alpha_x(1_y 1_{x^-1}) != 1_x 1_{xy}"));
                }
                let xyi = g.inv(xy);
                let yi = g.inv(y);
                for a in k.elements() {
                    let inner = pa.alpha[y][k.mul(a, pa.idem[yi])];
                    let lhs = f(k.mul(inner, pa.idem[xi]));
                    let rhs = k.mul(pa.alpha[xy][k.mul(a, pa.idem[xyi])], pa.idem[x]);
                    if lhs != rhs {
                        v.push(violation(
                            "composition",
                            vec![x, y, a],
                            "alpha_x alpha_y != alpha_{xy} on the common domain",
                        ));
                    }
                }
            }
            v
        })
        .collect();
    out.extend(per_x.into_iter().flatten());
    Report::from_unsorted(out)
}

/// `{s in K : alpha_x(s 1_{x^-1}) = s 1_x for all x}`.
pub fn invariants(pa: &UnitalPartialAction) -> Vec<usize> {
    let k = &pa.ring;
    k.elements().filter(|&s| pa.group.elements().all(|x| pa.act(x, s) == k.mul(s, pa.idem[x]))).collect()
}

/// The restriction of a global action to the ideal `L e`.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub action: UnitalPartialAction,
    /// maps an element of `L e` (ambient index) to its index in the restricted ring
    pub embed: BTreeMap<usize, usize>,
    /// group elements with `1_x = 0`
    pub degenerate: Vec<usize>,
}

impl Restriction {
    pub fn is_degenerate(&self) -> bool {
        !self.degenerate.is_empty()
    }
}

/// `K = L e`, `1_x = e beta_x(e)`, `alpha_x(a) = beta_x(a) e`.
pub fn restrict_global(beta: &UnitalPartialAction, e: usize) -> Result<Restriction> {
    let l = &beta.ring;
    if !l.is_idempotent(e) {
        return Err(Error::NotIdempotent(l.show(e.min(l.size() - 1))));
    }
    if beta.idem.iter().any(|&i| i != l.one()) {
        return Err(Error::InvalidAction("restriction needs a global action".into()));
    }
    let support: Vec<usize> = (0..l.moduli().len()).filter(|&i| l.residue(e, i) == 1).collect();
    if support.is_empty() {
        return Err(Error::InvalidInput("cannot restrict to the zero ideal".into()));
    }
    let moduli: Vec<u64> = support.iter().map(|&i| l.moduli()[i]).collect();
    let k = FiniteCommRing::new(&moduli)?;
    let to_k = |a: usize| -> usize {
        let r = l.residues(a);
        k.elem(&support.iter().map(|&i| r[i]).collect::<Vec<_>>())
    };
    let embed: BTreeMap<usize, usize> = l.elements().filter(|&a| l.mul(a, e) == a).map(|a| (a, to_k(a))).collect();
    let g = &beta.group;
    let idem_l: Vec<usize> = g.elements().map(|x| l.mul(e, beta.alpha[x][e])).collect();
    let idem: Vec<usize> = idem_l.iter().map(|&i| to_k(i)).collect();
    let mut alpha = vec![];
    for x in g.elements() {
        let dom = idem_l[g.inv(x)];
        let m: BTreeMap<usize, usize> = embed
            .keys()
            .filter(|&&a| l.mul(a, dom) == a)
            .map(|&a| (to_k(a), to_k(l.mul(beta.alpha[x][a], e))))
            .collect();
        alpha.push(m);
    }
    let degenerate = g.elements().filter(|&x| idem[x] == 0).collect();
    let action = UnitalPartialAction::new(g.clone(), k, idem, alpha)?;
    Ok(Restriction { action, embed, degenerate })
}
