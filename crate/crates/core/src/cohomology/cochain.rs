use serde::{Deserialize, Serialize};

use crate::paction::UnitalPartialAction;
use crate::{Error, Result};

/// An `n`-cochain: one ring element per `n`-tuple of group elements, in the
/// lexicographic tuple order of [`crate::FiniteGroup::tuples`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cochain {
    pub degree: usize,
    pub values: Vec<usize>,
}

impl Cochain {
    /// Checks `f(x_1..x_n)` is a unit of `K 1_{x_1} 1_{x_1 x_2} ... 1_{x_1...x_n}`.
    pub fn new(pa: &UnitalPartialAction, degree: usize, values: Vec<usize>) -> Result<Self> {
        let g = pa.group();
        let expected = g.order().pow(degree as u32);
        if values.len() != expected {
            return Err(Error::InvalidInput(format!(
                "a {degree}-cochain needs {expected} values, got {}",
                values.len()
            )));
        }
        let f = Cochain { degree, values };
        for (t, &v) in g.tuples(degree).zip(&f.values) {
            if v >= pa.ring().size() || !pa.ring().is_unit_in(v, pa.tuple_idem(&t)) {
                return Err(Error::InvalidCochain {
                    tuple: t,
                    reason: "value is not a unit of the tuple's ideal".into(),
                });
            }
        }
        Ok(f)
    }

    /// The identity cochain `I(x_1..x_n) = 1_{x_1} ... 1_{x_1...x_n}`.
    pub fn unit(pa: &UnitalPartialAction, degree: usize) -> Self {
        Cochain { degree, values: pa.group().tuples(degree).map(|t| pa.tuple_idem(&t)).collect() }
    }

    pub fn at(&self, pa: &UnitalPartialAction, t: &[usize]) -> usize {
        debug_assert_eq!(t.len(), self.degree);
        self.values[pa.group().tuple_index(t)]
    }

    pub fn is_unit(&self, pa: &UnitalPartialAction) -> bool {
        *self == Cochain::unit(pa, self.degree)
    }

    /// Pointwise product.
    pub fn mul(&self, pa: &UnitalPartialAction, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let k = pa.ring();
        Cochain {
            degree: self.degree,
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| k.mul(a, b)).collect(),
        }
    }

    /// Pointwise inverse, each value inverted inside its own ideal.
    pub fn inv(&self, pa: &UnitalPartialAction) -> Cochain {
        let k = pa.ring();
        let values = pa
            .group()
            .tuples(self.degree)
            .zip(&self.values)
            .map(|(t, &v)| k.inverse_in(v, pa.tuple_idem(&t)).expect("cochain value is a unit"))
            .collect();
        Cochain { degree: self.degree, values }
    }

    /// `f(x_1..x_n)` equals the tuple idempotent whenever some `x_i = 1`.
    pub fn is_normalized(&self, pa: &UnitalPartialAction) -> bool {
        pa.group().tuples(self.degree).zip(&self.values).all(|(t, &v)| !t.contains(&0) || v == pa.tuple_idem(&t))
    }
}

/// The partial coboundary
/// `(delta f)(x_1..x_{n+1})` is
/// `alpha_{x_1}(f(x_2..x_{n+1}) 1_{x_1^-1}) prod_i f(.., x_i x_{i+1}, ..)^{(-1)^i} f(x_1..x_n)^{(-1)^{n+1}}`,
/// with every inverse taken in the unit group of the output tuple's ideal.
pub fn coboundary(pa: &UnitalPartialAction, f: &Cochain) -> Result<Cochain> {
    let g = pa.group();
    let k = pa.ring();
    let n = f.degree;
    if f.values.len() != g.order().pow(n as u32) {
        return Err(Error::InvalidInput("cochain has the wrong number of values".into()));
    }
    let mut values = Vec::with_capacity(g.order().pow(n as u32 + 1));
    let mut face = vec![0; n];
    for t in g.tuples(n + 1) {
        let e = pa.tuple_idem(&t);
        let factor = |v: usize, invert: bool, face: &[usize]| -> Result<usize> {
            let ve = k.mul(v, e);
            if !invert {
                return Ok(ve);
            }
            k.inverse_in(ve, e).ok_or_else(|| Error::InvalidCochain {
                tuple: face.to_vec(),
                reason: "value is not a unit of the tuple's ideal".into(),
            })
        };
        // alpha_{x_1}(f(x_2..x_{n+1}) 1_{x_1^-1})
        face.copy_from_slice(&t[1..]);
        let mut acc = factor(pa.act(t[0], f.values[g.tuple_index(&face)]), false, &face)?;
        for i in 1..=n {
            // merge positions i-1 and i (1-based x_i x_{i+1})
            let mut j = 0;
            for p in 0..=n {
                if p == i {
                    continue;
                }
                face[j] = if p == i - 1 { g.mul(t[i - 1], t[i]) } else { t[p] };
                j += 1;
            }
            let v = f.values[g.tuple_index(&face)];
            acc = k.mul(acc, factor(v, i % 2 == 1, &face)?);
        }
        face.copy_from_slice(&t[..n]);
        let v = f.values[g.tuple_index(&face)];
        acc = k.mul(acc, factor(v, (n + 1) % 2 == 1, &face)?);
        if !k.is_unit_in(acc, e) {
            return Err(Error::InvalidCochain { tuple: t, reason: "coboundary value is not a unit".into() });
        }
        values.push(acc);
    }
    Ok(Cochain { degree: n + 1, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paction::instances::{desk, global_swap};
    use crate::{FiniteCommRing, FiniteGroup};

    #[test]
    fn unit_maps_to_unit() {
        for pa in [desk(), global_swap()] {
            for n in 0..3 {
                let d = coboundary(&pa, &Cochain::unit(&pa, n)).unwrap();
                assert!(d.is_unit(&pa), "n = {n}");
            }
        }
    }

    #[test]
    fn desk_degree_one_value() {
        let pa = desk();
        let k = pa.ring();
        let f = Cochain::new(&pa, 1, vec![k.one(), k.elem(&[2, 0])]).unwrap();
        let d = coboundary(&pa, &f).unwrap();
        assert_eq!(k.residues(d.at(&pa, &[1, 1])), vec![1, 0]);
    }

    #[test]
    fn degree_zero_on_trivial_global_action() {
        let k = FiniteCommRing::new(&[5]).unwrap();
        let pa = UnitalPartialAction::trivial_global(FiniteGroup::cyclic(3).unwrap(), k.clone());
        for u in k.units(k.one()).unwrap() {
            let d = coboundary(&pa, &Cochain::new(&pa, 0, vec![u]).unwrap()).unwrap();
            assert!(d.is_unit(&pa));
        }
    }

    #[test]
    fn membership_is_enforced() {
        let pa = desk();
        let k = pa.ring();
        let err = Cochain::new(&pa, 1, vec![k.one(), k.one()]).unwrap_err();
        assert_eq!(
            err,
            Error::InvalidCochain { tuple: vec![1], reason: "value is not a unit of the tuple's ideal".into() }
        );
    }
}
