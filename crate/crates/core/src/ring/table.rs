use serde::{Deserialize, Serialize};

use super::FiniteCommRing;
use crate::{Error, Result};

/// A finite ring with identity given by explicit addition and multiplication
/// tables, not necessarily commutative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteRing {
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    zero: usize,
    one: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    subring: Option<Vec<usize>>,
    #[serde(skip)]
    neg: Vec<usize>,
}

impl FiniteRing {
    /// Validates all ring axioms by exhaustion.
    pub fn new(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, zero: usize, one: usize) -> Result<Self> {
        let n = add.len();
        let square = |t: &Vec<Vec<usize>>| t.len() == n && t.iter().all(|r| r.len() == n && r.iter().all(|&v| v < n));
        if n == 0 || !square(&add) || !square(&mul) || zero >= n || one >= n {
            return Err(Error::InvalidInput("ring tables must be square with entries in range".into()));
        }
        let mut neg = vec![usize::MAX; n];
        for a in 0..n {
            if add[zero][a] != a {
                return Err(Error::InvalidInput(format!("{zero} is not an additive identity (fails at {a})")));
            }
            match (0..n).find(|&b| add[a][b] == zero) {
                Some(b) => neg[a] = b,
                None => return Err(Error::InvalidInput(format!("{a} has no additive inverse"))),
            }
            if mul[one][a] != a || mul[a][one] != a {
                return Err(Error::InvalidInput(format!("{one} is not a multiplicative identity (fails at {a})")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                if add[a][b] != add[b][a] {
                    return Err(Error::InvalidInput(format!("addition is not commutative at ({a},{b})")));
                }
                for c in 0..n {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return Err(Error::InvalidInput(format!("addition is not associative at ({a},{b},{c})")));
                    }
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::InvalidInput(format!("multiplication is not associative at ({a},{b},{c})")));
                    }
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] || mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]]
                    {
                        return Err(Error::InvalidInput(format!("distributivity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        Ok(FiniteRing { add, mul, zero, one, subring: None, neg })
    }

    /// The table form of a commutative ring in canonical form (indices are kept).
    pub fn from_comm(k: &FiniteCommRing) -> Self {
        let n = k.size();
        let add = (0..n).map(|a| (0..n).map(|b| k.add(a, b)).collect()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| k.mul(a, b)).collect()).collect();
        let neg = (0..n).map(|a| k.neg(a)).collect();
        FiniteRing { add, mul, zero: 0, one: k.one(), subring: None, neg }
    }

    /// Trusted constructor for tables produced by the library itself; the
    /// caller is responsible for having verified the axioms.
    pub(crate) fn from_parts_unchecked(add: Vec<Vec<usize>>, mul: Vec<Vec<usize>>, zero: usize, one: usize) -> Self {
        let n = add.len();
        let neg = (0..n).map(|a| (0..n).find(|&b| add[a][b] == zero).expect("additive inverse")).collect();
        FiniteRing { add, mul, zero, one, subring: None, neg }
    }

    /// Marks a subring; it must contain 0 and 1 and be closed under +, -, *.
    pub fn with_subring(mut self, elems: Vec<usize>) -> Result<Self> {
        let set: std::collections::HashSet<usize> = elems.iter().copied().collect();
        if !set.contains(&self.zero) || !set.contains(&self.one) {
            return Err(Error::InvalidInput("subring must contain 0 and 1".into()));
        }
        for &a in &elems {
            if a >= self.size() || !set.contains(&self.neg(a)) {
                return Err(Error::InvalidInput(format!("subring not closed under negation at {a}")));
            }
            for &b in &elems {
                if !set.contains(&self.add(a, b)) || !set.contains(&self.mul(a, b)) {
                    return Err(Error::InvalidInput(format!("subring not closed at ({a},{b})")));
                }
            }
        }
        self.subring = Some(elems);
        Ok(self)
    }

    pub fn subring(&self) -> Option<&[usize]> {
        self.subring.as_deref()
    }

    pub fn size(&self) -> usize {
        self.add.len()
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add[a][self.neg[b]]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn add_table(&self) -> &[Vec<usize>] {
        &self.add
    }

    pub fn mul_table(&self) -> &[Vec<usize>] {
        &self.mul
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.size()).all(|a| (0..self.size()).all(|b| self.mul[a][b] == self.mul[b][a]))
    }

    /// `{z : z s = s z for all s}`.
    pub fn center(&self) -> Vec<usize> {
        let n = self.size();
        (0..n).filter(|&z| (0..n).all(|s| self.mul[z][s] == self.mul[s][z])).collect()
    }

    /// Additive span of a set of elements (closure under + and -).
    pub fn additive_span(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.size()];
        seen[self.zero] = true;
        let mut out = vec![self.zero];
        let mut i = 0;
        while i < out.len() {
            let a = out[i];
            for &g in gens {
                for b in [self.add(a, g), self.sub(a, g)] {
                    if !seen[b] {
                        seen[b] = true;
                        out.push(b);
                    }
                }
            }
            i += 1;
        }
        out.sort_unstable();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comm_ring_tables_validate() {
        let k = FiniteCommRing::new(&[2, 3]).unwrap();
        let t = FiniteRing::from_comm(&k);
        let checked = FiniteRing::new(t.add.clone(), t.mul.clone(), 0, k.one()).unwrap();
        assert_eq!(checked.center().len(), 6);
        assert!(checked.is_commutative());
    }

    #[test]
    fn matrices_over_f2() {
        // 2x2 matrices over F2, encoded as 4-bit masks (a b; c d) -> a<<3|b<<2|c<<1|d
        let dec = |m: usize| [(m >> 3) & 1, (m >> 2) & 1, (m >> 1) & 1, m & 1];
        let enc = |v: [usize; 4]| v[0] << 3 | v[1] << 2 | v[2] << 1 | v[3];
        let add: Vec<Vec<usize>> = (0..16).map(|a| (0..16).map(|b| a ^ b).collect()).collect();
        let mul: Vec<Vec<usize>> = (0..16)
            .map(|a| {
                (0..16)
                    .map(|b| {
                        let (x, y) = (dec(a), dec(b));
                        enc([
                            (x[0] * y[0] + x[1] * y[2]) % 2,
                            (x[0] * y[1] + x[1] * y[3]) % 2,
                            (x[2] * y[0] + x[3] * y[2]) % 2,
                            (x[2] * y[1] + x[3] * y[3]) % 2,
                        ])
                    })
                    .collect()
            })
            .collect();
        let r = FiniteRing::new(add, mul, 0, 0b1001).unwrap();
        assert!(!r.is_commutative());
        assert_eq!(r.center(), vec![0, 0b1001]);
        let diag = r.clone().with_subring(vec![0, 0b1000, 0b0001, 0b1001]).unwrap();
        assert_eq!(diag.subring().unwrap().len(), 4);
        assert!(r.with_subring(vec![0, 0b0100, 0b1001]).is_err());
    }

    #[test]
    fn rejects_bad_identity() {
        let k = FiniteCommRing::new(&[3]).unwrap();
        let t = FiniteRing::from_comm(&k);
        assert!(FiniteRing::new(t.add.clone(), t.mul.clone(), 0, 2).is_err());
    }
}
