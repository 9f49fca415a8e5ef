//! Finite groups as validated multiplication tables. The identity always
//! has index 0.

use crate::{Caps, Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    inverse: Vec<usize>,
}

impl FiniteGroup {
    pub fn from_table(table: Vec<Vec<usize>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty group table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidInput(format!("row {i} has length {} (expected {n})", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return Err(Error::InvalidInput(format!("entry {bad} in row {i} is out of range")));
            }
        }
        for a in 0..n {
            if table[0][a] != a || table[a][0] != a {
                return Err(Error::NoIdentity(a));
            }
        }
        let mut inverse = vec![0; n];
        for a in 0..n {
            match (0..n).find(|&b| table[a][b] == 0 && table[b][a] == 0) {
                Some(b) => inverse[a] = b,
                None => return Err(Error::NoInverse(a)),
            }
        }
        for i in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for j in 0..n {
                if std::mem::replace(&mut seen_row[table[i][j]], true)
                    || std::mem::replace(&mut seen_col[table[j][i]], true)
                {
                    return Err(Error::NotAPermutationRow(i));
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = table[a][b];
                for c in 0..n {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        Ok(FiniteGroup { table, inverse })
    }

    pub fn trivial() -> Self {
        FiniteGroup { table: vec![vec![0]], inverse: vec![0] }
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::cyclic_capped(n, &Caps::default())
    }

    pub fn cyclic_capped(n: usize, caps: &Caps) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("cyclic group of order 0".into()));
        }
        check_cap(n, caps)?;
        Self::from_table((0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect())
    }

    /// Dihedral group of order 2n; element `r^i s^j` has index `2i + j`.
    pub fn dihedral(n: usize) -> Result<Self> {
        Self::dihedral_capped(n, &Caps::default())
    }

    pub fn dihedral_capped(n: usize, caps: &Caps) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("dihedral group with n = 0".into()));
        }
        check_cap(2 * n, caps)?;
        let idx = |i: usize, j: usize| 2 * i + j;
        let mut table = vec![vec![0; 2 * n]; 2 * n];
        for i1 in 0..n {
            for j1 in 0..2 {
                for i2 in 0..n {
                    for j2 in 0..2 {
                        // r^i1 s^j1 r^i2 s^j2 = r^(i1 ± i2) s^(j1+j2)
                        let i = if j1 == 0 { (i1 + i2) % n } else { (i1 + n - i2) % n };
                        table[idx(i1, j1)][idx(i2, j2)] = idx(i, (j1 + j2) % 2);
                    }
                }
            }
        }
        Self::from_table(table)
    }

    /// `(g, h)` has index `g * |H| + h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<Self> {
        Self::direct_product_capped(g, h, &Caps::default())
    }

    pub fn direct_product_capped(g: &FiniteGroup, h: &FiniteGroup, caps: &Caps) -> Result<Self> {
        let (n, m) = (g.order(), h.order());
        check_cap(n * m, caps)?;
        let mut table = vec![vec![0; n * m]; n * m];
        for a in 0..n {
            for b in 0..m {
                for c in 0..n {
                    for d in 0..m {
                        table[a * m + b][c * m + d] = g.mul(a, c) * m + h.mul(b, d);
                    }
                }
            }
        }
        Self::from_table(table)
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// Product `x_1 x_2 ... x_k` (identity for the empty word).
    pub fn product(&self, word: &[usize]) -> usize {
        word.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements().all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// All `n`-tuples of elements in lexicographic order (first entry most significant).
    pub fn tuples(&self, n: usize) -> TupleIter {
        TupleIter { base: self.order(), cur: Some(vec![0; n]) }
    }

    /// Position of a tuple in the order produced by [`FiniteGroup::tuples`].
    pub fn tuple_index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.order() + x)
    }
}

fn check_cap(n: usize, caps: &Caps) -> Result<()> {
    if n > caps.group_order {
        return Err(Error::cap("group order", n, caps.group_order));
    }
    Ok(())
}

pub struct TupleIter {
    base: usize,
    cur: Option<Vec<usize>>,
}

impl Iterator for TupleIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.cur.clone()?;
        let mut next = out.clone();
        let mut i = next.len();
        loop {
            if i == 0 {
                self.cur = None;
                break;
            }
            i -= 1;
            next[i] += 1;
            if next[i] < self.base {
                self.cur = Some(next);
                break;
            }
            next[i] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_force_axioms(g: &FiniteGroup) {
        let n = g.order();
        for a in 0..n {
            assert_eq!(g.mul(0, a), a);
            assert_eq!(g.mul(a, 0), a);
            assert_eq!(g.mul(a, g.inv(a)), 0);
            assert_eq!(g.mul(g.inv(a), a), 0);
            assert_eq!(g.inv(g.inv(a)), a);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn trivial_table() {
        let g = FiniteGroup::from_table(vec![vec![0]]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g, FiniteGroup::cyclic(1).unwrap());
    }

    #[test]
    fn c2_table() {
        let g = FiniteGroup::from_table(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
        assert_eq!(FiniteGroup::cyclic(2).unwrap().table(), &[vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn missing_inverse() {
        assert_eq!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 1]]), Err(Error::NoInverse(1)));
    }

    #[test]
    fn non_permutation_row() {
        // identity row/col fine, inverses exist, but row 1 repeats 0
        let t = vec![vec![0, 1, 2], vec![1, 0, 0], vec![2, 0, 1]];
        assert!(matches!(FiniteGroup::from_table(t), Err(Error::NotAPermutationRow(_))));
    }

    #[test]
    fn non_associative_latin_square() {
        // a loop of order 5 that is not a group
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(FiniteGroup::from_table(t), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn klein_four() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let v = FiniteGroup::direct_product(&c2, &c2).unwrap();
        assert_eq!(v.order(), 4);
        assert!((1..4).all(|a| v.inv(a) == a));
        brute_force_axioms(&v);
    }

    #[test]
    fn dihedral_is_nonabelian() {
        let d3 = FiniteGroup::dihedral(3).unwrap();
        assert_eq!(d3.order(), 6);
        assert!(!d3.is_abelian());
        brute_force_axioms(&d3);
        brute_force_axioms(&FiniteGroup::dihedral(4).unwrap());
    }

    #[test]
    fn order_cap() {
        assert!(matches!(FiniteGroup::cyclic(65), Err(Error::SizeCapExceeded { .. })));
        let c8 = FiniteGroup::cyclic(8).unwrap();
        assert!(FiniteGroup::direct_product(&c8, &c8).is_ok());
        let c9 = FiniteGroup::cyclic(9).unwrap();
        assert!(FiniteGroup::direct_product(&c8, &c9).is_err());
    }

    #[test]
    fn tuples_enumerate_in_order() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let ts: Vec<_> = g.tuples(2).collect();
        assert_eq!(ts.len(), 9);
        for (i, t) in ts.iter().enumerate() {
            assert_eq!(g.tuple_index(t), i);
        }
        assert_eq!(g.tuples(0).collect::<Vec<_>>(), vec![Vec::<usize>::new()]);
    }
}
