use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::snf::smith_normal_form;
use crate::{Error, Int, IntMatrix, Result};

/// A finite abelian group `Z/d_1 x ... x Z/d_r` in invariant-factor form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinAbGroup {
    factors: Vec<u64>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup { factors: vec![] }
    }

    /// Validates the divisibility chain; factors of 1 are not allowed.
    pub fn new(factors: Vec<u64>) -> Result<Self> {
        if factors.iter().any(|&d| d < 2) {
            return Err(Error::InvalidInput(format!("invariant factors must be >= 2, got {factors:?}")));
        }
        if factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return Err(Error::InvalidInput(format!("factors {factors:?} do not form a divisibility chain")));
        }
        Ok(FinAbGroup { factors })
    }

    /// Canonical form of an arbitrary product of cyclic groups.
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let diag: Vec<Vec<i64>> = orders
            .iter()
            .enumerate()
            .map(|(i, _)| (0..orders.len()).map(|j| if i == j { orders[i] as i64 } else { 0 }).collect())
            .collect();
        if orders.is_empty() {
            return Self::trivial();
        }
        let snf = smith_normal_form(&IntMatrix::from_i64_rows(&diag));
        let factors = snf
            .invariant_factors()
            .into_iter()
            .map(|d| d.to_u64().expect("factor fits u64"))
            .filter(|&d| d > 1)
            .collect();
        FinAbGroup { factors }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    pub fn order(&self) -> BigUint {
        self.factors.iter().fold(BigUint::one(), |acc, &d| acc * d)
    }

    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.rank()]
    }

    pub fn reduce(&self, v: &[Int]) -> Vec<u64> {
        assert_eq!(v.len(), self.rank(), "coordinate length mismatch");
        v.iter().zip(&self.factors).map(|(x, &d)| x.mod_floor(&BigInt::from(d)).to_u64().unwrap()).collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).zip(&self.factors).map(|((x, y), d)| (x + y) % d).collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter().zip(&self.factors).map(|(x, d)| (d - x) % d).collect()
    }

    /// Enumerates all elements in lexicographic coordinate order.
    pub fn elements(&self) -> impl Iterator<Item = Vec<u64>> + '_ {
        let total = self.order_u64().expect("group too large to enumerate");
        (0..total).map(move |mut k| {
            let mut v = vec![0; self.rank()];
            for i in (0..self.rank()).rev() {
                v[i] = k % self.factors[i];
                k /= self.factors[i];
            }
            v
        })
    }

    /// Number of elements of each order, keyed by order; determines the group up to isomorphism.
    pub fn order_profile(&self) -> std::collections::BTreeMap<u64, u64> {
        let mut out = std::collections::BTreeMap::new();
        for e in self.elements() {
            let ord = e.iter().zip(&self.factors).map(|(&x, &d)| d / x.gcd(&d)).fold(1u64, |acc, o| acc.lcm(&o));
            *out.entry(ord).or_insert(0) += 1;
        }
        out
    }

    pub fn to_int(v: &[u64]) -> Vec<Int> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(|d| format!("C{d}")).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

/// Result of presenting `Z^gens / <relations>`.
#[derive(Clone, Debug)]
pub struct Presented {
    pub group: FinAbGroup,
    /// rank(group) x gens: generator coordinates -> group coordinates
    pub to_group: IntMatrix,
    /// gens x rank(group): group coordinates -> a lift in generator coordinates
    pub from_group: IntMatrix,
}

impl Presented {
    pub fn project(&self, v: &[Int]) -> Vec<u64> {
        self.group.reduce(&self.to_group.mul_vec(v))
    }

    pub fn lift(&self, g: &[u64]) -> Vec<Int> {
        self.from_group.mul_vec(&FinAbGroup::to_int(g))
    }
}

/// Presents the abelian group with `gens` generators and the given relation vectors.
///
/// Fails with `InfiniteGroup` when the relations do not have full rank.
pub fn present(gens: usize, relations: &[Vec<Int>]) -> Result<Presented> {
    if gens == 0 {
        return Ok(Presented {
            group: FinAbGroup::trivial(),
            to_group: IntMatrix::zeros(0, 0),
            from_group: IntMatrix::zeros(0, 0),
        });
    }
    let rel = IntMatrix::from_columns(relations, gens);
    let snf = smith_normal_form(&rel);
    if snf.rank < gens {
        return Err(Error::InfiniteGroup);
    }
    let mut keep = vec![];
    let mut factors = vec![];
    for i in 0..gens {
        let d = snf.d[(i, i)].to_u64().expect("invariant factor fits u64");
        if d > 1 {
            keep.push(i);
            factors.push(d);
        }
    }
    let mut to_group = IntMatrix::zeros(keep.len(), gens);
    let mut from_group = IntMatrix::zeros(gens, keep.len());
    for (r, &i) in keep.iter().enumerate() {
        for j in 0..gens {
            to_group[(r, j)] = snf.u[(i, j)].clone();
            from_group[(j, r)] = snf.u_inv[(j, i)].clone();
        }
    }
    Ok(Presented { group: FinAbGroup { factors }, to_group, from_group })
}

fn diag_relations(g: &FinAbGroup) -> Vec<Vec<Int>> {
    (0..g.rank())
        .map(|i| {
            let mut v = vec![Int::zero(); g.rank()];
            v[i] = BigInt::from(g.factors[i]);
            v
        })
        .collect()
}

/// Integer kernel of `[cols...]`, projected onto the first `keep` coordinates.
fn projected_kernel(columns: &[Vec<Int>], rows: usize, keep: usize) -> Vec<Vec<Int>> {
    if columns.is_empty() {
        return vec![];
    }
    let m = IntMatrix::from_columns(columns, rows);
    let snf = smith_normal_form(&m);
    snf.kernel_basis().into_iter().map(|k| k[..keep].to_vec()).filter(|k| k.iter().any(|x| !x.is_zero())).collect()
}

/// A subgroup of an ambient group given by generators, with its own structure.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub ambient: FinAbGroup,
    pub gens: Vec<Vec<u64>>,
    pub presented: Presented,
}

impl Subgroup {
    pub fn generated_by(ambient: &FinAbGroup, gens: Vec<Vec<u64>>) -> Result<Self> {
        for g in &gens {
            if g.len() != ambient.rank() || g.iter().zip(ambient.factors()).any(|(x, d)| x >= d) {
                return Err(Error::NotASubgroup(format!("generator {g:?} is not an element of {ambient}")));
            }
        }
        let n = ambient.rank();
        let k = gens.len();
        let mut cols: Vec<Vec<Int>> = gens.iter().map(|g| FinAbGroup::to_int(g)).collect();
        cols.extend(diag_relations(ambient));
        let mut relations = projected_kernel(&cols, n, k);
        // the kernel of [G | diag(d)] is full rank in the first k coordinates already,
        // but an empty ambient (n = 0) leaves it empty
        if n == 0 {
            relations = (0..k)
                .map(|i| {
                    let mut v = vec![Int::zero(); k];
                    v[i] = Int::one();
                    v
                })
                .collect();
        }
        let presented = present(k, &relations)?;
        Ok(Subgroup { ambient: ambient.clone(), gens, presented })
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.presented.group
    }

    pub fn order(&self) -> BigUint {
        self.presented.group.order()
    }

    /// Maps subgroup coordinates to the ambient element.
    pub fn include(&self, h: &[u64]) -> Vec<u64> {
        let c = self.presented.lift(h);
        let mut acc = vec![Int::zero(); self.ambient.rank()];
        for (ci, g) in c.iter().zip(&self.gens) {
            for (a, &gi) in acc.iter_mut().zip(g) {
                *a += ci * BigInt::from(gi);
            }
        }
        self.ambient.reduce(&acc)
    }

    /// Subgroup coordinates of an ambient element, or `None` if outside.
    pub fn coords_of(&self, a: &[u64]) -> Option<Vec<u64>> {
        let n = self.ambient.rank();
        let k = self.gens.len();
        if n == 0 {
            return Some(vec![]);
        }
        let mut cols: Vec<Vec<Int>> = self.gens.iter().map(|g| FinAbGroup::to_int(g)).collect();
        cols.extend(diag_relations(&self.ambient));
        let m = IntMatrix::from_columns(&cols, n);
        let snf = smith_normal_form(&m);
        let z = snf.solve(&FinAbGroup::to_int(a))?;
        Some(self.presented.project(&z[..k]))
    }

    pub fn contains(&self, a: &[u64]) -> bool {
        self.coords_of(a).is_some()
    }
}

/// `num / den` where both are subgroups of the same ambient group given by generators
/// and `den ⊆ num`.
#[derive(Clone, Debug)]
pub struct Subquotient {
    pub ambient: FinAbGroup,
    pub num_gens: Vec<Vec<u64>>,
    pub den_gens: Vec<Vec<u64>>,
    pub presented: Presented,
    solver: Option<super::snf::Snf<Int>>,
}

impl Subquotient {
    pub fn new(ambient: &FinAbGroup, num_gens: Vec<Vec<u64>>, den_gens: Vec<Vec<u64>>) -> Result<Self> {
        let n = ambient.rank();
        let k = num_gens.len();
        let mut cols: Vec<Vec<Int>> = num_gens.iter().map(|g| FinAbGroup::to_int(g)).collect();
        cols.extend(den_gens.iter().map(|g| FinAbGroup::to_int(g)));
        cols.extend(diag_relations(ambient));
        let relations = if n == 0 {
            (0..k)
                .map(|i| {
                    let mut v = vec![Int::zero(); k];
                    v[i] = Int::one();
                    v
                })
                .collect()
        } else {
            projected_kernel(&cols, n, k)
        };
        let presented = present(k, &relations)?;
        let solver = if n == 0 { None } else { Some(smith_normal_form(&IntMatrix::from_columns(&cols, n))) };
        let sq = Subquotient { ambient: ambient.clone(), num_gens, den_gens, presented, solver };
        let num = Subgroup::generated_by(ambient, sq.num_gens.clone())?;
        for d in &sq.den_gens {
            if !num.contains(d) {
                return Err(Error::NotASubgroup(format!("{d:?} is not in the numerator subgroup")));
            }
        }
        Ok(sq)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.presented.group
    }

    /// Class of an element of the numerator subgroup.
    pub fn class_of(&self, a: &[u64]) -> Option<Vec<u64>> {
        let Some(solver) = &self.solver else {
            return Some(vec![]);
        };
        let z = solver.solve(&FinAbGroup::to_int(a))?;
        Some(self.presented.project(&z[..self.num_gens.len()]))
    }

    /// An ambient element representing the class `h`.
    pub fn lift(&self, h: &[u64]) -> Vec<u64> {
        let c = self.presented.lift(h);
        let mut acc = vec![Int::zero(); self.ambient.rank()];
        for (ci, g) in c.iter().zip(&self.num_gens) {
            for (a, &gi) in acc.iter_mut().zip(g) {
                *a += ci * BigInt::from(gi);
            }
        }
        self.ambient.reduce(&acc)
    }
}

/// A homomorphism of finite abelian groups in coordinates.
#[derive(Clone, Debug)]
pub struct AbHom {
    pub domain: FinAbGroup,
    pub codomain: FinAbGroup,
    /// codomain.rank() x domain.rank()
    pub matrix: IntMatrix,
}

impl AbHom {
    pub fn new(domain: FinAbGroup, codomain: FinAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != codomain.rank() || matrix.cols() != domain.rank() {
            return Err(Error::InvalidInput("homomorphism matrix has the wrong shape".into()));
        }
        let h = AbHom { domain, codomain, matrix };
        for (i, &d) in h.domain.factors().iter().enumerate() {
            let img: Vec<Int> = h.matrix.column(i).into_iter().map(|x| x * BigInt::from(d)).collect();
            if h.codomain.reduce(&img).iter().any(|&x| x != 0) {
                return Err(Error::InvalidInput(format!("matrix does not respect the order of generator {i}")));
            }
        }
        Ok(h)
    }

    /// Builds the homomorphism from the images of the domain's standard generators.
    pub fn from_images(domain: FinAbGroup, codomain: FinAbGroup, images: &[Vec<u64>]) -> Result<Self> {
        let cols: Vec<Vec<Int>> = images.iter().map(|v| FinAbGroup::to_int(v)).collect();
        let matrix = if cols.is_empty() {
            IntMatrix::zeros(codomain.rank(), 0)
        } else {
            IntMatrix::from_columns(&cols, codomain.rank())
        };
        Self::new(domain, codomain, matrix)
    }

    pub fn apply(&self, a: &[u64]) -> Vec<u64> {
        self.codomain.reduce(&self.matrix.mul_vec(&FinAbGroup::to_int(a)))
    }

    pub fn kernel(&self) -> Result<Subgroup> {
        let n = self.domain.rank();
        let m = self.codomain.rank();
        if m == 0 {
            return Subgroup::generated_by(&self.domain, standard_gens(&self.domain));
        }
        let mut cols: Vec<Vec<Int>> = (0..n).map(|j| self.matrix.column(j)).collect();
        cols.extend(diag_relations(&self.codomain));
        let gens = projected_kernel(&cols, m, n)
            .into_iter()
            .map(|v| self.domain.reduce(&v))
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect();
        Subgroup::generated_by(&self.domain, gens)
    }

    /// Some `a` with `h(a) = b`, if `b` lies in the image.
    pub fn preimage(&self, b: &[u64]) -> Option<Vec<u64>> {
        let n = self.domain.rank();
        let m = self.codomain.rank();
        if m == 0 {
            return Some(self.domain.zero());
        }
        let mut cols: Vec<Vec<Int>> = (0..n).map(|j| self.matrix.column(j)).collect();
        cols.extend(diag_relations(&self.codomain));
        let snf = smith_normal_form(&IntMatrix::from_columns(&cols, m));
        let z = snf.solve(&FinAbGroup::to_int(b))?;
        Some(self.domain.reduce(&z[..n]))
    }

    pub fn image(&self) -> Result<Subgroup> {
        let gens = (0..self.domain.rank())
            .map(|j| self.codomain.reduce(&self.matrix.column(j)))
            .filter(|v| v.iter().any(|&x| x != 0))
            .collect();
        Subgroup::generated_by(&self.codomain, gens)
    }
}

pub fn standard_gens(g: &FinAbGroup) -> Vec<Vec<u64>> {
    (0..g.rank())
        .map(|i| {
            let mut v = vec![0; g.rank()];
            v[i] = 1;
            v
        })
        .collect()
}

/// `g / h` with the projection map.
pub fn quotient(g: &FinAbGroup, h_gens: &[Vec<u64>]) -> Result<Presented> {
    for v in h_gens {
        if v.len() != g.rank() {
            return Err(Error::NotASubgroup(format!("{v:?} has the wrong length for {g}")));
        }
    }
    let mut rels: Vec<Vec<Int>> = h_gens.iter().map(|v| FinAbGroup::to_int(v)).collect();
    rels.extend(diag_relations(g));
    present(g.rank(), &rels)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn c(n: u64) -> FinAbGroup {
        FinAbGroup::new(vec![n]).unwrap()
    }

    #[test]
    fn display_and_order() {
        let g = FinAbGroup::new(vec![2, 4]).unwrap();
        assert_eq!(g.to_string(), "C2 x C4");
        assert_eq!(g.order(), BigUint::from(8u32));
        assert_eq!(FinAbGroup::trivial().to_string(), "1");
        assert!(FinAbGroup::new(vec![2, 3]).is_err());
    }

    #[test]
    fn cyclic_orders_are_canonicalised() {
        assert_eq!(FinAbGroup::from_cyclic_orders(&[2, 3]), c(6));
        assert_eq!(FinAbGroup::from_cyclic_orders(&[4, 2]).factors(), &[2, 4]);
        assert_eq!(FinAbGroup::from_cyclic_orders(&[1, 1]), FinAbGroup::trivial());
    }

    #[test]
    fn kernel_of_zero_map_on_c6() {
        let h = AbHom::from_images(c(6), c(6), &[vec![0]]).unwrap();
        assert_eq!(h.kernel().unwrap().group(), &c(6));
    }

    #[test]
    fn image_of_doubling_on_c6() {
        let h = AbHom::from_images(c(6), c(6), &[vec![2]]).unwrap();
        let im = h.image().unwrap();
        assert_eq!(im.group(), &c(3));
        let elems: BTreeSet<Vec<u64>> = im.group().elements().map(|e| im.include(&e)).collect();
        assert_eq!(elems, [vec![0], vec![2], vec![4]].into_iter().collect());
        let k = h.kernel().unwrap();
        assert_eq!(k.order() * im.order(), c(6).order());
    }

    #[test]
    fn preimage_solves_or_refuses() {
        let h = AbHom::from_images(c(6), c(6), &[vec![2]]).unwrap();
        let a = h.preimage(&[4]).unwrap();
        assert_eq!(h.apply(&a), vec![4]);
        assert_eq!(h.preimage(&[3]), None);
    }

    #[test]
    fn quotient_of_klein_by_diagonal() {
        let v = FinAbGroup::new(vec![2, 2]).unwrap();
        let q = quotient(&v, &[vec![1, 1]]).unwrap();
        // coset enumeration oracle
        let mut cosets: BTreeSet<BTreeSet<Vec<u64>>> = BTreeSet::new();
        for a in v.elements() {
            let coset: BTreeSet<Vec<u64>> = [a.clone(), v.add(&a, &[1, 1])].into_iter().collect();
            cosets.insert(coset);
        }
        assert_eq!(cosets.len(), 2);
        assert_eq!(q.group, c(2));
        assert_eq!(q.project(&FinAbGroup::to_int(&[1, 1])), vec![0]);
        assert_eq!(q.project(&FinAbGroup::to_int(&[1, 0])), vec![1]);
    }

    #[test]
    fn ill_defined_hom_rejected() {
        assert!(AbHom::from_images(c(2), c(3), &[vec![1]]).is_err());
    }

    #[test]
    fn subquotient_class_map() {
        // C4 x C2 with num = everything, den = <(2,0)>
        let g = FinAbGroup::new(vec![2, 4]).unwrap();
        let sq = Subquotient::new(&g, standard_gens(&g), vec![vec![0, 2]]).unwrap();
        assert_eq!(sq.group().order(), BigUint::from(4u32));
        for a in g.elements() {
            let cl = sq.class_of(&a).unwrap();
            let back = sq.lift(&cl);
            // a - back must be in den
            let diff = g.add(&a, &g.neg(&back));
            assert!(diff == vec![0, 0] || diff == vec![0, 2]);
        }
    }
}
