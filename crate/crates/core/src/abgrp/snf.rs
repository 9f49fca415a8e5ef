//! Smith normal form over the integers.
//!
//! For any integer matrix `A` we compute unimodular `U`, `V` and a diagonal
//! `D` with `U * A * V = D` and `d_1 | d_2 | ... | d_r`, `d_i > 0`, followed
//! by zeros. The inverse of `U` is tracked alongside so presentations can be
//! mapped in both directions without a second inversion.

use super::matrix::{IntScalar, Matrix};

#[derive(Clone)]
pub struct Snf<T> {
    pub u: Matrix<T>,
    pub u_inv: Matrix<T>,
    pub d: Matrix<T>,
    pub v: Matrix<T>,
    pub rank: usize,
}

impl<T: std::fmt::Display> std::fmt::Debug for Snf<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Snf").field("d", &self.d).field("rank", &self.rank).finish()
    }
}

impl<T: IntScalar> Snf<T> {
    /// Nonzero diagonal entries.
    pub fn invariant_factors(&self) -> Vec<T> {
        self.d.diagonal().into_iter().take(self.rank).collect()
    }

    /// Basis of the integer kernel `{x : A x = 0}` as columns of `V`.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        (self.rank..self.v.cols()).map(|j| self.v.column(j)).collect()
    }

    /// Solves `A x = b` over the integers, returning one solution if any.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        let b2 = self.u.mul_vec(b);
        let mut y = vec![T::zero(); self.v.rows()];
        for (i, bi) in b2.iter().enumerate() {
            if i < self.rank {
                let d = &self.d[(i, i)];
                if !bi.is_multiple_of(d) {
                    return None;
                }
                y[i] = bi.clone() / d.clone();
            } else if !bi.is_zero() {
                return None;
            }
        }
        Some(self.v.mul_vec(&y))
    }
}

pub fn smith_normal_form<T: IntScalar>(a: &Matrix<T>) -> Snf<T> {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = Matrix::identity(m);
    let mut u_inv = Matrix::identity(m);
    let mut v = Matrix::identity(n);

    // Row operations are mirrored on U (left) and, inverted, on U^{-1} (right).
    let swap_r = |d: &mut Matrix<T>, u: &mut Matrix<T>, ui: &mut Matrix<T>, i: usize, j: usize| {
        d.swap_rows(i, j);
        u.swap_rows(i, j);
        ui.swap_cols(i, j);
    };
    let add_r = |d: &mut Matrix<T>, u: &mut Matrix<T>, ui: &mut Matrix<T>, dst: usize, src: usize, c: &T| {
        d.add_row_multiple(dst, src, c);
        u.add_row_multiple(dst, src, c);
        ui.add_col_multiple(src, dst, &(-c.clone()));
    };

    let mut rank = 0;
    for t in 0..m.min(n) {
        loop {
            // pivot: smallest nonzero absolute value in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let x = &d[(i, j)];
                    if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(u, u_inv, d, v, rank);
            };
            swap_r(&mut d, &mut u, &mut u_inv, t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                add_r(&mut d, &mut u, &mut u_inv, i, t, &(-q));
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                let c = -q;
                d.add_col_multiple(j, t, &c);
                v.add_col_multiple(j, t, &c);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: fold an offending row into the pivot row and retry
            let p = d[(t, t)].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => add_r(&mut d, &mut u, &mut u_inv, t, i, &T::one()),
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
        rank += 1;
    }
    finish(u, u_inv, d, v, rank)
}

fn finish<T: IntScalar>(u: Matrix<T>, u_inv: Matrix<T>, d: Matrix<T>, v: Matrix<T>, rank: usize) -> Snf<T> {
    Snf { u, u_inv, d, v, rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Signed;

    fn check<T: IntScalar>(a: &Matrix<T>) -> Snf<T> {
        let s = smith_normal_form(a);
        assert_eq!(s.u.mul(a).mul(&s.v), s.d, "U A V != D");
        assert_eq!(s.u.mul(&s.u_inv), Matrix::identity(a.rows()));
        assert!(s.d.is_diagonal());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        assert!(f.iter().all(|x| x.is_positive()));
        s
    }

    #[test]
    fn identity_is_fixed() {
        let s = check(&Matrix::<i64>::identity(3));
        assert_eq!(s.d, Matrix::identity(3));
        assert_eq!(s.u, Matrix::identity(3));
        assert_eq!(s.v, Matrix::identity(3));
    }

    #[test]
    fn zero_matrix() {
        let s = check(&Matrix::<i64>::zeros(2, 3));
        assert!(s.d.is_zero());
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn two_by_two_example() {
        let a = Matrix::<BigInt>::from_i64_rows(&[vec![2, 4], vec![6, 8]]);
        let s = check(&a);
        assert_eq!(s.invariant_factors(), vec![BigInt::from(2), BigInt::from(4)]);
        assert_eq!(s.d.determinant().abs(), a.determinant().abs());
    }

    #[test]
    fn snf_of_snf_is_itself() {
        let a = Matrix::<i64>::from_i64_rows(&[vec![4, 6, 2], vec![2, 2, 8], vec![0, 6, 10]]);
        let s = check(&a);
        let s2 = check(&s.d);
        assert_eq!(s2.d, s.d);
    }

    #[test]
    fn solve_and_kernel() {
        let a = Matrix::<i64>::from_i64_rows(&[vec![2, 4, 6]]);
        let s = check(&a);
        assert_eq!(s.solve(&[3]), None);
        let x = s.solve(&[8]).unwrap();
        assert_eq!(a.mul_vec(&x), vec![8]);
        for k in s.kernel_basis() {
            assert_eq!(a.mul_vec(&k), vec![0]);
        }
        assert_eq!(s.kernel_basis().len(), 2);
    }
}
