use pcross_core::abgrp::{smith_normal_form, Matrix};
use pcross_core::bimod::{is_isomorphic, FinBimodule};
use pcross_core::cohomology::{coboundary, CochainSpace};
use pcross_core::paction::instances::{desk, global_swap};
use pcross_core::prep::{induced_alpha_star, partial_bijection_rep, validate_prep, validate_semigroup_action};
use pcross_core::{Caps, FiniteCommRing, FiniteGroup, Int};
use proptest::prelude::*;

fn group(i: usize) -> FiniteGroup {
    match i {
        0 => FiniteGroup::cyclic(2).unwrap(),
        1 => FiniteGroup::cyclic(3).unwrap(),
        2 => FiniteGroup::direct_product(&FiniteGroup::cyclic(2).unwrap(), &FiniteGroup::cyclic(2).unwrap()).unwrap(),
        _ => FiniteGroup::dihedral(3).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_is_a_unimodular_diagonalization(rows in prop::collection::vec(prop::collection::vec(-9i64..=9, 3), 1..5)) {
        let a: Matrix<Int> = Matrix::from_i64_rows(&rows);
        let s = smith_normal_form(&a);
        prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
        prop_assert!(s.d.is_diagonal());
        let one = Int::from(1);
        prop_assert!(s.u.determinant() == one || s.u.determinant() == -one.clone());
        prop_assert!(s.v.determinant() == one || s.v.determinant() == -one.clone());
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert_eq!(&w[1] % &w[0], Int::from(0));
        }
    }

    #[test]
    fn coboundary_is_a_homomorphism(seed in prop::collection::vec(0u64..1000, 5), swap in any::<bool>(), n in 0usize..3) {
        let pa = if swap { global_swap() } else { desk() };
        let space = CochainSpace::new(&pa, n, &Caps::default()).unwrap();
        let factors = space.group().factors().to_vec();
        let pick = |shift: usize| -> Vec<u64> {
            factors.iter().enumerate().map(|(i, &f)| seed[(i + shift) % seed.len()] % f).collect()
        };
        let (f, h) = (space.cochain(&pick(0)), space.cochain(&pick(1)));
        let lhs = coboundary(&pa, &f.mul(&pa, &h)).unwrap();
        let rhs = coboundary(&pa, &f).unwrap().mul(&pa, &coboundary(&pa, &h).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn restricted_actions_give_valid_alpha_star(gi in 0usize..4, mask in 0u32..(1 << 12), fixed in any::<bool>()) {
        let g = group(gi);
        let n = g.order();
        let points = 2 * n;
        let action: Vec<Vec<usize>> = g
            .elements()
            .map(|x| (0..points).map(|p| if p >= n && fixed { p } else { (p / n) * n + g.mul(x, p % n) }).collect())
            .collect();
        let subset: Vec<usize> = (0..points).filter(|&p| mask >> p & 1 == 1).collect();
        let caps = Caps { monoid_size: 64, ..Caps::default() };
        match partial_bijection_rep(&g, &action, &subset, &caps) {
            Ok(rep) => {
                prop_assert!(validate_prep(&rep).is_valid());
                let a = induced_alpha_star(&rep).unwrap();
                prop_assert!(validate_semigroup_action(&a).is_valid(), "{:?}", validate_semigroup_action(&a).first_error());
            }
            Err(pcross_core::Error::SizeCapExceeded { .. }) => {}
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn direct_sum_is_commutative_up_to_isomorphism(a in 0usize..4, b in 0usize..4) {
        let k = FiniteCommRing::new(&[3, 3]).unwrap();
        let s = |t: usize| FinBimodule::one_dim(&k, t / 2, t % 2).unwrap();
        let (m, n) = (s(a), s(b));
        let mn = FinBimodule::direct_sum(&m, &n).unwrap();
        let nm = FinBimodule::direct_sum(&n, &m).unwrap();
        prop_assert!(is_isomorphic(&mn, &nm, &Caps::default()).unwrap().is_some());
        prop_assert_eq!(is_isomorphic(&m, &n, &Caps::default()).unwrap().is_some(), a == b);
    }
}
