mod common;

use pcross_core::cohomology::Method;
use pcross_core::paction::instances::{desk_twisted, global_swap};
use pcross_core::paction::{TwistedUnitalPartialAction, UnitalPartialAction};
use pcross_core::prep::theta_from_twisted;
use pcross_core::seq::{sequence_report, CohomologySummary, SequenceReport};
use pcross_core::{Caps, FiniteCommRing, FiniteGroup};

fn report(tpa: &TwistedUnitalPartialAction, method: Method) -> SequenceReport {
    let caps = Caps::default();
    let (rep, _) = theta_from_twisted(tpa, &caps).unwrap();
    sequence_report("test", &rep, method, &caps).unwrap()
}

fn assert_matches_oracle(pa: &UnitalPartialAction, s: &CohomologySummary) {
    let (c, z, b) = common::orders(pa, s.degree);
    assert_eq!(
        (s.c_order.as_str(), s.z_order.as_str(), s.b_order.as_str()),
        (c.to_string().as_str(), z.to_string().as_str(), b.to_string().as_str()),
        "degree {}",
        s.degree
    );
    assert_eq!(s.h_factors.iter().product::<u64>(), z / b);
}

#[test]
fn trivial_group_report_is_all_trivial() {
    let pa = UnitalPartialAction::trivial_global(FiniteGroup::trivial(), FiniteCommRing::new(&[3]).unwrap());
    let r = report(&TwistedUnitalPartialAction::trivial_twist(pa), Method::Both);
    assert!(r.all_pass);
    for h in [&r.h1, &r.h2, &r.h3] {
        assert_eq!(h.h, "1");
    }
    assert_eq!(r.crossed_products.len(), 1);
    assert_eq!(r.automorphisms.aut_order, r.automorphisms.inner_order);
}

#[test]
fn swap_report_matches_classical_cohomology() {
    // a global action: every 1_x = 1, so partial cohomology is the classical one
    let pa = global_swap();
    let r = report(&TwistedUnitalPartialAction::trivial_twist(pa.clone()), Method::Snf);
    assert!(r.all_pass);
    for s in [&r.h1, &r.h2, &r.h3] {
        assert_matches_oracle(&pa, s);
    }
    // U(F3 x F3) = {±1}^2 is an induced module, so H^n vanishes for n ≥ 1
    assert_eq!((r.h1.h.as_str(), r.h2.h.as_str()), ("1", "1"));
}

#[test]
fn desk_report() {
    let r = report(&desk_twisted(), Method::Both);
    let pa = pcross_core::paction::instances::desk();
    for s in [&r.h1, &r.h2, &r.h3] {
        assert_matches_oracle(&pa, s);
    }
    assert!(r.center_action_independent_of_decomposition);
    assert!(r.pics.alpha_star_matches_center);
    assert_eq!(r.pics.srs_monoid_size, 12);
    // semilattice units are trivial: the only 1-cocycle is g_x = 1_x
    assert_eq!(r.pics.z1, vec![r.idempotents.clone()]);
    assert!(r.pics.delta.iter().all(|c| c.iter().all(|&v| v == 0)));
    let collapsed: Vec<&str> = r.nodes.iter().filter(|n| n.basis == "collapse").map(|n| n.node.as_str()).collect();
    assert_eq!(collapsed.len(), 3);
    assert!(r.all_pass);
}

#[test]
fn report_json_is_stable() {
    let a = report(&desk_twisted(), Method::Snf).to_json();
    let b = report(&desk_twisted(), Method::Snf).to_json();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema_version"], 1);
}
