//! The seven-term sequence at desk scale: every term that is finitely
//! computable for a commutative base ring, with the identities among them
//! checked and the nodes that hold only because `Pic` is trivial marked as such.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::abgrp::Subquotient;
use crate::bimod::pics_semilattice;
use crate::cohomology::{cohomologous, cohomology, Cochain, CohomologyResult, EnumCounts, Method};
use crate::crossed::{
    crossed_iso_test, decompositions, graded_automorphisms, obstruction, twist_by_cocycle, unit_families,
    unit_family_maps, zeta, Decompositions, GradedRing, ScalarFactorSet,
};
use crate::paction::UnitalPartialAction;
use crate::prep::{build_delta_theta, induced_alpha_star, srs_monoid, validate_srs_rep, FiniteMonoid, SubBimoduleRep};
use crate::{Caps, Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct CohomologySummary {
    pub degree: usize,
    pub c_order: String,
    pub z_order: String,
    pub b_order: String,
    pub h: String,
    pub h_factors: Vec<u64>,
    pub enumeration: Option<EnumCounts>,
}

impl CohomologySummary {
    fn new(r: &CohomologyResult) -> Self {
        CohomologySummary {
            degree: r.degree,
            c_order: r.c.order().to_string(),
            z_order: r.z.order().to_string(),
            b_order: r.b.order().to_string(),
            h: r.h.to_string(),
            h_factors: r.h.factors().to_vec(),
            enumeration: r.enumeration.clone(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AutSummary {
    pub aut_order: usize,
    pub inner_order: usize,
    pub quotient: String,
    pub h1: String,
    pub candidates_scanned: u64,
    pub psi_in_z1: bool,
    pub psi_injective: bool,
    pub psi_onto_z1: bool,
    pub psi_multiplicative: bool,
    pub inner_onto_b1: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossedClass {
    pub h2_class: Vec<u64>,
    /// the normalized 2-cocycle used as twist
    pub twist: Vec<usize>,
    pub zeta_class: Vec<u64>,
    pub round_trip: bool,
    /// `ζ` unchanged under every rescaling of the identity family by units
    pub zeta_well_defined: bool,
    /// idempotents `f_x` with `[Γ_x][Θ_x]^-1 = [R f_x]`
    pub pic_cocycle: Vec<usize>,
    pub delta_of_pic_cocycle: Vec<u64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PicsSummary {
    pub semilattice_size: usize,
    pub iso_classes: usize,
    pub srs_monoid_size: usize,
    /// `α*` on idempotent classes agrees with the induced center action
    pub alpha_star_matches_center: bool,
    pub z1_candidates_scanned: u64,
    /// each 1-cocycle as its idempotents `f_x`
    pub z1: Vec<Vec<usize>>,
    /// `δ(g)` as an H^3 class, per 1-cocycle
    pub delta: Vec<Vec<u64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NodeVerdict {
    pub node: String,
    /// "verified" or "collapse"
    pub basis: String,
    pub holds: bool,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceReport {
    pub schema_version: u32,
    pub instance: String,
    pub group_order: usize,
    pub ring_size: usize,
    pub idempotents: Vec<usize>,
    pub center_action_independent_of_decomposition: bool,
    pub h1: CohomologySummary,
    pub h2: CohomologySummary,
    pub h3: CohomologySummary,
    pub automorphisms: AutSummary,
    pub crossed_products: Vec<CrossedClass>,
    pub iso_families_scanned: u64,
    pub crossed_pairwise_non_isomorphic: bool,
    pub zeta_bijective: bool,
    pub zeta_multiplicative: bool,
    pub pics: PicsSummary,
    pub delta_zeta_trivial: bool,
    pub nodes: Vec<NodeVerdict>,
    pub all_pass: bool,
}

impl SequenceReport {
    /// Pretty JSON with keys sorted.
    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&v).expect("value serializes")
    }
}

/// The semilattice `{[R e]}` as a monoid, with `α*` read off on it.
struct Semilattice {
    idempotents: Vec<usize>,
    monoid: FiniteMonoid,
    /// alpha[x][e position] = position of α*_x([R e]) when defined
    alpha: Vec<BTreeMap<usize, usize>>,
}

fn semilattice(rep: &SubBimoduleRep, center: &UnitalPartialAction, caps: &Caps) -> Result<(Semilattice, usize, bool)> {
    let k = rep.base();
    let s = pics_semilattice(k, caps)?;
    let pos: HashMap<usize, usize> = s.idempotents.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let monoid = FiniteMonoid::new(s.table.clone(), pos[&k.one()])?;
    let (srs, subs, prep) = srs_monoid(rep, caps)?;
    let astar = induced_alpha_star(&prep)?;
    let sub_index: HashMap<&Vec<usize>, usize> = subs.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let ideal_of: HashMap<usize, usize> =
        s.idempotents.iter().map(|&e| Ok((sub_index[&rep.ideal(e)?], e))).collect::<Result<_>>()?;
    let g = rep.group();
    let mut matches = true;
    let mut alpha = vec![];
    for x in g.elements() {
        let xi = g.inv(x);
        let mut m = BTreeMap::new();
        for &e in &s.idempotents {
            let sub = sub_index[&rep.ideal(e)?];
            if !astar.in_domain(xi, sub) {
                continue;
            }
            let img = astar.maps[x][&sub];
            let f = *ideal_of.get(&img).ok_or_else(|| Error::InvalidRep("α* of an ideal is not an ideal".into()))?;
            // the same idempotent through the center action
            let via_center = center.act(x, e);
            if k.mul(e, center.idem(xi)) == e && via_center != f {
                matches = false;
            }
            m.insert(pos[&e], pos[&f]);
        }
        alpha.push(m);
    }
    Ok((Semilattice { idempotents: s.idempotents, monoid, alpha }, srs.size(), matches && s.iso_classes == pos.len()))
}

/// `Z^1(G, α*, PicS_0(R))` in the semilattice model, by enumeration.
fn z1_semilattice(rep: &SubBimoduleRep, sl: &Semilattice, caps: &Caps) -> Result<(Vec<Vec<usize>>, u64)> {
    let g = rep.group();
    let pos: HashMap<usize, usize> = sl.idempotents.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let eps: Vec<usize> = g.elements().map(|x| pos[&rep.idem(x)]).collect();
    let choices: Vec<Vec<usize>> = g.elements().map(|x| sl.monoid.local_units(eps[x])).collect();
    let count: u128 = choices.iter().map(|c| c.len() as u128).product();
    if count > caps.families as u128 {
        return Err(Error::cap("semilattice 1-cochains", count, caps.families));
    }
    let m = &sl.monoid;
    let mut out = vec![];
    for code in 0..count as usize {
        let mut c = code;
        let gx: Vec<usize> = choices
            .iter()
            .map(|ch| {
                let v = ch[c % ch.len()];
                c /= ch.len();
                v
            })
            .collect();
        let ok = g.elements().all(|x| {
            g.elements().all(|y| {
                let xi = g.inv(x);
                let arg = m.mul(gx[y], eps[xi]);
                match sl.alpha[x].get(&arg) {
                    Some(&a) => m.mul(a, gx[x]) == m.mul(gx[g.mul(x, y)], eps[x]),
                    None => false,
                }
            })
        });
        if ok {
            out.push(gx.iter().map(|&i| sl.idempotents[i]).collect());
        }
    }
    Ok((out, count as u64))
}

/// `δ(g)`: builds `U_x = R f_x Θ_x`, checks it is again a unital partial
/// representation, and returns the H^3 class of the obstruction of the
/// factor set `σ · (multiplication of S)` on `Δ(U)`.
pub fn delta_map(
    rep: &SubBimoduleRep,
    g: &[usize],
    sigma: &Cochain,
    h3: &CohomologyResult,
    center: &UnitalPartialAction,
) -> Result<Vec<u64>> {
    let theta: Vec<Vec<usize>> =
        rep.group().elements().map(|x| Ok(rep.product(&rep.ideal(g[x])?, rep.theta(x)))).collect::<Result<_>>()?;
    let u = SubBimoduleRep::new(
        rep.group().clone(),
        rep.ambient().clone(),
        rep.base().clone(),
        rep.embed().to_vec(),
        theta,
        rep.idems().to_vec(),
    )?;
    if let Some(e) = validate_srs_rep(&u).first_error() {
        return Err(Error::NotACocycle(format!("g does not give a unital partial representation: {e}")));
    }
    let d = build_delta_theta(&u)?;
    let dec = decompositions(&d, 0)?;
    let cu = d.center_action_with(&dec)?;
    if &cu != center {
        return Err(Error::InvalidRep("U induces a different center action".into()));
    }
    let fs = ScalarFactorSet::with_center(d, cu, dec, sigma.clone())?;
    let beta = obstruction(&fs)?;
    h3.class_of(&beta)
}

/// Smallest idempotent `e` with `e u = u` on every element of component `x`.
fn support_idempotent(a: &GradedRing, x: usize) -> usize {
    let k = a.base();
    k.idempotents()
        .into_iter()
        .filter(|&e| (0..a.component(x).len()).all(|u| a.left(e, x, u) == u))
        .min_by_key(|&e| (k.ideal_elements(e).map(|v| v.len()).unwrap_or(usize::MAX), e))
        .expect("1 is always a candidate")
}

pub fn sequence_report(id: &str, rep: &SubBimoduleRep, method: Method, caps: &Caps) -> Result<SequenceReport> {
    if let Some(e) = validate_srs_rep(rep).first_error() {
        return Err(Error::InvalidRep(e));
    }
    let d = build_delta_theta(rep)?;
    let dec: Decompositions = decompositions(&d, 0)?;
    let center = d.center_action_with(&dec)?;
    let independent = d.center_action_with(&decompositions(&d, 1)?)? == center;
    let h1 = cohomology(&center, 1, method, caps)?;
    let h2 = cohomology(&center, 2, method, caps)?;
    let h3 = cohomology(&center, 3, method, caps)?;

    // first leg: Aut^(G)(Δ(Θ)) / Im ℱ ≅ H^1
    let aut = graded_automorphisms(&d, &center, &dec, caps)?;
    let z1_space = h1.space();
    let psi_coords: Vec<Vec<u64>> = aut.psi.iter().map(|p| z1_space.coords(p)).collect();
    let inner_coords: Vec<Vec<u64>> = aut.inner.iter().map(|&i| psi_coords[i].clone()).collect();
    let quotient = Subquotient::new(z1_space.group(), psi_coords.clone(), inner_coords)?;
    let z1_order = h1.z.order_u64().unwrap_or(u64::MAX);
    let aut_summary = AutSummary {
        aut_order: aut.automorphisms.len(),
        inner_order: aut.inner.len(),
        quotient: quotient.group().to_string(),
        h1: h1.h.to_string(),
        candidates_scanned: aut.candidates_scanned,
        psi_in_z1: aut.psi_in_z1,
        psi_injective: aut.psi_injective,
        psi_onto_z1: aut.psi_injective && aut.psi.len() as u64 == z1_order,
        psi_multiplicative: aut.psi_multiplicative,
        inner_onto_b1: aut.inner_onto_b1,
    };

    // crossed products from H^2 representatives, ζ, and δ∘ζ
    let reps = h2.representatives(&center, caps);
    let rings: Vec<GradedRing> = reps.iter().map(|(_, s)| twist_by_cocycle(&d, s)).collect::<Result<_>>()?;
    let id_maps = unit_family_maps(&d, d.idems());
    let fams = unit_families(&d, caps)?;
    let (sl, srs_size, alpha_star_matches) = semilattice(rep, &center, caps)?;
    let (z1, z1_scanned) = z1_semilattice(rep, &sl, caps)?;
    let unit2 = Cochain::unit(&center, 2);
    let delta: Vec<Vec<u64>> = z1.iter().map(|g| delta_map(rep, g, &unit2, &h3, &center)).collect::<Result<_>>()?;
    let trivial3 = h3.h.zero();
    let mut classes = vec![];
    for ((class, sigma), a) in reps.iter().zip(&rings) {
        let tau = zeta(&d, &center, &dec, a, &id_maps)?;
        let zc = h2.class_of(&tau)?;
        let round_trip = &zc == class && cohomologous(&center, &tau, sigma, method, caps)?.is_some();
        let mut well_defined = true;
        for h in &fams {
            let t = zeta(&d, &center, &dec, a, &unit_family_maps(&d, h))?;
            well_defined &= h2.class_of(&t)? == zc;
        }
        let pic: Vec<usize> =
            d.group().elements().map(|x| rep.base().mul(support_idempotent(a, x), rep.idem(x))).collect();
        let dz = delta_map(rep, &pic, sigma, &h3, &center)?;
        classes.push(CrossedClass {
            h2_class: class.clone(),
            twist: sigma.values.clone(),
            zeta_class: zc,
            round_trip,
            zeta_well_defined: well_defined,
            pic_cocycle: pic,
            delta_of_pic_cocycle: dz,
        });
    }
    let mut scanned = 0;
    let mut pairwise = true;
    for i in 0..rings.len() {
        for j in i + 1..rings.len() {
            let s = crossed_iso_test(&rings[i], &rings[j], caps)?;
            scanned += s.scanned;
            pairwise &= s.witness.is_none();
        }
    }
    let mut zeta_classes: Vec<&Vec<u64>> = classes.iter().map(|c| &c.zeta_class).collect();
    zeta_classes.sort();
    zeta_classes.dedup();
    let zeta_bijective = zeta_classes.len() as u64 == h2.h.order_u64().unwrap_or(u64::MAX)
        && classes.iter().all(|c| c.round_trip)
        && pairwise;
    let mut zeta_multiplicative = true;
    for (i, (_, si)) in reps.iter().enumerate() {
        for (j, (_, sj)) in reps.iter().enumerate() {
            let prod = si.mul(&center, sj);
            let c = twist_by_cocycle(&d, &prod)?;
            let zc = h2.class_of(&zeta(&d, &center, &dec, &c, &id_maps)?)?;
            zeta_multiplicative &= zc == h2.h.add(&classes[i].zeta_class, &classes[j].zeta_class);
        }
    }
    let pic_in_z1 = classes.iter().all(|c| z1.contains(&c.pic_cocycle));
    let delta_zeta_trivial = classes.iter().all(|c| c.delta_of_pic_cocycle == trivial3);

    let aut_ok = aut_summary.psi_in_z1
        && aut_summary.psi_onto_z1
        && aut_summary.psi_multiplicative
        && aut_summary.inner_onto_b1
        && aut_summary.quotient == aut_summary.h1;
    let base_classes_trivial = classes.iter().all(|c| c.pic_cocycle == rep.idems());
    let nodes = vec![
        NodeVerdict {
            node: "H1".into(),
            basis: "verified".into(),
            holds: aut_ok,
            note: "Ψ identifies Aut^(G) with Z^1 and Im ℱ with B^1, so φ1 is injective with image Im ℱ".into(),
        },
        NodeVerdict {
            node: "P_Z(Δ(Θ)/R)^(G)".into(),
            basis: "collapse".into(),
            holds: true,
            note: "Pic of a finite commutative ring is trivial, so φ2 is trivial and exactness here reduces to the first leg".into(),
        },
        NodeVerdict {
            node: "Pic_Z(R) ∩ PicS_Z(R)^α*".into(),
            basis: "collapse".into(),
            holds: true,
            note: "the group is trivial for a finite commutative ring, so φ3 is trivial".into(),
        },
        NodeVerdict {
            node: "H2".into(),
            basis: "verified".into(),
            holds: zeta_bijective && zeta_multiplicative,
            note: "ζ is a bijective homomorphism from the computed crossed-product classes onto H^2, so φ4 is injective".into(),
        },
        NodeVerdict {
            node: "B(Θ/R)".into(),
            basis: "collapse".into(),
            holds: base_classes_trivial && pic_in_z1,
            note: "every Γ_x is isomorphic to Θ_x, so B ≅ C0 ≅ H^2 and φ5 sends every class to the trivial cocycle".into(),
        },
        NodeVerdict {
            node: "H1(G,α*,PicS0)".into(),
            basis: "verified".into(),
            holds: delta_zeta_trivial && delta.iter().all(|c| c == &trivial3),
            note: "δ computed through the obstruction on every semilattice 1-cocycle and on every ζ image".into(),
        },
    ];
    let all_pass = independent
        && alpha_star_matches
        && classes.iter().all(|c| c.zeta_well_defined)
        && nodes.iter().all(|n| n.holds);
    Ok(SequenceReport {
        schema_version: SCHEMA_VERSION,
        instance: id.to_string(),
        group_order: d.group().order(),
        ring_size: d.base().size(),
        idempotents: d.idems().to_vec(),
        center_action_independent_of_decomposition: independent,
        h1: CohomologySummary::new(&h1),
        h2: CohomologySummary::new(&h2),
        h3: CohomologySummary::new(&h3),
        automorphisms: aut_summary,
        crossed_products: classes,
        iso_families_scanned: scanned,
        crossed_pairwise_non_isomorphic: pairwise,
        zeta_bijective,
        zeta_multiplicative,
        pics: PicsSummary {
            semilattice_size: sl.idempotents.len(),
            iso_classes: sl.idempotents.len(),
            srs_monoid_size: srs_size,
            alpha_star_matches_center: alpha_star_matches,
            z1_candidates_scanned: z1_scanned,
            z1,
            delta,
        },
        delta_zeta_trivial,
        nodes,
        all_pass,
    })
}
