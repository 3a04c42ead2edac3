//! The (w, n) = (6, 5) example end to end through the public API.

use std::sync::Arc as Shared;

use negcat_core::orbit::make_params;
use negcat_core::torsion3::{
    brute_force_filtrations, distinct_shapes, filter_object, phi, phi_inv, verify_triple,
};
use negcat_core::{AbelianModel, Arc, ArcModel, CObject, SetupPair, SmsCandidate};

fn arcs(xs: &[(usize, usize)]) -> Vec<Arc> {
    let mut v: Vec<Arc> = xs.iter().map(|&(a, b)| Arc::new(a, b)).collect();
    v.sort_unstable();
    v
}

fn pair() -> SetupPair {
    let params = make_params(6, 5).unwrap();
    assert_eq!(params.polygon_size(), 40);
    assert_eq!(params.arc_count(), 100);
    let am = Shared::new(ArcModel::new(params).unwrap());
    let sa = arcs(&[(28, 34), (14, 20), (21, 27), (1, 7), (0, 13)]);
    let sb = arcs(&[(23, 29), (7, 13), (22, 35), (1, 14), (15, 21)]);
    let mk = |s: &[Arc]| {
        let c = SmsCandidate::new(am.params(), s.iter().copied()).unwrap();
        assert!(am.is_sms(&c));
        Shared::new(AbelianModel::from_sms(am.clone(), &c).unwrap())
    };
    SetupPair::new(mk(&sa), mk(&sb)).unwrap()
}

#[test]
fn e_sets() {
    let p = pair();
    let td = p.compute_esets().unwrap();
    let a = p.a();
    assert_eq!(a.arcs_of(td.e0), arcs(&[(1, 7), (7, 13)]));
    assert_eq!(
        a.arcs_of(td.e1),
        arcs(&[
            (0, 34),
            (0, 20),
            (14, 20),
            (14, 34),
            (21, 34),
            (0, 13),
            (28, 34)
        ])
    );
    assert_eq!(a.arcs_of(td.e2), arcs(&[(21, 27)]));
}

#[test]
fn filtration_of_7_27() {
    let p = pair();
    let td = p.compute_esets().unwrap();
    let a = p.a();
    let part = filter_object(a, &td, &CObject::indec(Arc::new(7, 27))).unwrap();
    assert_eq!(
        part.chain_arcs(a).unwrap(),
        vec![vec![], arcs(&[(7, 13)]), arcs(&[(7, 20)]), arcs(&[(7, 27)])]
    );
    let all = brute_force_filtrations(a, &td, &part.object).unwrap();
    assert_eq!(distinct_shapes(a, &all).unwrap(), 1);
}

#[test]
fn triple_and_bijection() {
    let p = pair();
    let td = p.compute_esets().unwrap();
    let a = p.a();
    assert!(verify_triple(a, &td).unwrap().passed());
    let pairs = phi(a, td.classes()).unwrap();
    assert_eq!(pairs, [td.pair_low, td.pair_high]);
    assert_eq!(phi_inv(a, pairs).unwrap(), td.classes());
}

#[test]
fn setup_report_serializes() {
    let p = pair();
    let v = serde_json::to_value(p.report()).unwrap();
    assert_eq!(v["e_a"]["holds_up_to"], 5);
    assert_eq!(v["a_in_b"]["status"], "pass");
}
