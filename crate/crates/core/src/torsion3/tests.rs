use std::sync::Arc as Shared;

use super::*;
use crate::abelian::{AbelianModel, ClassA, TorsionPair};
use crate::orbit::{make_params, Arc, ArcModel, CObject, Labeling, SmsCandidate};
use crate::repkit::Quiver;

const SA: [[usize; 2]; 5] = [[28, 34], [14, 20], [21, 27], [1, 7], [0, 13]];
const SB: [[usize; 2]; 5] = [[23, 29], [7, 13], [22, 35], [1, 14], [15, 21]];

fn arcs(xs: &[(usize, usize)]) -> Vec<Arc> {
    let mut v: Vec<Arc> = xs.iter().map(|&(a, b)| Arc::new(a, b)).collect();
    v.sort_unstable();
    v
}

fn models(labeling: Labeling) -> (Shared<AbelianModel>, Shared<AbelianModel>) {
    let p = make_params(6, 5).unwrap();
    let am = Shared::new(ArcModel::with_labeling(p, labeling).unwrap());
    let mk = |s: &[[usize; 2]]| {
        let c = SmsCandidate::new(&p, s.iter().map(|&a| Arc::from(a))).unwrap();
        Shared::new(AbelianModel::from_sms(am.clone(), &c).unwrap())
    };
    (mk(&SA), mk(&SB))
}

fn example() -> (SetupPair, TorsionData) {
    let (a, b) = models(Labeling::IDENTITY);
    let pair = SetupPair::new(a, b).unwrap();
    let td = pair.compute_esets().unwrap();
    (pair, td)
}

#[test]
fn setup_passes_at_6_5() {
    let (pair, _) = example();
    let r = pair.report();
    assert_eq!(r.e_a.holds_up_to, E_DEPTH);
    assert_eq!(r.e_b.holds_up_to, E_DEPTH);
    assert_eq!(r.a_in_b.witnesses.len(), 15);
    assert_eq!(r.b_in_a.witnesses.len(), 10);
    for w in &r.a_in_b.witnesses {
        assert_eq!(w.outer.x, CObject::indec(w.x));
        assert_eq!(w.inner.len(), w.outer.u.summands().len());
    }
}

#[test]
fn setup_with_itself() {
    let (a, _) = models(Labeling::IDENTITY);
    let r = check_setup(&a, &a).unwrap();
    assert!(r.passed());
}

#[test]
fn some_rotation_of_b_fails() {
    let (a, b) = models(Labeling::IDENTITY);
    let am = a.arc_model().unwrap().clone();
    let p = *am.params();
    let mut failures = 0;
    for k in 1..p.polygon_size() {
        let c = SmsCandidate::new(&p, b.simples().iter().map(|&x| p.rotate(x, k as i64))).unwrap();
        let Ok(b2) = AbelianModel::from_sms(am.clone(), &c) else {
            continue;
        };
        let r = check_setup(&a, &b2).unwrap();
        if r.status() == Status::Fail {
            failures += 1;
            assert!(SetupPair::new(a.clone(), Shared::new(b2)).is_err());
        }
    }
    assert!(failures > 0);
}

#[test]
fn esets_at_6_5() {
    let (pair, td) = example();
    let a = pair.a();
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
    assert!(td.pair_low.torsion.is_subset(td.pair_high.torsion));
    assert!(a.is_torsion_class(td.e0) && a.is_torsion_class(td.pair_high.torsion));
}

#[test]
fn filtration_of_7_27() {
    let (pair, td) = example();
    let a = pair.a();
    let x = CObject::indec(Arc::new(7, 27));
    let part = filter_object(a, &td, &x).unwrap();
    let chain = part.chain_arcs(a).unwrap();
    assert_eq!(
        chain,
        vec![vec![], arcs(&[(7, 13)]), arcs(&[(7, 20)]), arcs(&[(7, 27)])]
    );
    let q = part.quotient_arcs(a).unwrap();
    assert_eq!(
        q,
        vec![arcs(&[(7, 13)]), arcs(&[(14, 20)]), arcs(&[(21, 27)])]
    );
    let all = brute_force_filtrations(a, &td, &part.object).unwrap();
    assert_eq!(all.len(), 1);
    assert_eq!(all[0].shape(a).unwrap(), part.shape(a).unwrap());
}

#[test]
fn trivial_filtrations() {
    let (pair, td) = example();
    let a = pair.a();
    let p = filter_object(a, &td, &CObject::indec(Arc::new(1, 7))).unwrap();
    assert_eq!(
        p.chain.iter().map(|s| s.total_dim()).collect::<Vec<_>>(),
        vec![0, 1, 1, 1]
    );
    let p = filter_object(a, &td, &CObject::indec(Arc::new(21, 27))).unwrap();
    assert_eq!(
        p.chain.iter().map(|s| s.total_dim()).collect::<Vec<_>>(),
        vec![0, 0, 0, 1]
    );
    let zero = filter_object(a, &td, &CObject::zero()).unwrap();
    assert_eq!(
        brute_force_filtrations(a, &td, &zero.object).unwrap().len(),
        1
    );
    assert!(filter_object(a, &td, &CObject::indec(Arc::new(23, 29))).is_err());
}

#[test]
fn every_object_filters_uniquely() {
    let (pair, td) = example();
    let a = pair.a();
    for y in 0..a.len() {
        let part = filter_rep(a, &td, a.rep(y)).unwrap();
        let all = brute_force_filtrations(a, &td, a.rep(y)).unwrap();
        assert_eq!(distinct_shapes(a, &all).unwrap(), 1, "{}", a.label(y));
        assert_eq!(all[0].shape(a).unwrap(), part.shape(a).unwrap());
    }
}

#[test]
fn triple_verifies_and_tampering_is_caught() {
    let (pair, td) = example();
    let a = pair.a();
    assert!(verify_triple(a, &td).unwrap().passed());
    let swapped = TorsionData {
        e0: td.e2,
        e2: td.e0,
        ..td
    };
    let r = verify_triple(a, &swapped).unwrap();
    assert!(r.orthogonality.is_some());
}

#[test]
fn phi_matches_torsion_data() {
    let (pair, td) = example();
    let a = pair.a();
    let pp = phi(a, td.classes()).unwrap();
    assert_eq!(pp, [td.pair_low, td.pair_high]);
    assert_eq!(phi_inv(a, pp).unwrap(), td.classes());
    let doubled = phi_inv(a, [td.pair_low, td.pair_low]).unwrap();
    assert_eq!(
        doubled,
        [
            td.pair_low.torsion,
            ClassA::empty(),
            td.pair_low.torsion_free
        ]
    );
}

#[test]
fn a2_torsion_classes() {
    let m = AbelianModel::from_quiver(Quiver::linear_a(2)).unwrap();
    let s1 = m.index_of_support(&[0]).unwrap();
    let s2 = m.index_of_support(&[1]).unwrap();
    let p1 = m.index_of_support(&[0, 1]).unwrap();
    let ts = enumerate_torsion_classes(&m).unwrap();
    let mut exp: Vec<ClassA> = vec![
        ClassA::empty(),
        ClassA::singleton(s1),
        ClassA::singleton(s2),
        [s1, p1].into_iter().collect(),
        m.all(),
    ];
    exp.sort();
    assert_eq!(ts, exp);
    assert_eq!(enumerate_torsion_free_classes(&m).unwrap().len(), 5);
}

#[test]
fn round_trips_on_small_quivers() {
    for q in [
        Quiver::linear_a(2),
        Quiver::linear_a(3),
        Quiver::new(3, vec![(0, 1), (2, 1)]).unwrap(),
    ] {
        let m = AbelianModel::from_quiver(q).unwrap();
        let nested = nested_pairs(&m).unwrap();
        for p in &nested {
            let t = phi_inv(&m, *p).unwrap();
            assert_eq!(phi(&m, t).unwrap(), *p);
        }
    }
}

#[test]
fn phi_rejects_bad_input() {
    let m = AbelianModel::from_quiver(Quiver::linear_a(2)).unwrap();
    let s1 = ClassA::singleton(m.index_of_support(&[0]).unwrap());
    let s2 = ClassA::singleton(m.index_of_support(&[1]).unwrap());
    // Hom(S2, P1) != 0 but S2 sits below P1's class
    assert!(phi(&m, [s2, m.all().minus(s2), ClassA::empty()]).is_err());
    assert!(phi(&m, [s1, ClassA::empty(), ClassA::empty()]).is_err());
    let bad = TorsionPair {
        torsion: s1,
        torsion_free: s2,
    };
    assert!(phi_inv(&m, [bad, bad]).is_err());
}

#[test]
fn closure_finds_every_torsion_class() {
    let m = AbelianModel::from_quiver(Quiver::linear_a(3)).unwrap();
    let ts = enumerate_torsion_classes(&m).unwrap();
    let mut via_closure: Vec<ClassA> = (0..1u64 << m.len())
        .map(|b| torsion_closure(&m, ClassA::from_bits(b)))
        .collect();
    via_closure.sort();
    via_closure.dedup();
    assert_eq!(ts, via_closure);
    // A3 has Catalan(4) = 14 torsion classes
    assert_eq!(ts.len(), 14);
}

#[test]
fn calibration_is_unique_up_to_rotation() {
    let p = make_params(6, 5).unwrap();
    let sa: Vec<Arc> = SA.iter().map(|&a| Arc::from(a)).collect();
    let sb: Vec<Arc> = SB.iter().map(|&a| Arc::from(a)).collect();
    let expected: ExpectedEsets = [
        arcs(&[(1, 7), (7, 13)]),
        arcs(&[
            (0, 13),
            (0, 20),
            (0, 34),
            (14, 20),
            (14, 34),
            (21, 34),
            (28, 34),
        ]),
        arcs(&[(21, 27)]),
    ];
    let hits = calibrate(&p, &sa, &sb, &expected).unwrap();
    // rotations commute with Σ, so they cannot be told apart; reflections can
    let rotations: Vec<Labeling> = Labeling::all(&p)
        .into_iter()
        .filter(|l| !l.reflect)
        .collect();
    assert_eq!(hits, rotations);
}
