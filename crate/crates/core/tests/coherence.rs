//! The representation-theoretic view of a heart against the triangulated
//! view of the ambient category.

use std::sync::Arc as Shared;

use negcat_core::orbit::make_params;
use negcat_core::repkit::{ext1_dim, is_isomorphic, quotient};
use negcat_core::{AbelianModel, Arc, ArcModel, CObject, ClassA, Error, SmsCandidate};
use proptest::prelude::*;

const SA: [[usize; 2]; 5] = [[28, 34], [14, 20], [21, 27], [1, 7], [0, 13]];
const SB: [[usize; 2]; 5] = [[23, 29], [7, 13], [22, 35], [1, 14], [15, 21]];

fn hearts() -> (Shared<ArcModel>, AbelianModel, AbelianModel) {
    let am = Shared::new(ArcModel::new(make_params(6, 5).unwrap()).unwrap());
    let mk = |s: &[[usize; 2]]| {
        let c = SmsCandidate::new(am.params(), s.iter().map(|&a| Arc::from(a))).unwrap();
        AbelianModel::from_sms(am.clone(), &c).unwrap()
    };
    let (a, b) = (mk(&SA), mk(&SB));
    (am, a, b)
}

/// Ext¹ in the heart is Hom to the shift in the category.
#[test]
fn ext_matches_shifted_hom() {
    let (am, a, _) = hearts();
    // the A heart has no relations, so Ext over the quiver is Ext in the heart
    for i in 0..a.len() {
        for j in 0..a.len() {
            let (x, z) = (a.indec(i).arc.unwrap(), a.indec(j).arc.unwrap());
            let e = ext1_dim(a.rep(j), a.rep(i)).unwrap();
            assert_eq!(e, am.hom(z, am.shift_arc(x, 1)), "Ext({z},{x})");
        }
    }
}

/// Every nonsplit sequence `x ↣ y ↠ z` of indecomposables in a heart is a
/// triangle whose middle term the orbit model finds.
#[test]
fn short_exact_sequences_are_triangles() {
    let (am, a, b) = hearts();
    let mut seen = 0;
    for m in [&a, &b] {
        for y in 0..m.len() {
            let ry = m.rep(y);
            for u in m.subreps(y) {
                if u.is_zero() || u.is_full(ry) {
                    continue;
                }
                let (ru, rq) = (u.to_rep(ry), quotient(ry, u).unwrap());
                let (Some(x), Some(z)) = (index_if_indec(m, &ru), index_if_indec(m, &rq)) else {
                    continue;
                };
                let (xa, za) = (m.indec(x).arc.unwrap(), m.indec(z).arc.unwrap());
                match am.middle_terms(xa, za) {
                    Ok(ys) => assert!(ys.contains(&CObject::indec(m.indec(y).arc.unwrap()))),
                    Err(Error::MultiComponent { .. }) => {}
                    Err(e) => panic!("{xa} -> ? -> {za}: {e}"),
                }
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

fn index_if_indec(m: &AbelianModel, r: &negcat_core::Rep) -> Option<usize> {
    let t = m.types_of(r).ok()?;
    let i = t.iter().next()?;
    (t.len() == 1 && is_isomorphic(r, m.rep(i)).ok()?).then_some(i)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    /// Short exact sequences in the heart are exactly the triangles with all
    /// three terms in it.
    #[test]
    fn abelian_star_is_triangulated_star(xb in any::<u64>(), zb in any::<u64>()) {
        let (am, a, _) = hearts();
        let x = ClassA::from_bits(xb & a.all().bits());
        let z = ClassA::from_bits(zb & a.all().bits());
        let s = am.star_class(&a.arcs_of(x), &a.arcs_of(z)).unwrap();
        prop_assume!(s.is_decided());
        prop_assert_eq!(a.star_a(x, z), a.class_of_arcs(&s.members));
    }

    #[test]
    fn star_a_is_associative(xb in any::<u64>(), yb in any::<u64>(), zb in any::<u64>()) {
        let (_, a, _) = hearts();
        let full = a.all().bits();
        let (x, y, z) = (ClassA::from_bits(xb & full), ClassA::from_bits(yb & full), ClassA::from_bits(zb & full));
        // on indecomposables associativity holds for extension-closed inputs
        let (x, y, z) = (a.filt(x).unwrap(), a.filt(y).unwrap(), a.filt(z).unwrap());
        let lhs = a.star_a(a.star_a(x, y), z);
        let rhs = a.star_a(x, a.star_a(y, z));
        // compare against a direct search over chains u ⊆ v ⊆ y
        for i in 0..a.len() {
            let ry = a.rep(i);
            let subs = a.subreps(i);
            let exact = subs.iter().any(|u| {
                a.class_contains(x, &u.to_rep(ry)).unwrap()
                    && subs.iter().filter(|v| v.contains(u)).any(|v| {
                        let mid = quotient(&v.to_rep(ry), &v.restrict(u).unwrap()).unwrap();
                        a.class_contains(y, &mid).unwrap()
                            && a.class_contains(z, &quotient(ry, v).unwrap()).unwrap()
                    })
            });
            prop_assert_eq!(lhs.contains(i), exact, "{}", a.label(i));
            prop_assert_eq!(rhs.contains(i), exact, "{}", a.label(i));
        }
    }
}
