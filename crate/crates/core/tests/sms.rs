//! Recognition of simple-minded systems against a Hom-vanishing oracle:
//! `Hom(s, s') = 0` for `s != s'` and `Hom(s, Σ^{-k} s') = 0` for
//! `0 < k < w`.

use negcat_core::orbit::make_params;
use negcat_core::{Arc, ArcModel, SmsCandidate, SmsVerdict};

fn hom_oracle(am: &ArcModel, s: &[Arc]) -> bool {
    let w = am.params().w() as i64;
    s.iter().all(|&x| {
        s.iter().all(|&y| {
            (x == y || am.hom(x, y) == 0) && (1..w).all(|k| am.hom(x, am.shift_arc(y, -k)) == 0)
        })
    })
}

fn subsets(k: usize, n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    (0..k)
        .flat_map(|last| {
            subsets(last, n - 1).into_iter().map(move |mut s| {
                s.push(last);
                s
            })
        })
        .collect()
}

#[test]
fn enumeration_matches_brute_force() {
    for (w, n) in [(2, 3), (3, 2), (2, 2), (4, 3), (2, 4)] {
        let params = make_params(w, n).unwrap();
        let am = ArcModel::new(params).unwrap();
        let arcs = am.arcs().to_vec();
        let mut brute: Vec<Vec<Arc>> = subsets(arcs.len(), n)
            .into_iter()
            .map(|ix| ix.into_iter().map(|i| arcs[i]).collect::<Vec<_>>())
            .filter(|s| hom_oracle(&am, s))
            .collect();
        brute.iter_mut().for_each(|s| s.sort_unstable());
        brute.sort();
        let mut listed: Vec<Vec<Arc>> = params
            .enumerate_sms()
            .into_iter()
            .map(|c| c.arcs().to_vec())
            .collect();
        listed.sort();
        assert_eq!(listed, brute, "w={w} n={n}");
        for s in &listed {
            assert!(am.is_sms(&SmsCandidate::new(&params, s.iter().copied()).unwrap()));
        }
    }
}

#[test]
fn small_category_has_thirty() {
    assert_eq!(make_params(2, 3).unwrap().enumerate_sms().len(), 30);
}

#[test]
fn rejection_reasons() {
    let p = make_params(6, 5).unwrap();
    let c = |xs: &[(usize, usize)]| {
        SmsCandidate::new(&p, xs.iter().map(|&(a, b)| Arc::new(a, b))).unwrap()
    };
    let shared = c(&[(1, 7), (7, 13), (14, 20), (21, 27), (28, 34)]);
    assert_eq!(
        p.sms_verdict(&shared),
        SmsVerdict::SharedEndpoint(Arc::new(1, 7), Arc::new(7, 13))
    );
    let crossing = c(&[(0, 13), (7, 20), (21, 27), (28, 34), (22, 35)]);
    assert_eq!(
        p.sms_verdict(&crossing),
        SmsVerdict::Crossing(Arc::new(0, 13), Arc::new(7, 20))
    );
    assert!(matches!(
        p.sms_verdict(&c(&[(1, 7)])),
        SmsVerdict::WrongSize {
            expected: 5,
            found: 1
        }
    ));
}
