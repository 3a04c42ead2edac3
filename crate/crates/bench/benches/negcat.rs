use std::hint::black_box;
use std::sync::Arc as Shared;

use criterion::{criterion_group, criterion_main, Criterion};
use negcat_core::orbit::make_params;
use negcat_core::torsion3::{filter_object, verify_triple};
use negcat_core::{AbelianModel, Arc, ArcModel, CObject, SetupPair, SmsCandidate};

const SA: [[usize; 2]; 5] = [[28, 34], [14, 20], [21, 27], [1, 7], [0, 13]];
const SB: [[usize; 2]; 5] = [[23, 29], [7, 13], [22, 35], [1, 14], [15, 21]];

fn arc_model() -> Shared<ArcModel> {
    Shared::new(ArcModel::new(make_params(6, 5).unwrap()).unwrap())
}

fn heart(am: &Shared<ArcModel>, s: &[[usize; 2]]) -> Shared<AbelianModel> {
    let c = SmsCandidate::new(am.params(), s.iter().map(|&x| Arc::from(x))).unwrap();
    Shared::new(AbelianModel::from_sms(am.clone(), &c).unwrap())
}

fn orbit(c: &mut Criterion) {
    c.bench_function("arc_model_6_5", |b| {
        b.iter(|| ArcModel::new(make_params(6, 5).unwrap()).unwrap())
    });
    let am = arc_model();
    c.bench_function("hom_table_6_5", |b| {
        b.iter(|| {
            let mut s = 0;
            for &x in am.arcs() {
                for &y in am.arcs() {
                    s += am.hom(black_box(x), black_box(y));
                }
            }
            s
        })
    });
    c.bench_function("enumerate_sms_4_3", |b| {
        b.iter(|| make_params(4, 3).unwrap().enumerate_sms().len())
    });
}

fn hearts(c: &mut Criterion) {
    let am = arc_model();
    c.bench_function("heart_from_sms_6_5", |b| b.iter(|| heart(&am, &SA)));
    let (a, bh) = (heart(&am, &SA), heart(&am, &SB));
    let mut g = c.benchmark_group("setup");
    g.sample_size(10);
    g.bench_function("setup_pair_6_5", |b| {
        b.iter(|| SetupPair::new(a.clone(), bh.clone()).unwrap())
    });
    let pair = SetupPair::new(a.clone(), bh.clone()).unwrap();
    g.bench_function("esets_6_5", |b| b.iter(|| pair.compute_esets().unwrap()));
    g.finish();
    let td = pair.compute_esets().unwrap();
    let x = CObject::indec(Arc::new(7, 27));
    c.bench_function("filter_7_27", |b| {
        b.iter(|| filter_object(&a, &td, black_box(&x)).unwrap())
    });
    c.bench_function("verify_triple_6_5", |b| {
        b.iter(|| verify_triple(&a, &td).unwrap())
    });
}

criterion_group!(benches, orbit, hearts);
criterion_main!(benches);
