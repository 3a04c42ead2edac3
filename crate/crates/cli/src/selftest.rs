//! Built-in invariant suites, runnable from the command line.

use std::collections::BTreeMap;
use std::sync::Arc as Shared;

use negcat_core::orbit::make_params;
use negcat_core::repkit::{ext1_dim, hom_dim};
use negcat_core::torsion3::{nested_pairs, phi, phi_inv, Status};
use negcat_core::{
    AbelianModel, Arc, ArcModel, CatParams, ClassA, DbIndec, LinearA, Quiver, SmsCandidate,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::run::{run_scenario, Report, REPORT_VERSION};
use crate::scenario::parse;

pub const SUITES: [&str; 7] = [
    "oracle",
    "serre",
    "sms",
    "star",
    "perp",
    "bijection",
    "example",
];

const EXAMPLE: &str = include_str!("../examples/paper_4_2.toml");
const SA: [[usize; 2]; 5] = [[28, 34], [14, 20], [21, 27], [1, 7], [0, 13]];
/// Random classes drawn per model in the class-law suites.
const SAMPLES: usize = 50;
/// Largest number of `n`-subsets the brute-force SMS count will visit.
const BRUTE_FORCE_LIMIT: u128 = 2_000_000;

#[derive(Debug, Default)]
struct Suite {
    checks: usize,
    failures: Vec<String>,
    skipped: Option<String>,
}

impl Suite {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn status(&self) -> Status {
        if self.failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn to_json(&self) -> Value {
        let shown: Vec<&String> = self.failures.iter().filter(|s| !s.is_empty()).collect();
        json!({
            "checks": self.checks,
            "failed": self.failures.len(),
            "failures": shown,
            "skipped": self.skipped,
            "status": if self.failures.is_empty() { "pass" } else { "fail" },
        })
    }
}

/// Runs the named suite (or all) at the given parameters (or the built-in
/// ones).
pub fn selftest(suite: Option<&str>, params: Option<(usize, usize)>) -> Result<Report, String> {
    if let Some(s) = suite {
        if !SUITES.contains(&s) {
            return Err(format!(
                "unknown suite '{s}' (one of {})",
                SUITES.join(", ")
            ));
        }
    }
    let grid: Vec<CatParams> = match params {
        Some((w, n)) => vec![CatParams::new(w, n).map_err(|e| e.to_string())?],
        None => vec![
            make_params(6, 5).expect("valid"),
            make_params(2, 3).expect("valid"),
        ],
    };
    let mut out = BTreeMap::new();
    let mut overall = Status::Pass;
    for &name in SUITES.iter().filter(|&&s| suite.is_none_or(|x| x == s)) {
        let mut r = Suite::default();
        match name {
            "oracle" => oracle(&mut r),
            "serre" => grid.iter().for_each(|p| serre(&mut r, p)),
            "sms" => grid.iter().for_each(|p| sms(&mut r, p)),
            "star" | "perp" | "bijection" => {
                let models = class_models(&grid)?;
                match name {
                    "star" => models.iter().for_each(|m| star_laws(&mut r, m)),
                    "perp" => models.iter().for_each(|m| perp_laws(&mut r, m)),
                    _ => models.iter().for_each(|m| bijection(&mut r, m)),
                }
            }
            _ => example(&mut r, &grid),
        }
        overall = overall.and(r.status());
        out.insert(name.to_owned(), r.to_json());
    }
    let value = json!({
        "version": REPORT_VERSION,
        "selftest": out,
        "params": grid.iter().map(|p| [p.w(), p.n()]).collect::<Vec<_>>(),
        "status": if overall == Status::Pass { "pass" } else { "fail" },
    });
    Ok(Report {
        value,
        status: overall,
    })
}

/// Closed-form Hom in the derived category against linear algebra on
/// representations, for n <= 4 and shifts in [-3, 3].
fn oracle(r: &mut Suite) {
    for n in 1..=4 {
        let d = LinearA::new(n).expect("n > 0");
        let q = Shared::new(d.quiver());
        let ivs = d.intervals();
        for &i in &ivs {
            for &j in &ivs {
                let (ri, rj) = (d.interval_rep(&q, i), d.interval_rep(&q, j));
                let h = hom_dim(&ri, &rj).expect("same quiver");
                let e = ext1_dim(&ri, &rj).expect("same quiver");
                for m1 in -3..=3i64 {
                    for m2 in -3..=3i64 {
                        let x = DbIndec {
                            shift: m1,
                            interval: i,
                        };
                        let y = DbIndec {
                            shift: m2,
                            interval: j,
                        };
                        let expect = match m2 - m1 {
                            0 => h,
                            1 => e,
                            _ => 0,
                        };
                        r.check(d.hom(x, y) == expect, || format!("n={n}: Hom({x}, {y})"));
                    }
                }
            }
        }
    }
}

/// `Hom(X, Y) = Hom(Y, Σ^{-w} X)` on all pairs of diagonals.
fn serre(r: &mut Suite, p: &CatParams) {
    let am = match ArcModel::new(*p) {
        Ok(m) => m,
        Err(e) => return r.check(false, || e.to_string()),
    };
    let w = p.w() as i64;
    for &x in am.arcs() {
        for &y in am.arcs() {
            r.check(am.hom(x, y) == am.hom(y, am.shift_arc(x, -w)), || {
                format!("({}, {}): Hom({x}, {y})", p.w(), p.n())
            });
        }
    }
}

fn binomial(k: u128, n: u128) -> u128 {
    (0..n).fold(1, |acc, i| acc * (k - i) / (i + 1))
}

/// The enumerated systems against all `n`-subsets filtered by Hom vanishing.
fn sms(r: &mut Suite, p: &CatParams) {
    let am = match ArcModel::new(*p) {
        Ok(m) => m,
        Err(e) => return r.check(false, || e.to_string()),
    };
    let arcs = am.arcs().to_vec();
    let n = p.n();
    if binomial(arcs.len() as u128, n as u128) > BRUTE_FORCE_LIMIT {
        r.skipped = Some(format!(
            "({}, {}): too many subsets for brute force",
            p.w(),
            n
        ));
        return;
    }
    let w = p.w() as i64;
    let ok = |s: &[Arc]| {
        s.iter().all(|&x| {
            s.iter().all(|&y| {
                (x == y || am.hom(x, y) == 0) && (1..w).all(|k| am.hom(x, am.shift_arc(y, -k)) == 0)
            })
        })
    };
    let mut brute = Vec::new();
    let mut idx: Vec<usize> = (0..n).collect();
    loop {
        let s: Vec<Arc> = idx.iter().map(|&i| arcs[i]).collect();
        if ok(&s) {
            brute.push(s);
        }
        // next combination
        let Some(pos) = (0..n).rev().find(|&i| idx[i] < arcs.len() - n + i) else {
            break;
        };
        idx[pos] += 1;
        for i in pos + 1..n {
            idx[i] = idx[i - 1] + 1;
        }
    }
    let mut listed: Vec<Vec<Arc>> = p
        .enumerate_sms()
        .iter()
        .map(|c| c.arcs().to_vec())
        .collect();
    listed.sort();
    r.check(listed == brute, || {
        format!(
            "({}, {}): {} enumerated vs {} by brute force",
            p.w(),
            n,
            listed.len(),
            brute.len()
        )
    });
}

/// A₂, A₃ and one heart per parameter pair (the example heart at (6,5)).
fn class_models(grid: &[CatParams]) -> Result<Vec<AbelianModel>, String> {
    let mut out = vec![
        AbelianModel::from_quiver(Quiver::linear_a(2)).map_err(|e| e.to_string())?,
        AbelianModel::from_quiver(Quiver::linear_a(3)).map_err(|e| e.to_string())?,
    ];
    for p in grid {
        let am = Shared::new(ArcModel::new(*p).map_err(|e| e.to_string())?);
        let c = if (p.w(), p.n()) == (6, 5) {
            SmsCandidate::new(p, SA.iter().map(|&a| Arc::from(a))).map_err(|e| e.to_string())?
        } else {
            p.enumerate_sms()
                .into_iter()
                .next()
                .ok_or("no simple-minded system")?
        };
        out.push(AbelianModel::from_sms(am, &c).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn samples(m: &AbelianModel) -> Vec<ClassA> {
    let mut rng = StdRng::seed_from_u64(0x5eed ^ m.len() as u64);
    let full = m.all().bits();
    (0..SAMPLES)
        .map(|_| ClassA::from_bits(rng.gen::<u64>() & full))
        .collect()
}

fn star_laws(r: &mut Suite, m: &AbelianModel) {
    for s in samples(m) {
        let layer = |k| m.layers(s, k).expect("within bounds");
        for total in 2..=4 {
            for split in 1..total {
                r.check(
                    layer(total) == m.star_a(layer(split), layer(total - split)),
                    || {
                        format!(
                            "{m}: layers of {:?}, {split}+{}",
                            m.labels_of(s),
                            total - split
                        )
                    },
                );
            }
        }
        let f = m.filt(s).expect("within bounds");
        r.check(m.star_a(f, f).is_subset(f), || {
            format!("{m}: filt not extension closed")
        });
        let g = m.filt(m.gen(s)).expect("within bounds");
        r.check(m.gen(g).is_subset(g), || {
            format!("{m}: filt(gen) not quotient closed")
        });
        let h = m.filt(m.sub(s)).expect("within bounds");
        r.check(m.sub(h).is_subset(h), || {
            format!("{m}: filt(sub) not subobject closed")
        });
    }
}

fn perp_laws(r: &mut Suite, m: &AbelianModel) {
    for s in samples(m) {
        let f = m.filt(s).expect("within bounds");
        let rp = m.perp_right(s);
        let lp = m.perp_left(s);
        r.check(rp == m.perp_right(m.gen(s)), || {
            format!("{m}: S^⊥ = Gen(S)^⊥")
        });
        r.check(rp == m.perp_right(f), || format!("{m}: S^⊥ = ⟨S⟩^⊥"));
        r.check(lp == m.perp_left(m.sub(s)), || {
            format!("{m}: ^⊥S = ^⊥Sub(S)")
        });
        r.check(lp == m.perp_left(f), || format!("{m}: ^⊥S = ^⊥⟨S⟩"));
        let t = m.filt(m.gen(s)).expect("within bounds");
        let ok = m.torsion_pair(t).is_ok_and(|p| p.torsion_free == rp);
        r.check(ok, || format!("{m}: (⟨Gen S⟩, S^⊥) is not a torsion pair"));
        let fr = m.filt(m.sub(s)).expect("within bounds");
        let ok = m.torsion_pair(lp).is_ok_and(|p| p.torsion_free == fr);
        r.check(ok, || format!("{m}: (^⊥S, ⟨Sub S⟩) is not a torsion pair"));
    }
}

fn bijection(r: &mut Suite, m: &AbelianModel) {
    let pairs = match nested_pairs(m) {
        Ok(p) => p,
        Err(e) => return r.check(false, || e.to_string()),
    };
    for p in pairs {
        let ok = phi_inv(m, p).and_then(|t| phi(m, t)).is_ok_and(|q| q == p);
        r.check(ok, || format!("{m}: round trip fails on {:?}", p));
    }
}

fn example(r: &mut Suite, grid: &[CatParams]) {
    if !grid.iter().any(|p| (p.w(), p.n()) == (6, 5)) {
        r.skipped = Some("the bundled example lives at (6, 5)".into());
        return;
    }
    let s = parse(EXAMPLE, "bundled example").expect("bundled scenario parses");
    let rep = run_scenario(&s);
    r.check(rep.status == Status::Pass, || {
        "bundled scenario does not pass".into()
    });
    r.check(rep.to_json() == run_scenario(&s).to_json(), || {
        "report is not deterministic".into()
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_params_pass() {
        let r = selftest(None, Some((2, 3))).unwrap();
        assert_eq!(r.status, Status::Pass, "{}", r.to_json());
    }

    #[test]
    fn single_suite() {
        let r = selftest(Some("serre"), None).unwrap();
        assert_eq!(r.value["selftest"].as_object().unwrap().len(), 1);
        assert_eq!(r.value["selftest"]["serre"]["checks"], 100 * 100 + 15 * 15);
        assert!(selftest(Some("nope"), None).is_err());
    }
}
