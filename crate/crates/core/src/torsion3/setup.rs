use std::sync::Arc as Shared;

use serde::Serialize;

use crate::abelian::AbelianModel;
use crate::error::{Error, Result};
use crate::orbit::{Arc, ArcModel, CObject, StarOutcome, StarWitness};

/// Largest `n` checked for the vanishing condition `Hom(a, Σ^{-i} a') = 0`,
/// `1 <= i <= n`.
pub const E_DEPTH: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    /// Fail dominates inconclusive, which dominates pass.
    pub fn and(self, o: Status) -> Status {
        use Status::*;
        match (self, o) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }
}

/// A nonzero `Hom(source, Σ^{-shift} target)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct HomWitness {
    pub source: Arc,
    pub target: Arc,
    pub shift: usize,
}

/// Largest `n <= E_DEPTH` such that the model satisfies `E_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnCheck {
    pub holds_up_to: usize,
    pub witness: Option<HomWitness>,
    pub status: Status,
}

/// Decomposition of `x` along `first ∗ second ∗ third`: `outer` splits `x`
/// over `(first ∗ second) ∗ third`, `inner` splits each summand of `outer.u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SandwichWitness {
    pub x: Arc,
    pub outer: StarWitness,
    pub inner: Vec<StarWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SandwichCheck {
    pub status: Status,
    pub missing: Vec<Arc>,
    pub inconclusive: Vec<Arc>,
    pub witnesses: Vec<SandwichWitness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SetupReport {
    pub e_a: EnCheck,
    pub e_b: EnCheck,
    /// `A ⊆ B ∗ Σ⁻¹B ∗ Σ⁻²B`
    pub a_in_b: SandwichCheck,
    /// `B ⊆ Σ²A ∗ ΣA ∗ A`
    pub b_in_a: SandwichCheck,
}

impl SetupReport {
    pub fn status(&self) -> Status {
        self.e_a
            .status
            .and(self.e_b.status)
            .and(self.a_in_b.status)
            .and(self.b_in_a.status)
    }

    pub fn passed(&self) -> bool {
        self.status() == Status::Pass
    }
}

/// Two hearts of the same category satisfying the vanishing and sandwich
/// conditions.
#[derive(Clone, Debug)]
pub struct SetupPair {
    a: Shared<AbelianModel>,
    b: Shared<AbelianModel>,
    report: SetupReport,
}

fn shared_arc_model<'m>(a: &'m AbelianModel, b: &AbelianModel) -> Result<&'m Shared<ArcModel>> {
    match (a.arc_model(), b.arc_model()) {
        (Some(x), Some(y)) if x.params() == y.params() && x.labeling() == y.labeling() => Ok(x),
        (Some(_), Some(_)) => Err(Error::InvalidParams(
            "the two models live in different categories".into(),
        )),
        _ => Err(Error::InvalidParams(
            "models must be generated by simple-minded systems".into(),
        )),
    }
}

pub fn check_en(am: &ArcModel, arcs: &[Arc]) -> EnCheck {
    for i in 1..=E_DEPTH {
        for &x in arcs {
            for &y in arcs {
                if am.hom(x, am.shift_arc(y, -(i as i64))) != 0 {
                    return EnCheck {
                        holds_up_to: i - 1,
                        witness: Some(HomWitness {
                            source: x,
                            target: y,
                            shift: i,
                        }),
                        status: Status::Fail,
                    };
                }
            }
        }
    }
    EnCheck {
        holds_up_to: E_DEPTH,
        witness: None,
        status: Status::Pass,
    }
}

/// Checks every arc of `xs` lies in `first ∗ second ∗ third`.
pub fn check_sandwich(
    am: &ArcModel,
    xs: &[Arc],
    first: &[Arc],
    second: &[Arc],
    third: &[Arc],
) -> Result<SandwichCheck> {
    let w = am.star_class(first, second)?;
    let mut out = SandwichCheck {
        status: Status::Pass,
        missing: Vec::new(),
        inconclusive: Vec::new(),
        witnesses: Vec::new(),
    };
    for &x in xs {
        match am.star_membership(&CObject::indec(x), &w.members, third)? {
            StarOutcome::Member(outer) => {
                let inner = outer
                    .u
                    .summands()
                    .iter()
                    .map(|s| w.witnesses[s].clone())
                    .collect();
                out.witnesses.push(SandwichWitness { x, outer, inner });
            }
            // a missing middle class member could still have produced x
            StarOutcome::Absent if !w.is_decided() => out.inconclusive.push(x),
            StarOutcome::Absent => out.missing.push(x),
            StarOutcome::Inconclusive(_) => out.inconclusive.push(x),
        }
    }
    out.status = if !out.missing.is_empty() {
        Status::Fail
    } else if !out.inconclusive.is_empty() {
        Status::Inconclusive
    } else {
        Status::Pass
    };
    Ok(out)
}

/// Runs all four setup checks on `(A, B)`.
pub fn check_setup(a: &AbelianModel, b: &AbelianModel) -> Result<SetupReport> {
    let am = shared_arc_model(a, b)?;
    let (sa, sb) = (a.arcs(), b.arcs());
    let b1 = am.shift_set(&sb, -1);
    let b2 = am.shift_set(&sb, -2);
    let a1 = am.shift_set(&sa, 1);
    let a2 = am.shift_set(&sa, 2);
    Ok(SetupReport {
        e_a: check_en(am, &sa),
        e_b: check_en(am, &sb),
        a_in_b: check_sandwich(am, &sa, &sb, &b1, &b2)?,
        b_in_a: check_sandwich(am, &sb, &a2, &a1, &sa)?,
    })
}

impl SetupPair {
    /// Checks the setup; a failed condition is an [`Error::AxiomViolation`],
    /// an undecided one an [`Error::Inconclusive`].
    pub fn new(a: Shared<AbelianModel>, b: Shared<AbelianModel>) -> Result<Self> {
        let report = check_setup(&a, &b)?;
        match report.status() {
            Status::Pass => Ok(SetupPair { a, b, report }),
            Status::Fail => Err(Error::AxiomViolation(describe_failure(&report))),
            Status::Inconclusive => Err(Error::Inconclusive(
                "a sandwich condition could not be decided".into(),
            )),
        }
    }

    pub fn a(&self) -> &Shared<AbelianModel> {
        &self.a
    }

    pub fn b(&self) -> &Shared<AbelianModel> {
        &self.b
    }

    pub fn arc_model(&self) -> &Shared<ArcModel> {
        self.a.arc_model().expect("checked at construction")
    }

    pub fn report(&self) -> &SetupReport {
        &self.report
    }
}

fn describe_failure(r: &SetupReport) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("A", &r.e_a), ("B", &r.e_b)] {
        if let Some(w) = e.witness {
            parts.push(format!(
                "{name} satisfies only E{}: Hom({}, Σ^-{} {}) != 0",
                e.holds_up_to, w.source, w.shift, w.target
            ));
        }
    }
    if let Some(x) = r.a_in_b.missing.first() {
        parts.push(format!("{x} of A is not in B ∗ Σ⁻¹B ∗ Σ⁻²B"));
    }
    if let Some(x) = r.b_in_a.missing.first() {
        parts.push(format!("{x} of B is not in Σ²A ∗ ΣA ∗ A"));
    }
    parts.join("; ")
}
