use std::collections::BTreeSet;

use serde::Serialize;

use super::setup::SetupPair;
use crate::abelian::{AbelianModel, ClassA, TorsionPair};
use crate::error::{Error, Result};
use crate::orbit::{Arc, CObject};
use crate::repkit::{enumerate_subreps, quotient, Rep, SubRep, DEFAULT_SUBREP_BOUND};

/// The three classes of the torsion triple in `A` together with the two
/// torsion pairs they determine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TorsionData {
    pub e0: ClassA,
    pub e1: ClassA,
    pub e2: ClassA,
    /// `(E0, E0^⊥)`
    pub pair_low: TorsionPair,
    /// `(^⊥E2, E2)`
    pub pair_high: TorsionPair,
}

impl TorsionData {
    pub fn classes(&self) -> [ClassA; 3] {
        [self.e0, self.e1, self.e2]
    }
}

/// `0 = x0 ⊆ x1 ⊆ x2 ⊆ x3 = x` with `x_{i+1}/x_i ∈ add E_i`.
#[derive(Clone, Debug)]
pub struct TriplePartition {
    pub object: Rep,
    pub chain: [SubRep; 4],
    pub quotients: [Rep; 3],
}

/// A [`TriplePartition`] up to isomorphism: dimension vectors of the chain
/// and the summand labels of each quotient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ChainShape {
    pub dims: Vec<Vec<usize>>,
    pub quotients: Vec<Vec<String>>,
}

impl TriplePartition {
    pub fn shape(&self, model: &AbelianModel) -> Result<ChainShape> {
        Ok(ChainShape {
            dims: self.chain.iter().map(SubRep::dims).collect(),
            quotients: self
                .quotients
                .iter()
                .map(|q| model.label_multiset(q))
                .collect::<Result<_>>()?,
        })
    }

    /// Diagonals of each chain term, with multiplicity.
    pub fn chain_arcs(&self, model: &AbelianModel) -> Result<Vec<Vec<Arc>>> {
        self.chain
            .iter()
            .map(|s| model.arc_multiset(&s.to_rep(&self.object)))
            .collect()
    }

    pub fn quotient_arcs(&self, model: &AbelianModel) -> Result<Vec<Vec<Arc>>> {
        self.quotients
            .iter()
            .map(|q| model.arc_multiset(q))
            .collect()
    }
}

fn identity_check(name: &str, lhs: ClassA, rhs: ClassA, model: &AbelianModel) -> Result<()> {
    if lhs == rhs {
        return Ok(());
    }
    Err(Error::Model(format!(
        "{name} fails: {:?} vs {:?}",
        model.labels_of(lhs),
        model.labels_of(rhs)
    )))
}

impl SetupPair {
    /// Builds `E0`, `E1`, `E2` and both torsion pairs, checking the
    /// perpendicular identities against star classes of the category.
    pub fn compute_esets(&self) -> Result<TorsionData> {
        let (a, b, am) = (self.a(), self.b(), self.arc_model());
        let sb = b.arcs();
        let b1 = am.shift_set(&sb, -1);
        let b2 = am.shift_set(&sb, -2);
        let a_b = a.class_of_arcs(&sb);
        let a_b2 = a.class_of_arcs(&b2);
        let e0 = a.filt(a.gen(a_b))?;
        let e1 = a.class_of_arcs(&b1);
        let e2 = a.filt(a.sub(a_b2))?;

        let star_in_a = |u: &[Arc], v: &[Arc]| -> Result<ClassA> {
            let s = am.star_class(u, v)?;
            if !s.is_decided() {
                return Err(Error::Inconclusive(format!(
                    "star class membership undecided for {} objects",
                    s.inconclusive.len()
                )));
            }
            Ok(a.class_of_arcs(&s.members))
        };
        let low_f = a.perp_right(e0);
        identity_check("E0^⊥ = (A∩B)^⊥", low_f, a.perp_right(a_b), a)?;
        identity_check("E0^⊥ = A ∩ (Σ⁻¹B ∗ Σ⁻²B)", low_f, star_in_a(&b1, &b2)?, a)?;
        let high_t = a.perp_left(e2);
        identity_check("^⊥E2 = ^⊥(A∩Σ⁻²B)", high_t, a.perp_left(a_b2), a)?;
        identity_check("^⊥E2 = A ∩ (B ∗ Σ⁻¹B)", high_t, star_in_a(&sb, &b1)?, a)?;

        let pair_low = a.torsion_pair(e0)?;
        let pair_high = a.torsion_pair(high_t)?;
        identity_check("(^⊥E2)^⊥ = E2", pair_high.torsion_free, e2, a)?;
        Ok(TorsionData {
            e0,
            e1,
            e2,
            pair_low,
            pair_high,
        })
    }
}

/// The canonical filtration: `x2` is the torsion part of `x` for the upper
/// pair, `x1` the torsion part of `x2` for the lower one.
pub fn filter_object(
    model: &AbelianModel,
    td: &TorsionData,
    x: &CObject,
) -> Result<TriplePartition> {
    let rep = model
        .member(x)
        .ok_or_else(|| Error::NotInCategory(format!("{x} is not an object of the heart")))?;
    filter_rep(model, td, &rep)
}

pub fn filter_rep(model: &AbelianModel, td: &TorsionData, rep: &Rep) -> Result<TriplePartition> {
    let x2 = model.torsion_part(td.pair_high.torsion, rep)?;
    let r2 = x2.to_rep(rep);
    let x1 = x2.extend(&model.torsion_part(td.e0, &r2)?);
    let q0 = x1.to_rep(rep);
    let q1 = quotient(&r2, &x2.restrict(&x1)?)?;
    let q2 = quotient(rep, &x2)?;
    let part = TriplePartition {
        object: rep.clone(),
        chain: [SubRep::zero(rep), x1, x2, SubRep::full(rep)],
        quotients: [q0, q1, q2],
    };
    for (i, (q, e)) in part.quotients.iter().zip(td.classes()).enumerate() {
        if !model.class_contains(e, q)? {
            return Err(Error::Model(format!(
                "factor {i} has summands {:?} outside E{i}",
                model.label_multiset(q)?
            )));
        }
    }
    Ok(part)
}

/// Every chain `u ⊆ v ⊆ x` of subobjects with `u ∈ add E0`, `v/u ∈ add E1`,
/// `x/v ∈ add E2`, found by exhausting the subobject lattice.
pub fn brute_force_filtrations(
    model: &AbelianModel,
    td: &TorsionData,
    rep: &Rep,
) -> Result<Vec<TriplePartition>> {
    let subs = enumerate_subreps(rep, DEFAULT_SUBREP_BOUND)?;
    let mut out = Vec::new();
    for v in &subs {
        let q2 = quotient(rep, v)?;
        if !model.class_contains(td.e2, &q2)? {
            continue;
        }
        let rv = v.to_rep(rep);
        for u in subs.iter().filter(|u| v.contains(u)) {
            let q0 = u.to_rep(rep);
            if !model.class_contains(td.e0, &q0)? {
                continue;
            }
            let q1 = quotient(&rv, &v.restrict(u)?)?;
            if !model.class_contains(td.e1, &q1)? {
                continue;
            }
            out.push(TriplePartition {
                object: rep.clone(),
                chain: [SubRep::zero(rep), u.clone(), v.clone(), SubRep::full(rep)],
                quotients: [q0, q1, q2.clone()],
            });
        }
    }
    Ok(out)
}

/// Number of isomorphism classes among the given chains.
pub fn distinct_shapes(model: &AbelianModel, parts: &[TriplePartition]) -> Result<usize> {
    let shapes: BTreeSet<ChainShape> = parts
        .iter()
        .map(|p| p.shape(model))
        .collect::<Result<_>>()?;
    Ok(shapes.len())
}

/// A nonzero `Hom(E_i, E_j)` with `i < j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalityWitness {
    pub from_class: usize,
    pub to_class: usize,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TripleReport {
    pub orthogonality: Option<OrthogonalityWitness>,
    /// Indecomposables of `A` without a valid three-step filtration.
    pub undecomposed: Vec<String>,
    pub checked: usize,
}

impl TripleReport {
    pub fn passed(&self) -> bool {
        self.orthogonality.is_none() && self.undecomposed.is_empty()
    }
}

/// Checks `Hom(E_i, E_j) = 0` for `i < j` and that every indecomposable of the
/// model filters through `E0 ∗ E1 ∗ E2`.
pub fn verify_triple(model: &AbelianModel, td: &TorsionData) -> Result<TripleReport> {
    let cls = td.classes();
    let mut orthogonality = None;
    'search: for i in 0..3 {
        for j in i + 1..3 {
            for s in cls[i].iter() {
                for t in cls[j].iter() {
                    if model.hom(s, t) != 0 {
                        orthogonality = Some(OrthogonalityWitness {
                            from_class: i,
                            to_class: j,
                            source: model.label(s),
                            target: model.label(t),
                        });
                        break 'search;
                    }
                }
            }
        }
    }
    let mut undecomposed = Vec::new();
    for y in 0..model.len() {
        match filter_rep(model, td, model.rep(y)) {
            Ok(_) => {}
            Err(Error::Model(_)) => undecomposed.push(model.label(y)),
            Err(e) => return Err(e),
        }
    }
    Ok(TripleReport {
        orthogonality,
        undecomposed,
        checked: model.len(),
    })
}
