//! Torsion triples versus nested pairs of torsion pairs.

use crate::abelian::{AbelianModel, ClassA, TorsionPair};
use crate::error::{Error, Result};

/// Largest model for which torsion classes are enumerated.
pub const MAX_ENUMERATION_INDECS: usize = 20;

/// Checks `(s0, s1, s2)` is a torsion triple: `Hom(S_i, S_j) = 0` for
/// `i < j`, and every indecomposable lies in `S0 ∗ S1 ∗ S2`.
pub fn check_triple(model: &AbelianModel, t: [ClassA; 3]) -> Result<()> {
    for i in 0..3 {
        for j in i + 1..3 {
            for s in t[i].iter() {
                for u in t[j].iter() {
                    if model.hom(s, u) != 0 {
                        return Err(Error::AxiomViolation(format!(
                            "Hom(S{i}, S{j}) contains a nonzero map {} -> {}",
                            model.label(s),
                            model.label(u)
                        )));
                    }
                }
            }
        }
    }
    let span = model.star_a(model.star_a(t[0], t[1]), t[2]);
    if span != model.all() {
        let missing = model.all().minus(span);
        return Err(Error::AxiomViolation(format!(
            "{:?} not in S0 ∗ S1 ∗ S2",
            model.labels_of(missing)
        )));
    }
    Ok(())
}

fn check_pair(model: &AbelianModel, p: TorsionPair) -> Result<()> {
    let q = model.torsion_pair(p.torsion)?;
    if q != p {
        return Err(Error::AxiomViolation(format!(
            "torsion-free part {:?} is not the right perpendicular",
            model.labels_of(p.torsion_free)
        )));
    }
    Ok(())
}

/// `(S0, S1, S2) -> [(S0, S1 ∗ S2), (S0 ∗ S1, S2)]`.
pub fn phi(model: &AbelianModel, t: [ClassA; 3]) -> Result<[TorsionPair; 2]> {
    check_triple(model, t)?;
    let low = TorsionPair {
        torsion: t[0],
        torsion_free: model.star_a(t[1], t[2]),
    };
    let high = TorsionPair {
        torsion: model.star_a(t[0], t[1]),
        torsion_free: t[2],
    };
    check_pair(model, low)?;
    check_pair(model, high)?;
    Ok([low, high])
}

/// `[(T, F), (T', F')] -> (T, F ∩ T', F')` for `T ⊆ T'`.
pub fn phi_inv(model: &AbelianModel, p: [TorsionPair; 2]) -> Result<[ClassA; 3]> {
    check_pair(model, p[0])?;
    check_pair(model, p[1])?;
    if !p[0].torsion.is_subset(p[1].torsion) {
        return Err(Error::AxiomViolation(
            "torsion classes are not nested".into(),
        ));
    }
    Ok([
        p[0].torsion,
        p[0].torsion_free.intersect(p[1].torsion),
        p[1].torsion_free,
    ])
}

fn check_size(model: &AbelianModel) -> Result<()> {
    if model.len() > MAX_ENUMERATION_INDECS {
        return Err(Error::BoundExceeded {
            bound: MAX_ENUMERATION_INDECS,
            found: model.len(),
        });
    }
    Ok(())
}

/// All torsion classes, as sorted bitsets.
pub fn enumerate_torsion_classes(model: &AbelianModel) -> Result<Vec<ClassA>> {
    check_size(model)?;
    Ok((0..1u64 << model.len())
        .map(ClassA::from_bits)
        .filter(|&c| model.is_torsion_class(c))
        .collect())
}

/// All torsion-free classes, as sorted bitsets.
pub fn enumerate_torsion_free_classes(model: &AbelianModel) -> Result<Vec<ClassA>> {
    check_size(model)?;
    Ok((0..1u64 << model.len())
        .map(ClassA::from_bits)
        .filter(|&c| model.is_torsion_free_class(c))
        .collect())
}

/// The smallest torsion class containing `s`.
pub fn torsion_closure(model: &AbelianModel, s: ClassA) -> ClassA {
    let mut t = s;
    loop {
        let next = model.gen(t).union(model.star_a(t, t));
        if next == t {
            return t;
        }
        t = next;
    }
}

/// All pairs of torsion pairs `(T, F), (T', F')` with `T ⊆ T'`.
pub fn nested_pairs(model: &AbelianModel) -> Result<Vec<[TorsionPair; 2]>> {
    let ts = enumerate_torsion_classes(model)?;
    let pairs: Vec<TorsionPair> = ts
        .iter()
        .map(|&t| model.torsion_pair(t))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    for p in &pairs {
        for q in &pairs {
            if p.torsion.is_subset(q.torsion) {
                out.push([*p, *q]);
            }
        }
    }
    Ok(out)
}
