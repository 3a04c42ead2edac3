//! Choosing the corner labelling of the polygon from known data.

use std::sync::Arc as Shared;

use super::setup::SetupPair;
use crate::abelian::AbelianModel;
use crate::error::{Error, Result};
use crate::orbit::{Arc, ArcModel, CatParams, Labeling, SmsCandidate};

/// Expected `E0`, `E1`, `E2` as sorted diagonal lists.
pub type ExpectedEsets = [Vec<Arc>; 3];

/// Outcome of trying one labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Trial {
    Matches,
    Differs,
    /// The inputs are not simple-minded systems, or the setup fails.
    Rejected(String),
}

/// Computes the E-sets of `(⟨sa⟩, ⟨sb⟩)` under `labeling`.
pub fn esets_under(
    params: &CatParams,
    labeling: Labeling,
    sa: &[Arc],
    sb: &[Arc],
) -> Result<ExpectedEsets> {
    let am = Shared::new(ArcModel::with_labeling(*params, labeling)?);
    let ca = SmsCandidate::new(params, sa.iter().copied())?;
    let cb = SmsCandidate::new(params, sb.iter().copied())?;
    let a = Shared::new(AbelianModel::from_sms(am.clone(), &ca)?);
    let b = Shared::new(AbelianModel::from_sms(am, &cb)?);
    let pair = SetupPair::new(a.clone(), b)?;
    let td = pair.compute_esets()?;
    Ok([a.arcs_of(td.e0), a.arcs_of(td.e1), a.arcs_of(td.e2)])
}

pub fn try_labeling(
    params: &CatParams,
    labeling: Labeling,
    sa: &[Arc],
    sb: &[Arc],
    expected: &ExpectedEsets,
) -> Trial {
    match esets_under(params, labeling, sa, sb) {
        Ok(got) => {
            let mut exp = expected.clone();
            exp.iter_mut().for_each(|v| v.sort_unstable());
            if got == exp {
                Trial::Matches
            } else {
                Trial::Differs
            }
        }
        Err(e) => Trial::Rejected(e.to_string()),
    }
}

/// Every dihedral labelling reproducing `expected`. Rotations commute with
/// the shift functor, so matches come in full rotation classes.
pub fn calibrate(
    params: &CatParams,
    sa: &[Arc],
    sb: &[Arc],
    expected: &ExpectedEsets,
) -> Result<Vec<Labeling>> {
    let hits: Vec<Labeling> = Labeling::all(params)
        .into_iter()
        .filter(|&l| try_labeling(params, l, sa, sb, expected) == Trial::Matches)
        .collect();
    if hits.is_empty() {
        return Err(Error::ModelConvention(
            "no corner labelling reproduces the expected E-sets".into(),
        ));
    }
    Ok(hits)
}
