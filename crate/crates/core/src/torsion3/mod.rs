//! Torsion triples in a heart `A` from a second heart `B` of the same
//! category: the setup conditions, the classes `E0`, `E1`, `E2`, three-step
//! filtrations, and the correspondence with nested torsion pairs.

mod bijection;
mod calibrate;
mod esets;
mod setup;

pub use bijection::{
    check_triple, enumerate_torsion_classes, enumerate_torsion_free_classes, nested_pairs, phi,
    phi_inv, torsion_closure, MAX_ENUMERATION_INDECS,
};
pub use calibrate::{calibrate, esets_under, try_labeling, ExpectedEsets, Trial};
pub use esets::{
    brute_force_filtrations, distinct_shapes, filter_object, filter_rep, verify_triple, ChainShape,
    OrthogonalityWitness, TorsionData, TriplePartition, TripleReport,
};
pub use setup::{
    check_en, check_sandwich, check_setup, EnCheck, HomWitness, SandwichCheck, SandwichWitness,
    SetupPair, SetupReport, Status, E_DEPTH,
};

#[cfg(test)]
mod tests;
