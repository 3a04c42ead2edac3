//! Finite abelian categories of type A: the hearts `⟨S⟩` of simple-minded
//! systems, realized as quiver representations, and operations on classes of
//! indecomposables (generation, perpendiculars, extension closure, torsion
//! pairs).

mod classes;
mod model;

pub use classes::{ClassA, Filtration, TorsionPair};
pub use model::{AbelianModel, Indec, SesProfile, MAX_INDECS};
