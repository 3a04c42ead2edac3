//! Negative cluster categories of type A, their simple-minded systems, the
//! abelian subcategories they generate, and torsion triples inside those.
//!
//! The crate is layered bottom-up:
//!
//! * [`repkit`] — exact linear algebra over F2 for quiver representations;
//! * [`derived`] — closed-form combinatorics of the bounded derived category of
//!   linearly oriented A_n (with a small chain-complex engine for cones);
//! * [`orbit`] — the orbit category, its polygon model, Hom spaces and
//!   triangulated star membership;
//! * [`abelian`] — the abelian category generated by a simple-minded system,
//!   modelled as representations of its Ext-quiver;
//! * [`torsion3`] — the setup conditions, E-sets, three-step filtrations and the
//!   triple/pair bijection.

pub mod abelian;
pub mod derived;
pub mod error;
pub mod orbit;
pub mod repkit;
pub mod torsion3;

pub use abelian::{AbelianModel, ClassA, Filtration, TorsionPair};
pub use derived::{DbIndec, DbObject, Interval, LinearA};
pub use error::{Error, Result};
pub use orbit::{Arc, ArcModel, CObject, CatParams, Labeling, SmsCandidate, SmsVerdict};
pub use repkit::{BitMatrix, Morphism, Quiver, Rep, SubRep};
pub use torsion3::{SetupPair, SetupReport, TorsionData, TriplePartition};
