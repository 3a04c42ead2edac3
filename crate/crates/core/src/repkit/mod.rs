//! Quiver representations over F2.

pub mod gf2;
pub mod quiver;
pub mod rep;

pub use gf2::BitMatrix;
pub use quiver::Quiver;
pub use rep::{
    decompose, enumerate_subreps, euler_form, ext1_dim, hom_basis, hom_dim,
    interval_multiplicities, is_isomorphic, quotient, reject, trace, Morphism, Rep, SubRep,
    DEFAULT_SUBREP_BOUND,
};
