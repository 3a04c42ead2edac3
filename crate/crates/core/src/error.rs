use thiserror::Error;

use crate::orbit::Arc;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),
    #[error("dimension vector has length {found}, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("representations live over different quivers")]
    QuiverMismatch,
    #[error("invalid representation: {0}")]
    InvalidRep(String),
    #[error("subspace family is not closed under the arrow maps")]
    NotArrowStable,
    #[error("total dimension {found} exceeds the enumeration bound {bound}")]
    BoundExceeded { bound: usize, found: usize },
    #[error("unsupported quiver: {0}")]
    UnsupportedQuiver(String),
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
    #[error("invalid category parameters: {0}")]
    InvalidParams(String),
    #[error("arc ({}, {}) rejected: {reason}", .arc.a, .arc.b)]
    InvalidArc { arc: Arc, reason: String },
    #[error("no nonzero morphism between the given objects")]
    NoMap,
    #[error("connecting Hom space is zero; no nonsplit extension")]
    NoExtension,
    #[error("connecting Hom space is spread over {components} orbit components")]
    MultiComponent { components: usize },
    #[error("model convention error: {0}")]
    ModelConvention(String),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),
    #[error("axiom violation: {0}")]
    AxiomViolation(String),
    #[error("object is not in the subcategory: {0}")]
    NotInCategory(String),
    #[error("not a simple-minded system: {0}")]
    NotSms(String),
    #[error("model error: {0}")]
    Model(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
}
