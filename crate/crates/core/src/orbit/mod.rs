//! The negative cluster category C_{-w}(A_n) = D^b(k A_n) / Σ^{w+1}τ and its
//! model by admissible diagonals of an N-gon.

mod arc;
mod model;
mod star;

pub use arc::{
    crosses, make_params, shares_endpoint, Arc, CObject, CatParams, SmsCandidate, SmsVerdict,
};
pub use model::{build_arc_model, ArcModel, Labeling};
pub use star::{StarClass, StarOutcome, StarWitness, DEFAULT_STAR_CANDIDATE_BOUND};
