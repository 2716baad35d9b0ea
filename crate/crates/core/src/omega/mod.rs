//! The finite-dimensional algebra kΩ computed as an explicit quotient of the
//! full path algebra, with its radical, the duality δ, diagram
//! automorphisms and the Hecke algebra embedding check.

mod algebra;
mod bundle;
mod engine;
mod hecke;
mod radical;

pub use algebra::{compute_quotient, AlgebraElement, QuotientAlgebra, QuotientOptions, QuotientStats, RelatorSource, Word};
pub use hecke::{hecke_embedding_check, HeckeEmbeddingReport, LaurentElement};
pub use radical::{radical, BlockRank, RadicalInfo};

use crate::pathalg::PathError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OmegaError {
    #[error(transparent)]
    Path(#[from] PathError),
    #[error("the quotient did not stabilize within path length {max_length} ({dim_so_far} words so far); raise --max-length or the quotient may be infinite-dimensional")]
    NotStabilized { max_length: usize, dim_so_far: usize },
    #[error("the vertex idempotent E_{{{0}}} became zero")]
    VertexCollapsed(String),
    #[error("gave up after {0} basis collapses")]
    TooManyCollapses(usize),
    #[error("no arrow {head} <- {tail}: {head} \\ {tail} is empty")]
    NoArrow { head: String, tail: String },
    #[error("{0} is not a diagram automorphism")]
    NotAutomorphism(String),
    #[error("thread pool: {0}")]
    ThreadPool(String),
}
