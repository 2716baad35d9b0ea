//! The free path algebra Ξ on the full quiver of subsets of S, the
//! compatibility graph Q_W, the distinguished elements E_I, X_IJ^s,
//! P^r_IJ(s,t), ι(T_s), and the α/β relator families.

mod element;
mod export;
mod quiver;
mod relators;

pub use element::{Path, PathElement};
pub use export::{compat_graph_dot, compat_graph_json};
pub use quiver::{Arrow, CompatEdge, CompatGraph, EdgeKind, Quiver};
pub use relators::{
    all_relators, alpha_relators, beta_relators, definitional_relators, iota_t, p_element, Relator, RelatorKind,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PathError {
    #[error("rank {0} is too large for the subset quiver (at most 5)")]
    RankTooLarge(usize),
    #[error("no arrow {head} <- {tail} tagged {tag}: the tag must lie in head \\ tail")]
    InvalidEdge { head: String, tail: String, tag: String },
    #[error("relators need two distinct generators")]
    SameGenerator,
}
