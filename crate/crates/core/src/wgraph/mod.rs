//! W-graphs, their validation, the two directions of the correspondence
//! between W-graphs and Ω-modules, and the symmetries δ and diagram
//! automorphisms on both sides.

mod fixtures;
mod graph;
mod module;

pub use fixtures::{dihedral_graph, fixture_catalog, reflection_chain_graph, single_vertex_graph, Fixture};
pub use graph::{Condition1Violation, WGraph, WGraphReport};
pub use module::{module_to_wgraph, wgraph_to_module, ModuleCheck, OmegaModule};

use crate::coxeter::CoxeterError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WGraphError {
    #[error("matrix size mismatch: {0}")]
    SizeMismatch(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("cannot parse W-graph: {0}")]
    Parse(String),
    #[error("weight m^{s}_{{{x},{y}}} is nonzero but {s} is not in I({x}) \\ I({y})")]
    Condition1 { x: String, y: String, s: String },
    #[error("chosen bases have {got} vectors in total, the module has dimension {want}")]
    BasisMismatch { got: usize, want: usize },
    #[error("the module violates a defining relation: {0}")]
    RelatorViolation(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}
