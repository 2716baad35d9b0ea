//! Coxeter systems, character data of the supported types, and Hecke-relation
//! checks over matrices of Laurent polynomials.

mod hecke;
mod irr;
mod system;

pub use hecke::{
    braid_commutator, check_hecke_rep, eval_int_poly, hecke_generator_matrix, verify_braid_factorization,
    BraidFactorizationReport, HeckeReport, RelationCheck, SquareMatrix,
};
pub use irr::{dominates, irr_data, IrrData, B3_VANISHING_INCLUSIONS};
pub use system::{build_system, CoxeterSystem, TypeTag};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoxeterError {
    #[error("unknown Coxeter type {0:?}")]
    UnknownType(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("type {0} is not supported by this operation")]
    Unsupported(String),
    #[error("matrix dimensions do not match")]
    DimensionMismatch,
    #[error("precondition violated: {0}")]
    Precondition(String),
}
