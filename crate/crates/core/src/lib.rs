//! Exact computation of the W-graph algebra Ω of a finite Coxeter system as a
//! quotient of the path algebra on subsets of S, together with W-graph
//! validation, the W-graph ↔ Ω-module correspondence and mechanical checks of
//! the decomposition properties Z1–Z4.

pub mod arith;
pub mod coxeter;
pub mod linalg;
pub mod pathalg;
pub mod omega;
pub mod wgraph;
pub mod decomp;
pub mod cli;
