//! Exact solvers and verification engines for the monochromatic clique
//! transversal game in its biased Maker-Breaker formulation.

pub mod closed_forms;
pub mod enumerate;
pub mod error;
pub mod game;
pub mod graph;
pub mod hypergraph;
pub mod invariants;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::Graph;
pub use hypergraph::Hypergraph;
pub use vertex_set::VertexSet;
