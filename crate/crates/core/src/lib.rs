//! Spanning theta subgraphs, Hamiltonicity and forbidden induced subgraphs in
//! claw-free graphs, with the unfoldment correspondence to multigraphs and a
//! verification harness over enumerated graph classes.

pub mod codec;
pub mod connectivity;
pub mod enumerate;
pub mod error;
pub mod families;
pub mod forbidden;
pub mod graph;
pub mod harness;
pub mod hamilton;
pub mod metrics;
pub mod multigraph;
mod search;
pub mod theta;
pub mod unfold;

pub use error::{Error, Result};
pub use graph::{Link, SimpleGraph, VertexSet, MAX_VERTICES};
