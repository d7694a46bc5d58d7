//! Drug repurposing over a four-layered heterogeneous graph.
//!
//! The pipeline builds a drug / disease / gene / anatomy graph from edge
//! triples, encodes every node with a diffusion-based feed-forward network,
//! scores drug-disease pairs with a learnable bilinear form, and ranks
//! candidate drugs per disease. A non-neural network-proximity baseline over
//! the gene interactome is included for comparison.

pub mod error;
pub mod eval;
pub mod graph;
pub mod ingest;
pub mod model;
pub mod proximity;
pub mod sparse;
pub mod synthetic;
pub mod train;

pub use error::{Error, Result};
pub use graph::{EntityKind, HeteroGraph, NodeId, TypedEdge};
pub use sparse::SparseMatrix;
