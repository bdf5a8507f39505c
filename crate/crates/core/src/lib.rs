//! Toolkit for censuses of planar cubic graphs.
//!
//! Reads plantri's planar_code output, classifies graphs by girth and cyclic
//! connectivity, decides hamiltonicity with a propagating backtrack solver,
//! and tests hypohamiltonicity with per-vertex certificates. The
//! [`pipeline`] module runs all of it over large streams and tallies counts
//! per vertex order.

pub mod codec;
pub mod dsu;
pub mod embedding;
pub mod fixtures;
pub mod graph;
pub mod grinberg;
pub mod hypo;
pub mod invariants;
pub mod pipeline;
pub mod solver;

pub use dsu::DisjointSetForest;
pub use embedding::{NotSphereEmbedding, PlanarEmbedding};
pub use graph::{Cherry, Graph, GraphError, Vertex, VertexDeletion};
