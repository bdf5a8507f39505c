//! Structural invariants: girth, faces, cyclic connectivity, automorphisms.

pub mod automorphism;
pub mod cyclic;
pub mod faces;
pub mod flow;
pub mod girth;

pub use automorphism::{automorphism_order, is_three_connected, AutomorphismError};
pub use cyclic::{cyclic_connectivity, cyclic_cut, CyclicConnectivity, CyclicCut, CyclicError, SeedScope};
pub use faces::{faces, faces_of_rotation, FaceVector};
pub use flow::{min_edge_cut, mincut_between, FlowError, UnitFlow};
pub use girth::girth;
