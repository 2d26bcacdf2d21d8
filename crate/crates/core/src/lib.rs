//! Connectivity-preserving Hamiltonian cycles in Dirac graphs.
//!
//! Given a `k`-connected graph with minimum degree at least `n/2`, the
//! [`preserve`] module extracts one or more edge-disjoint Hamiltonian cycles
//! whose removal leaves the graph `k`-connected, and records every
//! intermediate witness in a [`PreserveCertificate`]. The [`oracle`] module
//! re-checks certificates and small cases by brute force without touching the
//! constructive code.

pub mod bitset;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod hamilton;
pub mod instances;
pub mod io;
pub mod oracle;
pub mod connectivity;
pub mod pairs;
pub mod preserve;
pub mod rng;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{DegreeProfile, Edge, EdgeSet, Graph, Subgraph, Vertex};
pub use pairs::{EdgePair, PairCondition};
pub use preserve::PreserveCertificate;
