use serde::{Deserialize, Serialize};

use crate::graph::{Edge, Vertex};
use crate::pairs::EdgePair;

pub const SCHEMA: &str = "preserve-cert/1";

/// Which route produced the cycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// The first extracted cycles already leave a `k`-connected remainder.
    Direct,
    /// Cycles rebuilt around a minimum cut of the failed remainder.
    Repair,
    /// Exact-connectivity construction around a minimum cut of the input.
    Exact,
    /// Bounded exhaustive search, used only below the proven size bounds.
    Search,
}

/// Output cycles plus every witness needed to re-check them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PreserveCertificate {
    pub schema: String,
    /// SHA-256 of the canonical edge list of the input graph.
    pub input_hash: String,
    pub n: usize,
    pub k: usize,
    pub ell: usize,
    pub exact: bool,
    pub branch: Branch,
    pub cycles: Vec<Vec<Vertex>>,
    /// Edges withheld from every cycle.
    pub bridge: Vec<Edge>,
    pub cut: Vec<Vertex>,
    pub kappa_before: usize,
    pub kappa_after: usize,
    pub stage_log: Vec<String>,
    pub warnings: Vec<String>,
    pub structures: Option<Structures>,
}

/// Intermediate objects of the cut-based construction.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Structures {
    /// Cycles whose removal broke connectivity (empty in exact mode).
    pub initial_cycles: Vec<Vec<Vertex>>,
    pub p: usize,
    pub q: usize,
    pub k_prime: usize,
    pub side1: Vec<Vertex>,
    pub side2: Vec<Vertex>,
    pub window_ok: bool,
    pub bridge_paths: Vec<Vec<Vertex>>,
    /// Number of bridge paths with an internal cut vertex.
    pub k_double_prime: usize,
    pub w1: Vec<Vertex>,
    pub w2: Vec<Vertex>,
    pub m_h: Vec<Edge>,
    pub m_b: Vec<Edge>,
    pub u1: Vec<Vertex>,
    pub u2: Vec<Vertex>,
    pub q1: usize,
    pub q2: usize,
    pub w_star: Option<[Vertex; 2]>,
    pub q1_pairs: Vec<EdgePair>,
    /// Pairs of order-3 connectors `(u, w*, v)`.
    pub q2_paths: Vec<[[Vertex; 3]; 2]>,
    /// Per output cycle, the side-one and side-two Hamiltonian paths.
    pub side_paths: Vec<[Vec<Vertex>; 2]>,
}
