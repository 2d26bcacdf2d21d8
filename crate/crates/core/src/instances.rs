//! Seeded instance generators.
//!
//! All randomness comes from [`Prng`], so a `(family, parameters, seed)`
//! triple always reproduces the same edge list.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::connectivity::{is_k_connected, kappa};
use crate::error::{domain, internal, Error, Result};
use crate::graph::{Graph, Vertex};
pub use crate::rng::Prng;

/// How the two sides of a barbell instance connect outside the planted cut.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossingMode {
    /// Sides touch only through the cut; cut vertices get the minimum
    /// attachment needed for the degree floor.
    Poor,
    /// Part of the cut is replaced by a zigzag path of direct side-to-side
    /// edges, and cut vertices attach densely to both sides.
    Rich,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Dirac,
    Barbell(CrossingMode),
    ChTight,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Dirac => f.write_str("dirac"),
            Family::Barbell(CrossingMode::Poor) => f.write_str("barbell"),
            Family::Barbell(CrossingMode::Rich) => f.write_str("barbell-rich"),
            Family::ChTight => f.write_str("ch-tight"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        match s {
            "dirac" => Ok(Family::Dirac),
            "barbell" | "barbell-poor" => Ok(Family::Barbell(CrossingMode::Poor)),
            "barbell-rich" => Ok(Family::Barbell(CrossingMode::Rich)),
            "ch-tight" => Ok(Family::ChTight),
            other => domain(format!("unknown family '{other}'")),
        }
    }
}

/// Full description of a generated instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub family: Family,
    pub n: usize,
    pub k: usize,
    pub ell: usize,
    pub seed: u64,
    pub surplus: usize,
}

impl InstanceSpec {
    pub fn generate(&self) -> Result<Graph> {
        match self.family {
            Family::Dirac => gen_dirac(self.n, self.seed, self.surplus),
            Family::Barbell(mode) => gen_barbell_dirac(self.n, self.k, self.seed, mode),
            Family::ChTight => gen_ch_tightness(self.n, self.k),
        }
    }

    /// One-line description used as the header comment of written instances.
    pub fn header(&self) -> String {
        format!(
            "instance family={} n={} k={} ell={} seed={} surplus={}",
            self.family, self.n, self.k, self.ell, self.seed, self.surplus
        )
    }
}

/// Random graph with `δ ≥ ⌈n/2⌉ + surplus`, obtained by deleting a random
/// number of randomly ordered edges from `K_n` while respecting the floor.
pub fn gen_dirac(n: usize, seed: u64, surplus: usize) -> Result<Graph> {
    if n < 3 {
        return domain(format!("gen_dirac needs n >= 3, got {n}"));
    }
    let floor = n.div_ceil(2) + surplus;
    if floor > n - 1 {
        return domain(format!(
            "surplus {surplus} infeasible: degree floor {floor} exceeds n-1 = {}",
            n - 1
        ));
    }
    let mut rng = Prng::new(seed);
    let mut g = Graph::complete(n);
    let mut edges: Vec<_> = g.edges().collect();
    rng.shuffle(&mut edges);
    let budget = rng.range(0, edges.len());
    let mut removed = 0;
    for e in edges {
        if removed == budget {
            break;
        }
        let (u, v) = e.ends();
        if g.degree(u) > floor && g.degree(v) > floor {
            g.remove_edge(u, v);
            removed += 1;
        }
    }
    if g.min_degree() < floor {
        return internal("gen_dirac produced a degree below the floor");
    }
    Ok(g)
}

/// A barbell instance together with its planted separation.
#[derive(Clone, Debug)]
pub struct Barbell {
    pub graph: Graph,
    /// Minimum cut: the planted cut vertices plus one end of every direct
    /// side-to-side edge on the first side.
    pub cut: VertexSet,
    pub sides: [VertexSet; 2],
}

/// Two dense sides joined through a planted cut of size exactly `k`, with
/// `δ ≥ n/2` and randomly relabelled vertices.
pub fn gen_barbell_dirac(n: usize, k: usize, seed: u64, mode: CrossingMode) -> Result<Graph> {
    gen_barbell_planted(n, k, seed, mode).map(|b| b.graph)
}

pub fn gen_barbell_planted(n: usize, k: usize, seed: u64, mode: CrossingMode) -> Result<Barbell> {
    if k == 0 || 2 * k >= n {
        return domain(format!("barbell needs 1 <= k < n/2, got n={n} k={k}"));
    }
    if n < 4 * k + 8 {
        return domain(format!("barbell needs n >= 4k+8 = {}, got {n}", 4 * k + 8));
    }
    let mut rng = Prng::new(seed);
    let zig = match mode {
        CrossingMode::Poor => 0,
        CrossingMode::Rich => k.div_ceil(2).min(k.saturating_sub(2)),
    };
    let w_len = k - zig;
    let a = (n - w_len) / 2;
    let b = n - w_len - a;
    // layout: side one 0..a, side two a..a+b, cut a+b..n
    let s1: Vec<Vertex> = (0..a).collect();
    let s2: Vec<Vertex> = (a..a + b).collect();
    let w: Vec<Vertex> = (a + b..n).collect();
    let mut g = Graph::new(n);
    for part in [&s1, &s2, &w] {
        for (i, &x) in part.iter().enumerate() {
            for &y in &part[i + 1..] {
                g.add_edge(x, y);
            }
        }
    }
    // zigzag u1 v1 u2 v2 ... : 2*zig - 1 edges, vertex cover zig
    for i in 0..zig {
        g.add_edge(s1[i], s2[i]);
        if i + 1 < zig {
            g.add_edge(s2[i], s1[i + 1]);
        }
    }
    let floor = n.div_ceil(2);
    let mut load = vec![0usize; n];
    for side in [&s1, &s2] {
        let mut order = side.clone();
        rng.shuffle(&mut order);
        for &v in &order {
            let need = floor.saturating_sub(g.degree(v));
            if need > w_len {
                return domain(format!(
                    "barbell n={n} k={k}: side vertex needs {need} cut neighbours, only {w_len} exist"
                ));
            }
            let mut cands = w.clone();
            rng.shuffle(&mut cands);
            cands.sort_by_key(|&x| load[x]);
            for &x in cands.iter().take(need) {
                g.add_edge(v, x);
                load[x] += 1;
            }
            if mode == CrossingMode::Rich {
                for &x in &w {
                    if !g.has_edge(v, x) && rng.chance(1, 2) {
                        g.add_edge(v, x);
                    }
                }
            }
        }
    }
    for &x in &w {
        let mut pool: Vec<Vertex> = s1.iter().chain(&s2).copied().filter(|&v| !g.has_edge(v, x)).collect();
        rng.shuffle(&mut pool);
        let mut pool = pool.into_iter();
        while g.degree(x) < floor {
            match pool.next() {
                Some(v) => {
                    g.add_edge(v, x);
                }
                None => return internal("barbell cut vertex cannot reach the degree floor"),
            }
        }
    }
    let mut cut = VertexSet::from_iter(n, w.iter().copied());
    for &u in s1.iter().take(zig) {
        cut.insert(u);
    }
    let side_a = VertexSet::from_iter(n, s1.iter().copied().skip(zig));
    let side_b = VertexSet::from_iter(n, s2.iter().copied());

    let perm = rng.permutation(n);
    let relabel = |s: &VertexSet| VertexSet::from_iter(n, s.iter().map(|v| perm[v]));
    let graph = Graph::from_edges(n, g.edges().map(|e| (perm[e.u()], perm[e.v()])))?;
    let out = Barbell { cut: relabel(&cut), sides: [relabel(&side_a), relabel(&side_b)], graph };

    if !out.graph.is_dirac() {
        return internal("barbell instance violates the degree floor");
    }
    let comps = out.graph.components_without(&out.cut);
    if comps.len() != 2 {
        return internal("planted cut does not separate the sides");
    }
    if !is_k_connected(&out.graph, k) || is_k_connected(&out.graph, k + 1) {
        return internal(format!("barbell instance does not have connectivity exactly {k}"));
    }
    Ok(out)
}

/// Two copies of `K_{(n+k-1)/2}` glued along `k-1` vertices: minimum degree
/// `(n+k-3)/2`, one short of the sufficient bound, and connectivity `k-1`.
pub fn gen_ch_tightness(n: usize, k: usize) -> Result<Graph> {
    if (n + k) % 2 == 0 {
        return domain(format!("n + k must be odd, got n={n} k={k}"));
    }
    if k == 0 || n < k + 3 {
        return domain(format!("need k >= 1 and n >= k+3, got n={n} k={k}"));
    }
    let m = (n + k - 1) / 2;
    let shared = k - 1;
    let mut g = Graph::new(n);
    let first: Vec<Vertex> = (0..m).collect();
    let second: Vec<Vertex> = (0..shared).chain(m..n).collect();
    for clique in [&first, &second] {
        for (i, &x) in clique.iter().enumerate() {
            for &y in &clique[i + 1..] {
                g.add_edge(x, y);
            }
        }
    }
    if g.min_degree() != m - 1 || kappa(&g)? != k - 1 {
        return internal("tightness instance has wrong degree or connectivity");
    }
    Ok(g)
}
