//! Vertex connectivity, minimum vertex cuts and vertex-disjoint path systems.

mod bridge;
mod flow;

pub use bridge::{bridge_by_modification, covering_bridge_flow, covering_bridge_flow_with};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{domain, Error, Result};
use crate::graph::{EdgeSet, Edge, Graph, Vertex};
use flow::SplitFlow;

/// A vertex cut with a two-sided witness: no edge joins `side_a` and `side_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCut {
    pub cut: VertexSet,
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

/// Pairwise vertex-disjoint paths, each listed from its first end.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathSystem {
    pub paths: Vec<Vec<Vertex>>,
}

impl PathSystem {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// Vertices of path `i` other than its two ends.
    pub fn internal(&self, i: usize) -> &[Vertex] {
        let p = &self.paths[i];
        if p.len() <= 2 {
            &[]
        } else {
            &p[1..p.len() - 1]
        }
    }

    pub fn internal_vertices(&self, n: usize) -> VertexSet {
        let mut s = VertexSet::new(n);
        for i in 0..self.len() {
            for &v in self.internal(i) {
                s.insert(v);
            }
        }
        s
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.paths
            .iter()
            .flat_map(|p| p.windows(2).map(|w| Edge::new(w[0], w[1])))
            .collect()
    }

    /// Checks disjointness, adjacency, and that every path runs from `a` to `b`.
    pub fn validate(&self, g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<()> {
        let mut used = VertexSet::new(g.n());
        for p in &self.paths {
            let (Some(&first), Some(&last)) = (p.first(), p.last()) else {
                return domain("empty path");
            };
            if p.len() < 2 {
                return domain(format!("path {p:?} has a single vertex"));
            }
            if !a.contains(first) || !b.contains(last) {
                return domain(format!("path {p:?} does not run from the first set to the second"));
            }
            for &v in p {
                if !used.insert(v) {
                    return domain(format!("vertex {v} used twice"));
                }
            }
            for w in p.windows(2) {
                if !g.has_edge(w[0], w[1]) {
                    return domain(format!("{}-{} is not an edge", w[0], w[1]));
                }
            }
        }
        Ok(())
    }
}

/// Exact vertex connectivity; `n - 1` for complete graphs.
pub fn kappa(g: &Graph) -> Result<usize> {
    Ok(kappa_with_cut(g)?.0)
}

/// Connectivity with a minimum cut (`None` for complete graphs).
///
/// Pivots on a minimum-degree vertex `v`: a minimum cut either avoids `v`,
/// separating it from some non-neighbour, or contains it, separating two of
/// its neighbours.
pub fn kappa_with_cut(g: &Graph) -> Result<(usize, Option<VertexSet>)> {
    let n = g.n();
    if n < 2 {
        return domain(format!("connectivity needs at least two vertices, got {n}"));
    }
    if g.is_complete() {
        return Ok((n - 1, None));
    }
    let degs = g.degrees();
    let v = (0..n).min_by_key(|&x| degs[x]).expect("n >= 2");
    let mut best = degs[v];
    let mut witness = g.neighbors(v).clone();
    // Nonadjacent vertices share at least 2δ - n + 2 neighbours.
    let floor = (2 * best + 2).saturating_sub(n);
    let nv = g.neighbors(v).to_vec();
    let candidates = (0..n)
        .filter(|&u| u != v && !g.has_edge(u, v))
        .map(|u| (v, u))
        .chain(nv.iter().enumerate().flat_map(|(i, &x)| nv[i + 1..].iter().map(move |&y| (x, y))));
    for (s, t) in candidates {
        if best <= floor {
            break;
        }
        if g.has_edge(s, t) || g.neighbors(s).intersection_count(g.neighbors(t)) >= best {
            continue;
        }
        let mut f = SplitFlow::pair(g, s, t);
        if f.run(best) < best {
            best = f.value();
            witness = f.min_cut();
        }
    }
    Ok((best, Some(witness)))
}

/// `kappa(g) >= k`, without computing the exact value.
pub fn is_k_connected(g: &Graph, k: usize) -> bool {
    let n = g.n();
    if k == 0 {
        return true;
    }
    if n <= k {
        return false;
    }
    if g.is_complete() {
        return true;
    }
    let delta = g.min_degree();
    if delta < k {
        return false;
    }
    if ch_sufficient(g, k) {
        return true;
    }
    for i in 0..k {
        for j in i + 1..n {
            if g.has_edge(i, j) || g.neighbors(i).intersection_count(g.neighbors(j)) >= k {
                continue;
            }
            if SplitFlow::pair(g, i, j).run(k) < k {
                return false;
            }
        }
    }
    true
}

/// A minimum vertex cut with its two sides. When `G - W` has more than two
/// components, `side_a` is the one holding the least vertex.
pub fn min_vertex_cut(g: &Graph) -> Result<VertexCut> {
    if g.n() < 3 {
        return domain("minimum cut needs at least three vertices");
    }
    let (_, witness) = kappa_with_cut(g)?;
    let cut = witness.ok_or(Error::NoCut)?;
    Ok(split_by(g, cut))
}

fn split_by(g: &Graph, cut: VertexSet) -> VertexCut {
    let comps = g.components_without(&cut);
    debug_assert!(comps.len() >= 2, "witness does not disconnect");
    let side_a = comps[0].clone();
    let side_b = g.vertex_set().difference(&cut).difference(&side_a);
    VertexCut { cut, side_a, side_b }
}

/// `k` vertex-disjoint paths from `a` to `b`, each meeting `a` only at its
/// first vertex and `b` only at its last.
///
/// When both sets are single vertices the paths share those two ends and are
/// otherwise disjoint (the two-vertex form of Menger's theorem).
pub fn disjoint_paths(g: &Graph, a: &VertexSet, b: &VertexSet, k: usize) -> Result<PathSystem> {
    check_terminal_sets(g, a, b)?;
    if k == 0 {
        return domain("path count must be positive");
    }
    if a.count() == 1 && b.count() == 1 {
        let (s, t) = (a.first().unwrap(), b.first().unwrap());
        return internally_disjoint(g, s, t, k);
    }
    let mut f = SplitFlow::sets(g, a.clone(), b.clone());
    if f.run(k) < k {
        let cut = f.min_cut();
        return Err(Error::Infeasible {
            reason: format!("only {} disjoint paths, {k} requested", f.value()),
            cut: cut.to_vec(),
        });
    }
    let mut paths: Vec<Vec<Vertex>> = f
        .paths()
        .into_iter()
        .map(|p| {
            let end = p.iter().position(|&v| b.contains(v)).expect("flow path ends in b");
            let start = p[..=end].iter().rposition(|&v| a.contains(v)).expect("flow path starts in a");
            p[start..=end].to_vec()
        })
        .collect();
    paths.sort();
    Ok(PathSystem { paths })
}

fn internally_disjoint(g: &Graph, s: Vertex, t: Vertex, k: usize) -> Result<PathSystem> {
    let mut paths = Vec::new();
    let mut h = g.clone();
    if h.remove_edge(s, t) {
        paths.push(vec![s, t]);
    }
    let mut f = SplitFlow::pair(&h, s, t);
    let need = k - paths.len();
    if f.run(need) < need {
        return Err(Error::Infeasible {
            reason: format!("only {} internally disjoint paths, {k} requested", f.value() + paths.len()),
            cut: f.min_cut().to_vec(),
        });
    }
    paths.extend(f.paths());
    paths.sort();
    Ok(PathSystem { paths })
}

/// Minimum vertex separator between the sets (vertices of `a` or `b` may belong to it).
pub fn set_separator(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<VertexSet> {
    check_terminal_sets(g, a, b)?;
    let mut f = SplitFlow::sets(g, a.clone(), b.clone());
    f.run(usize::MAX);
    Ok(f.min_cut())
}

fn check_terminal_sets(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<()> {
    if a.universe() != g.n() || b.universe() != g.n() {
        return domain("terminal sets do not match the graph");
    }
    if !a.is_disjoint(b) {
        return domain("terminal sets overlap");
    }
    Ok(())
}

/// The minimum-degree sufficient condition `2δ >= n + k - 2` for k-connectivity.
pub fn ch_sufficient(g: &Graph, k: usize) -> bool {
    2 * g.min_degree() + 2 >= g.n() + k
}
