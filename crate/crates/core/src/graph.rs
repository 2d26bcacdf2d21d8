//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency rows are [`VertexSet`] bitsets, so neighbourhood algebra (common
//! neighbours, crossing counts) runs word-parallel. Subgraph operations
//! return a [`Subgraph`] that keeps the map back to host labels.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::error::{domain, Result};

pub type Vertex = usize;

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", try_from = "[Vertex; 2]")]
pub struct Edge(Vertex, Vertex);

impl Edge {
    /// Panics on a loop; use [`Graph::from_edges`] to validate untrusted input.
    pub fn new(u: Vertex, v: Vertex) -> Edge {
        assert_ne!(u, v, "self-loop {u}-{u}");
        if u < v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    #[inline]
    pub fn u(self) -> Vertex {
        self.0
    }

    #[inline]
    pub fn v(self) -> Vertex {
        self.1
    }

    pub fn ends(self) -> (Vertex, Vertex) {
        (self.0, self.1)
    }

    pub fn touches(self, x: Vertex) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint opposite `x`. Panics if `x` is not an endpoint.
    pub fn other(self, x: Vertex) -> Vertex {
        if self.0 == x {
            self.1
        } else {
            assert_eq!(self.1, x, "{x} is not an endpoint of {self:?}");
            self.0
        }
    }

    /// True when the two edges share no endpoint.
    pub fn independent_of(self, other: Edge) -> bool {
        !(other.touches(self.0) || other.touches(self.1))
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.0, e.1]
    }
}

impl TryFrom<[Vertex; 2]> for Edge {
    type Error = String;

    fn try_from(p: [Vertex; 2]) -> std::result::Result<Self, String> {
        if p[0] == p[1] {
            return Err(format!("self-loop {}-{}", p[0], p[1]));
        }
        Ok(Edge::new(p[0], p[1]))
    }
}

impl From<(Vertex, Vertex)> for Edge {
    fn from(p: (Vertex, Vertex)) -> Self {
        Edge::new(p.0, p.1)
    }
}

/// An ordered set of edges. Membership in a host graph is checked by the
/// operations that consume it, not on construction.
#[derive(Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet(BTreeSet::new())
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        self.0.insert(e)
    }

    pub fn remove(&mut self, e: &Edge) -> bool {
        self.0.remove(e)
    }

    pub fn contains(&self, e: &Edge) -> bool {
        self.0.contains(e)
    }

    pub fn contains_pair(&self, u: Vertex, v: Vertex) -> bool {
        u != v && self.0.contains(&Edge::new(u, v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    pub fn extend<I: IntoIterator<Item = Edge>>(&mut self, iter: I) {
        self.0.extend(iter)
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.union(&other.0).copied().collect())
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet(self.0.difference(&other.0).copied().collect())
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn to_vec(&self) -> Vec<Edge> {
        self.0.iter().copied().collect()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// Sorted degree sequence with the tail counter `psi(j) = |{v : deg(v) <= j}|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile {
    sorted: Vec<usize>,
}

impl DegreeProfile {
    pub fn psi(&self, j: usize) -> usize {
        self.sorted.partition_point(|&d| d <= j)
    }

    pub fn min_degree(&self) -> usize {
        self.sorted.first().copied().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.sorted.last().copied().unwrap_or(0)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.sorted
    }
}

/// A simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
    m: usize,
}

/// A subgraph relabeled to `0..k`, with the map back to host labels.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    to_host: Vec<Vertex>,
    to_local: Vec<Option<Vertex>>,
}

impl Subgraph {
    fn new(graph: Graph, to_host: Vec<Vertex>, host_n: usize) -> Self {
        let mut to_local = vec![None; host_n];
        for (i, &h) in to_host.iter().enumerate() {
            to_local[h] = Some(i);
        }
        Subgraph {
            graph,
            to_host,
            to_local,
        }
    }

    pub fn host(&self, v: Vertex) -> Vertex {
        self.to_host[v]
    }

    pub fn local(&self, host: Vertex) -> Option<Vertex> {
        self.to_local.get(host).copied().flatten()
    }

    pub fn host_vertices(&self) -> &[Vertex] {
        &self.to_host
    }

    pub fn host_edge(&self, e: Edge) -> Edge {
        Edge::new(self.to_host[e.u()], self.to_host[e.v()])
    }

    pub fn host_path(&self, path: &[Vertex]) -> Vec<Vertex> {
        path.iter().map(|&v| self.to_host[v]).collect()
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
            m: 0,
        }
    }

    /// Builds a graph, rejecting loops, out-of-range ends and repeated edges.
    pub fn from_edges<I, E>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: Into<(Vertex, Vertex)>,
    {
        let mut g = Graph::new(n);
        for e in edges {
            let (u, v) = e.into();
            if u >= n || v >= n {
                return domain(format!("edge {u}-{v} out of range for n = {n}"));
            }
            if u == v {
                return domain(format!("self-loop at {u}"));
            }
            if !g.add_edge(u, v) {
                return domain(format!("repeated edge {u}-{v}"));
            }
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Path on `n` vertices `0-1-...-(n-1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// The star `K_{1,leaves}` with centre 0.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Graph::new(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Graph::from_edges(10, edges).expect("petersen edges are valid")
    }

    /// Vertex-disjoint union; `other` is relabeled to follow `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut g = Graph::new(off + other.n());
        for e in self.edges() {
            g.add_edge(e.u(), e.v());
        }
        for e in other.edges() {
            g.add_edge(e.u() + off, e.v() + off);
        }
        g
    }

    /// Appends `extra` isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> Graph {
        self.disjoint_union(&Graph::new(extra))
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count()
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].contains(v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        e.v() < self.n() && self.has_edge(e.u(), e.v())
    }

    /// Adds `uv`; returns false if it was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        assert_ne!(u, v, "self-loop at {u}");
        if self.adj[u].insert(v) {
            self.adj[v].insert(u);
            self.m += 1;
            true
        } else {
            false
        }
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u < self.n() && self.adj[u].remove(v) {
            self.adj[v].remove(u);
            self.m -= 1;
            true
        } else {
            false
        }
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, row)| {
            row.iter().filter(move |&v| v > u).map(move |v| Edge(u, v))
        })
    }

    pub fn edge_set(&self) -> EdgeSet {
        self.edges().collect()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(VertexSet::count).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::count).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(VertexSet::count).max().unwrap_or(0)
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let mut sorted = self.degrees();
        sorted.sort_unstable();
        DegreeProfile { sorted }
    }

    pub fn is_complete(&self) -> bool {
        let n = self.n();
        self.m == n * n.saturating_sub(1) / 2
    }

    /// `2 * min_degree >= n`, the Dirac condition (n >= 3 is not checked).
    pub fn is_dirac(&self) -> bool {
        2 * self.min_degree() >= self.n()
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    fn check_set(&self, s: &VertexSet, what: &str) -> Result<()> {
        if s.universe() != self.n() {
            return domain(format!(
                "{what} has universe {} but graph has {} vertices",
                s.universe(),
                self.n()
            ));
        }
        Ok(())
    }

    fn check_edges(&self, f: &EdgeSet) -> Result<()> {
        for e in f.iter() {
            if !self.contains_edge(e) {
                return domain(format!("{e:?} is not an edge of the graph"));
            }
        }
        Ok(())
    }

    /// The subgraph induced by `s`, relabeled in increasing host order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Subgraph> {
        self.check_set(s, "vertex set")?;
        if s.is_empty() {
            return domain("induced subgraph of an empty vertex set");
        }
        let to_host = s.to_vec();
        let mut g = Graph::new(to_host.len());
        for (i, &u) in to_host.iter().enumerate() {
            for (j, &v) in to_host.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(Subgraph::new(g, to_host, self.n()))
    }

    /// `G - F` on the same vertex set.
    pub fn remove_edges(&self, f: &EdgeSet) -> Result<Graph> {
        self.check_edges(f)?;
        let mut g = self.clone();
        for e in f.iter() {
            g.remove_edge(e.u(), e.v());
        }
        Ok(g)
    }

    /// Adds edges that must not already be present.
    pub fn add_edges(&self, f: &EdgeSet) -> Result<Graph> {
        let mut g = self.clone();
        for e in f.iter() {
            if e.v() >= self.n() {
                return domain(format!("{e:?} out of range"));
            }
            if !g.add_edge(e.u(), e.v()) {
                return domain(format!("{e:?} already present"));
            }
        }
        Ok(g)
    }

    /// The subgraph formed by exactly the edges of `f` and their endpoints.
    pub fn edge_induced(&self, f: &EdgeSet) -> Result<Subgraph> {
        if f.is_empty() {
            return domain("edge-induced subgraph of an empty edge set");
        }
        self.check_edges(f)?;
        let mut ends = self.empty_set();
        for e in f.iter() {
            ends.insert(e.u());
            ends.insert(e.v());
        }
        let to_host = ends.to_vec();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &h) in to_host.iter().enumerate() {
            local[h] = i;
        }
        let mut g = Graph::new(to_host.len());
        for e in f.iter() {
            g.add_edge(local[e.u()], local[e.v()]);
        }
        Ok(Subgraph::new(g, to_host, self.n()))
    }

    /// Edges with one end in `a` and the other in `b`.
    pub fn crossing_edges(&self, a: &VertexSet, b: &VertexSet) -> Result<EdgeSet> {
        self.check_set(a, "first side")?;
        self.check_set(b, "second side")?;
        if !a.is_disjoint(b) {
            return domain("crossing edges between overlapping vertex sets");
        }
        let mut out = EdgeSet::new();
        for u in a.iter() {
            for v in self.adj[u].intersection(b).iter() {
                out.insert(Edge::new(u, v));
            }
        }
        Ok(out)
    }

    /// Connected components of `G - removed`, ordered by least vertex.
    pub fn components_without(&self, removed: &VertexSet) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = removed.clone();
        let mut comps = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut frontier = VertexSet::new(n);
            frontier.insert(s);
            seen.insert(s);
            while !frontier.is_empty() {
                comp.union_with(&frontier);
                let mut next = VertexSet::new(n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.difference_with(&seen);
                seen.union_with(&next);
                frontier = next;
            }
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_without(&self.empty_set())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn contains_triangle(&self) -> bool {
        self.edges()
            .any(|e| !self.adj[e.u()].is_disjoint(&self.adj[e.v()]))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, ", self.n())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_iter(n, vs.iter().copied())
    }

    fn edges(list: &[(usize, usize)]) -> EdgeSet {
        list.iter().map(|&p| Edge::from(p)).collect()
    }

    #[test]
    fn induced_clique_and_path() {
        let k3 = Graph::complete(4).induced_subgraph(&set(4, &[0, 1, 2])).unwrap();
        assert_eq!(k3.graph, Graph::complete(3));
        let p = Graph::cycle(5).induced_subgraph(&set(5, &[0, 1, 2])).unwrap();
        assert_eq!(p.graph, Graph::path(3));
        assert_eq!(p.host_vertices(), &[0, 1, 2]);
    }

    #[test]
    fn induced_rejects_empty() {
        assert!(matches!(
            Graph::complete(4).induced_subgraph(&set(4, &[])),
            Err(crate::Error::Domain(_))
        ));
    }

    #[test]
    fn remove_matching_from_k4() {
        let c4 = Graph::complete(4).remove_edges(&edges(&[(0, 1), (2, 3)])).unwrap();
        // 0-2-1-3-0
        let expect = Graph::from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c4, expect);
        assert_eq!(Graph::cycle(6).remove_edges(&EdgeSet::new()).unwrap(), Graph::cycle(6));
        let p = Graph::cycle(6).remove_edges(&edges(&[(0, 1)])).unwrap();
        assert!(p.is_connected());
        assert_eq!(p.edge_count(), 5);
        assert!(Graph::cycle(6).remove_edges(&edges(&[(0, 3)])).is_err());
    }

    #[test]
    fn edge_induced_cases() {
        let two_k2 = Graph::complete(4).edge_induced(&edges(&[(0, 1), (2, 3)])).unwrap();
        assert_eq!(two_k2.graph, Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap());
        let c5 = Graph::cycle(5);
        assert_eq!(c5.edge_induced(&c5.edge_set()).unwrap().graph, c5);
        assert!(c5.edge_induced(&EdgeSet::new()).is_err());
    }

    #[test]
    fn crossing_cases() {
        let k4 = Graph::complete(4);
        let c = k4.crossing_edges(&set(4, &[0, 1]), &set(4, &[2, 3])).unwrap();
        assert_eq!(c, edges(&[(0, 2), (0, 3), (1, 2), (1, 3)]));
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let c = two_k3.crossing_edges(&set(6, &[0, 1, 2]), &set(6, &[3, 4, 5])).unwrap();
        assert!(c.is_empty());
        assert!(k4.crossing_edges(&set(4, &[0, 1]), &set(4, &[1, 2])).is_err());
    }

    #[test]
    fn barbell_crossing_count() {
        // Two K4 joined by the bridges 0-4 and 3-7.
        let mut g = Graph::complete(4).disjoint_union(&Graph::complete(4));
        g.add_edge(0, 4);
        g.add_edge(3, 7);
        let c = g.crossing_edges(&set(8, &[0, 1, 2, 3]), &set(8, &[4, 5, 6, 7])).unwrap();
        assert_eq!(c.len(), 2);
    }

    #[test]
    fn degree_profiles() {
        let k5 = Graph::complete(5).degree_profile();
        assert_eq!((k5.psi(3), k5.psi(4)), (0, 5));
        let star = Graph::star(4).degree_profile();
        assert_eq!((star.psi(1), star.psi(4)), (4, 5));
        assert_eq!((star.min_degree(), star.max_degree()), (1, 4));
    }

    #[test]
    fn named_graphs() {
        let p = Graph::petersen();
        assert_eq!((p.n(), p.edge_count(), p.min_degree(), p.max_degree()), (10, 15, 3, 3));
        assert!(!p.contains_triangle());
        assert!(Graph::complete(3).contains_triangle());
        assert_eq!(Graph::complete_bipartite(3, 3).edge_count(), 9);
    }

    #[test]
    fn from_edges_validation() {
        assert!(Graph::from_edges(3, [(0, 0)]).is_err());
        assert!(Graph::from_edges(3, [(0, 3)]).is_err());
        assert!(Graph::from_edges(3, [(0, 1), (1, 0)]).is_err());
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            prop::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut g = Graph::new(n);
                let mut it = bits.into_iter();
                for u in 0..n {
                    for v in u + 1..n {
                        if it.next().unwrap() {
                            g.add_edge(u, v);
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn handshake_and_symmetry(g in arb_graph(12)) {
            let degs = g.degrees();
            prop_assert_eq!(degs.iter().sum::<usize>(), 2 * g.edge_count());
            for u in g.vertices() {
                prop_assert!(!g.has_edge(u, u));
                for v in g.neighbors(u).iter() {
                    prop_assert!(g.has_edge(v, u));
                }
            }
            let p = g.degree_profile();
            let n = g.n();
            prop_assert_eq!(p.psi(n.saturating_sub(1)), n);
            for j in 0..n {
                prop_assert!(p.psi(j) <= p.psi(j + 1));
                prop_assert_eq!(p.psi(j), degs.iter().filter(|&&d| d <= j).count());
            }
        }

        #[test]
        fn remove_then_readd(g in arb_graph(10), mask in any::<u64>()) {
            let f: EdgeSet = g.edges().enumerate()
                .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
                .map(|(_, e)| e)
                .collect();
            let h = g.remove_edges(&f).unwrap();
            prop_assert_eq!(h.edge_count() + f.len(), g.edge_count());
            prop_assert_eq!(h.add_edges(&f).unwrap(), g);
        }

        #[test]
        fn induced_matches_filter(g in arb_graph(10), mask in any::<u16>()) {
            let n = g.n();
            let s = VertexSet::from_iter(n, (0..n).filter(|v| mask >> v & 1 == 1));
            prop_assume!(!s.is_empty());
            let sub = g.induced_subgraph(&s).unwrap();
            let expect: Vec<Edge> = g.edges().filter(|e| s.contains(e.u()) && s.contains(e.v())).collect();
            let got: Vec<Edge> = sub.graph.edges().map(|e| sub.host_edge(e)).collect();
            prop_assert_eq!(got, expect);
            prop_assert_eq!(&g.induced_subgraph(&g.vertex_set()).unwrap().graph, &g);
        }

        #[test]
        fn edge_induced_degrees(g in arb_graph(10), mask in any::<u64>()) {
            let f: EdgeSet = g.edges().enumerate()
                .filter(|(i, _)| mask >> (i % 64) & 1 == 1)
                .map(|(_, e)| e)
                .collect();
            prop_assume!(!f.is_empty());
            let sub = g.edge_induced(&f).unwrap();
            for v in sub.graph.vertices() {
                let h = sub.host(v);
                prop_assert_eq!(sub.graph.degree(v), f.iter().filter(|e| e.touches(h)).count());
                prop_assert!(sub.graph.degree(v) > 0);
            }
        }

        #[test]
        fn crossing_count_identity(g in arb_graph(10), mask in any::<u32>()) {
            let n = g.n();
            let a = VertexSet::from_iter(n, (0..n).filter(|v| mask >> (2 * v) & 3 == 1));
            let b = VertexSet::from_iter(n, (0..n).filter(|v| mask >> (2 * v) & 3 == 2));
            let c = g.crossing_edges(&a, &b).unwrap();
            let expect: usize = a.iter().map(|x| g.neighbors(x).intersection_count(&b)).sum();
            prop_assert_eq!(c.len(), expect);
        }
    }
}
