//! Bridge systems: `k` disjoint paths between two sides of a cut whose
//! internal vertices are exactly the cut.
//!
//! The primary construction is a minimum-cost flow on a layered network
//! `A -> W1 -> W2 -> B` where passing through a cut vertex earns cost `-1`;
//! a value-`k` flow of cost `-|W|` is a bridge system. The iterative
//! replace-and-reroute procedure is kept as [`bridge_by_modification`] for
//! cross-checking.

use std::collections::VecDeque;

use super::{disjoint_paths, set_separator, PathSystem};
use crate::bitset::VertexSet;
use crate::error::{domain, Error, Result};
use crate::graph::{Graph, Vertex};

/// Bridge system with path orders 2, 3 or 4. An order-4 path `a, w, w', b`
/// always has `w` at least as attached to `a`'s side as to `b`'s and `w'`
/// strictly more attached to `b`'s side.
pub fn covering_bridge_flow(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    w: &VertexSet,
    k: usize,
) -> Result<PathSystem> {
    covering_bridge_flow_with(g, a, b, w, k, 4)
}

/// As [`covering_bridge_flow`], with the longest allowed path order (3 or 4).
pub fn covering_bridge_flow_with(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    w: &VertexSet,
    k: usize,
    max_order: usize,
) -> Result<PathSystem> {
    let n = g.n();
    for s in [a, b, w] {
        if s.universe() != n {
            return domain("vertex set does not match the graph");
        }
    }
    if !a.is_disjoint(b) || !a.is_disjoint(w) || !b.is_disjoint(w) {
        return domain("bridge terminal sets and cut must be pairwise disjoint");
    }
    if !(3..=4).contains(&max_order) {
        return domain(format!("path order bound {max_order} not in 3..=4"));
    }
    if k == 0 {
        return domain("path count must be positive");
    }

    let mut net = Network::new(2 + 2 * n);
    let (src, sink) = (0, 1);
    let vin = |v: Vertex| 2 + 2 * v;
    let vout = |v: Vertex| 3 + 2 * v;
    let heavy_a = |x: Vertex| g.neighbors(x).intersection_count(a) >= g.neighbors(x).intersection_count(b);
    for x in a.iter() {
        net.add(src, vin(x), 0);
        net.add(vin(x), vout(x), 0);
        for y in g.neighbors(x).intersection(b).iter() {
            net.add(vout(x), vin(y), 0);
        }
        for y in g.neighbors(x).intersection(w).iter() {
            net.add(vout(x), vin(y), 0);
        }
    }
    for x in w.iter() {
        net.add(vin(x), vout(x), -1);
        if max_order >= 4 && heavy_a(x) {
            for y in g.neighbors(x).intersection(w).iter().filter(|&y| !heavy_a(y)) {
                net.add(vout(x), vin(y), 0);
            }
        }
        for y in g.neighbors(x).intersection(b).iter() {
            net.add(vout(x), vin(y), 0);
        }
    }
    for y in b.iter() {
        net.add(vin(y), vout(y), 0);
        net.add(vout(y), sink, 0);
    }

    for got in 0..k {
        if !net.augment(src, sink) {
            let cut = set_separator(g, a, b)?;
            return Err(Error::Infeasible {
                reason: format!("only {got} disjoint paths between the sides, {k} requested"),
                cut: cut.to_vec(),
            });
        }
    }

    let mut paths = Vec::with_capacity(k);
    for x in a.iter() {
        let mut node = vout(x);
        if !net.carries(vin(x), node) {
            continue;
        }
        let mut path = vec![x];
        while node != sink {
            let next = net.flow_successor(node).expect("flow is conserved");
            if next == sink {
                break;
            }
            let v = (next - 2) / 2;
            path.push(v);
            node = vout(v);
        }
        paths.push(path);
    }
    let covered = paths.iter().flat_map(|p| &p[1..p.len() - 1]).count();
    if covered < w.count() {
        let mut missing = w.clone();
        for p in &paths {
            for &v in &p[1..p.len() - 1] {
                missing.remove(v);
            }
        }
        return Err(Error::Infeasible {
            reason: format!(
                "{k} bridge paths cover only {covered} of {} cut vertices (uncovered {:?})",
                w.count(),
                missing.to_vec()
            ),
            cut: Vec::new(),
        });
    }
    Ok(PathSystem { paths: ordered(paths) })
}

/// Order-2 paths first, then the rest, each group by first vertex.
fn ordered(mut paths: Vec<Vec<Vertex>>) -> Vec<Vec<Vertex>> {
    paths.sort_by(|p, q| (p.len() > 2, &p[..]).cmp(&(q.len() > 2, &q[..])));
    paths
}

/// Residual network for successive shortest paths with unit capacities.
struct Network {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u8>,
    cost: Vec<i32>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
        }
    }

    fn add(&mut self, u: usize, v: usize, cost: i32) {
        let id = self.to.len();
        self.adj[u].push(id);
        self.to.push(v);
        self.cap.push(1);
        self.cost.push(cost);
        self.adj[v].push(id + 1);
        self.to.push(u);
        self.cap.push(0);
        self.cost.push(-cost);
    }

    /// One unit along a cheapest residual path (Bellman-Ford queue variant).
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let nodes = self.adj.len();
        let mut dist = vec![i64::MAX; nodes];
        let mut via = vec![usize::MAX; nodes];
        let mut queued = vec![false; nodes];
        let mut queue = VecDeque::from([s]);
        dist[s] = 0;
        while let Some(u) = queue.pop_front() {
            queued[u] = false;
            for &id in &self.adj[u] {
                if self.cap[id] == 0 {
                    continue;
                }
                let v = self.to[id];
                let d = dist[u] + self.cost[id] as i64;
                if d < dist[v] {
                    dist[v] = d;
                    via[v] = id;
                    if !queued[v] {
                        queued[v] = true;
                        queue.push_back(v);
                    }
                }
            }
        }
        if dist[t] == i64::MAX {
            return false;
        }
        let mut v = t;
        while v != s {
            let id = via[v];
            self.cap[id] -= 1;
            self.cap[id ^ 1] += 1;
            v = self.to[id ^ 1];
        }
        true
    }

    fn carries(&self, u: usize, v: usize) -> bool {
        self.adj[u]
            .iter()
            .any(|&id| id % 2 == 0 && self.to[id] == v && self.cap[id] == 0)
    }

    fn flow_successor(&self, u: usize) -> Option<usize> {
        self.adj[u]
            .iter()
            .find(|&&id| id % 2 == 0 && self.cap[id] == 0)
            .map(|&id| self.to[id])
    }
}

/// Bridge system built by starting from any `k` disjoint paths and rerouting
/// them until every cut vertex is used. `a`, `b` and `w` must partition the
/// vertex set. Gives up after `2 k |W|` reroutes.
pub fn bridge_by_modification(
    g: &Graph,
    a: &VertexSet,
    b: &VertexSet,
    w: &VertexSet,
    k: usize,
) -> Result<PathSystem> {
    if a.union(b).union(w) != g.vertex_set() || a.count() + b.count() + w.count() != g.n() {
        return domain("sides and cut must partition the vertex set");
    }
    let na = |x: Vertex| g.neighbors(x).intersection_count(a);
    let nb = |x: Vertex| g.neighbors(x).intersection_count(b);
    let fail = |why: String| Error::Infeasible { reason: why, cut: Vec::new() };
    let mut paths = disjoint_paths(g, a, b, k)?.paths;

    let ends = |paths: &[Vec<Vertex>], first: bool| {
        VertexSet::from_iter(
            g.n(),
            paths.iter().map(|p| if first { p[0] } else { *p.last().unwrap() }),
        )
    };
    let free_in = |x: Vertex, side: &VertexSet, taken: &VertexSet| {
        g.neighbors(x).intersection(side).difference(taken).first()
    };

    // Shorten every path to at most two cut vertices.
    for i in 0..paths.len() {
        loop {
            let p = paths[i].clone();
            let r = p.len() - 2;
            if r < 2 {
                break;
            }
            let (u_taken, v_taken) = (ends(&paths, true), ends(&paths, false));
            let w2 = p[2];
            if na(w2) > k {
                let u = free_in(w2, a, &u_taken).ok_or_else(|| fail(format!("no free side-A neighbour of {w2}")))?;
                paths[i] = std::iter::once(u).chain(p[2..].iter().copied()).collect();
                continue;
            }
            if r >= 3 && nb(w2) > k {
                let v = free_in(w2, b, &v_taken).ok_or_else(|| fail(format!("no free side-B neighbour of {w2}")))?;
                paths[i] = p[..3].iter().copied().chain(std::iter::once(v)).collect();
                continue;
            }
            if r == 2 && nb(p[1]) > k {
                let v = free_in(p[1], b, &v_taken).ok_or_else(|| fail(format!("no free side-B neighbour of {}", p[1])))?;
                paths[i] = vec![p[0], p[1], v];
                continue;
            }
            if r >= 3 {
                return Err(fail(format!("cannot shorten path {p:?}")));
            }
            break;
        }
    }

    let cap = (2 * k * w.count()).max(1);
    let mut steps = 0;
    loop {
        let mut covered = VertexSet::new(g.n());
        for p in &paths {
            for &x in &p[1..p.len() - 1] {
                covered.insert(x);
            }
        }
        let Some(wj) = w.difference(&covered).first() else {
            break;
        };
        steps += 1;
        if steps > cap {
            return Err(fail(format!("rerouting did not converge within {cap} steps")));
        }
        // Case 1 anchors the new path on side A, case 2 on side B; case 2 is
        // case 1 with the sides and path directions swapped.
        let case_one = na(wj) > k;
        if !case_one {
            for p in paths.iter_mut() {
                p.reverse();
            }
        }
        let (near, far) = if case_one { (a, b) } else { (b, a) };
        let n_far = |x: Vertex| g.neighbors(x).intersection_count(far);
        let (near_taken, far_taken) = (ends(&paths, true), ends(&paths, false));
        let u = free_in(wj, near, &near_taken).ok_or_else(|| fail(format!("no free neighbour of {wj}")))?;
        let fresh = match free_in(wj, far, &far_taken) {
            Some(y) => {
                let slot = paths.iter().position(|p| p.len() == 2).ok_or_else(|| fail("no order-2 path to replace".into()))?;
                paths[slot] = vec![u, wj, y];
                None
            }
            None => Some(()),
        };
        if fresh.is_some() {
            let y = g.neighbors(wj).intersection(far).first().ok_or_else(|| fail(format!("{wj} has no neighbour across")))?;
            let i = paths.iter().position(|p| *p.last().unwrap() == y).expect("y is a path end");
            let last_w = paths[i][paths[i].len() - 2];
            if paths[i].len() == 2 || n_far(last_w) <= k {
                paths[i] = vec![u, wj, y];
            } else {
                let v = free_in(last_w, far, &far_taken).ok_or_else(|| fail(format!("no free neighbour of {last_w}")))?;
                let len = paths[i].len();
                paths[i][len - 1] = v;
                let slot = paths
                    .iter()
                    .enumerate()
                    .position(|(j, p)| j != i && p.len() == 2)
                    .ok_or_else(|| fail("no order-2 path to replace".into()))?;
                paths[slot] = vec![u, wj, y];
            }
        }
        if !case_one {
            for p in paths.iter_mut() {
                p.reverse();
            }
        }
    }
    Ok(PathSystem { paths: ordered(paths) })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two K5 on 0..5 and 5..10 plus vertex 10 joined to everything.
    fn two_cliques_and_apex() -> (Graph, VertexSet, VertexSet, VertexSet) {
        let mut g = Graph::complete(5).disjoint_union(&Graph::complete(5)).with_isolated(1);
        for v in 0..10 {
            g.add_edge(v, 10);
        }
        for i in 0..4 {
            g.add_edge(i, 5 + i);
        }
        let a = VertexSet::from_iter(11, 0..5);
        let b = VertexSet::from_iter(11, 5..10);
        let w = VertexSet::from_iter(11, [10]);
        (g, a, b, w)
    }

    #[test]
    fn apex_is_covered() {
        let (g, a, b, w) = two_cliques_and_apex();
        for k in 1..=4 {
            let ps = covering_bridge_flow(&g, &a, &b, &w, k).unwrap();
            assert_eq!(ps.len(), k);
            ps.validate(&g, &a, &b).unwrap();
            assert_eq!(ps.internal_vertices(11), w);
            assert_eq!(ps.paths.iter().filter(|p| p.len() == 3).count(), 1);
        }
    }

    #[test]
    fn empty_cut_gives_edges() {
        let g = Graph::complete(6);
        let a = VertexSet::from_iter(6, 0..3);
        let b = VertexSet::from_iter(6, 3..6);
        let ps = covering_bridge_flow(&g, &a, &b, &VertexSet::new(6), 2).unwrap();
        assert_eq!(ps.paths, vec![vec![0, 3], vec![1, 4]]);
    }

    #[test]
    fn uncoverable_cut_is_infeasible() {
        let (g, a, b, _) = two_cliques_and_apex();
        // Vertex 11 touches only side A, so no bridge path can pass through it.
        let mut g2 = g.with_isolated(1);
        g2.add_edge(11, 0);
        let a2 = VertexSet::from_iter(12, a.iter());
        let b2 = VertexSet::from_iter(12, b.iter());
        let w2 = VertexSet::from_iter(12, [10, 11]);
        assert!(matches!(
            covering_bridge_flow(&g2, &a2, &b2, &w2, 2),
            Err(Error::Infeasible { .. })
        ));
    }

    #[test]
    fn modification_loop_matches_shape() {
        let (g, a, b, w) = two_cliques_and_apex();
        let ps = bridge_by_modification(&g, &a, &b, &w, 3).unwrap();
        ps.validate(&g, &a, &b).unwrap();
        assert_eq!(ps.internal_vertices(11), w);
    }
}
