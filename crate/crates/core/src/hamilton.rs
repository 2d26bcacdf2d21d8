//! Hamiltonian cycles and paths by closure and rotation.
//!
//! The `t`-closure joins nonadjacent vertices whose degree sum reaches `t`
//! until nothing changes. When the `n`-closure is complete, any Hamiltonian
//! cycle of the closure can be pulled back to the original graph by undoing
//! the added edges newest first, rerouting the cycle around each removed edge
//! with a crossing pair of chords.

use crate::bitset::VertexSet;
use crate::rng::Prng;
use crate::error::{domain, internal, Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, Vertex};

/// Result of a closure computation.
#[derive(Clone, Debug)]
pub struct ClosureTrace {
    pub graph: Graph,
    /// Added edges in insertion order, each with the degree sum it had.
    pub added: Vec<(Edge, usize)>,
    pub threshold: usize,
}

impl ClosureTrace {
    /// Re-applies the trace to `g`, checking every recorded degree sum.
    pub fn replays_on(&self, g: &Graph) -> bool {
        let mut cur = g.clone();
        for &(e, sum) in &self.added {
            let real = cur.degree(e.u()) + cur.degree(e.v());
            if cur.has_edge(e.u(), e.v()) || real != sum || sum < self.threshold {
                return false;
            }
            cur.add_edge(e.u(), e.v());
        }
        cur == self.graph
    }
}

/// Closure under `deg(u) + deg(v) >= t`, scanning pairs lexicographically.
pub fn closure(g: &Graph, t: usize) -> ClosureTrace {
    closure_among(g, t, &g.vertex_set())
}

/// Closure that only joins pairs inside `eligible`.
pub fn closure_among(g: &Graph, t: usize, eligible: &VertexSet) -> ClosureTrace {
    let mut cur = g.clone();
    let mut added = Vec::new();
    let verts = eligible.to_vec();
    loop {
        let before = added.len();
        for (i, &u) in verts.iter().enumerate() {
            for &v in &verts[i + 1..] {
                if cur.has_edge(u, v) {
                    continue;
                }
                let sum = cur.degree(u) + cur.degree(v);
                if sum >= t {
                    cur.add_edge(u, v);
                    added.push((Edge::new(u, v), sum));
                }
            }
        }
        if added.len() == before {
            break;
        }
    }
    ClosureTrace {
        graph: cur,
        added,
        threshold: t,
    }
}

/// Pulls a Hamiltonian cycle of `trace.graph` back to the graph the trace
/// started from. The threshold must be at least the vertex count.
fn unwind(trace: &ClosureTrace, mut cycle: Vec<Vertex>) -> Result<Vec<Vertex>> {
    let n = cycle.len();
    let mut cur = trace.graph.clone();
    let mut pos = vec![0; cur.n()];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    for &(e, _) in trace.added.iter().rev() {
        let (x, y) = e.ends();
        cur.remove_edge(x, y);
        let (px, py) = (pos[x], pos[y]);
        let (u, v) = if (px + 1) % n == py {
            (y, x)
        } else if (py + 1) % n == px {
            (x, y)
        } else {
            continue;
        };
        // Orient so the cycle reads c0 = u, c1, ..., c_{n-1} = v.
        let start = pos[u];
        let c: Vec<Vertex> = (0..n).map(|i| cycle[(start + i) % n]).collect();
        debug_assert_eq!(c[n - 1], v);
        let Some(i) = (1..n - 2).find(|&i| cur.has_edge(u, c[i + 1]) && cur.has_edge(v, c[i])) else {
            return internal(format!("no crossing chords around {u}-{v}"));
        };
        cycle.clear();
        cycle.push(u);
        cycle.extend_from_slice(&c[i + 1..]);
        cycle.extend(c[1..=i].iter().rev());
        for (j, &w) in cycle.iter().enumerate() {
            pos[w] = j;
        }
        debug_assert!(is_ham_cycle(&cur, &cycle));
    }
    Ok(cycle)
}

/// A Hamiltonian cycle when the `n`-closure is complete (always the case for
/// `δ >= n/2`).
pub fn ham_cycle_dirac(g: &Graph) -> Result<Vec<Vertex>> {
    let n = g.n();
    if n < 3 {
        return domain(format!("Hamiltonian cycle needs at least 3 vertices, got {n}"));
    }
    let trace = closure(g, n);
    if !trace.graph.is_complete() {
        return Err(Error::NotApplicable(format!(
            "{n}-closure is not complete ({} of {} edges)",
            trace.graph.edge_count(),
            n * (n - 1) / 2
        )));
    }
    let cycle = unwind(&trace, (0..n).collect())?;
    if !is_ham_cycle(g, &cycle) {
        return internal("unwound cycle is not Hamiltonian");
    }
    Ok(cycle)
}

/// `ψ_j < j - 1` for every `2 <= j <= n/2`; implies Hamiltonian-connected.
pub fn ckk_condition(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    let prof = g.degree_profile();
    (2..=n / 2).all(|j| prof.psi(j) + 1 < j)
}

/// A Hamiltonian path from `u` to `v`, for graphs meeting [`ckk_condition`].
pub fn ham_path_between(g: &Graph, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
    let n = g.n();
    if u >= n || v >= n || u == v {
        return domain(format!("endpoints {u}, {v} invalid for n = {n}"));
    }
    if !ckk_condition(g) {
        return Err(Error::NotApplicable(
            "degree condition for Hamiltonian-connectedness fails".into(),
        ));
    }
    path_via_apex(g, u, v)
}

fn path_via_apex(g: &Graph, u: Vertex, v: Vertex) -> Result<Vec<Vertex>> {
    let n = g.n();
    let z = n;
    let mut h = g.with_isolated(1);
    h.add_edge(z, u);
    h.add_edge(z, v);
    let mut originals = VertexSet::full(n);
    originals.grow(n + 1);
    let trace = closure_among(&h, n + 1, &originals);
    if trace.graph.edge_count() != n * (n - 1) / 2 + 2 {
        return internal(format!(
            "(n+1)-closure is not complete on the original {n} vertices"
        ));
    }
    let mut start = vec![z, u];
    start.extend((0..n).filter(|&x| x != u && x != v));
    start.push(v);
    let cycle = unwind(&trace, start)?;
    let at = cycle.iter().position(|&x| x == z).expect("apex on cycle");
    let mut path: Vec<Vertex> = (1..=n).map(|i| cycle[(at + i) % (n + 1)]).collect();
    if path[0] != u {
        path.reverse();
    }
    if !is_ham_path(g, &path, u, v) {
        return internal("unwound path is not a Hamiltonian u-v path");
    }
    Ok(path)
}

/// First `j` violating the degree-tail condition for `ell` edge-disjoint
/// endpoint-specified Hamiltonian paths, or a size failure.
pub fn degree_tail_violation(g: &Graph, ell: usize) -> Option<String> {
    let n = g.n();
    if n < 4 * ell {
        return Some(format!("n = {n} < 4ℓ = {}", 4 * ell));
    }
    let prof = g.degree_profile();
    let top = (n + 4 * (ell - 1)) / 2;
    (2 * ell..=top)
        .find(|&j| prof.psi(j) + 2 * ell >= j + 1)
        .map(|j| format!("ψ_{j} = {} is not below {}", prof.psi(j), (j + 1) as i64 - 2 * ell as i64))
}

/// Edge-disjoint Hamiltonian paths joining each requested pair, extracted
/// last request first. Pairs may repeat.
pub fn edge_disjoint_ham_paths(g: &Graph, req: &[(Vertex, Vertex)]) -> Result<Vec<Vec<Vertex>>> {
    let ell = req.len();
    if ell == 0 {
        return domain("empty endpoint request");
    }
    for &(u, v) in req {
        if u == v || u >= g.n() || v >= g.n() {
            return domain(format!("invalid endpoint pair {u}, {v}"));
        }
    }
    if let Some(why) = degree_tail_violation(g, ell) {
        return Err(Error::NotApplicable(why));
    }
    let mut cur = g.clone();
    let mut out = vec![Vec::new(); ell];
    for i in (0..ell).rev() {
        let (u, v) = req[i];
        let p = path_via_apex(&cur, u, v)?;
        cur = cur.remove_edges(&path_edges(&p))?;
        out[i] = p;
    }
    Ok(out)
}

/// Degree bounds on a two-part partition that imply the path condition.
pub fn partition_degrees_suffice(g: &Graph, v1: &VertexSet, v2: &VertexSet, ell: usize) -> Result<bool> {
    let n = g.n();
    if v1.universe() != n || v2.universe() != n || !v1.is_disjoint(v2) || v1.count() + v2.count() != n {
        return domain("parts do not partition the vertex set");
    }
    if v1.is_empty() {
        return domain("first part must be nonempty");
    }
    let high = v1.iter().all(|v| 2 * g.degree(v) + 2 >= n + 4 * ell);
    let low = v2.iter().all(|v| g.degree(v) >= v2.count() + 2 * ell);
    Ok(high && low)
}

pub fn is_ham_cycle(g: &Graph, cycle: &[Vertex]) -> bool {
    let n = g.n();
    if cycle.len() != n || n < 3 {
        return false;
    }
    let mut seen = VertexSet::new(n);
    cycle.iter().all(|&v| v < n && seen.insert(v))
        && (0..n).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % n]))
}

pub fn is_ham_path(g: &Graph, path: &[Vertex], u: Vertex, v: Vertex) -> bool {
    let n = g.n();
    if path.len() != n || path.first() != Some(&u) || path.last() != Some(&v) {
        return false;
    }
    let mut seen = VertexSet::new(n);
    path.iter().all(|&x| x < n && seen.insert(x)) && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

pub fn cycle_edges(cycle: &[Vertex]) -> EdgeSet {
    let n = cycle.len();
    (0..n).map(|i| Edge::new(cycle[i], cycle[(i + 1) % n])).collect()
}

pub fn path_edges(path: &[Vertex]) -> EdgeSet {
    path.windows(2).map(|w| Edge::new(w[0], w[1])).collect()
}

/// Depth-first search for a Hamiltonian cycle, least-options-first. Returns
/// `Ok(None)` when none exists and a size error once `budget` expansions are spent.
pub fn ham_cycle_search(g: &Graph, budget: u64) -> Result<Option<Vec<Vertex>>> {
    ham_cycle_search_where(g, budget, |_| true)
}

/// As [`ham_cycle_search`], returning the first cycle that `accept` approves.
pub fn ham_cycle_search_where<F>(g: &Graph, budget: u64, mut accept: F) -> Result<Option<Vec<Vertex>>>
where
    F: FnMut(&[Vertex]) -> bool,
{
    let n = g.n();
    if n < 3 || g.min_degree() < 2 {
        return Ok(None);
    }
    let mut search = Search { g, path: vec![0], free: g.vertex_set(), spent: 0, budget, accept: &mut accept };
    search.free.remove(0);
    match search.extend() {
        Some(true) => Ok(Some(search.path)),
        Some(false) => Ok(None),
        None => Err(Error::SizeLimit(format!("search budget of {budget} expansions exhausted"))),
    }
}

/// Randomized rotation-extension search for a Hamiltonian cycle: extend the
/// path at either end, close it into a cycle through a crossing chord when
/// possible, and otherwise rotate at a random chord of the last vertex.
/// Returns `None` once `budget` steps are spent.
pub fn ham_cycle_rotation(g: &Graph, seed: u64, budget: u64) -> Option<Vec<Vertex>> {
    let n = g.n();
    if n < 3 || g.min_degree() < 2 || !g.is_connected() {
        return None;
    }
    let mut rng = Prng::new(seed);
    let mut path = vec![rng.below(n)];
    let mut on_path = VertexSet::new(n);
    on_path.insert(path[0]);
    for _ in 0..budget {
        let end = *path.last().expect("nonempty path");
        let free = g.neighbors(end).difference(&on_path);
        if let Some(x) = pick(&free, &mut rng) {
            path.push(x);
            on_path.insert(x);
            continue;
        }
        if !g.neighbors(path[0]).is_disjoint(&on_path.complement()) {
            path.reverse();
            continue;
        }
        let len = path.len();
        if let Some(i) = (0..len - 1).find(|&i| g.has_edge(end, path[i]) && g.has_edge(path[0], path[i + 1])) {
            path[i + 1..].reverse();
            if len == n {
                return Some(path);
            }
            // open the cycle next to an outside neighbour
            let (j, y) = path
                .iter()
                .enumerate()
                .find_map(|(j, &c)| g.neighbors(c).difference(&on_path).first().map(|y| (j, y)))
                .expect("connected graph has an edge leaving the cycle");
            path.rotate_left(j);
            path.reverse();
            path.push(y);
            on_path.insert(y);
            continue;
        }
        let chords: Vec<usize> = (0..len - 2).filter(|&i| g.has_edge(end, path[i])).collect();
        let i = chords[rng.below(chords.len())];
        path[i + 1..].reverse();
    }
    None
}

fn pick(set: &VertexSet, rng: &mut Prng) -> Option<Vertex> {
    match set.count() {
        0 => None,
        c => set.iter().nth(rng.below(c)),
    }
}

/// Hamiltonian `u`-`v` path by search on the graph with an apex joined to `u` and `v`.
pub fn ham_path_search(g: &Graph, u: Vertex, v: Vertex, budget: u64) -> Result<Option<Vec<Vertex>>> {
    let n = g.n();
    if u >= n || v >= n || u == v {
        return domain(format!("endpoints {u}, {v} invalid for n = {n}"));
    }
    if n == 2 {
        return Ok(g.has_edge(u, v).then(|| vec![u, v]));
    }
    let mut h = g.with_isolated(1);
    h.add_edge(n, u);
    h.add_edge(n, v);
    let Some(cycle) = ham_cycle_search(&h, budget)? else {
        return Ok(None);
    };
    let at = cycle.iter().position(|&x| x == n).expect("apex on cycle");
    let mut path: Vec<Vertex> = (1..=n).map(|i| cycle[(at + i) % (n + 1)]).collect();
    if path[0] != u {
        path.reverse();
    }
    Ok(Some(path))
}

struct Search<'a, F> {
    g: &'a Graph,
    path: Vec<Vertex>,
    free: VertexSet,
    spent: u64,
    budget: u64,
    accept: &'a mut F,
}

impl<F: FnMut(&[Vertex]) -> bool> Search<'_, F> {
    fn extend(&mut self) -> Option<bool> {
        let g = self.g;
        let last = *self.path.last().unwrap();
        if self.free.is_empty() {
            return Some(g.has_edge(last, self.path[0]) && (self.accept)(&self.path));
        }
        self.spent += 1;
        if self.spent > self.budget {
            return None;
        }
        // A free vertex needs two usable neighbours: free ones or the path ends.
        let mut reach = self.free.clone();
        reach.insert(last);
        reach.insert(self.path[0]);
        if self.free.iter().any(|x| g.neighbors(x).intersection_count(&reach) < 2) {
            return Some(false);
        }
        let mut next: Vec<(usize, Vertex)> = g
            .neighbors(last)
            .intersection(&self.free)
            .iter()
            .map(|x| (g.neighbors(x).intersection_count(&self.free), x))
            .collect();
        next.sort_unstable();
        for (_, x) in next {
            self.path.push(x);
            self.free.remove(x);
            match self.extend() {
                Some(false) => {}
                done => return done,
            }
            self.free.insert(x);
            self.path.pop();
        }
        Some(false)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        let t = closure(&Graph::new(5), 1);
        assert!(t.added.is_empty());
        let c5 = Graph::cycle(5);
        let t = closure(&c5, 5);
        assert_eq!(t.graph, c5);
        let k33 = Graph::complete_bipartite(3, 3);
        let t = closure(&k33, 6);
        assert!(t.graph.is_complete());
        assert!(t.replays_on(&k33));
    }

    #[test]
    fn dirac_cycles() {
        assert_eq!(ham_cycle_dirac(&Graph::complete(4)).unwrap(), vec![0, 1, 2, 3]);
        let k33 = Graph::complete_bipartite(3, 3);
        let c = ham_cycle_dirac(&k33).unwrap();
        assert!(is_ham_cycle(&k33, &c));
        assert!(matches!(ham_cycle_dirac(&Graph::petersen()), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn ckk_examples() {
        assert!(ckk_condition(&Graph::complete(5)));
        assert!(!ckk_condition(&Graph::cycle(6)));
        assert!(!ckk_condition(&Graph::star(4)));
    }

    #[test]
    fn paths_between() {
        let p = ham_path_between(&Graph::complete(4), 0, 2).unwrap();
        assert!(p == vec![0, 1, 3, 2] || p == vec![0, 3, 1, 2]);
        let mut k5 = Graph::complete(5);
        k5.remove_edge(0, 1);
        let p = ham_path_between(&k5, 0, 1).unwrap();
        assert!(is_ham_path(&k5, &p, 0, 1));
        assert!(matches!(ham_path_between(&Graph::cycle(6), 0, 3), Err(Error::NotApplicable(_))));
    }

    #[test]
    fn disjoint_paths_in_cliques() {
        let k8 = Graph::complete(8);
        let ps = edge_disjoint_ham_paths(&k8, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_ham_path(&k8, &ps[0], 0, 1));
        assert!(is_ham_path(&k8, &ps[1], 2, 3));
        assert!(path_edges(&ps[0]).is_disjoint(&path_edges(&ps[1])));
        let k9 = Graph::complete(9);
        let ps = edge_disjoint_ham_paths(&k9, &[(0, 1), (0, 1)]).unwrap();
        assert!(path_edges(&ps[0]).is_disjoint(&path_edges(&ps[1])));
        assert_eq!(edge_disjoint_ham_paths(&Graph::complete(4), &[(0, 3)]).unwrap().len(), 1);
        assert!(matches!(
            edge_disjoint_ham_paths(&Graph::complete(7), &[(0, 1), (2, 3)]),
            Err(Error::NotApplicable(_))
        ));
    }

    #[test]
    fn partition_degree_checks() {
        let k9 = Graph::complete(9);
        assert!(partition_degrees_suffice(&k9, &k9.vertex_set(), &k9.empty_set(), 2).unwrap());
        // Vertex 0 in the low part has degree |V2| + 1.
        let mut g = Graph::complete(8);
        for v in 3..8 {
            g.remove_edge(0, v);
        }
        let v2 = VertexSet::from_iter(8, [0, 1]);
        let v1 = g.vertex_set().difference(&v2);
        assert!(!partition_degrees_suffice(&g, &v1, &v2, 1).unwrap());
        assert!(partition_degrees_suffice(&g, &v1, &v1, 1).is_err());
    }

    #[test]
    fn backtracking_search() {
        assert_eq!(ham_cycle_search(&Graph::petersen(), 1_000_000).unwrap(), None);
        let c = ham_cycle_search(&Graph::cycle(7), 1000).unwrap().unwrap();
        assert!(is_ham_cycle(&Graph::cycle(7), &c));
    }

    #[test]
    fn rotation_finds_cycles() {
        for seed in 0..5 {
            let g = crate::instances::gen_dirac(40, seed, 0).unwrap();
            let c = ham_cycle_rotation(&g, seed, 100_000).unwrap();
            assert!(is_ham_cycle(&g, &c));
        }
        assert_eq!(ham_cycle_rotation(&Graph::petersen(), 1, 10_000), None);
        let c = ham_cycle_rotation(&Graph::cycle(9), 0, 10_000).unwrap();
        assert!(is_ham_cycle(&Graph::cycle(9), &c));
    }
}
