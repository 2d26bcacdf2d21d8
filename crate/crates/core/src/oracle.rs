//! Brute-force oracles and the certificate verifier.
//!
//! Nothing here calls into [`crate::preserve`], [`crate::connectivity`] or
//! [`crate::hamilton`]: graphs are re-read into plain adjacency lists and
//! every property is recomputed from scratch.

use std::collections::{BTreeSet, VecDeque};
use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::io::graph_hash;
use crate::preserve::PreserveCertificate;

/// Largest order accepted by the Hamiltonian cycle enumerator.
pub const MAX_ENUM_N: usize = 14;
/// Largest edge count accepted by [`brute_max_pairs`].
pub const MAX_PAIR_EDGES: usize = 24;
/// Largest order accepted by [`brute_preserving_exists`].
pub const MAX_PRESERVE_N: usize = 12;
/// Largest order accepted by [`kappa_brute`].
pub const MAX_KAPPA_N: usize = 16;
/// Largest order accepted by [`graph_catalog`].
pub const MAX_CATALOG_N: usize = 6;

/// Counterexample attached to a failed check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Witness {
    Vertex(Vertex),
    Edge(Edge),
    Cut(Vec<Vertex>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn pass(&mut self, name: &str, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), passed: true, detail: detail.into(), witness: None });
    }

    fn fail(&mut self, name: &str, detail: impl Into<String>, witness: Option<Witness>) {
        self.checks.push(Check { name: name.into(), passed: false, detail: detail.into(), witness });
    }

    fn record(&mut self, name: &str, outcome: std::result::Result<String, (String, Option<Witness>)>) {
        match outcome {
            Ok(d) => self.pass(name, d),
            Err((d, w)) => self.fail(name, d, w),
        }
    }
}

/// Plain adjacency lists plus an edge lookup, rebuilt from the edge list.
#[derive(Clone, Debug)]
struct Adj {
    lists: Vec<Vec<Vertex>>,
    edges: BTreeSet<(Vertex, Vertex)>,
}

impl Adj {
    fn from_edges(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Adj {
        let mut lists = vec![Vec::new(); n];
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            let key = (u.min(v), u.max(v));
            if u != v && set.insert(key) {
                lists[u].push(v);
                lists[v].push(u);
            }
        }
        Adj { lists, edges: set }
    }

    fn of(g: &Graph) -> Adj {
        Adj::from_edges(g.n(), g.edges().map(|e| (e.u(), e.v())))
    }

    fn n(&self) -> usize {
        self.lists.len()
    }

    fn has(&self, u: Vertex, v: Vertex) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    fn without(&self, removed: &BTreeSet<(Vertex, Vertex)>) -> Adj {
        Adj::from_edges(self.n(), self.edges.iter().copied().filter(|e| !removed.contains(e)))
    }
}

/// Unit vertex-capacity flow between two nonadjacent vertices, stopping at
/// `limit`. Returns the flow value and, when below `limit`, a separating set.
fn local_connectivity(adj: &Adj, s: Vertex, t: Vertex, limit: usize) -> (usize, Option<Vec<Vertex>>) {
    let n = adj.n();
    let big = n as i32 + 1;
    // node v_in = 2v, v_out = 2v + 1
    let mut head = vec![usize::MAX; 2 * n];
    let mut to = Vec::new();
    let mut cap: Vec<i32> = Vec::new();
    let mut next = Vec::new();
    let mut arc = |a: usize, b: usize, c: i32, head: &mut Vec<usize>| {
        for (x, y, k) in [(a, b, c), (b, a, 0)] {
            to.push(y);
            cap.push(k);
            next.push(head[x]);
            head[x] = to.len() - 1;
        }
    };
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        arc(2 * v, 2 * v + 1, c, &mut head);
        for &u in &adj.lists[v] {
            arc(2 * v + 1, 2 * u, big, &mut head);
        }
    }
    let (src, dst) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    let mut prev = vec![usize::MAX; 2 * n];
    while flow < limit {
        prev.iter_mut().for_each(|p| *p = usize::MAX);
        let mut seen = vec![false; 2 * n];
        seen[src] = true;
        let mut queue = VecDeque::from([src]);
        while let Some(x) = queue.pop_front() {
            let mut a = head[x];
            while a != usize::MAX {
                let y = to[a];
                if cap[a] > 0 && !seen[y] {
                    seen[y] = true;
                    prev[y] = a;
                    queue.push_back(y);
                }
                a = next[a];
            }
        }
        if !seen[dst] {
            let cut = (0..n).filter(|&v| seen[2 * v] && !seen[2 * v + 1]).collect();
            return (flow, Some(cut));
        }
        let mut y = dst;
        while y != src {
            let a = prev[y];
            cap[a] -= 1;
            cap[a ^ 1] += 1;
            y = to[a ^ 1];
        }
        flow += 1;
    }
    (flow, None)
}

/// `Ok(())` if `adj` is `k`-connected, else a separating set of size `< k`
/// (empty when the graph has at most `k` vertices).
fn k_connected_witness(adj: &Adj, k: usize) -> std::result::Result<(), Vec<Vertex>> {
    let n = adj.n();
    if k == 0 {
        return Ok(());
    }
    if n <= k {
        return Err(Vec::new());
    }
    // Any separator of size < k misses one of the first k vertices.
    for s in 0..k {
        for t in 0..n {
            if t != s && !adj.has(s, t) {
                let (f, cut) = local_connectivity(adj, s, t, k);
                if f < k {
                    return Err(cut.unwrap_or_default());
                }
            }
        }
    }
    Ok(())
}

/// Vertex connectivity by the oracle's own flow routine.
pub fn kappa_flow(g: &Graph) -> usize {
    let adj = Adj::of(g);
    let mut k = 0;
    while k_connected_witness(&adj, k + 1).is_ok() {
        k += 1;
    }
    k
}

fn ham_cycle_problem(adj: &Adj, cycle: &[Vertex]) -> Option<(String, Witness)> {
    let n = adj.n();
    if cycle.len() != n || n < 3 {
        return Some((format!("cycle has {} vertices, graph has {n}", cycle.len()), Witness::Cut(cycle.to_vec())));
    }
    let mut seen = vec![false; n];
    for &v in cycle {
        if v >= n {
            return Some((format!("vertex {v} out of range"), Witness::Vertex(v)));
        }
        if seen[v] {
            return Some((format!("vertex {v} repeated"), Witness::Vertex(v)));
        }
        seen[v] = true;
    }
    for i in 0..n {
        let (u, v) = (cycle[i], cycle[(i + 1) % n]);
        if !adj.has(u, v) {
            return Some((format!("{u}-{v} is not an edge"), Witness::Edge(Edge::new(u, v))));
        }
    }
    None
}

fn cycle_pairs(cycle: &[Vertex]) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    let n = cycle.len();
    (0..n).map(move |i| {
        let (u, v) = (cycle[i], cycle[(i + 1) % n]);
        (u.min(v), u.max(v))
    })
}

/// Re-checks a certificate against `g`: hash, Hamiltonicity, edge-disjointness,
/// withheld bridge edges, and connectivity of the remainder (`>= k`, and
/// `== k` when `exact`).
pub fn verify_certificate(g: &Graph, cert: &PreserveCertificate, k: usize, exact: bool) -> Result<VerificationReport> {
    let found = graph_hash(g);
    if found != cert.input_hash {
        return Err(Error::StaleCertificate { expected: cert.input_hash.clone(), found });
    }
    let adj = Adj::of(g);
    let mut report = VerificationReport::default();

    if cert.n == g.n() && cert.k == k && cert.exact == exact && cert.ell == cert.cycles.len() {
        report.pass("parameters", format!("n={} k={k} ell={} exact={exact}", cert.n, cert.ell));
    } else {
        report.fail(
            "parameters",
            format!(
                "certificate says n={} k={} ell={} exact={} with {} cycles; expected n={} k={k} exact={exact}",
                cert.n,
                cert.k,
                cert.ell,
                cert.exact,
                cert.cycles.len(),
                g.n()
            ),
            None,
        );
    }

    let mut all_ham = true;
    for (i, c) in cert.cycles.iter().enumerate() {
        match ham_cycle_problem(&adj, c) {
            None => report.pass(&format!("hamiltonian[{i}]"), "spanning cycle of the input"),
            Some((d, w)) => {
                all_ham = false;
                report.fail(&format!("hamiltonian[{i}]"), d, Some(w));
            }
        }
    }
    if cert.cycles.is_empty() {
        all_ham = false;
        report.fail("hamiltonian", "certificate has no cycles", None);
    }

    let mut used = BTreeSet::new();
    let mut clash = None;
    for c in &cert.cycles {
        for e in cycle_pairs(c) {
            if !used.insert(e) && clash.is_none() {
                clash = Some(e);
            }
        }
    }
    report.record(
        "edge-disjoint",
        match clash {
            None => Ok(format!("{} cycle edges, all distinct", used.len())),
            Some((u, v)) => Err((format!("edge {u}-{v} used twice"), Some(Witness::Edge(Edge::new(u, v))))),
        },
    );

    let bad_bridge = cert.bridge.iter().find(|e| used.contains(&(e.u(), e.v())) || !adj.has(e.u(), e.v()));
    report.record(
        "bridge-withheld",
        match bad_bridge {
            None => Ok(format!("{} bridge edges outside every cycle", cert.bridge.len())),
            Some(&e) => Err((format!("bridge edge {e} is used by a cycle or absent"), Some(Witness::Edge(e)))),
        },
    );

    if all_ham {
        let rem = adj.without(&used);
        report.record(
            "remainder-connectivity",
            match k_connected_witness(&rem, k) {
                Ok(()) => Ok(format!("remainder is {k}-connected")),
                Err(cut) => Err((
                    format!("remainder separated by {} vertices, need {k}", cut.len()),
                    Some(Witness::Cut(cut)),
                )),
            },
        );
        if exact {
            report.record(
                "remainder-exact",
                match k_connected_witness(&rem, k + 1) {
                    Err(cut) => Ok(format!("remainder has a {}-vertex cut", cut.len())),
                    Ok(()) => Err((format!("remainder is {}-connected, expected exactly {k}", k + 1), None)),
                },
            );
        }
    } else {
        report.fail("remainder-connectivity", "skipped: cycles are not Hamiltonian", None);
    }
    Ok(report)
}

/// Visits every Hamiltonian cycle once, in canonical form: vertex 0 first and
/// the second vertex smaller than the last.
pub fn for_each_ham_cycle<F>(g: &Graph, mut visit: F) -> Result<()>
where
    F: FnMut(&[Vertex]) -> ControlFlow<()>,
{
    let n = g.n();
    if n > MAX_ENUM_N {
        return Err(Error::SizeLimit(format!("cycle enumeration needs n <= {MAX_ENUM_N}, got {n}")));
    }
    if n < 3 {
        return Ok(());
    }
    let adj = Adj::of(g);
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    fn walk<F: FnMut(&[Vertex]) -> ControlFlow<()>>(
        adj: &Adj,
        path: &mut Vec<Vertex>,
        used: &mut [bool],
        visit: &mut F,
    ) -> ControlFlow<()> {
        let n = adj.n();
        let last = *path.last().unwrap();
        if path.len() == n {
            if adj.has(last, 0) && path[1] < last {
                return visit(path);
            }
            return ControlFlow::Continue(());
        }
        for &v in &adj.lists[last] {
            if !used[v] {
                used[v] = true;
                path.push(v);
                let r = walk(adj, path, used, visit);
                path.pop();
                used[v] = false;
                r?;
            }
        }
        ControlFlow::Continue(())
    }
    let _ = walk(&adj, &mut path, &mut used, &mut visit);
    Ok(())
}

/// All Hamiltonian cycles up to rotation and reflection, at most `limit`.
pub fn brute_ham_enum(g: &Graph, limit: usize) -> Result<Vec<Vec<Vertex>>> {
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    for_each_ham_cycle(g, |c| {
        out.push(c.to_vec());
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}

/// Exact maximum number of edge-disjoint edge-pairs: a maximum matching in the
/// graph on `E(G)` whose adjacency is independence, by branch and bound.
pub fn brute_max_pairs(g: &Graph) -> Result<usize> {
    let edges: Vec<(Vertex, Vertex)> = g.edges().map(|e| (e.u(), e.v())).collect();
    let m = edges.len();
    if m > MAX_PAIR_EDGES {
        return Err(Error::SizeLimit(format!("pair oracle needs |E| <= {MAX_PAIR_EDGES}, got {m}")));
    }
    let indep = |a: usize, b: usize| {
        let ((p, q), (r, s)) = (edges[a], edges[b]);
        p != r && p != s && q != r && q != s
    };
    let compat: Vec<u32> =
        (0..m).map(|a| (0..m).filter(|&b| b != a && indep(a, b)).fold(0u32, |acc, b| acc | 1 << b)).collect();
    fn search(free: u32, compat: &[u32], depth: usize, best: &mut usize) {
        let left = free.count_ones() as usize;
        if depth + left / 2 <= *best {
            return;
        }
        if left < 2 {
            *best = (*best).max(depth);
            return;
        }
        let a = free.trailing_zeros() as usize;
        let rest = free & !(1 << a);
        let mut partners = rest & compat[a];
        while partners != 0 {
            let b = partners.trailing_zeros() as usize;
            partners &= partners - 1;
            search(rest & !(1 << b), compat, depth + 1, best);
        }
        search(rest, compat, depth, best);
    }
    let mut best = 0;
    let all = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    search(all, &compat, 0, &mut best);
    Ok(best)
}

fn separator_brute(adj: &Adj, size: usize) -> Option<Vec<Vertex>> {
    let n = adj.n();
    let mut chosen = Vec::with_capacity(size);
    fn disconnected(adj: &Adj, removed: &[Vertex]) -> bool {
        let n = adj.n();
        let mut gone = vec![false; n];
        removed.iter().for_each(|&v| gone[v] = true);
        let Some(start) = (0..n).find(|&v| !gone[v]) else { return false };
        let mut seen = gone.clone();
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for &y in &adj.lists[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        seen.iter().any(|&s| !s)
    }
    fn pick(adj: &Adj, from: usize, size: usize, chosen: &mut Vec<Vertex>) -> bool {
        if chosen.len() == size {
            return disconnected(adj, chosen);
        }
        for v in from..adj.n() {
            chosen.push(v);
            if pick(adj, v + 1, size, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
    if size + 2 > n {
        return None;
    }
    pick(adj, 0, size, &mut chosen).then_some(chosen)
}

/// Vertex connectivity by trying every vertex subset in order of size.
pub fn kappa_brute(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > MAX_KAPPA_N {
        return Err(Error::SizeLimit(format!("brute-force connectivity needs n <= {MAX_KAPPA_N}, got {n}")));
    }
    let adj = Adj::of(g);
    Ok(kappa_brute_adj(&adj))
}

fn kappa_brute_adj(adj: &Adj) -> usize {
    let n = adj.n();
    (0..n.saturating_sub(1)).find(|&s| separator_brute(adj, s).is_some()).unwrap_or(n.saturating_sub(1))
}

fn k_connected_brute(adj: &Adj, k: usize) -> bool {
    adj.n() > k && (0..k).all(|s| separator_brute(adj, s).is_none())
}

/// Whether some Hamiltonian cycle `H` has `κ(G − E(H)) >= k`.
pub fn brute_preserving_exists(g: &Graph, k: usize) -> Result<bool> {
    Ok(brute_preserving_cycle(g, k)?.is_some())
}

/// A Hamiltonian cycle whose removal leaves `G` `k`-connected, if any.
pub fn brute_preserving_cycle(g: &Graph, k: usize) -> Result<Option<Vec<Vertex>>> {
    let n = g.n();
    if n > MAX_PRESERVE_N {
        return Err(Error::SizeLimit(format!("preservation search needs n <= {MAX_PRESERVE_N}, got {n}")));
    }
    let adj = Adj::of(g);
    let mut found = None;
    for_each_ham_cycle(g, |c| {
        let used: BTreeSet<_> = cycle_pairs(c).collect();
        if k_connected_brute(&adj.without(&used), k) {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// Hamiltonian cycle through every edge in `forced`, if one exists.
pub fn ham_cycle_with_forced(g: &Graph, forced: &[Edge]) -> Result<Option<Vec<Vertex>>> {
    let adj = Adj::of(g);
    if let Some(e) = forced.iter().find(|e| !adj.has(e.u(), e.v())) {
        return domain(format!("forced edge {e} is not in the graph"));
    }
    let need: BTreeSet<_> = forced.iter().map(|e| (e.u(), e.v())).collect();
    let mut found = None;
    for_each_ham_cycle(g, |c| {
        let have: BTreeSet<_> = cycle_pairs(c).collect();
        if need.is_subset(&have) {
            found = Some(c.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// Adjacency bitmask over the `n(n-1)/2` vertex pairs in lexicographic order.
fn pair_mask(n: usize, has: impl Fn(usize, usize) -> bool) -> u64 {
    let mut bit = 0;
    let mut mask = 0u64;
    for u in 0..n {
        for v in u + 1..n {
            if has(u, v) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            let j = if k % 2 == 0 { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Isomorphism-invariant code: the least adjacency bitmask over all vertex
/// orderings. Practical up to about 8 vertices.
pub fn canonical_code(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > 9 {
        return Err(Error::SizeLimit(format!("canonical code needs n <= 9, got {n}")));
    }
    let adj = Adj::of(g);
    Ok(permutations(n).iter().map(|p| pair_mask(n, |u, v| adj.has(p[u], p[v]))).min().unwrap_or(0))
}

/// Every graph on `n` vertices, one per isomorphism class.
pub fn graph_catalog(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CATALOG_N {
        return Err(Error::SizeLimit(format!("catalog needs n <= {MAX_CATALOG_N}, got {n}")));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let perms = permutations(n);
    // perm_bits[p][i]: position of pair i under permutation p
    let perm_bits: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| {
            pairs
                .iter()
                .map(|&(u, v)| {
                    let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                    pairs.iter().position(|&x| x == (a, b)).unwrap()
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << pairs.len() {
        let is_min = perm_bits.iter().all(|pb| {
            let image = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).fold(0u64, |acc, i| acc | 1 << pb[i]);
            image >= mask
        });
        if is_min {
            let edges = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]);
            out.push(Graph::from_edges(n, edges)?);
        }
    }
    Ok(out)
}

/// Component of a graph with maximum degree at most 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Piece {
    /// Path on this many vertices (1 is an isolated vertex).
    Path(usize),
    /// Cycle on this many vertices (at least 3).
    Cycle(usize),
}

impl Piece {
    fn order(self) -> usize {
        match self {
            Piece::Path(a) | Piece::Cycle(a) => a,
        }
    }
}

/// Every graph on `n` vertices with maximum degree at most 2, one per
/// isomorphism class, as nondecreasing lists of path and cycle pieces.
pub fn max_degree_two_classes(n: usize) -> Vec<Vec<Piece>> {
    let mut kinds: Vec<Piece> = (1..=n).map(Piece::Path).chain((3..=n).map(Piece::Cycle)).collect();
    kinds.sort();
    let mut out = Vec::new();
    fn grow(kinds: &[Piece], from: usize, left: usize, cur: &mut Vec<Piece>, out: &mut Vec<Vec<Piece>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in from..kinds.len() {
            if kinds[i].order() <= left {
                cur.push(kinds[i]);
                grow(kinds, i, left - kinds[i].order(), cur, out);
                cur.pop();
            }
        }
    }
    grow(&kinds, 0, n, &mut Vec::new(), &mut out);
    out
}

/// The graph on `n` vertices made of `pieces`, laid out consecutively.
pub fn pieces_graph(pieces: &[Piece]) -> Graph {
    let n = pieces.iter().map(|p| p.order()).sum();
    let mut g = Graph::new(n);
    let mut at = 0;
    for &p in pieces {
        let a = p.order();
        for i in 1..a {
            g.add_edge(at + i - 1, at + i);
        }
        if let Piece::Cycle(_) = p {
            g.add_edge(at, at + a - 1);
        }
        at += a;
    }
    g
}

/// Every graph of order `n` with `δ >= n - 3`, one per isomorphism class,
/// as complements of the maximum-degree-two classes.
pub fn dense_catalog(n: usize) -> Vec<Graph> {
    max_degree_two_classes(n).iter().map(|p| pieces_graph(p).complement()).collect()
}

/// Whether `cycle` visits every vertex of `g` once along edges of `g`.
pub fn hamiltonian_cycle_ok(g: &Graph, cycle: &[Vertex]) -> bool {
    ham_cycle_problem(&Adj::of(g), cycle).is_none()
}

/// Whether `path` is a Hamiltonian path of `g` from `u` to `v`.
pub fn hamiltonian_path_ok(g: &Graph, path: &[Vertex], u: Vertex, v: Vertex) -> bool {
    let adj = Adj::of(g);
    let n = adj.n();
    if path.len() != n || path.first() != Some(&u) || path.last() != Some(&v) {
        return false;
    }
    let mut seen = vec![false; n];
    for &x in path {
        if x >= n || std::mem::replace(&mut seen[x], true) {
            return false;
        }
    }
    path.windows(2).all(|w| adj.has(w[0], w[1]))
}

/// The three decomposability conditions, evaluated directly: even edge count,
/// `|E| >= 2Δ`, and no triangle when `|E| = 4`.
pub fn pair_conditions_hold(g: &Graph) -> bool {
    let adj = Adj::of(g);
    let m = adj.edges.len();
    let delta = adj.lists.iter().map(Vec::len).max().unwrap_or(0);
    let triangle = adj.edges.iter().any(|&(u, v)| adj.lists[u].iter().any(|&w| w != v && adj.has(v, w)));
    m % 2 == 0 && m >= 2 * delta && !(m == 4 && triangle)
}

/// First problem with `pairs` as edge-disjoint edge-pairs of `g`; with `full`,
/// also requires that they cover every edge.
pub fn pairs_problem(g: &Graph, pairs: &[crate::pairs::EdgePair], full: bool) -> Option<String> {
    let adj = Adj::of(g);
    let mut used = BTreeSet::new();
    for p in pairs {
        let [a, b] = p.edges();
        for e in [a, b] {
            if !adj.has(e.u(), e.v()) {
                return Some(format!("{e} is not an edge"));
            }
            if !used.insert((e.u(), e.v())) {
                return Some(format!("{e} used twice"));
            }
        }
        if a.touches(b.u()) || a.touches(b.v()) {
            return Some(format!("{a} and {b} share an endpoint"));
        }
    }
    if full && used.len() != adj.edges.len() {
        return Some(format!("{} of {} edges covered", used.len(), adj.edges.len()));
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(brute_ham_enum(&Graph::complete(4), 100).unwrap().len(), 3);
        assert_eq!(brute_ham_enum(&Graph::complete(5), 100).unwrap().len(), 12);
        assert_eq!(brute_ham_enum(&Graph::cycle(5), 100).unwrap().len(), 1);
        assert!(brute_ham_enum(&Graph::petersen(), 100).unwrap().is_empty());
        assert_eq!(brute_ham_enum(&Graph::complete(6), 7).unwrap().len(), 7);
        assert!(matches!(brute_ham_enum(&Graph::complete(15), 1), Err(Error::SizeLimit(_))));
        for c in brute_ham_enum(&Graph::complete(6), 100).unwrap() {
            assert_eq!(c[0], 0);
            assert!(c[1] < c[5]);
        }
    }

    #[test]
    fn pair_oracle() {
        assert_eq!(brute_max_pairs(&Graph::path(5)).unwrap(), 2);
        assert_eq!(brute_max_pairs(&Graph::star(4)).unwrap(), 0);
        assert_eq!(brute_max_pairs(&Graph::complete(3)).unwrap(), 0);
        assert_eq!(brute_max_pairs(&Graph::complete(4)).unwrap(), 3);
        assert!(matches!(brute_max_pairs(&Graph::complete(8)), Err(Error::SizeLimit(_))));
    }

    #[test]
    fn brute_connectivity() {
        assert_eq!(kappa_brute(&Graph::cycle(6)).unwrap(), 2);
        assert_eq!(kappa_brute(&Graph::complete(5)).unwrap(), 4);
        assert_eq!(kappa_brute(&Graph::path(4)).unwrap(), 1);
        assert_eq!(kappa_brute(&Graph::new(3)).unwrap(), 0);
        assert_eq!(kappa_brute(&Graph::petersen()).unwrap(), 3);
        assert_eq!(kappa_flow(&Graph::petersen()), 3);
        assert_eq!(kappa_flow(&Graph::complete(6)), 5);
        assert_eq!(kappa_flow(&Graph::complete_bipartite(3, 4)), 3);
    }

    #[test]
    fn catalog_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| graph_catalog(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn degree_two_classes_match_canonical_dedup() {
        for n in 1..=7 {
            let classes = max_degree_two_classes(n);
            let codes: BTreeSet<u64> = classes.iter().map(|p| canonical_code(&pieces_graph(p)).unwrap()).collect();
            assert_eq!(codes.len(), classes.len(), "n = {n}");
        }
        assert_eq!(max_degree_two_classes(3).len(), 4);
    }

    #[test]
    fn preservation_oracle() {
        assert!(brute_preserving_exists(&Graph::complete(7), 2).unwrap());
        assert!(!brute_preserving_exists(&Graph::complete_bipartite(3, 3), 2).unwrap());
        assert!(!brute_preserving_exists(&Graph::petersen(), 1).unwrap());
    }

    #[test]
    fn forced_edges() {
        let g = Graph::complete(5);
        let c = ham_cycle_with_forced(&g, &[Edge::new(0, 2), Edge::new(1, 3)]).unwrap().unwrap();
        let pairs: BTreeSet<_> = cycle_pairs(&c).collect();
        assert!(pairs.contains(&(0, 2)) && pairs.contains(&(1, 3)));
        assert_eq!(ham_cycle_with_forced(&Graph::cycle(5), &[]).unwrap().unwrap().len(), 5);
        assert!(ham_cycle_with_forced(&Graph::cycle(5), &[Edge::new(0, 2)]).is_err());
    }
}
