//! Cut-based reconstruction: given a spanning subgraph `H` whose removal
//! breaks `k`-connectivity, rebuild `q` edge-disjoint Hamiltonian cycles that
//! avoid a bridge system across the cut of `G - E(H)`.

use crate::bitset::VertexSet;
use crate::connectivity::{bridge_by_modification, covering_bridge_flow_with, is_k_connected, PathSystem};
use crate::error::{domain, internal, Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::hamilton::{
    cycle_edges, edge_disjoint_ham_paths, ham_path_between, ham_path_search, is_ham_cycle,
    partition_degrees_suffice, path_edges,
};
use crate::pairs::{max_edge_disjoint_pairs, EdgePair};

use super::certificate::Structures;
use super::Journal;

const PATH_SEARCH_BUDGET: u64 = 1_000_000;

/// A cut `W` of `G'` with the two components of `G' - W`, smaller first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationStructure {
    pub cut: VertexSet,
    pub g1: VertexSet,
    pub g2: VertexSet,
}

impl SeparationStructure {
    pub fn new(g_prime: &Graph, cut: VertexSet) -> Result<Self> {
        let comps = g_prime.components_without(&cut);
        if comps.len() != 2 {
            return Err(Error::BoundViolation(format!(
                "removing the cut leaves {} components, expected exactly 2",
                comps.len()
            )));
        }
        let [a, b]: [VertexSet; 2] = comps.try_into().expect("two components");
        let (g1, g2) = if a.count() <= b.count() { (a, b) } else { (b, a) };
        Ok(SeparationStructure { cut, g1, g2 })
    }

    /// First failed side-size inequality
    /// `n/2 - k' - p + 1 <= |G1| <= (n - k')/2 <= |G2| <= n/2 + p - 1`.
    pub fn window_violation(&self, n: usize, p: usize) -> Option<String> {
        let (n, p) = (n as i64, p as i64);
        let kp = self.cut.count() as i64;
        let (s1, s2) = (self.g1.count() as i64, self.g2.count() as i64);
        let checks = [
            (2 * s1 >= n - 2 * kp - 2 * p + 2, format!("2|G1| = {} < n - 2k' - 2p + 2", 2 * s1)),
            (2 * s1 <= n - kp, format!("2|G1| = {} > n - k'", 2 * s1)),
            (2 * s2 >= n - kp, format!("2|G2| = {} < n - k'", 2 * s2)),
            (2 * s2 <= n + 2 * p - 2, format!("2|G2| = {} > n + 2p - 2", 2 * s2)),
        ];
        checks.into_iter().find(|(ok, _)| !ok).map(|(_, why)| why)
    }
}

/// `k` disjoint side-to-side paths whose internal vertices are exactly the cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BridgeSystem {
    pub paths: PathSystem,
    pub edges: EdgeSet,
    /// Paths through at least one cut vertex.
    pub k2: usize,
    /// Cut vertices at least as attached to `G1` as to `G2`.
    pub w1: VertexSet,
    pub w2: VertexSet,
    /// Edges of the direct (order-2) paths.
    pub m_b: EdgeSet,
}

impl BridgeSystem {
    /// Builds the system by covering flow, falling back to the iterative
    /// rerouting procedure when the flow is infeasible.
    pub fn build(g: &Graph, sep: &SeparationStructure, k: usize, max_order: usize, log: &mut Journal) -> Result<Self> {
        let flow = covering_bridge_flow_with(g, &sep.g1, &sep.g2, &sep.cut, k, max_order);
        let paths = match flow {
            Ok(paths) => paths,
            Err(Error::Infeasible { reason, .. }) if max_order == 4 => {
                log.warn(format!("bridge: covering flow infeasible ({reason}), trying rerouting"));
                bridge_by_modification(g, &sep.g1, &sep.g2, &sep.cut, k)
                    .map_err(|e| Error::BoundViolation(format!("no bridge system covers the cut: {e}")))?
            }
            Err(Error::Infeasible { reason, .. }) => {
                return Err(Error::BoundViolation(format!("no bridge system covers the cut: {reason}")))
            }
            Err(e) => return Err(e),
        };
        Self::from_paths(g, sep, paths)
    }

    pub fn from_paths(g: &Graph, sep: &SeparationStructure, paths: PathSystem) -> Result<Self> {
        let n = g.n();
        paths.validate(g, &sep.g1, &sep.g2)?;
        if paths.internal_vertices(n) != sep.cut {
            return internal("bridge internal vertices differ from the cut");
        }
        let mut w1 = VertexSet::new(n);
        for w in sep.cut.iter() {
            let nb = g.neighbors(w);
            if nb.intersection_count(&sep.g1) >= nb.intersection_count(&sep.g2) {
                w1.insert(w);
            }
        }
        let w2 = sep.cut.difference(&w1);
        let mut m_b = EdgeSet::new();
        let mut k2 = 0;
        for (i, p) in paths.paths.iter().enumerate() {
            match p.len() {
                2 => {
                    m_b.insert(Edge::new(p[0], p[1]));
                }
                3 => k2 += 1,
                4 => {
                    k2 += 1;
                    let mid = paths.internal(i);
                    if !(w1.contains(mid[0]) && w2.contains(mid[1])) {
                        return internal(format!("order-4 bridge path {p:?} does not straddle the cut split"));
                    }
                }
                len => return internal(format!("bridge path of order {len}")),
            }
        }
        let edges = paths.edge_set();
        Ok(BridgeSystem { paths, edges, k2, w1, w2, m_b })
    }
}

/// Crossing edges of `H`, their unused part, and the split `q = q1 + q2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossingBudget {
    pub m_h: EdgeSet,
    pub m_b: EdgeSet,
    pub u1: VertexSet,
    pub u2: VertexSet,
    pub q1: usize,
    pub q2: usize,
}

/// `q1 = min{q, max{0, |M_H| - |M_B| - max{p, q}}}` and `q2 = q - q1`.
pub fn select_q_split(m_h: &EdgeSet, m_b: &EdgeSet, p: usize, q: usize) -> Result<(usize, usize)> {
    if !m_b.is_subset(m_h) {
        return domain("direct bridge edges must be crossing edges");
    }
    let spare = (m_h.len() - m_b.len()).saturating_sub(p.max(q));
    let q1 = q.min(spare);
    Ok((q1, q - q1))
}

/// `q1` edge-disjoint edge-pairs among the crossing edges not used by the bridge.
pub fn find_q1_pairs(g: &Graph, m_h: &EdgeSet, m_b: &EdgeSet, q1: usize) -> Result<Vec<EdgePair>> {
    if q1 == 0 {
        return Ok(Vec::new());
    }
    let free = m_h.difference(m_b);
    if free.is_empty() {
        return internal(format!("{q1} crossing pairs requested but no free crossing edge exists"));
    }
    let sub = g.edge_induced(&free)?;
    let pairs = max_edge_disjoint_pairs(&sub.graph)?;
    if pairs.len() < q1 {
        return internal(format!("only {} crossing pairs exist, {q1} needed", pairs.len()));
    }
    pairs
        .into_iter()
        .take(q1)
        .map(|p| EdgePair::new(sub.host_edge(p.first()), sub.host_edge(p.second())))
        .collect()
}

/// Two cut vertices and the order-3 connectors they carry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WStars {
    pub w: [Vertex; 2],
    /// Per connector pair: `[u_a, w1, v_a]` and `[u_b, w2, v_b]`.
    pub paths: Vec<[[Vertex; 3]; 2]>,
    pub edges: EdgeSet,
    /// Set when no pair met the attachment threshold and a weaker pair was used.
    pub relaxed: bool,
}

/// Least pair of cut vertices with at least `q2 + 1` neighbours on each side
/// (`q2 + 2` when `q2 = 1`) whose non-bridge side edges hold `q2`
/// edge-disjoint edge-pairs on both sides.
pub fn find_w_stars(g: &Graph, sep: &SeparationStructure, bridge: &BridgeSystem, q2: usize) -> Result<WStars> {
    if q2 == 0 {
        return domain("no cut connectors requested");
    }
    let threshold = if q2 == 1 { 3 } else { q2 + 1 };
    let cut = sep.cut.to_vec();
    let attached = |w: Vertex| {
        let nb = g.neighbors(w);
        nb.intersection_count(&sep.g1).min(nb.intersection_count(&sep.g2)) >= threshold
    };
    let strong: Vec<Vertex> = cut.iter().copied().filter(|&w| attached(w)).collect();
    for (relaxed, pool) in [(false, &strong), (true, &cut)] {
        for (i, &a) in pool.iter().enumerate() {
            for &b in &pool[i + 1..] {
                if let Some(stars) = try_stars(g, sep, bridge, [a, b], q2)? {
                    return Ok(WStars { relaxed, ..stars });
                }
            }
        }
    }
    Err(Error::BoundViolation(format!(
        "no two cut vertices carry {q2} connector pairs on both sides ({} meet the attachment threshold {threshold})",
        strong.len()
    )))
}

fn try_stars(
    g: &Graph,
    sep: &SeparationStructure,
    bridge: &BridgeSystem,
    w: [Vertex; 2],
    q2: usize,
) -> Result<Option<WStars>> {
    let mut ends = Vec::with_capacity(2);
    let mut edges = EdgeSet::new();
    for side in [&sep.g1, &sep.g2] {
        let star: EdgeSet = w
            .iter()
            .flat_map(|&x| g.neighbors(x).intersection(side).iter().map(move |y| Edge::new(x, y)).collect::<Vec<_>>())
            .filter(|e| !bridge.edges.contains(e))
            .collect();
        if star.len() < 2 * q2 {
            return Ok(None);
        }
        let sub = g.edge_induced(&star)?;
        let pairs = max_edge_disjoint_pairs(&sub.graph)?;
        if pairs.len() < q2 {
            return Ok(None);
        }
        let mut side_ends = Vec::with_capacity(q2);
        for p in pairs.into_iter().take(q2) {
            let (e, f) = (sub.host_edge(p.first()), sub.host_edge(p.second()));
            let (at0, at1) = if e.touches(w[0]) { (e, f) } else { (f, e) };
            if !at0.touches(w[0]) || !at1.touches(w[1]) {
                return internal("connector pair does not use both cut vertices");
            }
            side_ends.push((at0.other(w[0]), at1.other(w[1])));
            edges.insert(at0);
            edges.insert(at1);
        }
        ends.push(side_ends);
    }
    let paths = (0..q2)
        .map(|i| {
            let (ua, ub) = ends[0][i];
            let (va, vb) = ends[1][i];
            [[ua, w[0], va], [ub, w[1], vb]]
        })
        .collect();
    Ok(Some(WStars { w, paths, edges, relaxed: false }))
}

/// Edge-disjoint Hamiltonian paths of `⟨main ∪ cut_part⟩_host` joining each
/// requested pair, in host labels.
pub fn build_side_paths(
    host: &Graph,
    main: &VertexSet,
    cut_part: &VertexSet,
    requests: &[(Vertex, Vertex)],
    log: &mut Journal,
    label: &str,
) -> Result<Vec<Vec<Vertex>>> {
    if requests.is_empty() {
        return Ok(Vec::new());
    }
    let sub = host.induced_subgraph(&main.union(cut_part))?;
    let local = |v: Vertex| {
        sub.local(v).ok_or_else(|| Error::Internal(format!("path end {v} outside the {label} side graph")))
    };
    let reqs = requests
        .iter()
        .map(|&(u, v)| Ok((local(u)?, local(v)?)))
        .collect::<Result<Vec<_>>>()?;
    let m = sub.graph.n();
    let v1 = VertexSet::from_iter(m, main.iter().filter_map(|v| sub.local(v)));
    let v2 = VertexSet::from_iter(m, cut_part.iter().filter_map(|v| sub.local(v)));
    let ell = reqs.len();
    if partition_degrees_suffice(&sub.graph, &v1, &v2, ell)? {
        log.note(format!("{label}: degree bounds for {ell} edge-disjoint paths hold on {m} vertices"));
    } else {
        log.warn(format!("{label}: degree bounds for {ell} edge-disjoint paths fail on {m} vertices"));
    }
    let paths = match edge_disjoint_ham_paths(&sub.graph, &reqs) {
        Ok(paths) => paths,
        Err(Error::NotApplicable(why)) => {
            log.warn(format!("{label}: {why}; extracting paths one at a time"));
            sequential_paths(&sub.graph, &reqs, label)?
        }
        Err(e) => return Err(e),
    };
    Ok(paths.iter().map(|p| sub.host_path(p)).collect())
}

fn sequential_paths(g: &Graph, reqs: &[(Vertex, Vertex)], label: &str) -> Result<Vec<Vec<Vertex>>> {
    let mut cur = g.clone();
    let mut out = vec![Vec::new(); reqs.len()];
    for i in (0..reqs.len()).rev() {
        let (u, v) = reqs[i];
        let path = match ham_path_between(&cur, u, v) {
            Ok(p) => p,
            Err(Error::NotApplicable(_)) => ham_path_search(&cur, u, v, PATH_SEARCH_BUDGET)
                .ok()
                .flatten()
                .ok_or_else(|| Error::BoundViolation(format!("{label}: no Hamiltonian {u}-{v} path found")))?,
            Err(e) => return Err(e),
        };
        cur = cur.remove_edges(&path_edges(&path))?;
        out[i] = path;
    }
    Ok(out)
}

/// A connector `u - v` or `u - mid - v` from side one to side two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Link {
    pub u: Vertex,
    pub mid: Option<Vertex>,
    pub v: Vertex,
}

/// Closes side paths into cycles: for links `(a, b)`, side-one path `i` runs
/// `a.u -> b.u` and side-two path `i` runs `a.v -> b.v`.
pub fn assemble_cycles(
    g: &Graph,
    side1: &[Vec<Vertex>],
    side2: &[Vec<Vertex>],
    links: &[(Link, Link)],
) -> Result<Vec<Vec<Vertex>>> {
    if side1.len() != links.len() || side2.len() != links.len() {
        return internal("side path and connector counts differ");
    }
    let mut cycles = Vec::with_capacity(links.len());
    for ((p1, p2), (a, b)) in side1.iter().zip(side2).zip(links) {
        if p1.first() != Some(&a.u) || p1.last() != Some(&b.u) || p2.first() != Some(&a.v) || p2.last() != Some(&b.v) {
            return internal(format!("side path ends do not match connectors {a:?}, {b:?}"));
        }
        let mut c = p1.clone();
        c.extend(b.mid);
        c.extend(p2.iter().rev());
        c.extend(a.mid);
        if !is_ham_cycle(g, &c) {
            return internal(format!("assembled cycle through connectors {a:?}, {b:?} is not Hamiltonian"));
        }
        cycles.push(c);
    }
    Ok(cycles)
}

/// Parameters of one reconstruction.
pub(crate) struct RebuildParams<'a> {
    pub k: usize,
    pub p: usize,
    pub q: usize,
    pub h: &'a EdgeSet,
    pub cut: VertexSet,
    pub exact: bool,
    /// Force every cycle through crossing pairs (no cut connectors).
    pub all_crossing: bool,
    /// Input meets the size bound under which every step is guaranteed.
    pub in_range: bool,
}

pub(crate) struct Rebuilt {
    pub cycles: Vec<Vec<Vertex>>,
    pub bridge: EdgeSet,
    pub structures: Structures,
}

pub(crate) fn rebuild(g: &Graph, par: &RebuildParams<'_>, log: &mut Journal) -> Result<Rebuilt> {
    let n = g.n();
    let (k, p, q) = (par.k, par.p, par.q);
    let g_prime = g.remove_edges(par.h)?;
    let kp = par.cut.count();
    let sep = SeparationStructure::new(&g_prime, par.cut.clone())?;
    log.note(format!(
        "separation: |W| = {kp}, |G1| = {}, |G2| = {}",
        sep.g1.count(),
        sep.g2.count()
    ));
    let window_ok = match sep.window_violation(n, p) {
        None => true,
        Some(why) => {
            log.warn(format!("separation: side-size window fails: {why}"));
            false
        }
    };

    let bridge = BridgeSystem::build(g, &sep, k, if par.exact { 3 } else { 4 }, log)?;
    log.note(format!(
        "bridge: {} paths, {} through the cut, |B| = {}, |W1| = {}, |W2| = {}",
        bridge.paths.len(),
        bridge.k2,
        bridge.edges.len(),
        bridge.w1.count(),
        bridge.w2.count()
    ));
    if kp > 0 && !(kp.div_ceil(2) <= bridge.k2 && bridge.k2 <= kp) {
        log.warn(format!("bridge: {} cut paths outside [{}, {kp}]", bridge.k2, kp.div_ceil(2)));
    }

    let crossing = g.crossing_edges(&sep.g1, &sep.g2)?;
    let m_h: EdgeSet = crossing.iter().filter(|e| par.h.contains(e)).collect();
    if m_h.len() != crossing.len() {
        return internal("the remainder still has an edge between the two sides");
    }
    let touching = |side: &VertexSet, other: &VertexSet| {
        VertexSet::from_iter(n, side.iter().filter(|&v| !g.neighbors(v).is_disjoint(other)))
    };
    let budget = CrossingBudget {
        u1: touching(&sep.g1, &sep.g2),
        u2: touching(&sep.g2, &sep.g1),
        m_b: bridge.m_b.clone(),
        q1: 0,
        q2: 0,
        m_h,
    };
    let (q1, q2) = if par.exact {
        (0, q)
    } else if par.all_crossing {
        (q, 0)
    } else {
        select_q_split(&budget.m_h, &budget.m_b, p, q)?
    };
    let budget = CrossingBudget { q1, q2, ..budget };
    log.note(format!(
        "budget: |M_H| = {}, |M_B| = {}, |U1| = {}, |U2| = {}, q1 = {q1}, q2 = {q2}",
        budget.m_h.len(),
        budget.m_b.len(),
        budget.u1.count(),
        budget.u2.count()
    ));

    let q1_pairs = find_q1_pairs(g, &budget.m_h, &budget.m_b, q1)
        .map_err(|e| if par.all_crossing { Error::BoundViolation(e.to_string()) } else { e })?;
    let stars = if q2 > 0 { Some(find_w_stars(g, &sep, &bridge, q2)?) } else { None };
    if let Some(s) = &stars {
        log.note(format!("cut connectors: w*1 = {}, w*2 = {}, {} pairs", s.w[0], s.w[1], s.paths.len()));
        if s.relaxed {
            log.warn("cut connectors: no pair meets the attachment threshold, using a weaker pair".to_string());
        }
    }
    let bound5 = 4 * kp + 6 * p + 8 * q;
    if n < bound5 {
        log.warn(format!("side paths: n = {n} < 4k' + 6p + 8q = {bound5}"));
    }

    // Cycles closed by crossing edge-pairs.
    let q2_edges = stars.as_ref().map(|s| s.edges.clone()).unwrap_or_default();
    let host1 = g.remove_edges(&bridge.edges.union(&q2_edges))?;
    let links1: Vec<(Link, Link)> = q1_pairs
        .iter()
        .map(|pair| {
            let orient = |e: Edge| {
                let u = if sep.g1.contains(e.u()) { e.u() } else { e.v() };
                Link { u, mid: None, v: e.other(u) }
            };
            (orient(pair.first()), orient(pair.second()))
        })
        .collect();
    let (side1, side2) = side_paths_for(&host1, &sep, &bridge.w1, &bridge.w2, &links1, log, "crossing cycles")?;
    let mut cycles = assemble_cycles(g, &side1, &side2, &links1)?;
    let mut side_paths: Vec<[Vec<Vertex>; 2]> = side1.into_iter().zip(side2).map(|(a, b)| [a, b]).collect();

    // Cycles closed through the two cut connectors.
    if let Some(s) = &stars {
        let mut used = bridge.edges.clone();
        for c in &cycles {
            used.extend(cycle_edges(c).iter());
        }
        let host2 = g.remove_edges(&used)?;
        let mut rest = sep.cut.clone();
        rest.remove(s.w[0]);
        rest.remove(s.w[1]);
        let mut w1 = VertexSet::new(n);
        for w in rest.iter() {
            let nb = host2.neighbors(w);
            if nb.intersection_count(&sep.g1) >= nb.intersection_count(&sep.g2) {
                w1.insert(w);
            }
        }
        let w2 = rest.difference(&w1);
        let links2: Vec<(Link, Link)> = s
            .paths
            .iter()
            .map(|[a, b]| (Link { u: a[0], mid: Some(a[1]), v: a[2] }, Link { u: b[0], mid: Some(b[1]), v: b[2] }))
            .collect();
        let (side1, side2) = side_paths_for(&host2, &sep, &w1, &w2, &links2, log, "connector cycles")?;
        cycles.extend(assemble_cycles(g, &side1, &side2, &links2)?);
        side_paths.extend(side1.into_iter().zip(side2).map(|(a, b)| [a, b]));
    }

    let structures = Structures {
        initial_cycles: Vec::new(),
        p,
        q,
        k_prime: kp,
        side1: sep.g1.to_vec(),
        side2: sep.g2.to_vec(),
        window_ok,
        bridge_paths: bridge.paths.paths.clone(),
        k_double_prime: bridge.k2,
        w1: bridge.w1.to_vec(),
        w2: bridge.w2.to_vec(),
        m_h: budget.m_h.to_vec(),
        m_b: budget.m_b.to_vec(),
        u1: budget.u1.to_vec(),
        u2: budget.u2.to_vec(),
        q1,
        q2,
        w_star: stars.as_ref().map(|s| s.w),
        q1_pairs,
        q2_paths: stars.map(|s| s.paths).unwrap_or_default(),
        side_paths,
    };
    check_outcome(g, par, &sep, &bridge, &cycles, log)?;
    Ok(Rebuilt { cycles, bridge: bridge.edges, structures })
}

fn side_paths_for(
    host: &Graph,
    sep: &SeparationStructure,
    w1: &VertexSet,
    w2: &VertexSet,
    links: &[(Link, Link)],
    log: &mut Journal,
    label: &str,
) -> Result<(Vec<Vec<Vertex>>, Vec<Vec<Vertex>>)> {
    let req1: Vec<_> = links.iter().map(|(a, b)| (a.u, b.u)).collect();
    let req2: Vec<_> = links.iter().map(|(a, b)| (a.v, b.v)).collect();
    let side1 = build_side_paths(host, &sep.g1, w1, &req1, log, &format!("{label}, side one"))?;
    let side2 = build_side_paths(host, &sep.g2, w2, &req2, log, &format!("{label}, side two"))?;
    for (path, &(u, v)) in side1.iter().zip(&req1).chain(side2.iter().zip(&req2)) {
        if path.first() != Some(&u) || path.last() != Some(&v) {
            return internal(format!("side path does not join {u} and {v}"));
        }
    }
    Ok((side1, side2))
}

fn check_outcome(
    g: &Graph,
    par: &RebuildParams<'_>,
    sep: &SeparationStructure,
    bridge: &BridgeSystem,
    cycles: &[Vec<Vertex>],
    log: &mut Journal,
) -> Result<()> {
    let k = par.k;
    if cycles.len() != par.q {
        return internal(format!("built {} cycles, {} requested", cycles.len(), par.q));
    }
    let mut used = EdgeSet::new();
    for c in cycles {
        if !is_ham_cycle(g, c) {
            return internal("output cycle is not Hamiltonian");
        }
        for e in cycle_edges(c).iter() {
            if !used.insert(e) {
                return internal(format!("edge {e:?} used by two cycles"));
            }
            if bridge.edges.contains(&e) {
                return internal(format!("bridge edge {e:?} used by a cycle"));
            }
        }
    }
    let rem = g.remove_edges(&used)?;
    for (name, side) in [("G1", &sep.g1), ("G2", &sep.g2)] {
        let sub = rem.induced_subgraph(side)?.graph;
        let m = sub.n();
        if 2 * sub.min_degree() + 2 >= m + k {
            if !is_k_connected(&sub, k) {
                return internal(format!("{name} meets the sufficient degree bound but is not {k}-connected"));
            }
            log.note(format!("remainder {name}: {k}-connected by minimum degree {}", sub.min_degree()));
        } else {
            log.warn(format!("remainder {name}: minimum degree {} below the sufficient bound", sub.min_degree()));
        }
    }
    let sides = sep.g1.union(&sep.g2);
    let weak: Vec<Vertex> = sep.cut.iter().filter(|&w| rem.neighbors(w).intersection_count(&sides) < k).collect();
    if weak.is_empty() {
        log.note(format!("cut attachment: every cut vertex keeps {k} side neighbours"));
    } else {
        log.warn(format!("cut attachment: cut vertices {weak:?} keep fewer than {k} side neighbours"));
    }
    if !is_k_connected(&rem, k) {
        let msg = format!("remainder of the rebuilt cycles is not {k}-connected");
        return if par.in_range { internal(msg) } else { Err(Error::BoundViolation(msg)) };
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hamilton::is_ham_path;

    fn es(edges: &[(usize, usize)]) -> EdgeSet {
        edges.iter().map(|&(u, v)| Edge::new(u, v)).collect()
    }

    #[test]
    fn q_split_examples() {
        let m_h: EdgeSet = (0..10).map(|i| Edge::new(i, 10 + i)).collect();
        let m_b: EdgeSet = (0..2).map(|i| Edge::new(i, 10 + i)).collect();
        assert_eq!(select_q_split(&m_h, &m_b, 2, 1).unwrap(), (1, 0));
        let m_h3: EdgeSet = (0..3).map(|i| Edge::new(i, 10 + i)).collect();
        assert_eq!(select_q_split(&m_h3, &m_b, 2, 1).unwrap(), (0, 1));
        let m_h20: EdgeSet = (0..20).map(|i| Edge::new(i, 20 + i)).collect();
        assert_eq!(select_q_split(&m_h20, &EdgeSet::new(), 4, 2).unwrap(), (2, 0));
        assert!(select_q_split(&m_b, &m_h, 2, 1).is_err());
    }

    #[test]
    fn crossing_pairs() {
        let g = Graph::complete_bipartite(2, 2);
        let m_h = es(&[(0, 2), (1, 3)]);
        let pairs = find_q1_pairs(&g, &m_h, &EdgeSet::new(), 1).unwrap();
        assert_eq!(pairs.len(), 1);
        let star = Graph::star(4);
        let m_h = star.edge_set();
        assert!(find_q1_pairs(&star, &m_h, &EdgeSet::new(), 1).is_err());
    }

    #[test]
    fn assemble_edge_pair_and_connectors() {
        // sides {0,1,2} and {3,4,5}, crossing edges 0-3 and 2-5
        let mut g = Graph::new(6);
        for (u, v) in [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (2, 5)] {
            g.add_edge(u, v);
        }
        let links = [(Link { u: 0, mid: None, v: 3 }, Link { u: 2, mid: None, v: 5 })];
        let c = assemble_cycles(&g, &[vec![0, 1, 2]], &[vec![3, 4, 5]], &links).unwrap();
        assert!(is_ham_cycle(&g, &c[0]));

        let mut g = Graph::new(6);
        for (u, v) in [(0, 1), (2, 3), (0, 4), (4, 2), (1, 5), (5, 3)] {
            g.add_edge(u, v);
        }
        let links = [(Link { u: 0, mid: Some(4), v: 2 }, Link { u: 1, mid: Some(5), v: 3 })];
        let c = assemble_cycles(&g, &[vec![0, 1]], &[vec![2, 3]], &links).unwrap();
        assert_eq!(c[0].len(), 6);
        assert!(assemble_cycles(&g, &[vec![1, 0]], &[vec![2, 3]], &links).is_err());
    }

    #[test]
    fn side_paths_on_dense_part() {
        let g = Graph::complete(9);
        let main = VertexSet::from_iter(9, 0..7);
        let cut = VertexSet::from_iter(9, 7..9);
        let mut log = Journal::default();
        let paths = build_side_paths(&g, &main, &cut, &[(0, 1), (2, 3)], &mut log, "test").unwrap();
        let sub = g.induced_subgraph(&main.union(&cut)).unwrap();
        assert!(path_edges(&paths[0]).is_disjoint(&path_edges(&paths[1])));
        for (p, (u, v)) in paths.iter().zip([(0, 1), (2, 3)]) {
            let local: Vec<_> = p.iter().map(|&x| sub.local(x).unwrap()).collect();
            assert!(is_ham_path(&sub.graph, &local, sub.local(u).unwrap(), sub.local(v).unwrap()));
        }
    }
}
