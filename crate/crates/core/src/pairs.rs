//! Edge-pairs: decomposition into independent edge pairs and maximum
//! edge-disjoint pair packings.
//!
//! Both constructions run the inductive arguments directly: peel a pair that
//! keeps the decomposability conditions intact, and at `|E| = 2Δ` split on the
//! number of maximum-degree vertices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, internal, Error, Result};
use crate::graph::{Edge, Graph};

/// Two edges with no common endpoint.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct EdgePair(Edge, Edge);

impl EdgePair {
    pub fn new(a: Edge, b: Edge) -> Result<EdgePair> {
        if !a.independent_of(b) {
            return domain(format!("{a:?} and {b:?} share an endpoint"));
        }
        Ok(if a <= b { EdgePair(a, b) } else { EdgePair(b, a) })
    }

    pub fn first(self) -> Edge {
        self.0
    }

    pub fn second(self) -> Edge {
        self.1
    }

    pub fn edges(self) -> [Edge; 2] {
        [self.0, self.1]
    }
}

impl fmt::Debug for EdgePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{:?}, {:?}}}", self.0, self.1)
    }
}

/// A necessary condition for decomposability that a graph fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PairCondition {
    OddEdgeCount,
    /// `|E| < 2Δ`.
    TooFewEdges,
    /// `|E| = 4` and a triangle is present.
    TriangleWithFourEdges,
}

impl fmt::Display for PairCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairCondition::OddEdgeCount => "edge count is odd",
            PairCondition::TooFewEdges => "edge count is below twice the maximum degree",
            PairCondition::TriangleWithFourEdges => "four edges containing a triangle",
        })
    }
}

/// `|E| - 2Δ`.
pub fn phi(g: &Graph) -> i64 {
    g.edge_count() as i64 - 2 * g.max_degree() as i64
}

/// Every decomposability condition `g` violates; empty means decomposable.
pub fn violated_conditions(g: &Graph) -> Vec<PairCondition> {
    let m = g.edge_count();
    let mut out = Vec::new();
    if m % 2 == 1 {
        out.push(PairCondition::OddEdgeCount);
    }
    if m < 2 * g.max_degree() {
        out.push(PairCondition::TooFewEdges);
    }
    if m == 4 && g.contains_triangle() {
        out.push(PairCondition::TriangleWithFourEdges);
    }
    out
}

pub fn can_decompose(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 {
        return domain("decomposability of an edgeless graph");
    }
    Ok(violated_conditions(g).is_empty())
}

fn ok_or_empty(g: &Graph) -> bool {
    g.edge_count() == 0 || violated_conditions(g).is_empty()
}

fn without(g: &Graph, a: Edge, b: Edge) -> Graph {
    let mut h = g.clone();
    h.remove_edge(a.u(), a.v());
    h.remove_edge(b.u(), b.v());
    h
}

/// Lexicographically least pair drawn from `firsts` x `seconds` whose
/// removal leaves a decomposable (or empty) graph.
fn least_peelable<I, J>(g: &Graph, firsts: I, seconds: J) -> Option<(EdgePair, Graph)>
where
    I: IntoIterator<Item = Edge>,
    J: IntoIterator<Item = Edge> + Clone,
{
    let mut cands: Vec<EdgePair> = Vec::new();
    for a in firsts {
        for b in seconds.clone() {
            if a != b && a.independent_of(b) {
                cands.push(EdgePair::new(a, b).expect("checked independent"));
            }
        }
    }
    cands.sort_unstable();
    cands.dedup();
    cands.into_iter().find_map(|p| {
        let h = without(g, p.0, p.1);
        ok_or_empty(&h).then_some((p, h))
    })
}

fn max_degree_vertices(g: &Graph) -> Vec<usize> {
    let d = g.max_degree();
    g.vertices().filter(|&v| g.degree(v) == d).collect()
}

fn incident(g: &Graph, x: usize) -> Vec<Edge> {
    g.neighbors(x).iter().map(|y| Edge::new(x, y)).collect()
}

/// Partitions `E(g)` into `|E|/2` edge-pairs.
pub fn decompose_into_pairs(g: &Graph) -> Result<Vec<EdgePair>> {
    if g.edge_count() == 0 {
        return domain("decomposition of an edgeless graph");
    }
    let bad = violated_conditions(g);
    if !bad.is_empty() {
        return Err(Error::Undecomposable(bad));
    }
    let mut cur = g.clone();
    let mut out = Vec::with_capacity(g.edge_count() / 2);
    while cur.edge_count() > 0 {
        let (pair, rest) = peel_step(&cur)?;
        out.push(pair);
        cur = rest;
    }
    Ok(out)
}

fn peel_step(g: &Graph) -> Result<(EdgePair, Graph)> {
    let delta = g.max_degree();
    let edges: Vec<Edge> = g.edges().collect();
    if delta <= 1 {
        let p = EdgePair::new(edges[0], edges[1])?;
        return Ok((p, without(g, edges[0], edges[1])));
    }
    let found = if phi(g) >= 2 {
        least_peelable(g, edges.iter().copied(), edges.iter().copied())
    } else {
        balanced_step(g, &edges, delta)
    };
    match found {
        Some(step) => Ok(step),
        None => internal(format!("no peelable edge-pair in decomposable graph {g:?}")),
    }
}

/// One step at `|E| = 2Δ`, split on the number of maximum-degree vertices.
fn balanced_step(g: &Graph, edges: &[Edge], delta: usize) -> Option<(EdgePair, Graph)> {
    let tops = max_degree_vertices(g);
    match tops.len() {
        1 => {
            let x = tops[0];
            least_peelable(g, incident(g, x), edges.iter().copied())
        }
        2 => {
            let (x1, x2) = (tops[0], tops[1]);
            if g.has_edge(x1, x2) {
                least_peelable(g, [Edge::new(x1, x2)], edges.iter().copied())
            } else {
                least_peelable(g, incident(g, x1), incident(g, x2))
            }
        }
        _ if delta == 3 => {
            let (x1, x2, x3) = (tops[0], tops[1], tops[2]);
            let outside = |x: usize, a: usize, b: usize| {
                g.neighbors(x).iter().find(|&y| y != a && y != b)
            };
            let p1 = outside(x1, x2, x3)?;
            let p2 = outside(x2, x1, x3)?;
            let p3 = outside(x3, x1, x2)?;
            let pairs = [
                (Edge::new(x1, p1), Edge::new(x2, x3)),
                (Edge::new(x2, p2), Edge::new(x1, x3)),
                (Edge::new(x3, p3), Edge::new(x1, x2)),
            ];
            // Peel the first of the three; the others follow on later steps.
            let (a, b) = pairs[0];
            let p = EdgePair::new(a, b).ok()?;
            let h = without(g, a, b);
            ok_or_empty(&h).then_some((p, h))
        }
        _ => least_peelable(g, edges.iter().copied(), edges.iter().copied()),
    }
}

/// Closed-form maximum number of edge-disjoint edge-pairs.
pub fn max_pairs_count(g: &Graph) -> Result<usize> {
    check_exceptional(g)?;
    let (m, d) = (g.edge_count(), g.max_degree());
    Ok(if m >= 2 * d { m / 2 } else { m - d })
}

fn check_exceptional(g: &Graph) -> Result<()> {
    let (m, d) = (g.edge_count(), g.max_degree());
    if m == 3 && g.contains_triangle() {
        return Err(Error::Exceptional("K3 ∪ (n−3)K1".into()));
    }
    if m == 4 && d == 2 && g.contains_triangle() {
        return Err(Error::Exceptional("K3 ∪ K2 ∪ (n−5)K1".into()));
    }
    Ok(())
}

/// A maximum set of edge-disjoint edge-pairs.
pub fn max_edge_disjoint_pairs(g: &Graph) -> Result<Vec<EdgePair>> {
    let target = max_pairs_count(g)?;
    let pairs = max_pairs_witness(g)?;
    if pairs.len() != target {
        return internal(format!(
            "witness has {} pairs, closed form gives {target} for {g:?}",
            pairs.len()
        ));
    }
    Ok(pairs)
}

fn max_pairs_witness(g: &Graph) -> Result<Vec<EdgePair>> {
    let (m, d) = (g.edge_count(), g.max_degree());
    let edges: Vec<Edge> = g.edges().collect();
    if d <= 1 {
        return edges
            .chunks_exact(2)
            .map(|c| EdgePair::new(c[0], c[1]))
            .collect();
    }
    if m >= 2 * d {
        if m % 2 == 0 {
            return decompose_into_pairs(g);
        }
        for &e in &edges {
            let mut h = g.clone();
            h.remove_edge(e.u(), e.v());
            if ok_or_empty(&h) {
                return if h.edge_count() == 0 {
                    Ok(Vec::new())
                } else {
                    decompose_into_pairs(&h)
                };
            }
        }
        return internal(format!("no droppable edge in odd graph {g:?}"));
    }
    if d == 2 {
        // m is 2 or 3 here.
        if m == 2 {
            return Ok(Vec::new());
        }
        // One leftover edge is fine, so any independent pair will do.
        let pair = edges
            .iter()
            .enumerate()
            .find_map(|(i, &a)| edges[i + 1..].iter().find(|&&b| a.independent_of(b)).map(|&b| (a, b)));
        return match pair {
            Some((a, b)) => Ok(vec![EdgePair::new(a, b)?]),
            None => internal(format!("no edge-pair in {g:?}")),
        };
    }
    let tops = max_degree_vertices(g);
    let reduced = match tops.len() {
        2 => {
            let (x, y) = (tops[0], tops[1]);
            if !g.has_edge(x, y) {
                return internal(format!("maximum-degree vertices {x}, {y} not adjacent"));
            }
            let mut h = g.clone();
            h.remove_edge(x, y);
            h
        }
        1 => trim_at_apex(g, tops[0])?,
        t => return internal(format!("{t} maximum-degree vertices with |E| < 2Δ, Δ ≥ 3")),
    };
    if reduced.edge_count() == 0 {
        return Ok(Vec::new());
    }
    decompose_into_pairs(&reduced)
}

/// Deletes `2Δ - |E|` edges at the unique maximum-degree vertex `x`.
fn trim_at_apex(g: &Graph, x: usize) -> Result<Graph> {
    let (m, d) = (g.edge_count(), g.max_degree());
    let quota = 2 * d - m;
    let mut rest = g.clone();
    for y in g.neighbors(x).iter() {
        rest.remove_edge(x, y);
    }
    let rest_max = rest.max_degree();
    let mut order: Vec<usize> = Vec::with_capacity(d);
    if rest_max == m - d {
        order.extend(g.neighbors(x).iter().filter(|&z| rest.degree(z) == rest_max));
    }
    let rest_order: Vec<usize> = g.neighbors(x).iter().filter(|z| !order.contains(z)).collect();
    order.extend(rest_order);

    let mut h = g.clone();
    let deleted: Vec<Edge> = order[..quota].iter().map(|&z| Edge::new(x, z)).collect();
    for e in &deleted {
        h.remove_edge(e.u(), e.v());
    }
    if violated_conditions(&h) == [PairCondition::TriangleWithFourEdges] {
        // h is K3 ∪ K2 plus isolates with x on the triangle.
        let tri: Vec<usize> = h
            .neighbors(x)
            .iter()
            .filter(|&y| !h.neighbors(y).is_disjoint(h.neighbors(x)))
            .collect();
        for &y in &tri {
            for &back in &deleted {
                let mut s = h.clone();
                s.remove_edge(x, y);
                s.add_edge(back.u(), back.v());
                if ok_or_empty(&s) {
                    return Ok(s);
                }
            }
        }
        return internal(format!("no repair swap for {g:?}"));
    }
    Ok(h)
}
