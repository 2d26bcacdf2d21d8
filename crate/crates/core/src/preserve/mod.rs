//! Hamiltonian cycles whose removal keeps a Dirac graph `k`-connected.
//!
//! Every entry point first tries the cheap route (closure-based extraction)
//! and only runs the cut-based reconstruction in [`repair`] when the
//! remainder loses connectivity. Size bounds under which the construction is
//! guaranteed are checked at runtime; inputs below them still run, with
//! warnings in the certificate.

mod certificate;
pub mod repair;

pub use certificate::{Branch, PreserveCertificate, Structures, SCHEMA};
pub use repair::{
    assemble_cycles, build_side_paths, find_q1_pairs, find_w_stars, select_q_split, BridgeSystem, CrossingBudget,
    Link, SeparationStructure, WStars,
};

use crate::connectivity::{is_k_connected, kappa, min_vertex_cut};
use crate::error::{domain, Error, Result};
use crate::graph::{EdgeSet, Graph, Vertex};
use crate::hamilton::{cycle_edges, ham_cycle_dirac, ham_cycle_rotation, ham_cycle_search, ham_cycle_search_where, is_ham_cycle};
use crate::io::graph_hash;
use repair::{rebuild, RebuildParams};

/// Node-expansion budget for backtracking searches.
pub const SEARCH_BUDGET: u64 = 1_000_000;

/// Step budget for the rotation heuristic tried before backtracking.
pub const ROTATION_BUDGET: u64 = 200_000;

/// Stage notes and warnings collected during a run.
#[derive(Clone, Debug, Default)]
pub struct Journal {
    pub notes: Vec<String>,
    pub warnings: Vec<String>,
}

impl Journal {
    pub fn note(&mut self, msg: impl Into<String>) {
        self.notes.push(msg.into());
    }

    pub fn warn(&mut self, msg: impl Into<String>) {
        let msg = msg.into();
        self.notes.push(format!("warning: {msg}"));
        self.warnings.push(msg);
    }
}

fn ceil_frac(k: usize) -> usize {
    usize::from(k > 2)
}

/// Size bound for one preserving cycle.
pub fn one_cycle_bound(k: usize) -> usize {
    6 * k + 12 - 2 * ceil_frac(k)
}

/// Size bound for the general `(p, q)` reconstruction.
pub fn rebuild_bound(k: usize, p: usize, q: usize) -> usize {
    let a = 6 * (k + p) + 8 * (q - 1) - 2 * ceil_frac(k);
    let b = (k * (q + 3) + ((k - 2) * q).saturating_sub(2).max(2 * p) + 2 * p.max(q)).saturating_sub(4);
    a.max(b)
}

/// Size bound for `ell >= 2` preserving cycles.
pub fn many_cycles_bound(k: usize, ell: usize) -> usize {
    let a = (k * ell + (k * ell).max(6 * ell + 2) + 3 * k + 2 * ell).saturating_sub(6);
    let b = 6 * k + 20 * ell - 8 - 2 * ceil_frac(k);
    let c = (224 * ell).div_ceil(5).saturating_sub(10);
    a.max(b).max(c)
}

/// Size bound for `ell` cycles preserving connectivity exactly.
pub fn exact_bound(kappa: usize, ell: usize) -> usize {
    let a = (2 * kappa * ell + kappa + 1).saturating_sub(2 * ell);
    let b = (6 * kappa + 8 * ell).saturating_sub(4 + 2 * ceil_frac(kappa));
    a.max(b)
}

struct Run<'a> {
    g: &'a Graph,
    k: usize,
    log: Journal,
    in_range: bool,
}

impl<'a> Run<'a> {
    fn start(g: &'a Graph, k: usize, bound: usize, label: &str) -> Result<Self> {
        let n = g.n();
        if n < 3 {
            return domain(format!("need at least 3 vertices, got {n}"));
        }
        if k < 2 {
            return domain(format!("connectivity target must be at least 2, got {k}"));
        }
        if !g.is_dirac() {
            return Err(Error::BoundViolation(format!(
                "minimum degree {} is below n/2 = {}",
                g.min_degree(),
                n as f64 / 2.0
            )));
        }
        if !is_k_connected(g, k) {
            return Err(Error::BoundViolation(format!("input is not {k}-connected")));
        }
        let mut log = Journal::default();
        let in_range = n >= bound;
        if !in_range {
            log.warn(format!("{label}: n = {n} is below the guaranteed size {bound}"));
        }
        Ok(Run { g, k, log, in_range })
    }

    fn finish(
        self,
        ell: usize,
        exact: bool,
        branch: Branch,
        cycles: Vec<Vec<Vertex>>,
        bridge: EdgeSet,
        cut: Vec<Vertex>,
        structures: Option<Structures>,
    ) -> Result<PreserveCertificate> {
        let g = self.g;
        let mut used = EdgeSet::new();
        for c in &cycles {
            used.extend(cycle_edges(c).iter());
        }
        let rem = g.remove_edges(&used)?;
        let mut log = self.log;
        let kappa_before = kappa(g)?;
        let kappa_after = kappa(&rem)?;
        log.note(format!("connectivity: {kappa_before} before, {kappa_after} after removing {} cycles", cycles.len()));
        Ok(PreserveCertificate {
            schema: SCHEMA.to_string(),
            input_hash: graph_hash(g),
            n: g.n(),
            k: self.k,
            ell,
            exact,
            branch,
            cycles,
            bridge: bridge.to_vec(),
            cut,
            kappa_before,
            kappa_after,
            stage_log: log.notes,
            warnings: log.warnings,
            structures,
        })
    }
}

/// One Hamiltonian cycle `H` with `G - E(H)` still `k`-connected.
pub fn preserve_one(g: &Graph, k: usize) -> Result<PreserveCertificate> {
    Run::start(g, k, one_cycle_bound(k), "single cycle")?;
    let h = ham_cycle_dirac(g)?;
    preserve_with_initial(g, k, &h)
}

/// As [`preserve_one`], starting from a caller-chosen Hamiltonian cycle.
pub fn preserve_with_initial(g: &Graph, k: usize, initial: &[Vertex]) -> Result<PreserveCertificate> {
    let mut run = Run::start(g, k, one_cycle_bound(k), "single cycle")?;
    if !is_ham_cycle(g, initial) {
        return domain("initial cycle is not a Hamiltonian cycle of the graph");
    }
    let h = cycle_edges(initial);
    let rem = g.remove_edges(&h)?;
    if is_k_connected(&rem, k) {
        run.log.note(format!("direct: remainder of the initial cycle is {k}-connected"));
        return run.finish(1, false, Branch::Direct, vec![initial.to_vec()], EdgeSet::new(), Vec::new(), None);
    }
    run.log.note(format!("direct: remainder of the initial cycle is not {k}-connected, rebuilding"));
    let cut = min_vertex_cut(&rem)?.cut;
    let params = RebuildParams {
        k,
        p: 2,
        q: 1,
        h: &h,
        cut: cut.clone(),
        exact: false,
        all_crossing: false,
        in_range: run.in_range,
    };
    match rebuild(g, &params, &mut run.log) {
        Ok(r) => {
            let s = Structures { initial_cycles: vec![initial.to_vec()], ..r.structures };
            run.finish(1, false, Branch::Repair, r.cycles, r.bridge, cut.to_vec(), Some(s))
        }
        Err(e) if !run.in_range => {
            run.log.warn(format!("rebuild failed below the size bound: {e}; searching"));
            let c = search_one(g, k)?;
            run.finish(1, false, Branch::Search, vec![c], EdgeSet::new(), Vec::new(), None)
        }
        Err(e) => Err(e),
    }
}

fn search_one(g: &Graph, k: usize) -> Result<Vec<Vertex>> {
    let keeps = |c: &[Vertex]| g.remove_edges(&cycle_edges(c)).map(|r| is_k_connected(&r, k)).unwrap_or(false);
    ham_cycle_search_where(g, SEARCH_BUDGET, keeps)?
        .ok_or_else(|| Error::ExtractionFailure(format!("no Hamiltonian cycle keeps the graph {k}-connected")))
}

/// `ell` edge-disjoint Hamiltonian cycles, greedily: closure extraction on
/// the shrinking graph, then rotation-extension, then backtracking.
pub fn extract_disjoint_cycles(g: &Graph, ell: usize, log: &mut Journal) -> Result<Vec<Vec<Vertex>>> {
    let mut cur = g.clone();
    let mut cycles = Vec::with_capacity(ell);
    for i in 0..ell {
        let c = match ham_cycle_dirac(&cur) {
            Ok(c) => c,
            Err(Error::NotApplicable(_)) => {
                log.note(format!("extraction: closure incomplete for cycle {}, searching", i + 1));
                if let Some(c) = ham_cycle_rotation(&cur, i as u64, ROTATION_BUDGET) {
                    cur = cur.remove_edges(&cycle_edges(&c))?;
                    cycles.push(c);
                    continue;
                }
                match ham_cycle_search(&cur, SEARCH_BUDGET) {
                    Ok(Some(c)) => c,
                    Ok(None) => {
                        return Err(Error::ExtractionFailure(format!(
                            "remainder after {i} cycles has no Hamiltonian cycle"
                        )))
                    }
                    Err(Error::SizeLimit(_)) => {
                        return Err(Error::ExtractionFailure(format!(
                            "search budget exhausted while extracting cycle {}",
                            i + 1
                        )))
                    }
                    Err(e) => return Err(e),
                }
            }
            Err(e) => return Err(e),
        };
        cur = cur.remove_edges(&cycle_edges(&c))?;
        cycles.push(c);
    }
    Ok(cycles)
}

/// `ell` edge-disjoint Hamiltonian cycles with a `k`-connected remainder.
pub fn preserve_many(g: &Graph, k: usize, ell: usize) -> Result<PreserveCertificate> {
    if ell == 0 {
        return domain("cycle count must be positive");
    }
    if ell == 1 {
        return preserve_one(g, k);
    }
    let mut run = Run::start(g, k, many_cycles_bound(k, ell), "edge-disjoint cycles")?;
    let initial = extract_disjoint_cycles(g, ell, &mut run.log)?;
    let mut h = EdgeSet::new();
    for c in &initial {
        h.extend(cycle_edges(c).iter());
    }
    let rem = g.remove_edges(&h)?;
    if is_k_connected(&rem, k) {
        run.log.note(format!("direct: remainder of {ell} extracted cycles is {k}-connected"));
        return run.finish(ell, false, Branch::Direct, initial, EdgeSet::new(), Vec::new(), None);
    }
    run.log.note(format!("direct: remainder of {ell} extracted cycles is not {k}-connected, rebuilding"));
    let cut = min_vertex_cut(&rem)?.cut;
    let params = RebuildParams {
        k,
        p: 2 * ell,
        q: ell,
        h: &h,
        cut: cut.clone(),
        exact: false,
        all_crossing: false,
        in_range: run.in_range,
    };
    let r = rebuild(g, &params, &mut run.log)?;
    let s = Structures { initial_cycles: initial, ..r.structures };
    run.finish(ell, false, Branch::Repair, r.cycles, r.bridge, cut.to_vec(), Some(s))
}

/// Variant for `δ >= (n + k - 2)/2`: every rebuilt cycle is closed by crossing
/// edge-pairs, never through cut vertices.
pub fn preserve_many_high_degree(g: &Graph, k: usize, ell: usize) -> Result<PreserveCertificate> {
    if ell == 0 {
        return domain("cycle count must be positive");
    }
    let n = g.n();
    if 2 * g.min_degree() + 2 < n + k {
        return Err(Error::BoundViolation(format!(
            "minimum degree {} is below (n + k - 2)/2",
            g.min_degree()
        )));
    }
    let mut run = Run::start(g, k, 0, "high-degree cycles")?;
    let initial = extract_disjoint_cycles(g, ell, &mut run.log)?;
    let mut h = EdgeSet::new();
    for c in &initial {
        h.extend(cycle_edges(c).iter());
    }
    let rem = g.remove_edges(&h)?;
    if is_k_connected(&rem, k) {
        run.log.note(format!("direct: remainder of {ell} extracted cycles is {k}-connected"));
        return run.finish(ell, false, Branch::Direct, initial, EdgeSet::new(), Vec::new(), None);
    }
    let cut = min_vertex_cut(&rem)?.cut;
    let params = RebuildParams {
        k,
        p: 2 * ell,
        q: ell,
        h: &h,
        cut: cut.clone(),
        exact: false,
        all_crossing: true,
        in_range: false,
    };
    let r = rebuild(g, &params, &mut run.log)?;
    let s = Structures { initial_cycles: initial, ..r.structures };
    run.finish(ell, false, Branch::Repair, r.cycles, r.bridge, cut.to_vec(), Some(s))
}

/// `ell` edge-disjoint Hamiltonian cycles whose removal leaves the
/// connectivity exactly `κ(G)`.
pub fn preserve_exact(g: &Graph, ell: usize) -> Result<PreserveCertificate> {
    if ell == 0 {
        return domain("cycle count must be positive");
    }
    if g.is_complete() {
        return domain("complete graphs have no vertex cut");
    }
    let k = kappa(g)?;
    if k < 2 {
        return domain(format!("exact preservation needs connectivity at least 2, got {k}"));
    }
    let mut run = Run::start(g, k, exact_bound(k, ell), "exact preservation")?;
    let cut = min_vertex_cut(g)?.cut;
    let none = EdgeSet::new();
    let params = RebuildParams {
        k,
        p: 0,
        q: ell,
        h: &none,
        cut: cut.clone(),
        exact: true,
        all_crossing: false,
        in_range: run.in_range,
    };
    match rebuild(g, &params, &mut run.log) {
        Ok(r) => {
            let cert = run.finish(ell, true, Branch::Exact, r.cycles, r.bridge, cut.to_vec(), Some(r.structures))?;
            if cert.kappa_after != k {
                return Err(Error::Internal(format!(
                    "remainder connectivity {} differs from {k}",
                    cert.kappa_after
                )));
            }
            Ok(cert)
        }
        Err(e) if !run.in_range && ell == 1 => {
            run.log.warn(format!("rebuild failed below the size bound: {e}; searching"));
            let c = search_one(g, k)?;
            run.finish(1, true, Branch::Search, vec![c], EdgeSet::new(), Vec::new(), None)
        }
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{gen_barbell_dirac, CrossingMode};

    fn remainder_kappa(g: &Graph, cert: &PreserveCertificate) -> usize {
        let mut used = EdgeSet::new();
        for c in &cert.cycles {
            used.extend(cycle_edges(c).iter());
        }
        kappa(&g.remove_edges(&used).unwrap()).unwrap()
    }

    #[test]
    fn bounds() {
        assert_eq!(one_cycle_bound(2), 24);
        assert_eq!(one_cycle_bound(3), 28);
        assert_eq!(exact_bound(2, 1), 16);
        assert_eq!(exact_bound(3, 3), 36);
        assert_eq!(rebuild_bound(2, 2, 1), 24);
    }

    #[test]
    fn complete_graph_direct() {
        let g = Graph::complete(7);
        let cert = preserve_one(&g, 2).unwrap();
        assert_eq!(cert.branch, Branch::Direct);
        assert!(remainder_kappa(&g, &cert) >= 2);
        let g = Graph::complete(11);
        let cert = preserve_many(&g, 2, 2).unwrap();
        assert_eq!(cert.cycles.len(), 2);
        assert_eq!(cert.kappa_after, 6);
    }

    #[test]
    fn barbell_runs() {
        let g = gen_barbell_dirac(40, 2, 1, CrossingMode::Poor).unwrap();
        let cert = preserve_one(&g, 2).unwrap();
        assert!(remainder_kappa(&g, &cert) >= 2);
        let g = gen_barbell_dirac(30, 2, 4, CrossingMode::Poor).unwrap();
        let cert = preserve_exact(&g, 1).unwrap();
        assert_eq!(cert.kappa_after, 2);
    }

    #[test]
    fn exact_rejects_complete() {
        assert!(matches!(preserve_exact(&Graph::complete(6), 1), Err(Error::Domain(_))));
    }
}
