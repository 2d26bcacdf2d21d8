use hampreserve_core::connectivity::kappa;
use hampreserve_core::instances::{gen_barbell_dirac, CrossingMode};
use hampreserve_core::oracle::{verify_certificate, Witness};
use hampreserve_core::preserve::{
    preserve_exact, preserve_many, preserve_many_high_degree, preserve_one, preserve_with_initial, Branch,
};
use hampreserve_core::{Error, Graph, PreserveCertificate};

/// Two cliques of order `a` joined through two universal vertices, with three
/// vertices of the first clique sending two edges each across.
fn dips(a: usize) -> Graph {
    let n = 2 * a + 2;
    let mut g = Graph::new(n);
    for part in [0..a, a..2 * a] {
        for u in part.clone() {
            for v in u + 1..part.end {
                g.add_edge(u, v);
            }
        }
    }
    for w in [2 * a, 2 * a + 1] {
        for v in 0..w {
            g.add_edge(v, w);
        }
    }
    for i in 0..3 {
        g.add_edge(i, a + 2 * i);
        g.add_edge(i, a + 2 * i + 1);
    }
    g
}

/// Hamiltonian cycle using all six crossing edges.
fn dips_cycle(a: usize) -> Vec<usize> {
    let mut c = vec![a, 0, a + 1, a + 2, 1, a + 3, a + 4, 2, a + 5];
    c.extend(a + 6..2 * a);
    c.push(2 * a);
    c.extend(3..a);
    c.push(2 * a + 1);
    c
}

fn assert_verified(g: &Graph, cert: &PreserveCertificate, k: usize, exact: bool) {
    let report = verify_certificate(g, cert, k, exact).unwrap();
    assert!(report.passed(), "{:?}", report.failures().collect::<Vec<_>>());
}

#[test]
fn crossing_pairs_branch_rebuilds() {
    let a = 19;
    let g = dips(a);
    assert_eq!(kappa(&g).unwrap(), 5);
    assert!(g.is_dirac());
    let cert = preserve_with_initial(&g, 5, &dips_cycle(a)).unwrap();
    assert_eq!(cert.branch, Branch::Repair);
    let s = cert.structures.as_ref().unwrap();
    assert_eq!((s.q1, s.q2), (1, 0));
    assert_eq!(s.q1_pairs.len(), 1);
    assert!(s.w_star.is_none());
    assert!(cert.kappa_after >= 5);
    assert_verified(&g, &cert, 5, false);
}

#[test]
fn cut_vertex_branch_rebuilds() {
    let g = gen_barbell_dirac(28, 3, 1, CrossingMode::Rich).unwrap();
    let cert = preserve_one(&g, 3).unwrap();
    assert_eq!(cert.branch, Branch::Repair);
    let s = cert.structures.as_ref().unwrap();
    assert_eq!((s.q1, s.q2), (0, 1));
    assert_eq!(s.q2_paths.len(), 1);
    let [w1, w2] = s.w_star.unwrap();
    assert!(cert.cut.contains(&w1) && cert.cut.contains(&w2));
    assert!(cert.stage_log.iter().any(|l| l.contains("rebuilding")));
    assert_verified(&g, &cert, 3, false);
}

#[test]
fn complete_graph_is_direct() {
    let g = Graph::complete(7);
    let cert = preserve_one(&g, 2).unwrap();
    assert_eq!(cert.branch, Branch::Direct);
    assert!(!cert.warnings.is_empty(), "n = 7 is below the size bound");
    assert_verified(&g, &cert, 2, false);
}

#[test]
fn several_cycles_on_barbells() {
    for seed in 0..3 {
        let g = gen_barbell_dirac(96, 3, seed, CrossingMode::Poor).unwrap();
        let cert = preserve_many(&g, 3, 2).unwrap();
        assert_eq!(cert.cycles.len(), 2);
        assert_verified(&g, &cert, 3, false);
    }
}

#[test]
fn high_degree_variant() {
    let g = hampreserve_core::instances::gen_dirac(40, 3, 2).unwrap();
    let cert = preserve_many_high_degree(&g, 4, 2).unwrap();
    assert_verified(&g, &cert, 4, false);
    let low = gen_barbell_dirac(40, 2, 0, CrossingMode::Poor).unwrap();
    assert!(matches!(preserve_many_high_degree(&low, 4, 1), Err(Error::BoundViolation(_))));
}

#[test]
fn exact_preservation_keeps_connectivity() {
    let g = gen_barbell_dirac(60, 3, 2, CrossingMode::Poor).unwrap();
    let cert = preserve_exact(&g, 2).unwrap();
    assert_eq!(cert.branch, Branch::Exact);
    assert_eq!((cert.kappa_before, cert.kappa_after), (3, 3));
    assert_verified(&g, &cert, 3, true);
}

#[test]
fn rejects_bad_inputs() {
    assert!(matches!(preserve_one(&Graph::complete(2), 2), Err(Error::Domain(_))));
    assert!(matches!(preserve_one(&Graph::complete(6), 1), Err(Error::Domain(_))));
    assert!(matches!(preserve_one(&Graph::cycle(8), 2), Err(Error::BoundViolation(_))));
    let g = gen_barbell_dirac(40, 2, 0, CrossingMode::Poor).unwrap();
    assert!(matches!(preserve_one(&g, 3), Err(Error::BoundViolation(_))));
    assert!(matches!(preserve_with_initial(&g, 2, &[0, 1, 2]), Err(Error::Domain(_))));
}

#[test]
fn certificate_round_trips_through_json() {
    let g = gen_barbell_dirac(28, 3, 1, CrossingMode::Rich).unwrap();
    let cert = preserve_one(&g, 3).unwrap();
    let text = serde_json::to_string_pretty(&cert).unwrap();
    assert!(text.contains("\"schema\": \"preserve-cert/1\""));
    let back: PreserveCertificate = serde_json::from_str(&text).unwrap();
    assert_eq!(back, cert);
}

#[test]
fn verifier_rejects_tampering() {
    let g = Graph::complete(7);
    let mut cert = preserve_one(&g, 2).unwrap();
    assert_verified(&g, &cert, 2, false);

    // Remainder of K7 is 4-connected, so exact mode must fail.
    let report = verify_certificate(&g, &cert, 2, true).unwrap();
    assert!(!report.passed());
    assert!(report.failures().any(|c| c.name == "parameters" || c.name == "remainder-exact"));

    // Swap an edge of the cycle for a non-edge.
    let mut h = g.clone();
    let (a, b) = (cert.cycles[0][0], cert.cycles[0][1]);
    h.remove_edge(a, b);
    cert.input_hash = hampreserve_core::io::graph_hash(&h);
    let report = verify_certificate(&h, &cert, 2, false).unwrap();
    let bad = report.failures().find(|c| c.name.starts_with("hamiltonian")).unwrap();
    assert_eq!(bad.witness, Some(Witness::Edge(hampreserve_core::Edge::new(a, b))));

    // Same cycle twice.
    let mut twice = preserve_one(&g, 2).unwrap();
    twice.cycles.push(twice.cycles[0].clone());
    twice.ell = 2;
    let report = verify_certificate(&g, &twice, 2, false).unwrap();
    assert!(report.failures().any(|c| c.name == "edge-disjoint"));
}

#[test]
fn verifier_detects_stale_certificates() {
    let cert = preserve_one(&Graph::complete(7), 2).unwrap();
    assert!(matches!(
        verify_certificate(&Graph::complete(8), &cert, 2, false),
        Err(Error::StaleCertificate { .. })
    ));
}

#[test]
fn verifier_reports_separating_cut() {
    let g = gen_barbell_dirac(40, 2, 3, CrossingMode::Poor).unwrap();
    let mut cert = preserve_one(&g, 2).unwrap();
    // Claim more connectivity than the input has.
    cert.k = 3;
    let report = verify_certificate(&g, &cert, 3, false).unwrap();
    let c = report.failures().find(|c| c.name == "remainder-connectivity").unwrap();
    assert!(matches!(&c.witness, Some(Witness::Cut(w)) if w.len() < 3));
}
