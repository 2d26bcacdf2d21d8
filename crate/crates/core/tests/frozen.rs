//! Values computed once by the brute-force oracles (or read off the source
//! formulas) and frozen here.

use hampreserve_core::connectivity::kappa;
use hampreserve_core::instances::{gen_barbell_dirac, gen_ch_tightness, gen_dirac, CrossingMode};
use hampreserve_core::io::graph_hash;
use hampreserve_core::oracle::{
    brute_ham_enum, brute_preserving_exists, dense_catalog, graph_catalog, kappa_brute, max_degree_two_classes,
};
use hampreserve_core::pairs::{decompose_into_pairs, max_pairs_count, EdgePair};
use hampreserve_core::preserve::{exact_bound, many_cycles_bound, one_cycle_bound};
use hampreserve_core::{Edge, Error, Graph};

#[test]
fn hamiltonian_cycle_counts() {
    let count = |g: &Graph| brute_ham_enum(g, usize::MAX).unwrap().len();
    assert_eq!(count(&Graph::complete(4)), 3);
    assert_eq!(count(&Graph::complete(5)), 12);
    assert_eq!(count(&Graph::complete(6)), 60);
    assert_eq!(count(&Graph::complete(7)), 360);
    assert_eq!(count(&Graph::complete_bipartite(3, 3)), 6);
    assert_eq!(count(&Graph::cycle(5)), 1);
    assert_eq!(count(&Graph::petersen()), 0);
}

#[test]
fn catalogs() {
    let sizes: Vec<usize> = (1..=6).map(|n| graph_catalog(n).unwrap().len()).collect();
    assert_eq!(sizes, [1, 2, 4, 11, 34, 156]);
    assert_eq!(max_degree_two_classes(7).len(), 29);
    assert_eq!(dense_catalog(7).iter().filter(|g| g.is_dirac()).count(), 29);
}

#[test]
fn small_order_preservation() {
    // Order 7: exactly two Dirac classes lack a 2-connectivity-preserving
    // cycle, K1 joined to K3,3 and K1 joined to the triangular prism.
    let failing: Vec<Graph> =
        dense_catalog(7).into_iter().filter(|g| !brute_preserving_exists(g, 2).unwrap()).collect();
    assert_eq!(failing.len(), 2);
    for g in &failing {
        assert_eq!(kappa_brute(g).unwrap(), 4);
        assert_eq!(g.degree(0), 6);
    }
    let k1_k33 = Graph::from_edges(7, (1..7).map(|v| (0, v)).chain((1..4).flat_map(|u| (4..7).map(move |v| (u, v)))))
        .unwrap();
    assert!(!brute_preserving_exists(&k1_k33, 2).unwrap());

    // Order 6: 15 of the 19 2-connected Dirac classes fail, two of them with
    // connectivity exactly 2.
    let six: Vec<Graph> =
        dense_catalog(6).into_iter().filter(|g| g.is_dirac() && kappa_brute(g).unwrap() >= 2).collect();
    assert_eq!(six.len(), 19);
    let fail6: Vec<&Graph> = six.iter().filter(|g| !brute_preserving_exists(g, 2).unwrap()).collect();
    assert_eq!(fail6.len(), 15);
    assert_eq!(fail6.iter().filter(|g| kappa_brute(g).unwrap() == 2).count(), 2);
    assert!(!brute_preserving_exists(&Graph::complete_bipartite(3, 3), 2).unwrap());
}

#[test]
fn size_bounds() {
    assert_eq!([2, 3, 4, 5].map(one_cycle_bound), [24, 28, 34, 40]);
    assert_eq!(exact_bound(2, 1), 16);
    assert_eq!(exact_bound(3, 3), 36);
    assert_eq!(many_cycles_bound(2, 2), 80);
}

#[test]
fn tightness_family() {
    for (n, k) in [(9, 2), (10, 3), (13, 4)] {
        let g = gen_ch_tightness(n, k).unwrap();
        assert_eq!(2 * g.min_degree(), n + k - 3);
        assert_eq!(kappa_brute(&g).unwrap(), k - 1);
    }
}

#[test]
fn pair_formula_examples() {
    assert_eq!(max_pairs_count(&Graph::star(4)).unwrap(), 0);
    assert_eq!(max_pairs_count(&Graph::path(5)).unwrap(), 2);
    assert!(matches!(max_pairs_count(&Graph::complete(3)), Err(Error::Exceptional(_))));
    let paw = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
    assert_eq!(max_pairs_count(&paw).unwrap(), 1);

    // Triangle x1 x2 x3 with pendants x1', x2', x3'.
    let g = Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
    let mut got = decompose_into_pairs(&g).unwrap();
    got.sort();
    let p = |a: (usize, usize), b: (usize, usize)| EdgePair::new(Edge::from(a), Edge::from(b)).unwrap();
    let mut want = vec![p((0, 3), (1, 2)), p((1, 4), (0, 2)), p((2, 5), (0, 1))];
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn generator_outputs() {
    let g = gen_dirac(30, 4, 1).unwrap();
    assert_eq!(g.edge_count(), 390);
    assert_eq!(graph_hash(&g), "c02016a241969daa58160b413aecdbfc0cf73cc8b804c2cbf3af7f62a6dace07");
    let b = gen_barbell_dirac(24, 3, 5, CrossingMode::Poor).unwrap();
    assert_eq!(graph_hash(&b), "ff00ae9d29aceeccee03cfeaae16cdb5eb7009efb16c038cc16a4799d4ce3dd5");
    assert_eq!(kappa(&b).unwrap(), 3);
}
