mod common;

use proptest::prelude::*;

use theta_core::codec::{from_graph6, to_graph6};
use theta_core::connectivity::{is_biconnected, list_two_cuts};
use theta_core::enumerate::canonical_form;
use theta_core::forbidden::{find_induced, is_claw_free};
use theta_core::hamilton::{hamilton_cycle, is_hamilton_cycle};
use theta_core::multigraph::{multigraph_isomorphic, EdgeMultiset, MultiGraph};
use theta_core::theta::{has_spanning_theta, spanning_theta, verify_theta};
use theta_core::unfold::{check_unfoldment, fold, unfold, LinkAssignment, PureLinkSpec};
use theta_core::SimpleGraph;

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| common::graph_from_bits(n, &bits))
    })
}

fn relabeled(max_n: usize) -> impl Strategy<Value = (SimpleGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn multigraph() -> impl Strategy<Value = MultiGraph> {
    (2..=5usize)
        .prop_flat_map(|n| {
            let pair = (0..n, 0..n).prop_filter("loopless", |(u, v)| u != v);
            (Just(n), prop::collection::vec(pair, 1..=9))
        })
        .prop_map(|(n, edges)| {
            // Keep only vertices that are used, relabelled densely.
            let mut used: Vec<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
            used.sort_unstable();
            used.dedup();
            let id = |v: usize| used.binary_search(&v).expect("used vertex");
            let _ = n;
            MultiGraph::new(used.len(), edges.iter().map(|&(u, v)| (id(u), id(v))).collect()).expect("loopless")
        })
}

fn link_specs(count: usize) -> impl Strategy<Value = Vec<PureLinkSpec>> {
    prop::collection::vec(prop_oneof![Just(PureLinkSpec::Triangle), (2..=4usize).prop_map(PureLinkSpec::Path)], count)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, ..ProptestConfig::default() })]

    #[test]
    fn graph6_round_trip(g in graph(20)) {
        let text = to_graph6(&g).unwrap();
        prop_assert_eq!(from_graph6(&text).unwrap(), g);
    }

    #[test]
    fn canonical_form_ignores_labels((g, perm) in relabeled(10)) {
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&g.relabel(&perm)).unwrap());
        let back = canonical_form(&g).unwrap().to_graph();
        prop_assert_eq!(canonical_form(&back).unwrap(), canonical_form(&g).unwrap());
    }

    #[test]
    fn canonical_form_matches_brute_force_classes(
        ((a, perm), flip) in (relabeled(6), (any::<bool>(), 0usize..6))
    ) {
        // Half the pairs are relabelings; the rest also move one edge.
        let mut b = a.relabel(&perm);
        let n = a.n();
        if flip.0 && n >= 3 {
            let i = flip.1 % n;
            if b.degree(i) < n - 1 {
                if let Some(k) = (0..n).find(|&k| k != i && b.has_edge(i, k)) {
                    let t = (0..n).find(|&t| t != i && t != k && !b.has_edge(i, t)).expect("i is not universal");
                    b.remove_edge(i, k);
                    b.add_edge(i, t);
                }
            }
        }
        let perms = common::permutations(a.n());
        let same = common::naive_canonical(&a, &perms) == common::naive_canonical(&b, &perms);
        prop_assert_eq!(canonical_form(&a).unwrap() == canonical_form(&b).unwrap(), same);
    }

    #[test]
    fn theta_certificates_verify_and_match_oracle(g in graph(7)) {
        let perms = common::permutations(g.n());
        let naive = common::naive_spanning_theta(&g, &perms);
        if g.n() >= 4 {
            match spanning_theta(&g).unwrap() {
                Some(c) => { prop_assert!(verify_theta(&g, &c)); prop_assert!(naive); }
                None => prop_assert!(!naive),
            }
        } else {
            prop_assert!(!has_spanning_theta(&g));
        }
    }

    #[test]
    fn hamilton_cycles_verify_and_match_oracle(g in graph(7)) {
        prop_assume!(g.n() >= 3);
        let perms = common::permutations(g.n());
        match hamilton_cycle(&g).unwrap() {
            Some(c) => { prop_assert!(is_hamilton_cycle(&g, &c)); prop_assert!(common::naive_hamiltonian(&g, &perms)); }
            None => prop_assert!(!common::naive_hamiltonian(&g, &perms)),
        }
    }

    #[test]
    fn theta_uses_an_edge_into_every_side_of_a_two_cut(g in graph(9)) {
        prop_assume!(is_biconnected(&g) && g.n() >= 4);
        if let Some(cert) = spanning_theta(&g).unwrap() {
            let edges = cert.edges();
            for cut in list_two_cuts(&g).unwrap() {
                for side in &cut.components {
                    for x in [cut.x, cut.y] {
                        let hit = edges.iter().any(|&(a, b)| (a == x && side.contains(b)) || (b == x && side.contains(a)));
                        prop_assert!(hit, "cut {:?} side {:?}", (cut.x, cut.y), side);
                    }
                }
            }
        }
    }

    #[test]
    fn euler_trails_use_every_edge_once(f in multigraph()) {
        match f.euler_trail() {
            Some(t) => {
                prop_assert!(f.has_euler_trail());
                let mut used = t.edges.clone();
                used.sort_unstable();
                prop_assert_eq!(used, (0..f.edge_count()).collect::<Vec<_>>());
                for (i, &e) in t.edges.iter().enumerate() {
                    let (u, v) = f.edges()[e];
                    let (a, b) = (t.vertices[i], t.vertices[i + 1]);
                    prop_assert!((a, b) == (u, v) || (a, b) == (v, u));
                }
                prop_assert_eq!(t.closed, t.vertices.first() == t.vertices.last());
            }
            None => prop_assert!(!f.has_euler_trail()),
        }
    }

    #[test]
    fn unfold_then_fold_is_identity(
        (f, specs) in multigraph().prop_flat_map(|f| { let m = f.edge_count(); (Just(f), link_specs(m)) })
    ) {
        let a = LinkAssignment::from_list(0..f.edge_count(), &specs).unwrap();
        let cg = unfold(&f, &a).unwrap();
        prop_assert!(check_unfoldment(&cg).all_hold());
        prop_assert!(is_claw_free(&cg.graph));
        let back = fold(&cg).unwrap();
        prop_assert!(multigraph_isomorphic(&back.multigraph, &f).unwrap().is_some());
    }

    #[test]
    fn induced_embeddings_are_induced(host in graph(9), pattern in graph(4)) {
        if let Some(e) = find_induced(&host, &pattern).unwrap() {
            for j in 1..pattern.n() {
                for i in 0..j {
                    prop_assert_eq!(host.has_edge(e.map[i], e.map[j]), pattern.has_edge(i, j));
                }
            }
        }
    }
}

#[test]
fn oracles_recognise_small_cases() {
    let perms = common::permutations(5);
    assert!(common::naive_spanning_theta(&SimpleGraph::complete(5).unwrap(), &perms));
    assert!(!common::naive_spanning_theta(&SimpleGraph::cycle(5).unwrap(), &perms));
    let k23 = SimpleGraph::new(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
    assert!(common::naive_spanning_theta(&k23, &perms));
    assert!(!common::naive_hamiltonian(&k23, &perms));
    assert!(common::naive_hamiltonian(&SimpleGraph::cycle(5).unwrap(), &perms));
}
