use theta_core::families::{counterexample_facts, gen_g, gen_h, m_graph, HFamilySpec};
use theta_core::harness::*;
use theta_core::theta::has_spanning_theta;
use theta_core::unfold::{unfold, LinkAssignment, PureLinkSpec};
use theta_core::SimpleGraph;

fn failures(outcomes: &[CheckOutcome]) -> Vec<&str> {
    outcomes.iter().filter(|o| o.failure.is_some()).map(|o| o.check.as_str()).collect()
}

#[test]
fn report_body_is_reproducible() {
    let p = TaskParams { samples: Some(40), seed: Some(7), max_n: Some(3), ..Default::default() };
    let a = run_verification(Task::LemmaUnfold, &p).unwrap();
    let b = run_verification(Task::LemmaUnfold, &p).unwrap();
    assert_eq!(a.body(), b.body());
    assert!(a.pass);
    assert_eq!(a.params.max_mult, Some(3));
    let fam = TaskParams { seed: Some(3), ..Default::default() };
    assert_eq!(
        run_verification(Task::Families, &fam).unwrap().body(),
        run_verification(Task::Families, &fam).unwrap().body()
    );
}

#[test]
fn report_schema() {
    let r = run_verification(Task::MinimalN, &TaskParams::default()).unwrap();
    let text = r.to_json_lines();
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["record"], "header");
    assert_eq!(lines[0]["task"], "minimal-n");
    assert_eq!(lines[lines.len() - 2]["record"], "summary");
    assert_eq!(lines[lines.len() - 2]["pass"], true);
    assert_eq!(lines.last().unwrap()["record"], "timing");
    assert!(!r.body().contains("timing"));
}

#[test]
fn over_cap_parameters_error() {
    let p = TaskParams { max_n: Some(10), ..Default::default() };
    assert!(run_verification(Task::ThmMain, &p).is_err());
    let p = TaskParams { max_n: Some(5), ..Default::default() };
    assert!(run_verification(Task::LemmaUnfold, &p).is_err());
    let p = TaskParams { forbid: Some("Q7".into()), ..Default::default() };
    assert!(run_verification(Task::ThmMain, &p).is_err());
}

#[test]
fn deleting_an_edge_of_g1_is_caught() {
    let g = gen_g(1, 4).unwrap().graph;
    assert!(failures(&counterexample_violations(&g, &counterexample_facts(1, 4))).is_empty());
    let (u, v) = g.edges().next().unwrap();
    let mut cut = g.clone();
    cut.remove_edge(u, v);
    let outcomes = counterexample_violations(&cut, &counterexample_facts(1, 4));
    let failed = failures(&outcomes);
    assert!(failed.contains(&"biconnected"), "{failed:?}");
}

#[test]
fn theta_sweep_reports_graphs_without_theta() {
    let bad = gen_g(1, 4).unwrap().graph;
    let good = SimpleGraph::complete(5).unwrap();
    let v = theta_sweep_violations("sweep", &[good, bad.clone()]);
    assert_eq!(v.len(), 1);
    assert_eq!(v[0].instance, encode_graph(&bad));
}

#[test]
fn adding_a_chord_to_h7_is_caught() {
    let g = gen_h(&HFamilySpec::default_for(7).unwrap()).unwrap().graph;
    assert!(failures(&family_violations(&g)).is_empty());
    assert!(no_theta_property(&g));
    let mut found = false;
    'outer: for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let mut h = g.clone();
            h.add_edge(u, v);
            if has_spanning_theta(&h) {
                assert!(failures(&family_violations(&h)).contains(&"no-spanning-theta"));
                found = true;
                break 'outer;
            }
        }
    }
    assert!(found);
}

#[test]
fn wrong_multigraph_fails_round_trip() {
    let m1 = m_graph(1).unwrap();
    let m2 = m_graph(2).unwrap();
    let cg = unfold(&m1, &LinkAssignment::uniform(0..m1.edges().len(), PureLinkSpec::Triangle)).unwrap();
    assert!(failures(&unfold_equivalence_violations(&m1, &cg)).is_empty());
    assert!(failures(&unfold_equivalence_violations(&m2, &cg)).contains(&"fold-roundtrip"));
}

#[test]
fn extra_vertex_on_h7_is_not_minimal() {
    use theta_core::enumerate::minimality_scan;
    use theta_core::VertexSet;
    let h7 = gen_h(&HFamilySpec::default_for(7).unwrap()).unwrap().graph;
    let mut g = h7.clone();
    let first = h7.neighbors(0);
    g.add_vertex(first.union(VertexSet::singleton(0))).unwrap();
    let v = minimality_scan(&g, no_theta_property).unwrap();
    assert!(!v.is_minimal);
    let w = v.witness.unwrap();
    assert_eq!(w, (0..14).collect::<Vec<_>>());
    let (sub, _) = g.induced_subgraph(w.into_iter().collect()).unwrap();
    assert!(no_theta_property(&sub));
}
