//! Per-instance checks shared by the tasks. Each returns one outcome per
//! named check so callers can count instances as well as failures.

use rayon::prelude::*;

use crate::codec::{to_edge_list, to_graph6};
use crate::connectivity::{components_within, is_biconnected};
use crate::families::CounterexampleFact;
use crate::forbidden::{find_forbidden, is_claw_free, longest_induced_path, ForbiddenSpec};
use crate::graph::SimpleGraph;
use crate::hamilton::hamilton_path_between;
use crate::hamilton::hamilton_cycle;
use crate::metrics::is_cycle;
use crate::multigraph::{multigraph_isomorphic, semi_isomorphic, EdgeMultiset, MultiGraph, SemiLooplessMultiGraph};
use crate::theta::{has_spanning_theta, spanning_theta, theta_defect};
use crate::unfold::{associated_pairs, fold, fold_semi, Color, ColoredGraph, ColoredLink};

use super::Violation;

/// Result of one named check on one instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: String,
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub(crate) fn from_failure(check: impl Into<String>, failure: Option<String>) -> Self {
        CheckOutcome { check: check.into(), failure }
    }

    pub(crate) fn failed(check: impl Into<String>, reason: String) -> Self {
        CheckOutcome::from_failure(check, Some(reason))
    }

    pub(crate) fn when(check: impl Into<String>, ok: bool, reason: impl FnOnce() -> String) -> Self {
        CheckOutcome::from_failure(check, (!ok).then(reason))
    }

    pub fn into_violation(self, instance: &str) -> Option<Violation> {
        self.failure.map(|reason| Violation { check: self.check, instance: instance.to_string(), reason })
    }
}

/// graph6 when it fits, otherwise the edge-list text.
pub fn encode_graph(g: &SimpleGraph) -> String {
    to_graph6(g).unwrap_or_else(|_| to_edge_list(g, None))
}

/// The target property of the minimal families: 2-connected, claw-free, not
/// a cycle and without a spanning theta subgraph.
pub fn no_theta_property(g: &SimpleGraph) -> bool {
    g.n() >= 4 && is_biconnected(g) && !is_cycle(g) && is_claw_free(g) && !has_spanning_theta(g)
}

/// Each graph must have a spanning theta whose certificate verifies.
pub fn theta_sweep_violations(check: &str, graphs: &[SimpleGraph]) -> Vec<Violation> {
    graphs
        .par_iter()
        .filter_map(|g| {
            let failure = match spanning_theta(g) {
                Ok(Some(cert)) => theta_defect(g, &cert).map(|d| format!("certificate {} rejected: {d}", cert.serialize())),
                Ok(None) => Some("no spanning theta subgraph".to_string()),
                Err(e) => Some(e.to_string()),
            };
            CheckOutcome::from_failure(check, failure).into_violation(&encode_graph(g))
        })
        .collect()
}

pub fn counterexample_violations(g: &SimpleGraph, facts: &[CounterexampleFact]) -> Vec<CheckOutcome> {
    facts
        .iter()
        .map(|fact| match fact {
            CounterexampleFact::Biconnected => CheckOutcome::when("biconnected", is_biconnected(g), || "not 2-connected".into()),
            CounterexampleFact::NotCycle => CheckOutcome::when("not-cycle", !is_cycle(g), || "is a cycle".into()),
            CounterexampleFact::NoSpanningTheta => {
                let failure = match spanning_theta(g) {
                    Ok(None) => None,
                    Ok(Some(c)) => Some(format!("spanning theta {}", c.serialize())),
                    Err(e) => Some(e.to_string()),
                };
                CheckOutcome::from_failure("no-spanning-theta", failure)
            }
            CounterexampleFact::Free(s) => {
                let failure = match find_forbidden(g, *s) {
                    Ok(None) => None,
                    Ok(Some(e)) => Some(format!("induced {s} at {:?}", e.map)),
                    Err(e) => Some(e.to_string()),
                };
                CheckOutcome::from_failure(format!("{s}-free"), failure)
            }
            CounterexampleFact::LongestInducedPath(l) => {
                let got = longest_induced_path(g);
                CheckOutcome::when(format!("longest-induced-path={l}"), got == *l, || format!("longest induced path has {got} vertices"))
            }
        })
        .collect()
}

/// The four graphs every minimal-family member must contain.
pub const CONTAINED: [ForbiddenSpec; 4] =
    [ForbiddenSpec::B(1, 5), ForbiddenSpec::B(2, 4), ForbiddenSpec::N(1, 1, 4), ForbiddenSpec::N(1, 2, 3)];

pub fn family_violations(g: &SimpleGraph) -> Vec<CheckOutcome> {
    let mut out = vec![
        CheckOutcome::when("biconnected", is_biconnected(g), || "not 2-connected".into()),
        CheckOutcome::when("claw-free", is_claw_free(g), || "contains a claw".into()),
        CheckOutcome::when("not-cycle", !is_cycle(g), || "is a cycle".into()),
    ];
    out.extend(counterexample_violations(g, &[CounterexampleFact::NoSpanningTheta]));
    for s in CONTAINED {
        let failure = match find_forbidden(g, s) {
            Ok(Some(_)) => None,
            Ok(None) => Some(format!("no induced {s}")),
            Err(e) => Some(e.to_string()),
        };
        out.push(CheckOutcome::from_failure(format!("contains-{s}"), failure));
    }
    out
}

fn blue_two_cuts_associated(cg: &ColoredGraph) -> Result<(), String> {
    let g = &cg.graph;
    let blue: Vec<usize> = (0..g.n()).filter(|&v| cg.colors[v] == Color::Blue).collect();
    let assoc = associated_pairs(g, &cg.colors);
    for (i, &x) in blue.iter().enumerate() {
        for &y in &blue[i + 1..] {
            let mut rest = g.vertices();
            rest.remove(x);
            rest.remove(y);
            if components_within(g, rest).len() > 1 && !assoc.contains(&(x, y)) {
                return Err(format!("blue 2-cut {{{x},{y}}} is not an associated pair"));
            }
        }
    }
    Ok(())
}

fn iff(check: &str, left: bool, right: bool, what: &str) -> CheckOutcome {
    CheckOutcome::when(check, left == right, || format!("{what}: multigraph side {left}, graph side {right}"))
}

/// Equivalences between a loopless multigraph and one of its unfoldments,
/// plus the fold round trip. The equivalences assume the unfoldment is not a
/// cycle (a single edge unfolds to a triangle), so for cycles only the round
/// trip is checked.
pub fn unfold_equivalence_violations(f: &MultiGraph, cg: &ColoredGraph) -> Vec<CheckOutcome> {
    let g = &cg.graph;
    let ec = f.edge_connectivity().unwrap_or(0);
    let two_ec = f.is_connected() && ec >= 2;
    let mut out = Vec::new();
    if !is_cycle(g) {
        out.push(iff("2ec-iff-biconnected", two_ec, is_biconnected(g), "2-edge-connected vs 2-connected"));
        let cuts = is_biconnected(g) && blue_two_cuts_associated(cg).is_ok();
        out.push(iff("3ec-iff-associated-cuts", f.is_connected() && ec >= 3, cuts, "3-edge-connected vs associated 2-cuts"));
        let ham = matches!(hamilton_cycle(g), Ok(Some(_)));
        out.push(iff("tour-iff-hamiltonian", f.has_euler_tour(), ham, "Euler tour vs Hamilton cycle"));
        out.push(iff(
            "trail-iff-theta",
            two_ec && f.has_euler_trail(),
            has_spanning_theta(g),
            "2-edge-connected with Euler trail vs spanning theta",
        ));
    }
    let round = match fold(cg) {
        Ok(r) => match multigraph_isomorphic(&r.multigraph, f) {
            Ok(Some(_)) => None,
            Ok(None) => Some(format!("folds to {}", r.multigraph.to_text().replace('\n', "; "))),
            Err(e) => Some(e.to_string()),
        },
        Err(e) => Some(e.to_string()),
    };
    out.push(CheckOutcome::from_failure("fold-roundtrip", round));
    out
}

/// Equivalences between a semi-loopless multigraph and an unfoldment link.
pub fn semi_equivalence_violations(f: &SemiLooplessMultiGraph, l: &ColoredLink) -> Vec<CheckOutcome> {
    let mut plus = l.graph.clone();
    plus.add_edge(l.x0, l.y0);
    let two_ec = f.is_connected() && f.edge_connectivity().unwrap_or(0) >= 2;
    let path = matches!(hamilton_path_between(&l.graph, l.x0, l.y0), Ok(Some(_)));
    let mut out = vec![
        iff("2ec-iff-biconnected-plus", two_ec, is_biconnected(&plus), "2-edge-connected vs L+ 2-connected"),
        iff("tour-iff-end-to-end-path", f.has_euler_tour(), path, "Euler tour vs Hamilton x0-y0 path"),
    ];
    // A loop e0 on an isolated vertex and an isolated edge e0 give the same
    // link, so only connected multigraphs are recovered exactly.
    if f.is_connected() {
        let round = match fold_semi(l) {
            Ok(r) => match semi_isomorphic(&r.multigraph, f) {
                Ok(Some(_)) => None,
                Ok(None) => Some(format!("folds to {}", r.multigraph.to_text().replace('\n', "; "))),
                Err(e) => Some(e.to_string()),
            },
            Err(e) => Some(e.to_string()),
        };
        out.push(CheckOutcome::from_failure("fold-roundtrip", round));
    }
    out
}
