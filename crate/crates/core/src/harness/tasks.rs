//! The task bodies. Each resolves its defaults, runs, and records every named
//! check it performed.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::checks::{
    counterexample_violations, encode_graph, family_violations, no_theta_property, semi_equivalence_violations,
    theta_sweep_violations, unfold_equivalence_violations, CheckOutcome,
};
use super::{Recorder, Task, TaskParams, Violation};
use crate::connectivity::{is_biconnected, is_connected, vertex_connectivity, vertex_cuts_of_size};
use crate::enumerate::{enumerate_hereditary, enumerate_multigraphs, is_minimal_odd_multigraph, is_minimal_odd_semi};
use crate::enumerate::{minimality_scan, MultigraphMode};
use crate::error::{Error, Result};
use crate::families::{
    counterexample_facts, gen_g, gen_h, m_graph, n_graph, sample_h_spec, sample_link_specs, HFamilySpec, G_MIN_K,
};
use crate::forbidden::{find_forbidden, find_induced, is_claw_free, parse_forbidden_list, ForbiddenSpec};
use crate::graph::SimpleGraph;
use crate::hamilton::hamilton_cycle;
use crate::metrics::{independence_number, is_complete, is_cycle, is_locally_connected};
use crate::multigraph::{multigraph_isomorphic, semi_isomorphic, AnyMultiGraph, EdgeMultiset};
use crate::unfold::{fold, unfold, unfold_semi, ColoredGraph, LinkAssignment};

/// Second forbidden graphs of the claw-free sufficiency sweep.
const MAIN_SECOND: [ForbiddenSpec; 4] =
    [ForbiddenSpec::B(1, 5), ForbiddenSpec::B(2, 4), ForbiddenSpec::N(1, 1, 4), ForbiddenSpec::N(1, 2, 3)];

/// Instance descriptions with their check outcomes.
type Instances = Vec<(String, Vec<CheckOutcome>)>;

/// Longest path link drawn when sampling assignments.
const SAMPLE_MAX_PATH: usize = 4;

impl Recorder {
    /// Folds per-instance outcomes into per-check counts, keeping first-seen
    /// check order.
    fn outcomes(&mut self, instance: &str, outcomes: Vec<CheckOutcome>) {
        for o in outcomes {
            let i = match self.checks.iter().position(|c| c.check == o.check) {
                Some(i) => i,
                None => {
                    self.add(o.check.clone(), 0, Vec::new());
                    self.checks.len() - 1
                }
            };
            self.checks[i].instances += 1;
            if let Some(v) = o.into_violation(instance) {
                self.checks[i].violations += 1;
                self.violations.push(v);
            }
        }
    }
}

/// Applies `failure` to every graph in parallel; order of violations follows
/// the input order.
fn sweep<F>(rec: &mut Recorder, check: &str, graphs: &[SimpleGraph], failure: F)
where
    F: Fn(&SimpleGraph) -> Option<String> + Sync,
{
    let violations: Vec<Violation> = graphs
        .par_iter()
        .filter_map(|g| failure(g).map(|reason| Violation { check: check.into(), instance: encode_graph(g), reason }))
        .collect();
    rec.add(check, graphs.len() as u64, violations);
}

fn free_of(g: &SimpleGraph, s: ForbiddenSpec) -> bool {
    matches!(find_forbidden(g, s), Ok(None))
}

fn theta_premise(g: &SimpleGraph) -> bool {
    g.n() >= 4 && is_biconnected(g) && !is_cycle(g)
}

fn hereditary_premise<K>(max_n: usize, keep: K) -> Result<Vec<SimpleGraph>>
where
    K: Fn(&SimpleGraph) -> bool + Sync,
{
    Ok(enumerate_hereditary(max_n, keep)?.into_iter().flatten().filter(theta_premise).collect())
}

fn is_hamiltonian(g: &SimpleGraph) -> bool {
    matches!(hamilton_cycle(g), Ok(Some(_)))
}

fn rng_for(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

pub(crate) fn run(task: Task, params: &TaskParams, rec: &mut Recorder) -> Result<TaskParams> {
    let mut p = params.clone();
    match task {
        Task::ObsP3 => {
            let max_n = *p.max_n.get_or_insert(9);
            obs_p3(max_n, rec)?;
        }
        Task::ThmMain => {
            let max_n = *p.max_n.get_or_insert(8);
            let second = match &p.forbid {
                Some(list) => parse_forbidden_list(list)?,
                None => MAIN_SECOND.to_vec(),
            };
            for s in second {
                let graphs = hereditary_premise(max_n, |g| is_claw_free(g) && free_of(g, s))?;
                let check = format!("claw-{s}-free-has-theta");
                let v = theta_sweep_violations(&check, &graphs);
                rec.add(check, graphs.len() as u64, v);
            }
        }
        Task::ThmK14P4 => {
            let max_n = *p.max_n.get_or_insert(8);
            let graphs =
                hereditary_premise(max_n, |g| free_of(g, ForbiddenSpec::Star(4)) && free_of(g, ForbiddenSpec::Path(4)))?;
            let v = theta_sweep_violations("k14-p4-free-has-theta", &graphs);
            rec.add("k14-p4-free-has-theta", graphs.len() as u64, v);
        }
        Task::Counterexamples => {
            let extra = *p.k_extra.get_or_insert(1);
            for i in 1..=9u8 {
                let k_min = G_MIN_K[i as usize - 1];
                for k in k_min..=k_min + extra {
                    let instance = format!("G{i}(k={k})");
                    match gen_g(i, k) {
                        Ok(lg) => {
                            let outcomes = counterexample_violations(&lg.graph, &counterexample_facts(i, k));
                            rec.outcomes(&format!("{instance} {}", encode_graph(&lg.graph)), outcomes);
                        }
                        Err(e) => rec.outcomes(&instance, vec![CheckOutcome::failed("generate", e.to_string())]),
                    }
                }
            }
        }
        Task::Families => {
            let samples = *p.samples.get_or_insert(3);
            let seed = *p.seed.get_or_insert(1);
            for family in 1..=7u8 {
                let mut rng = rng_for(seed, family as u64);
                let mut specs = vec![HFamilySpec::default_for(family)?];
                for _ in 0..samples {
                    specs.push(sample_h_spec(&mut rng, family, SAMPLE_MAX_PATH, 3)?);
                }
                let results: Vec<(String, Vec<CheckOutcome>)> = specs
                    .par_iter()
                    .map(|spec| {
                        let name = describe_h(spec);
                        match gen_h(spec) {
                            Ok(lg) => (format!("{name} {}", encode_graph(&lg.graph)), family_violations(&lg.graph)),
                            Err(e) => (name, vec![CheckOutcome::failed("generate", e.to_string())]),
                        }
                    })
                    .collect();
                for (instance, outcomes) in results {
                    rec.outcomes(&instance, outcomes);
                }
            }
        }
        Task::LemmaUnfold => {
            let max_n = *p.max_n.get_or_insert(4);
            let max_mult = *p.max_mult.get_or_insert(3);
            let samples = *p.samples.get_or_insert(200);
            let seed = *p.seed.get_or_insert(1);
            lemma_unfold(max_n, max_mult, samples, seed, rec)?;
        }
        Task::LemmaSemi => {
            let max_n = *p.max_n.get_or_insert(3);
            let max_mult = *p.max_mult.get_or_insert(3);
            let samples = *p.samples.get_or_insert(200);
            let seed = *p.seed.get_or_insert(1);
            lemma_semi(max_n, max_mult, samples, seed, rec)?;
        }
        Task::MinimalM => {
            let max_n = *p.max_n.get_or_insert(4);
            let max_mult = *p.max_mult.get_or_insert(4);
            minimal_m(max_n, max_mult, rec)?;
        }
        Task::MinimalN => {
            let max_n = *p.max_n.get_or_insert(3);
            let max_mult = *p.max_mult.get_or_insert(4);
            minimal_n(max_n, max_mult, rec)?;
        }
        Task::MinimalityH => minimality_h(rec)?,
        Task::Classic => {
            let max_n = *p.max_n.get_or_insert(8);
            classic(max_n, rec)?;
        }
    }
    Ok(p)
}

fn describe_h(spec: &HFamilySpec) -> String {
    let links: Vec<String> = spec.links.iter().map(ToString::to_string).collect();
    match &spec.chain {
        Some(c) => format!("H{}[{}; {}]", spec.family, links.join(","), c),
        None => format!("H{}[{}]", spec.family, links.join(",")),
    }
}

fn obs_p3(max_n: usize, rec: &mut Recorder) -> Result<()> {
    let graphs = hereditary_premise(max_n, |g| free_of(g, ForbiddenSpec::Path(3)))?;
    sweep(rec, "p3-free-premise-is-complete", &graphs, |g| (!is_complete(g)).then(|| "not complete".to_string()));
    let v = theta_sweep_violations("p3-free-has-theta", &graphs);
    rec.add("p3-free-has-theta", graphs.len() as u64, v);

    // Necessity: P3 is the only connected graph on 3 to 6 vertices that is an
    // induced subgraph of both G1 and G6.
    let g1 = gen_g(1, G_MIN_K[0])?.graph;
    let g6 = gen_g(6, G_MIN_K[5])?.graph;
    let p3 = SimpleGraph::path(3)?;
    let candidates: Vec<SimpleGraph> = enumerate_hereditary(6, |_| true)?
        .into_iter()
        .skip(2)
        .flatten()
        .filter(is_connected)
        .collect();
    sweep(rec, "only-p3-common-to-g1-g6", &candidates, |r| {
        let common = matches!(find_induced(&g1, r), Ok(Some(_))) && matches!(find_induced(&g6, r), Ok(Some(_)));
        let is_p3 = r.n() == 3 && r.edge_count() == p3.edge_count();
        (common != is_p3).then(|| format!("common induced subgraph: {common}, is P3: {is_p3}"))
    });
    Ok(())
}

/// Assignments per multigraph: the all-triangle one plus enough random ones
/// that the total reaches `samples`.
fn assignments(edges: usize, classes: usize, samples: usize, rng: &mut ChaCha8Rng) -> Vec<LinkAssignment> {
    let per = samples.div_ceil(classes.max(1)).max(1);
    let mut out = vec![LinkAssignment::uniform(0..edges, crate::unfold::PureLinkSpec::Triangle)];
    for _ in 0..per {
        let specs = sample_link_specs(rng, edges, SAMPLE_MAX_PATH);
        out.push(LinkAssignment::from_list(0..edges, &specs).expect("one spec per edge"));
    }
    out
}

fn lemma_unfold(max_n: usize, max_mult: usize, samples: usize, seed: u64, rec: &mut Recorder) -> Result<()> {
    let classes: Vec<_> = enumerate_multigraphs(max_n, max_mult, MultigraphMode::Loopless)?
        .into_iter()
        .filter_map(|f| match f {
            AnyMultiGraph::Loopless(m) => Some(m),
            AnyMultiGraph::SemiLoopless(_) => None,
        })
        .collect();
    let count = classes.len();
    let results: Vec<Result<Instances>> = classes
        .par_iter()
        .enumerate()
        .map(|(j, f)| {
            let mut rng = rng_for(seed, j as u64);
            assignments(f.edge_count(), count, samples, &mut rng)
                .iter()
                .map(|a| {
                    let cg = unfold(f, a)?;
                    let instance = format!("{} | {}", f.to_text().trim_end().replace('\n', "; "), encode_graph(&cg.graph));
                    Ok((instance, unfold_equivalence_violations(f, &cg)))
                })
                .collect()
        })
        .collect();
    for r in results {
        for (instance, outcomes) in r? {
            rec.outcomes(&instance, outcomes);
        }
    }
    Ok(())
}

fn lemma_semi(max_n: usize, max_mult: usize, samples: usize, seed: u64, rec: &mut Recorder) -> Result<()> {
    let classes: Vec<_> = enumerate_multigraphs(max_n, max_mult, MultigraphMode::SemiLoopless)?
        .into_iter()
        .filter_map(|f| match f {
            AnyMultiGraph::SemiLoopless(s) => Some(s),
            AnyMultiGraph::Loopless(_) => None,
        })
        .collect();
    let count = classes.len();
    let results: Vec<Result<Instances>> = classes
        .par_iter()
        .enumerate()
        .map(|(j, f)| {
            let mut rng = rng_for(seed, j as u64);
            let mut out = Vec::new();
            for a in assignments(f.edge_count(), count, samples, &mut rng) {
                for flag in [false, true] {
                    let link = unfold_semi(f, &a, flag)?;
                    let instance = format!(
                        "{} | end-edge={flag} | {}",
                        f.to_text().trim_end().replace('\n', "; "),
                        encode_graph(&link.graph)
                    );
                    out.push((instance, semi_equivalence_violations(f, &link)));
                }
            }
            Ok(out)
        })
        .collect();
    for r in results {
        for (instance, outcomes) in r? {
            rec.outcomes(&instance, outcomes);
        }
    }
    Ok(())
}

fn minimal_m(max_n: usize, max_mult: usize, rec: &mut Recorder) -> Result<()> {
    let classes = enumerate_multigraphs(max_n, max_mult, MultigraphMode::Loopless)?;
    let catalog: Vec<_> = (1..=4).map(m_graph).collect::<Result<_>>()?;
    let mut found = [false; 4];
    let mut hits = Vec::new();
    for f in &classes {
        let AnyMultiGraph::Loopless(m) = f else { continue };
        if !is_minimal_odd_multigraph(m)? {
            continue;
        }
        let mut matched = None;
        for (i, c) in catalog.iter().enumerate() {
            if multigraph_isomorphic(m, c)?.is_some() {
                matched = Some(i);
            }
        }
        match matched {
            Some(i) => found[i] = true,
            None => hits.push(Violation {
                check: "premise-classes-are-m1-m4".into(),
                instance: m.to_text().trim_end().replace('\n', "; "),
                reason: "satisfies the premises but is none of M1..M4".into(),
            }),
        }
    }
    rec.add("premise-classes-are-m1-m4", classes.len() as u64, hits);
    let missing = missing_members("m1-m4-all-found", "M", &found, max_n, max_mult);
    rec.add("m1-m4-all-found", 4, missing);
    Ok(())
}

fn minimal_n(max_n: usize, max_mult: usize, rec: &mut Recorder) -> Result<()> {
    let classes = enumerate_multigraphs(max_n, max_mult, MultigraphMode::SemiLoopless)?;
    let catalog: Vec<_> = (1..=2).map(n_graph).collect::<Result<_>>()?;
    let mut found = [false; 2];
    let mut hits = Vec::new();
    for f in &classes {
        let AnyMultiGraph::SemiLoopless(s) = f else { continue };
        if !is_minimal_odd_semi(s)? {
            continue;
        }
        let mut matched = None;
        for (i, c) in catalog.iter().enumerate() {
            if semi_isomorphic(s, c)?.is_some() {
                matched = Some(i);
            }
        }
        match matched {
            Some(i) => found[i] = true,
            None => hits.push(Violation {
                check: "premise-classes-are-n1-n2".into(),
                instance: s.to_text().trim_end().replace('\n', "; "),
                reason: "satisfies the premises but is neither N1 nor N2".into(),
            }),
        }
    }
    rec.add("premise-classes-are-n1-n2", classes.len() as u64, hits);
    let missing = missing_members("n1-n2-all-found", "N", &found, max_n, max_mult);
    rec.add("n1-n2-all-found", 2, missing);
    Ok(())
}

fn missing_members(check: &str, prefix: &str, found: &[bool], max_n: usize, max_mult: usize) -> Vec<Violation> {
    found
        .iter()
        .enumerate()
        .filter(|(_, f)| !**f)
        .map(|(i, _)| Violation {
            check: check.into(),
            instance: format!("{prefix}{}", i + 1),
            reason: format!("no premise class isomorphic to it with n <= {max_n}, multiplicity <= {max_mult}"),
        })
        .collect()
}

fn minimality_h(rec: &mut Recorder) -> Result<()> {
    for family in [7u8, 6] {
        let lg = gen_h(&HFamilySpec::default_for(family)?)?;
        let g = &lg.graph;
        let instance = format!("H{family} default {}", encode_graph(g));
        let v = minimality_scan(g, no_theta_property)?;
        let outcomes = vec![
            CheckOutcome::when("has-no-theta-property", v.whole_satisfies, || "the graph itself lacks the property".into()),
            CheckOutcome::from_failure(
                "every-proper-induced-subgraph-lacks-it",
                v.witness.map(|w| format!("induced subgraph on {w:?} has the property")),
            ),
        ];
        rec.outcomes(&instance, outcomes);
    }
    for family in 1..=4u8 {
        let lg = gen_h(&HFamilySpec::default_for(family)?)?;
        let colors = lg.colors.clone().ok_or_else(|| Error::Precondition("family member without colours".into()))?;
        let cg = ColoredGraph::new(lg.graph.clone(), colors)?;
        let failure = match fold(&cg) {
            Ok(r) => match multigraph_isomorphic(&r.multigraph, &m_graph(family)?)? {
                Some(_) => None,
                None => Some(format!("folds to {}", r.multigraph.to_text().trim_end().replace('\n', "; "))),
            },
            Err(e) => Some(e.to_string()),
        };
        rec.outcomes(
            &format!("H{family} default {}", encode_graph(&lg.graph)),
            vec![CheckOutcome::from_failure("folds-to-base-multigraph", failure)],
        );
    }
    Ok(())
}

fn classic(max_n: usize, rec: &mut Recorder) -> Result<()> {
    let all: Vec<SimpleGraph> = enumerate_hereditary(max_n, |_| true)?.into_iter().flatten().filter(|g| g.n() >= 3).collect();

    let local: Vec<SimpleGraph> =
        all.iter().filter(|g| is_connected(g) && is_claw_free(g) && is_locally_connected(g)).cloned().collect();
    sweep(rec, "locally-connected-claw-free-is-hamiltonian", &local, |g| {
        (!is_hamiltonian(g)).then(|| "no Hamilton cycle".to_string())
    });

    let cographs: Vec<SimpleGraph> = all
        .iter()
        .filter(|g| is_connected(g) && !is_complete(g) && free_of(g, ForbiddenSpec::Path(4)))
        .cloned()
        .collect();
    sweep(rec, "p4-free-minimum-cut-dominates", &cographs, |g| {
        let kappa = vertex_connectivity(g);
        let cuts = match vertex_cuts_of_size(g, kappa) {
            Ok(c) => c,
            Err(e) => return Some(e.to_string()),
        };
        for cut in cuts {
            let outside = g.vertices().difference(cut);
            for s in cut.iter() {
                if !outside.is_subset(g.neighbors(s)) {
                    return Some(format!("cut vertex {s} of minimum cut {cut:?} misses a vertex outside it"));
                }
            }
        }
        None
    });

    let ce: Vec<SimpleGraph> = all.iter().filter(|g| independence_number(g) <= vertex_connectivity(g)).cloned().collect();
    sweep(rec, "alpha-at-most-kappa-is-hamiltonian", &ce, |g| (!is_hamiltonian(g)).then(|| "no Hamilton cycle".to_string()));
    Ok(())
}
