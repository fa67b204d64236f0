//! One PASS/FAIL line per acceptance criterion. Set `THETA_ACCEPT_N9=1` to
//! extend the claw-free sufficiency sweep to nine vertices.

mod common;

use std::time::Instant;

use theta_core::enumerate::enumerate_hereditary;
use theta_core::families::{gen_h, HFamilySpec};
use theta_core::hamilton::{hamilton_cycle, is_hamilton_cycle};
use theta_core::harness::{run_verification, Task, TaskParams, VerificationReport};
use theta_core::theta::{has_spanning_theta, spanning_theta, verify_theta};

struct Line {
    id: u8,
    title: &'static str,
    pass: bool,
    detail: String,
}

fn report_line(id: u8, title: &'static str, reports: &[VerificationReport], extra: Option<(bool, String)>) -> Line {
    let instances: u64 = reports.iter().map(|r| r.instances).sum();
    let violations: usize = reports.iter().map(|r| r.violations.len()).sum();
    let mut pass = reports.iter().all(|r| r.pass);
    let mut detail = format!("{instances} checks, {violations} violations");
    if let Some((ok, note)) = extra {
        pass &= ok;
        detail = format!("{detail}; {note}");
    }
    for r in reports {
        for v in r.violations.iter().take(3) {
            detail.push_str(&format!("\n      {} {}: {}", v.check, v.instance, v.reason));
        }
    }
    Line { id, title, pass, detail }
}

fn run(task: Task, params: TaskParams) -> VerificationReport {
    run_verification(task, &params).unwrap_or_else(|e| panic!("{task}: {e}"))
}

fn check_count(r: &VerificationReport, check: &str) -> u64 {
    r.checks.iter().filter(|c| c.check == check).map(|c| c.instances).sum()
}

fn oracle_cross_validation() -> Line {
    let levels = enumerate_hereditary(7, |_| true).unwrap();
    let mut disagreements = Vec::new();
    let mut graphs = 0;
    for (i, level) in levels.iter().enumerate() {
        let n = i + 1;
        let perms = common::permutations(n);
        for g in level {
            graphs += 1;
            let theta = if n >= 4 {
                match spanning_theta(g).unwrap() {
                    Some(c) => verify_theta(g, &c),
                    None => false,
                }
            } else {
                has_spanning_theta(g)
            };
            if theta != common::naive_spanning_theta(g, &perms) {
                disagreements.push(format!("theta on {g:?}"));
            }
            if n >= 3 {
                let ham = match hamilton_cycle(g).unwrap() {
                    Some(c) => is_hamilton_cycle(g, &c),
                    None => false,
                };
                if ham != common::naive_hamiltonian(g, &perms) {
                    disagreements.push(format!("hamilton on {g:?}"));
                }
            }
        }
    }
    Line {
        id: 11,
        title: "search agrees with permutation oracles on all graphs n <= 7",
        pass: disagreements.is_empty() && graphs == 1 + 2 + 4 + 11 + 34 + 156 + 1044,
        detail: format!("{graphs} graphs, {} disagreements {:?}", disagreements.len(), &disagreements[..disagreements.len().min(3)]),
    }
}

#[test]
fn acceptance() {
    let n9 = std::env::var("THETA_ACCEPT_N9").is_ok_and(|v| v == "1");
    let mut lines = Vec::new();
    let start = Instant::now();

    let main_n = if n9 { 9 } else { 8 };
    let r = run(Task::ThmMain, TaskParams { max_n: Some(main_n), ..Default::default() });
    let title = if n9 { "claw-free + S-free sufficiency, n <= 9" } else { "claw-free + S-free sufficiency, n <= 8" };
    let four = r.checks.len() == 4;
    lines.push(report_line(1, title, &[r], Some((four, "all four S swept".into()))));

    let r = run(Task::ThmK14P4, TaskParams { max_n: Some(8), ..Default::default() });
    lines.push(report_line(2, "K1,4 + P4-free sufficiency, n <= 8", &[r], None));

    let r = run(Task::ObsP3, TaskParams { max_n: Some(9), ..Default::default() });
    let complete = check_count(&r, "p3-free-premise-is-complete") > 0;
    lines.push(report_line(3, "P3-free graphs are complete and have a theta, n <= 9", &[r], Some((complete, "premise graphs are K_n".into()))));

    let r = run(Task::Counterexamples, TaskParams { k_extra: Some(1), ..Default::default() });
    let all = check_count(&r, "no-spanning-theta") == 18;
    lines.push(report_line(4, "counterexample graphs G1..G9 at k_min and k_min+1", &[r], Some((all, "18 graphs".into()))));

    let r = run(
        Task::LemmaUnfold,
        TaskParams { max_n: Some(4), max_mult: Some(3), samples: Some(200), seed: Some(1), ..Default::default() },
    );
    let assignments = check_count(&r, "fold-roundtrip");
    lines.push(report_line(
        5,
        "unfoldment equivalences, n <= 4, multiplicity <= 3",
        &[r],
        Some((assignments >= 200, format!("{assignments} assignments"))),
    ));

    let r = run(Task::LemmaSemi, TaskParams { max_n: Some(3), max_mult: Some(3), ..Default::default() });
    let paths = check_count(&r, "tour-iff-end-to-end-path");
    lines.push(report_line(6, "semi-loopless path/tour equivalence, n <= 3", &[r], Some((paths > 0, format!("{paths} links")))));

    let m = run(Task::MinimalM, TaskParams::default());
    let n = run(Task::MinimalN, TaskParams::default());
    lines.push(report_line(7, "premise classes are exactly M1..M4 and N1, N2", &[m, n], None));

    let r = run(Task::MinimalityH, TaskParams::default());
    let h7 = gen_h(&HFamilySpec::default_for(7).unwrap()).unwrap().graph.n();
    lines.push(report_line(8, "smallest H7/H6 members are minimal; H1..H4 fold to M1..M4", &[r], Some((h7 == 14, format!("H7 has {h7} vertices")))));

    let r = run(Task::Families, TaskParams { samples: Some(3), seed: Some(1), ..Default::default() });
    let members = check_count(&r, "contains-N1,2,3");
    lines.push(report_line(9, "H1..H7 members contain B1,5 B2,4 N1,1,4 N1,2,3", &[r], Some((members == 28, format!("{members} members")))));

    let r = run(Task::Classic, TaskParams { max_n: Some(8), ..Default::default() });
    lines.push(report_line(10, "local connectivity, cograph cuts and alpha <= kappa, n <= 8", &[r], None));

    lines.push(oracle_cross_validation());

    for l in &lines {
        println!("{} criterion {:>2}: {} ({})", if l.pass { "PASS" } else { "FAIL" }, l.id, l.title, l.detail);
    }
    println!("total wall time {:?}", start.elapsed());
    let failed: Vec<u8> = lines.iter().filter(|l| !l.pass).map(|l| l.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
