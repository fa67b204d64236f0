//! Named, reproducible verification tasks and their line-delimited reports.
//!
//! A report is a sequence of JSON objects, one per line, each tagged by
//! `record`:
//!
//! * `header`: `task`, `params` (the resolved parameters)
//! * `check`: `check`, `instances`, `violations` for one named sub-check
//! * `violation`: `check`, `instance` (graph6, edge list or multigraph text), `reason`
//! * `summary`: `task`, `instances`, `violations`, `pass`
//! * `timing`: `wall_ms`, always last and excluded from [`VerificationReport::body`]
//!
//! Everything but the timing line depends only on the task and parameters.

mod checks;
mod tasks;

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};

pub use checks::{
    counterexample_violations, encode_graph, family_violations, CheckOutcome, CONTAINED, no_theta_property, semi_equivalence_violations,
    theta_sweep_violations, unfold_equivalence_violations,
};

/// The verification tasks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    ObsP3,
    ThmMain,
    ThmK14P4,
    Counterexamples,
    Families,
    LemmaUnfold,
    LemmaSemi,
    MinimalM,
    MinimalN,
    MinimalityH,
    Classic,
}

impl Task {
    pub const ALL: [Task; 11] = [
        Task::ObsP3,
        Task::ThmMain,
        Task::ThmK14P4,
        Task::Counterexamples,
        Task::Families,
        Task::LemmaUnfold,
        Task::LemmaSemi,
        Task::MinimalM,
        Task::MinimalN,
        Task::MinimalityH,
        Task::Classic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Task::ObsP3 => "obs-p3",
            Task::ThmMain => "thm-main",
            Task::ThmK14P4 => "thm-k14p4",
            Task::Counterexamples => "counterexamples",
            Task::Families => "families",
            Task::LemmaUnfold => "lemma-unfold",
            Task::LemmaSemi => "lemma-semi",
            Task::MinimalM => "minimal-m",
            Task::MinimalN => "minimal-n",
            Task::MinimalityH => "minimality-h",
            Task::Classic => "classic",
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Task {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Task::ALL
            .into_iter()
            .find(|t| t.name() == s.trim())
            .ok_or_else(|| Error::UnknownTask(s.to_string()))
    }
}

/// Task parameters. Unset fields take per-task defaults when the task runs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct TaskParams {
    /// Largest vertex count for sweeps, or multigraph order for the lemma tasks.
    pub max_n: Option<usize>,
    pub max_mult: Option<usize>,
    pub seed: Option<u64>,
    /// Random link assignments (lemma tasks) or spec variants per family (`families`).
    pub samples: Option<usize>,
    /// Restricts `thm-main` to these second forbidden graphs, e.g. `"B1,5"`.
    pub forbid: Option<String>,
    /// `counterexamples` checks `k_min ..= k_min + k_extra`.
    pub k_extra: Option<usize>,
}

impl TaskParams {
    /// Reads `key = value` settings from a TOML file.
    pub fn from_config_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
        Self::from_config_str(&text)
    }

    pub fn from_config_str(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }

    /// Fields set in `other` replace those in `self`.
    pub fn overridden_by(mut self, other: &TaskParams) -> Self {
        macro_rules! take {
            ($($f:ident),*) => { $( if other.$f.is_some() { self.$f = other.$f.clone(); } )* };
        }
        take!(max_n, max_mult, seed, samples, forbid, k_extra);
        self
    }
}

/// One failed instance with the reason it failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub check: String,
    pub instance: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckSummary {
    pub check: String,
    pub instances: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub task: Task,
    pub params: TaskParams,
    pub checks: Vec<CheckSummary>,
    pub violations: Vec<Violation>,
    pub instances: u64,
    #[serde(skip)]
    pub wall_time: Duration,
    pub pass: bool,
}

impl VerificationReport {
    /// All records except timing, one JSON object per line.
    pub fn body(&self) -> String {
        let mut lines = vec![json!({"record": "header", "task": self.task, "params": self.params}).to_string()];
        lines.extend(
            self.checks
                .iter()
                .map(|c| json!({"record": "check", "check": c.check, "instances": c.instances, "violations": c.violations}).to_string()),
        );
        lines.extend(
            self.violations
                .iter()
                .map(|v| json!({"record": "violation", "check": v.check, "instance": v.instance, "reason": v.reason}).to_string()),
        );
        lines.push(
            json!({"record": "summary", "task": self.task, "instances": self.instances,
                   "violations": self.violations.len(), "pass": self.pass})
            .to_string(),
        );
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = self.body();
        out.push_str(&json!({"record": "timing", "wall_ms": self.wall_time.as_millis() as u64}).to_string());
        out.push('\n');
        out
    }
}

/// Collects per-check counts and violations in the order checks are added.
#[derive(Default)]
pub(crate) struct Recorder {
    checks: Vec<CheckSummary>,
    violations: Vec<Violation>,
}

impl Recorder {
    pub(crate) fn add(&mut self, check: impl Into<String>, instances: u64, violations: Vec<Violation>) {
        self.checks.push(CheckSummary { check: check.into(), instances, violations: violations.len() as u64 });
        self.violations.extend(violations);
    }
}

/// Runs one task. Parameters left unset take the task's defaults; the
/// resolved values appear in the report header.
pub fn run_verification(task: Task, params: &TaskParams) -> Result<VerificationReport> {
    let start = Instant::now();
    let mut rec = Recorder::default();
    let resolved = tasks::run(task, params, &mut rec)?;
    let instances = rec.checks.iter().map(|c| c.instances).sum();
    let pass = rec.violations.is_empty();
    Ok(VerificationReport {
        task,
        params: resolved,
        checks: rec.checks,
        violations: rec.violations,
        instances,
        wall_time: start.elapsed(),
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn task_names_round_trip() {
        for t in Task::ALL {
            assert_eq!(t.name().parse::<Task>().unwrap(), t);
        }
        assert!(matches!("nope".parse::<Task>(), Err(Error::UnknownTask(_))));
    }

    #[test]
    fn config_and_override() {
        let base = TaskParams::from_config_str("seed = 5\nmax_n = 6\n").unwrap();
        let cli = TaskParams { seed: Some(9), ..Default::default() };
        let p = base.overridden_by(&cli);
        assert_eq!((p.seed, p.max_n), (Some(9), Some(6)));
        assert!(TaskParams::from_config_str("bogus = 1").is_err());
    }
}
