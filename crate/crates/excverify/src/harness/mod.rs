//! Verification campaigns: check catalogue, runner, basis cache and reports.

mod cache;
mod checks;
mod context;
mod expected;
mod report;

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use cache::{cache_path, convention_fingerprint, BasisCache, BRACKET_ROWS, CACHE_SCHEMA_VERSION};
pub use checks::catalogue;
pub use context::{BasisSource, Context, RunConfig, DEFAULT_SAMPLE, DEFAULT_SEED};
pub use expected::{expected_data, ExpectedData, LemmaRow, Table1Row, Table2Row};
pub use report::{emit_report, strip_timing, Format, Report, RunMeta, REPORT_SCHEMA_VERSION};
pub use checks::Task;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Bases,
    Table1,
    Table2,
    Lemmas,
    Identities,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Bases => "bases",
            Suite::Table1 => "table1",
            Suite::Table2 => "table2",
            Suite::Lemmas => "lemmas",
            Suite::Identities => "identities",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    BasisDim,
    FixedDim,
    Identity,
    Jacobi,
    Membership,
    Invariant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// read from the published tables and dimension statements
    Reference,
    Trivial,
    Derived,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub value: serde_json::Value,
    pub provenance: Provenance,
    pub note: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckSpec {
    pub id: String,
    pub kind: CheckKind,
    pub inputs: Vec<String>,
    pub expected: Expected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub kind: CheckKind,
    pub inputs: Vec<String>,
    pub expected: Expected,
    pub status: Status,
    pub actual: serde_json::Value,
    pub millis: u64,
    #[serde(skip_serializing_if = "String::is_empty", default)]
    pub notes: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub counterexample: Option<serde_json::Value>,
}

/// Outcome of evaluating a check, before timing and status are attached.
#[derive(Debug, Clone, Default)]
pub struct Outcome {
    pub actual: serde_json::Value,
    pub counterexample: Option<serde_json::Value>,
    pub notes: String,
}

impl Outcome {
    pub fn value(actual: serde_json::Value) -> Self {
        Outcome { actual, ..Default::default() }
    }
}

/// Run a suite, optionally restricted to checks whose id contains one of `filter`.
pub fn run_suite(suite: Suite, filter: &[String], ctx: &Context) -> Vec<CheckResult> {
    let specs: Vec<_> = catalogue(suite)
        .into_iter()
        .filter(|(s, _)| filter.is_empty() || filter.iter().any(|f| s.id.contains(f.as_str())))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(ctx.config.jobs.max(1)).build();
    let run = || specs.par_iter().map(|(spec, task)| run_check(spec, task, ctx)).collect::<Vec<_>>();
    let mut results = match pool {
        Ok(p) => p.install(run),
        Err(_) => run(),
    };
    results.sort_by(|a, b| a.id.cmp(&b.id));
    results
}

fn run_check(spec: &CheckSpec, task: &checks::Task, ctx: &Context) -> CheckResult {
    let t = Instant::now();
    let evaluated = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| checks::evaluate(task, ctx)))
        .unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
    let millis = t.elapsed().as_millis() as u64;
    let (status, outcome) = match evaluated {
        Ok(o) => {
            let status = if o.actual == spec.expected.value { Status::Pass } else { Status::Fail };
            (status, o)
        }
        Err(e) => (Status::Error, Outcome { actual: serde_json::Value::Null, counterexample: None, notes: e }),
    };
    CheckResult {
        id: spec.id.clone(),
        kind: spec.kind,
        inputs: spec.inputs.clone(),
        expected: spec.expected.clone(),
        status,
        actual: outcome.actual,
        millis,
        notes: outcome.notes,
        counterexample: outcome.counterexample,
    }
}

/// 0 when every check passed or was skipped, 1 otherwise.
pub fn exit_code(results: &[CheckResult]) -> i32 {
    if results.iter().all(|r| matches!(r.status, Status::Pass | Status::Skipped)) {
        0
    } else {
        1
    }
}
