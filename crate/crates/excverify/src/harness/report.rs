use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::{expected_data, CheckResult, Status};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Markdown,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunMeta {
    pub convention_fingerprint: String,
    pub seed: u64,
    pub sample: usize,
    pub version: String,
    pub suite: String,
    pub bracket_rows: String,
    /// basis source ("computed" or "cache") and wall time per algebra
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<BTreeMap<String, serde_json::Value>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub run_meta: RunMeta,
    pub summary: BTreeMap<String, usize>,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn new(checks: Vec<CheckResult>, run_meta: RunMeta) -> Self {
        let mut summary = BTreeMap::new();
        for s in ["pass", "fail", "error", "skipped"] {
            summary.insert(s.to_string(), 0);
        }
        for c in &checks {
            *summary.entry(status_name(c.status).to_string()).or_default() += 1;
        }
        Report { schema_version: REPORT_SCHEMA_VERSION, run_meta, summary, checks }
    }
}

/// Drop wall-clock fields so two runs can be compared byte for byte.
pub fn strip_timing(mut r: Report) -> Report {
    r.run_meta.timing = None;
    for c in &mut r.checks {
        c.millis = 0;
    }
    r
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Error => "error",
        Status::Skipped => "skipped",
    }
}

pub fn emit_report(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes") + "\n",
        Format::Markdown => markdown(report),
    }
}

fn cell(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Null => "-".into(),
        other => other.to_string(),
    }
    .replace('|', "\\|")
}

fn markdown(r: &Report) -> String {
    let by_id: BTreeMap<&str, &CheckResult> = r.checks.iter().map(|c| (c.id.as_str(), c)).collect();
    let get = |id: String| by_id.get(id.as_str()).copied();
    let mut s = String::new();
    let m = &r.run_meta;
    let _ = writeln!(s, "# excverify report\n");
    let _ = writeln!(s, "- suite: `{}`", m.suite);
    let _ = writeln!(s, "- version: `{}`", m.version);
    let _ = writeln!(s, "- seed: `{:#x}`, sample: `{}`", m.seed, m.sample);
    let _ = writeln!(s, "- bracket rows: `{}`", m.bracket_rows);
    let _ = writeln!(s, "- convention fingerprint: `{}`", m.convention_fingerprint);
    let _ = writeln!(
        s,
        "- summary: {}\n",
        r.summary.iter().map(|(k, v)| format!("{v} {k}")).collect::<Vec<_>>().join(", ")
    );

    let data = expected_data();
    let t1: Vec<_> = data.table1.iter().filter_map(|row| get(format!("table1/{}/dim_k", row.row)).map(|c| (row, c))).collect();
    if !t1.is_empty() {
        let _ = writeln!(s, "## Commuting pairs\n");
        let _ = writeln!(s, "| row | algebra | sigma | tau | k | expected dim | computed dim | center | derived | status |");
        let _ = writeln!(s, "|---|---|---|---|---|---|---|---|---|---|");
        for (row, c) in t1 {
            let part = |p: &str| get(format!("table1/{}/{p}", row.row)).map(|c| cell(&c.actual)).unwrap_or_else(|| "-".into());
            let all_pass = by_id.range(format!("table1/{}/", row.row).as_str()..).take_while(|(k, _)| k.starts_with(&format!("table1/{}/", row.row))).all(|(_, c)| c.status == Status::Pass);
            let _ = writeln!(
                s,
                "| {} | {} | `{}` | `{}` | {} | {} | {} | {} | {} | {} |",
                row.row,
                row.algebra,
                row.sigma,
                row.tau,
                row.k,
                row.dim,
                cell(&c.actual),
                part("center"),
                part("derived"),
                if all_pass { "pass" } else { "FAIL" }
            );
        }
        s.push('\n');
    }

    let t2: Vec<_> = data.table2.iter().filter_map(|row| get(format!("table2/{}/dim", row.row)).map(|c| (row, c))).collect();
    if !t2.is_empty() {
        let _ = writeln!(s, "## Involutions\n");
        let _ = writeln!(s, "| type | algebra | map | fixed algebra | expected dim | computed dim | status |");
        let _ = writeln!(s, "|---|---|---|---|---|---|---|");
        for (row, c) in t2 {
            let _ = writeln!(
                s,
                "| {} | {} | `{}` | {} | {} | {} | {} |",
                row.row,
                row.algebra,
                row.map,
                row.k,
                row.dim,
                cell(&c.actual),
                status_name(c.status)
            );
        }
        s.push('\n');
    }

    let _ = writeln!(s, "## All checks\n");
    let _ = writeln!(s, "| id | kind | provenance | expected | actual | status | notes |");
    let _ = writeln!(s, "|---|---|---|---|---|---|---|");
    for c in &r.checks {
        let kind = serde_json::to_value(c.kind).map(|v| cell(&v)).unwrap_or_default();
        let prov = serde_json::to_value(c.expected.provenance).map(|v| cell(&v)).unwrap_or_default();
        let mut notes = c.notes.clone();
        if let Some(ce) = &c.counterexample {
            let _ = write!(notes, "{}counterexample: {ce}", if notes.is_empty() { "" } else { "; " });
        }
        let _ = writeln!(
            s,
            "| `{}` | {} | {} | {} | {} | {} | {} |",
            c.id,
            kind,
            prov,
            cell(&c.expected.value),
            cell(&c.actual),
            status_name(c.status),
            notes.replace('|', "\\|")
        );
    }
    s
}
