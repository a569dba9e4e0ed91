use std::fs;

use excverify::harness::{
    cache_path, catalogue, convention_fingerprint, emit_report, exit_code, run_suite, strip_timing, BasisCache, Context, Format, Report,
    RunConfig, RunMeta, Status, Suite,
};
use excverify::liealg::AlgebraId;

fn meta(suite: Suite) -> RunMeta {
    RunMeta {
        convention_fingerprint: convention_fingerprint(),
        seed: 1,
        sample: 50,
        version: "test".into(),
        suite: suite.name().into(),
        bracket_rows: "standard".into(),
        timing: None,
    }
}

fn config(dir: Option<&std::path::Path>) -> RunConfig {
    RunConfig { seed: 1, sample: 50, jobs: 2, cache_dir: dir.map(|d| d.to_path_buf()) }
}

#[test]
fn catalogue_ids_are_unique_and_sorted_after_run() {
    let mut ids: Vec<_> = catalogue(Suite::All).into_iter().map(|(s, _)| s.id).collect();
    let n = ids.len();
    ids.sort();
    ids.dedup();
    assert_eq!(ids.len(), n);
    let ctx = Context::new(config(None));
    let r = run_suite(Suite::Bases, &["bases/g2/".into()], &ctx);
    assert_eq!(r.len(), 4);
    assert!(r.windows(2).all(|w| w[0].id < w[1].id));
    assert!(r.iter().all(|c| c.status == Status::Pass), "{r:?}");
}

#[test]
fn cache_round_trip_and_stale_fingerprint() {
    let dir = tempfile::tempdir().unwrap();
    let filter = ["bases/f4/".to_string()];
    let first = Context::new(config(Some(dir.path())));
    let a = run_suite(Suite::Bases, &filter, &first);
    assert_eq!(first.sources()[&AlgebraId::F4].source, "computed");
    let path = cache_path(dir.path(), AlgebraId::F4);
    assert!(path.exists());

    let second = Context::new(config(Some(dir.path())));
    let b = run_suite(Suite::Bases, &filter, &second);
    assert_eq!(second.sources()[&AlgebraId::F4].source, "cache");
    let strip = |v: Vec<excverify::harness::CheckResult>| strip_timing(Report::new(v, meta(Suite::Bases)));
    assert_eq!(strip(a), strip(b));
    assert_eq!(first.basis(AlgebraId::F4).unwrap().table, second.basis(AlgebraId::F4).unwrap().table);

    let mut cache: BasisCache = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    cache.convention_fingerprint = "0".repeat(64);
    fs::write(&path, serde_json::to_string(&cache).unwrap()).unwrap();
    let third = Context::new(config(Some(dir.path())));
    assert_eq!(third.basis(AlgebraId::F4).unwrap().dim(), 52);
    assert_eq!(third.sources()[&AlgebraId::F4].source, "computed");

    fs::write(&path, "{ not json").unwrap();
    let fourth = Context::new(config(Some(dir.path())));
    assert_eq!(fourth.basis(AlgebraId::F4).unwrap().dim(), 52);
    assert_eq!(fourth.sources()[&AlgebraId::F4].source, "computed");
}

#[test]
fn reports_are_deterministic() {
    let run = || {
        let ctx = Context::new(config(None));
        let r = run_suite(Suite::Identities, &["identities/g2/".into(), "membership/f4/".into()], &ctx);
        emit_report(&strip_timing(Report::new(r, meta(Suite::Identities))), Format::Json)
    };
    let (a, b) = (run(), run());
    assert!(a.contains("identities/g2/w-cube"));
    assert_eq!(a, b);
}

#[test]
fn empty_selection_gives_empty_report() {
    let ctx = Context::new(config(None));
    let r = run_suite(Suite::All, &["no-such-check".into()], &ctx);
    assert!(r.is_empty());
    assert_eq!(exit_code(&r), 0);
    let report = Report::new(r, meta(Suite::All));
    let json: serde_json::Value = serde_json::from_str(&emit_report(&report, Format::Json)).unwrap();
    assert_eq!(json["schema_version"], 1);
    assert_eq!(json["checks"].as_array().unwrap().len(), 0);
    let md = emit_report(&report, Format::Markdown);
    assert!(md.contains("## All checks"));
    assert!(!md.contains("## Commuting pairs"));
}

#[test]
fn markdown_lays_out_tables() {
    let ctx = Context::new(config(None));
    let r = run_suite(Suite::Table2, &["table2/G/".into(), "table2/FII/".into()], &ctx);
    assert_eq!(exit_code(&r), 0);
    let md = emit_report(&Report::new(r, meta(Suite::Table2)), Format::Markdown);
    assert!(md.contains("| G | g2 | `gamma` | sp(1) + sp(1) | 6 | 6 | pass |"), "{md}");
    assert!(md.contains("| FII | f4 | `sigma` | so(9) | 36 | 36 | pass |"), "{md}");
}

#[test]
fn failing_check_sets_exit_code() {
    let ctx = Context::new(config(None));
    let mut r = run_suite(Suite::Table2, &["table2/G/dim".into()], &ctx);
    assert_eq!(exit_code(&r), 0);
    r[0].status = Status::Fail;
    assert_eq!(exit_code(&r), 1);
}
