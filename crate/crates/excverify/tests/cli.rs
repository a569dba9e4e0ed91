use std::process::Command;

fn excverify(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_excverify")).args(args).env_remove("EXCVERIFY_CACHE").output().unwrap()
}

#[test]
fn bases_for_one_algebra() {
    let out = excverify(&["bases", "--algebra", "g2", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let r: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r["run_meta"]["suite"], "bases");
    assert_eq!(r["summary"]["pass"], 4);
    assert_eq!(r["run_meta"]["timing"]["g2"]["source"], "computed");
}

#[test]
fn table1_rows_in_markdown() {
    let out = excverify(&["table1", "--rows", "G-G-G", "FII-II-II", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0));
    let md = String::from_utf8(out.stdout).unwrap();
    assert!(md.contains("| G-G-G | g2 | `gamma` | `gamma_H` | iR + iR | 2 | 2 | 2 | 0 | pass |"), "{md}");
    assert!(md.contains("| FII-II-II |"));
    assert!(!md.contains("| FI-I-I |"));
}

#[test]
fn cache_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_excverify"))
            .args(["bases", "--algebra", "f4"])
            .env("EXCVERIFY_CACHE", dir.path())
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0));
        serde_json::from_slice::<serde_json::Value>(&out.stdout).unwrap()
    };
    assert_eq!(run()["run_meta"]["timing"]["f4"]["source"], "computed");
    assert_eq!(run()["run_meta"]["timing"]["f4"]["source"], "cache");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(excverify(&["bases", "--algebra", "e9"]).status.code(), Some(2));
    assert_eq!(excverify(&["table1", "--rows", "no-such-row"]).status.code(), Some(2));
    assert_eq!(excverify(&["frobnicate"]).status.code(), Some(2));
}
