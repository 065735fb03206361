use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn jordan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_jordan")).args(args).output().expect("binary runs")
}

fn construct(dir: &Path, name: &str, args: &[&str]) -> String {
    let path = dir.join(name).to_string_lossy().into_owned();
    let mut full = vec!["construct"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &path]);
    let out = jordan(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

fn json_file(path: &str) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn analyze(path: &str, what: &str) -> Value {
    let out = jordan(&["analyze", path, "--what", what]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn constructs_files_of_the_right_dimension() {
    let dir = tempfile::tempdir().unwrap();
    for (name, args, dim) in [
        ("spin.json", &["--type", "spin", "--alpha", "1,1,1"][..], 4),
        ("albert.json", &["--type", "albert"][..], 27),
        ("nil.json", &["--type", "example-3.2"][..], 2),
        ("herm.json", &["--type", "hermitian", "-k", "3"][..], 6),
        ("so.json", &["--type", "so-alpha", "--alpha", "1,2,-1/3"][..], 3),
    ] {
        let path = construct(dir.path(), name, args);
        assert_eq!(json_file(&path)["dim"], dim, "{name}");
    }
}

#[test]
fn analyzes_the_nilpotent_example() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "nil.json", &["--type", "example-3.2"]);
    let report = analyze(&path, "der,tder,inn,unit");
    assert_eq!(report["der"]["dim"], 2);
    assert_eq!(report["tder"]["dim"], 4);
    assert_eq!(report["inn"]["dim"], 0);
    assert!(report["unit"].is_null());
}

#[test]
fn split_spin_factor_has_nonsimple_derivations() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "spin4.json", &["--type", "spin", "--alpha", "1,1,1,1"]);
    let lie = &analyze(&path, "lie")["lie"];
    assert_eq!(lie["dim"], 6);
    assert_eq!(lie["status"], "NotSimple");
    assert_eq!(lie["witness"]["dim"], 3);

    let path = construct(dir.path(), "spin3.json", &["--type", "spin", "--alpha", "1,1,1"]);
    assert_eq!(analyze(&path, "lie")["lie"]["status"], "Simple");
}

#[test]
fn strategies_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = construct(dir.path(), "herm.json", &["--type", "hermitian", "-k", "3"]);
    let dense = jordan(&["--strategy", "dense", "analyze", &path, "--what", "der,tder"]);
    let modular = jordan(&["--strategy", "modular", "analyze", &path, "--what", "der,tder"]);
    assert!(dense.status.success() && modular.status.success());
    assert_eq!(dense.stdout, modular.stdout);
}

#[test]
fn verify_passes_and_reports_are_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json").to_string_lossy().into_owned();
    let b = dir.path().join("b.json").to_string_lossy().into_owned();
    for out in [&a, &b] {
        let run = jordan(&["verify", "2.8", "--out", out]);
        assert_eq!(run.status.code(), Some(0), "{}", String::from_utf8_lossy(&run.stderr));
        assert!(String::from_utf8_lossy(&run.stderr).contains("2.8 pass"));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let reports = json_file(&a);
    assert_eq!(reports[0]["theorem_id"], "2.8");
    assert!(reports[0].get("wall_time_ms").is_none());
}

#[test]
fn timing_is_opt_in() {
    let out = jordan(&["verify", "4.7", "--timing"]);
    assert_eq!(out.status.code(), Some(0));
    let reports: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(reports[0]["wall_time_ms"].is_u64());
}

#[test]
fn input_errors_exit_with_two() {
    assert_eq!(jordan(&["verify", "9.9"]).status.code(), Some(2));
    assert_eq!(jordan(&["construct", "--type", "spin", "--alpha", "1,0.5"]).status.code(), Some(2));
    assert_eq!(jordan(&["construct", "--type", "spin", "--alpha", "1,0"]).status.code(), Some(2));
    assert_eq!(jordan(&["construct", "--type", "full"]).status.code(), Some(2));
    assert_eq!(jordan(&["analyze", "/nonexistent/file.json"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"kind":"jordan","dim":2,"table":[[[],[[0,"1"]]],[[],[]]]}"#).unwrap();
    let out = jordan(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("ommut"));
}
