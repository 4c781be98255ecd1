use std::path::PathBuf;
use std::process::{Command, Output};

use bornlab::{FiniteSpace, InstanceDoc};
use bornlab_verify::table_topologies;
use serde_json::Value;

fn instance(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../instances").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bornlab")).args(args).output().expect("the binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn path(name: &str) -> String {
    instance(name).to_string_lossy().into_owned()
}

#[test]
fn star_of_the_zero_pair_takes_two_iterations() {
    let out = run(&["ideal", "--derive", "star", "--space", &path("pair-zero.json")]);
    assert_eq!(json(&out), serde_json::json!({"ideal": [[]], "iterations": 2}));
}

#[test]
fn tau_of_the_power_set_fixes_a_singleton_family() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("full.json");
    std::fs::write(
        &file,
        r#"{"points": ["a", "b"], "dist": [[0, 1], [1, 0]], "generators": [["a", "b"]], "family": [["a"]]}"#,
    )
    .unwrap();
    let out = run(&["closure", "--op", "tau", "--space", file.to_str().unwrap()]);
    assert_eq!(json(&out), serde_json::json!([["a"]]));
}

#[test]
fn selectors_can_come_from_separate_files() {
    let dir = tempfile::tempdir().unwrap();
    let family = dir.path().join("family.json");
    std::fs::write(&family, r#"{"family": [["b", "d"]]}"#).unwrap();
    let w = path("w.json");
    let out =
        run(&["closure", "--op", "born-upper", "--space", &w, "--ideal", &w, "--family", family.to_str().unwrap()]);
    let closed = json(&out);
    assert!(closed.as_array().unwrap().contains(&serde_json::json!(["b", "d"])));
}

#[test]
fn the_bundled_upper_modification_is_not_topological() {
    let file = path("pair-upper-mod.json");
    let out = run(&["check", "--predicate", "topological", "--op", "upper-mod", "--space", &file]);
    assert_eq!(json(&out), serde_json::json!({"holds": false, "witness": [["b"]]}));
    let once = json(&run(&["closure", "--op", "upper-mod", "--space", &file]));
    assert_eq!(once, serde_json::json!([["a"], ["b"], ["a", "b"]]));
}

#[test]
fn reflection_of_the_zero_pair_is_indiscrete() {
    let out = json(&run(&["reflect", "--op", "born-both", "--space", &path("pair-zero.json")]));
    assert_eq!(out["opens"], serde_json::json!([[], [[], ["a"], ["b"], ["a", "b"]]]));
}

#[test]
fn predicates_report_witnesses() {
    let w = path("w.json");
    let open = json(&run(&["check", "--predicate", "open", "--op", "metric-lower", "--space", &w]));
    assert_eq!(open, serde_json::json!({"holds": false, "witness": ["a", "c"]}));
    let stable = json(&run(&["check", "--predicate", "stable", "--space", &w]));
    assert_eq!(stable["witness"], Value::Null);
}

#[test]
fn usage_errors_exit_with_two() {
    let w = path("w.json");
    for args in [
        vec!["verify", "--max-points", "6"],
        vec!["verify", "--trials", "0"],
        vec!["verify", "--max-points", "2", "--check", "zz"],
        vec!["closure", "--op", "lower-mod", "--space", &w],
        vec!["closure", "--op", "tau", "--space", "/nonexistent.json"],
        vec!["check", "--predicate", "open", "--space", &w],
        vec!["ideal", "--derive", "cube", "--space", &w],
    ] {
        assert_eq!(run(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn verify_writes_a_report_and_signals_failures() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let out = run(&["verify", "--seed", "7", "--max-points", "3", "--report", report.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let parsed: Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let failed: Vec<&str> = parsed["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["id"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["u"]);
    assert!(stdout(&out).contains("1 failed"));
    let passing = run(&["verify", "--max-points", "3", "--check", "a", "l", "v"]);
    assert_eq!(passing.status.code(), Some(0));
}

#[test]
fn outputs_are_byte_identical() {
    let args = ["verify", "--seed", "3", "--max-points", "3", "--format", "full"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn searches_run_from_the_command_line() {
    let out = run(&["verify", "--max-points", "2", "--search", "upper-mod-nontopological"]);
    assert!(stdout(&out).starts_with("upper-mod-nontopological: found on pair"));
    let none = run(&["verify", "--max-points", "1", "--search", "h-vs-meet"]);
    assert_eq!(stdout(&none), "h-vs-meet: none\n");
}

#[test]
fn bundled_table_pool_matches_the_enumeration() {
    let docs: Vec<InstanceDoc> =
        serde_json::from_str(&std::fs::read_to_string(instance("pair-table.json")).unwrap()).unwrap();
    let pair = FiniteSpace::on_line(&[0, 1]).unwrap();
    let table = table_topologies(&pair);
    assert_eq!(docs.len(), table.len());
    for (doc, t) in docs.iter().zip(&table) {
        assert_eq!(doc.name.as_deref(), Some(t.name()));
        assert_eq!(doc.space().unwrap(), pair);
        assert_eq!(&doc.topology(&pair).unwrap().unwrap(), t);
    }
}
