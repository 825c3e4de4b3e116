use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn brauer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_brauer")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_all_on_l5() {
    let l5 = fixture("l5.json");
    let out = brauer(&["verify", l5.to_str().unwrap(), "--mode", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["pass"], true);
    assert_eq!(report["sigma"], "(1 4)(2 3)");
    assert_eq!(report["mode"], "all");
    assert_eq!(report["tree"].as_str().unwrap().len(), 64);
}

#[test]
fn single_mode_report() {
    let l5 = fixture("l5.json");
    let out = brauer(&["verify", l5.to_str().unwrap(), "--mode", "theorem-z"]);
    assert_eq!(out.status.code(), Some(0));
    let report = stdout_json(&out);
    assert_eq!(report["mode"], "theorem-z");
    assert!(report["failures"].as_array().unwrap().is_empty());
}

#[test]
fn reduce_logs_four_aihara_steps() {
    let l5 = fixture("l5.json");
    let out = brauer(&["reduce", l5.to_str().unwrap(), "--algo", "aihara"]);
    assert_eq!(out.status.code(), Some(0));
    let log = stdout_json(&out);
    assert_eq!(log["steps"].as_array().unwrap().len(), 4);
    assert_eq!(log["naturalNumbering"]["1"], 5);
    assert_eq!(log["steps"][0]["direction"], "+");
    let z = stdout_json(&brauer(&["reduce", l5.to_str().unwrap(), "--algo", "z"]));
    assert_eq!(z["steps"].as_array().unwrap().len(), 10);
}

#[test]
fn corrupted_tree_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"multiplicity": 1, "exceptional": "v0", "rotations": {"v0": ["a"], "v1": ["a", "b"]}}"#)
        .unwrap();
    let out = brauer(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("/rotations/v1/1"), "{err}");
    assert!(err.contains("\"b\""), "{err}");
    std::fs::write(&path, "{not json").unwrap();
    assert_eq!(brauer(&["verify", path.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(brauer(&["verify", "/nonexistent/tree.json"]).status.code(), Some(2));
}

#[test]
fn bad_flags_exit_two() {
    let l5 = fixture("l5.json");
    assert_eq!(brauer(&["reduce", l5.to_str().unwrap(), "--algo", "q"]).status.code(), Some(2));
    assert_eq!(brauer(&["reduce", l5.to_str().unwrap(), "--branch", "3"]).status.code(), Some(2));
    assert_eq!(brauer(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(brauer(&["verify"]).status.code(), Some(2));
}

#[test]
fn reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_brauer"))
        .args(["sigma", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(brauer::fixtures::L5_JSON.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "(1 4)(2 3)\n");
}

#[test]
fn tables_match_printed_rows() {
    let l5 = fixture("l5.json");
    let out = brauer(&["compose", l5.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("F_1: 0 → P_1 → P_4 → 0"));
    assert!(text.contains("F_5: 0 → P_5 → 0"));
    let out = brauer(&["tilting", l5.to_str().unwrap(), "--pointing", "left-alt"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.lines().next().unwrap().starts_with("H_1: 0 → P_1 → P_5 → 0"));
    let out = brauer(&["tilting", l5.to_str().unwrap(), "--json"]);
    let fam = stdout_json(&out);
    assert_eq!(fam["rows"].as_array().unwrap().len(), 5);
    assert_eq!(fam["e"], 5);
}

#[test]
fn dot_is_deterministic() {
    let p2 = fixture("p2.json");
    let args = ["render", p2.to_str().unwrap(), "--dot", "--pointing", "reversed"];
    let a = brauer(&args);
    let b = brauer(&args);
    assert_eq!(a.stdout, b.stdout);
    let dot = String::from_utf8(a.stdout).unwrap();
    assert!(dot.contains("[label=\"2\", id=\"a\"]"));
    assert!(dot.contains("[label=\"1\", id=\"b\"]"));
    assert!(dot.contains("style=filled"));
}

#[test]
fn corpus_verify_is_reproducible() {
    let args = ["verify", "--corpus", "15", "--seed", "7", "--max-edges", "6"];
    let a = brauer(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, brauer(&args).stdout);
    let v = stdout_json(&a);
    assert_eq!(v["pass"], true);
    assert!(v["cases"].as_u64().unwrap() >= 15);
}

#[test]
fn in_process_execute_matches_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let l5 = fixture("l5.json");
    let code =
        brauer::cli::execute(["brauer", "sigma", l5.to_str().unwrap()], &mut std::io::empty(), &mut out, &mut err);
    assert_eq!(code, 0);
    assert_eq!(out, b"(1 4)(2 3)\n");
}
