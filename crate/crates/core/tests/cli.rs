use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quiverforge"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut input = child.stdin.take().unwrap();
    input.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(input);
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    let text = if out.stdout.is_empty() { &out.stderr } else { &out.stdout };
    serde_json::from_slice(text).unwrap()
}

#[test]
fn cyclic_check_on_g22() {
    let out = run(&["cyclic-check", "--fixture", "G22"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out), json!({"cyclically_oriented": true}));
}

#[test]
fn check_theorem_on_c5() {
    let out = run(&["check-theorem", "--fixture", "C5"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["all_passed"], json!(true));
    let cuts = v["cuts"].as_array().unwrap();
    assert_eq!(cuts.len(), 5);
    assert!(cuts.iter().all(|c| c["passed"] == json!(true)));
}

#[test]
fn mutation_of_double_arrow_creates_four_composites() {
    let out = run(&["mutate", "--fixture", "double-arrow", "--vertex", "2"], None);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let one_to_three = v["arrows"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|a| a["from"] == json!("1") && a["to"] == json!("3"))
        .count();
    assert_eq!(one_to_three, 5);
}

#[test]
fn reads_quiver_from_stdin() {
    let q = r#"{"vertices":["1","2","3"],"arrows":[
        {"id":"a","from":"1","to":"2"},{"id":"b","from":"2","to":"3"},{"id":"c","from":"3","to":"1"}]}"#;
    let out = run(&["cuts", "--enumerate", "--input", "-"], Some(q));
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    for id in ["\"a\"", "\"b\"", "\"c\""] {
        assert!(text.contains(id), "{text}");
    }
}

#[test]
fn malformed_input_and_usage_exit_one() {
    let bad = run(&["validate", "--input", "-"], Some("{"));
    assert_eq!(bad.status.code(), Some(1));
    assert_eq!(json_of(&bad)["error"], json!("malformed"));
    let unknown = run(&["validate", "--fixture", "nope"], None);
    assert_eq!(unknown.status.code(), Some(1));
    assert_eq!(json_of(&unknown)["error"], json!("usage"));
    assert_eq!(run(&["frobnicate"], None).status.code(), Some(1));
}

#[test]
fn precondition_failures_exit_two_with_witness() {
    let out = run(&["relations", "--fixture", "example13-B"], None);
    assert_eq!(out.status.code(), Some(2));
    let v = json_of(&out);
    assert!(v["error"].is_string());
    assert!(v["witness"].is_array());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classify", "--fixture", "commutative-square"][..],
        &["check-theorem", "--fixture", "G32"][..],
        &["extend", "--fixture", "example13-B"][..],
    ] {
        let first = run(args, None);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(first.stdout, run(args, None).stdout, "{args:?}");
    }
}

#[test]
fn dot_format() {
    let out = run(&["dot", "--fixture", "C3"], None);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("digraph"));
    assert!(text.contains("\"3\" -> \"1\" [label=\"a3\"];"));
}
