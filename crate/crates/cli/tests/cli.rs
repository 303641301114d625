//! Black-box tests of the binary: exit codes, JSON shape, determinism.

use std::process::{Command, Output};

fn dissoc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dissoc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    let text = String::from_utf8_lossy(&out.stdout);
    serde_json::from_str(text.lines().next().expect("one report line")).expect("valid JSON")
}

#[test]
fn tau_of_p5_is_four() {
    // P5 in its path labeling
    let out = dissoc(&["tau", "--graph6", "DhC", "--stable-output"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["results"]["value"], 4);
    assert_eq!(v["command"], "tau");
    assert_eq!(v["elapsed_ms"], 0);
}

#[test]
fn rho_of_k4_is_three() {
    let out = dissoc(&["rho", "--graph6", "C~", "--stable-output"]);
    let v = stdout_json(&out);
    let rho = v["results"]["rho"].as_f64().unwrap();
    assert!((rho - 3.0).abs() < 1e-9);
    assert!(v["results"]["residual"].as_f64().unwrap() <= 1e-10);
}

#[test]
fn verify_single_theorem_exits_zero() {
    let out = dissoc(&["verify", "T7.1", "--stable-output"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["results"]["verdict"], "PASS");
    assert_eq!(v["manifest_version"], "1");
}

#[test]
fn malformed_graph6_is_usage_error() {
    let out = dissoc(&["tau", "--graph6", "@@##"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph6"));
}

#[test]
fn cap_exceeded_is_usage_error() {
    let out = dissoc(&["enumerate", "--n", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cap"));
}

#[test]
fn unknown_family_is_usage_error() {
    let out = dissoc(&["free", "--family", "X9", "--graph6", "C~"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn enumerate_streams_graph6_lines() {
    let out = dissoc(&["enumerate", "--n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 11);
    let connected = dissoc(&["enumerate", "--n", "4", "--connected"]);
    assert_eq!(
        String::from_utf8_lossy(&connected.stdout).lines().count(),
        6
    );
}

#[test]
fn stable_output_is_byte_deterministic() {
    let args = [
        "search",
        "ex",
        "--n",
        "6",
        "--family",
        "L5",
        "--jobs",
        "1",
        "--stable-output",
    ];
    let a = dissoc(&args);
    let b = dissoc(&args);
    assert_eq!(a.stdout, b.stdout);
    let v = stdout_json(&a);
    assert_eq!(v["results"]["value"], 11.0);
    assert_eq!(v["results"]["witness_classes"], 2);
}

#[test]
fn search_writes_witness_file() {
    let dir = std::env::temp_dir().join("dissoc-test-witnesses");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ex6.g6");
    let out = dissoc(&[
        "search",
        "ex",
        "--n",
        "5",
        "--family",
        "L5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    // the witness decodes to an 8-edge graph on 5 vertices
    let check = dissoc(&["tau", "--graph6", text.trim(), "--stable-output"]);
    assert_eq!(check.status.code(), Some(0));
}

#[test]
fn construct_reports_landmarks() {
    let out = dissoc(&[
        "construct",
        "cp-cycle",
        "--blocks",
        "3",
        "--m",
        "4",
        "--stable-output",
    ]);
    let v = stdout_json(&out);
    let connectors = v["results"]["landmarks"]["connectors"].as_array().unwrap();
    assert_eq!(connectors.len(), 3);
    let out2 = dissoc(&[
        "construct",
        "turan",
        "--n",
        "6",
        "--k",
        "2",
        "--stable-output",
    ]);
    let v2 = stdout_json(&out2);
    assert_eq!(v2["results"]["graph6"].as_array().unwrap().len(), 2);
}

#[test]
fn quotient_rejects_non_equitable() {
    // P4 split into ends/middles is not equitable
    let out = dissoc(&["quotient", "--graph6", "Ch", "--partition", "0,1:2,3"]);
    assert_eq!(out.status.code(), Some(2));
    let lenient = dissoc(&[
        "quotient",
        "--graph6",
        "Ch",
        "--partition",
        "0,1:2,3",
        "--lenient",
        "--stable-output",
    ]);
    assert_eq!(lenient.status.code(), Some(0));
}

#[test]
fn verify_rejects_unknown_id() {
    let out = dissoc(&["verify", "T0.0"]);
    assert_eq!(out.status.code(), Some(2));
}
