use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use schur_weyl::graph::GraphJson;
use schur_weyl::{encode, AmplitudeEngine, SwyGraph};

fn schur(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schur")).args(args).env_remove("SCHUR_SIZE_BOUND").output().unwrap()
}

fn schur_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_schur"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("schur-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

const RECTANGLE: &str = r#"{"d":2,"n":4,"terms":[{"shape":[2,2],"weyl_rows":[[0,0],[1,1]],
  "young_path":[[],[1],[1,1],[2,1],[2,2]],"amplitude":{"terms":[{"radicand":1,"num":1,"den":1}]}}]}"#;

#[test]
fn encode_worked_example() {
    let out = schur(&["encode", "--d", "2", "0101"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    let amps: Vec<&str> = lines.iter().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(amps, ["1/6*sqrt(6)", "1/6*sqrt(6)", "-1/6*sqrt(3)", "1/2", "-1/6*sqrt(3)", "1/2"]);
    assert!(lines[5].ends_with("(2,2)\t[[0,0],[1,1]]\t[[1,3],[2,4]]"), "{}", lines[5]);
    assert!(lines[2].contains("-0.288675"));
}

#[test]
fn encode_single_letter_and_patterns() {
    let text = stdout(&schur(&["encode", "--d", "2", "0"]));
    assert_eq!(text, "1\t1.000000\t(1)\t[[0]]\t[[1]]\n");
    let text = stdout(&schur(&["encode", "--show-patterns", "01"]));
    assert!(text.lines().all(|l| l.split('\t').count() == 6));
}

#[test]
fn encode_qutrits_matches_library() {
    let out = schur(&["encode", "--d", "3", "1,2,3"]);
    assert_eq!(out.status.code(), Some(0));
    let expected = encode(&[1, 2, 3], 3, &AmplitudeEngine::Louck).unwrap().len();
    assert_eq!(stdout(&out).lines().count(), expected);
}

#[test]
fn bad_alphabet_is_a_validation_error() {
    let out = schur(&["encode", "012"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("invariant: letters from the alphabet"));
    assert_eq!(schur(&["encode", "--d", "3", "0,1"]).status.code(), Some(2));
}

#[test]
fn decode_rectangle() {
    let out = schur(&["decode", RECTANGLE]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        stdout(&out),
        "0101\t1/2\t0.500000\n0110\t-1/2\t-0.500000\n1001\t-1/2\t-0.500000\n1010\t1/2\t0.500000\n"
    );
    let path = scratch("rect.json");
    std::fs::write(&path, RECTANGLE).unwrap();
    assert_eq!(stdout(&schur(&["decode", path.to_str().unwrap()])), stdout(&out));
}

#[test]
fn encode_json_pipes_into_decode() {
    for (d, word) in [("2", "0110"), ("3", "3,1,2"), ("2", "")] {
        let encoded = stdout(&schur(&["--format", "json", "encode", "--d", d, word]));
        let out = schur_stdin(&["decode", "-", "--format", "json"], &encoded);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
        let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
        let terms = json["terms"].as_array().unwrap();
        assert_eq!(terms.len(), 1);
        assert_eq!(terms[0]["word"], word);
        assert_eq!(terms[0]["amplitude"]["approx"], 1.0);
    }
}

#[test]
fn decode_rejects_invalid_states() {
    let bad = RECTANGLE.replace("[[0,0],[1,1]]", "[[1,0],[1,1]]");
    let out = schur(&["decode", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("invariant: weakly increasing rows"), "{}", stderr(&out));

    let out = schur(&["decode", "{not json"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("malformed state JSON"));

    let out = schur(&["decode", "/nonexistent/state.json"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn graph_outputs() {
    let dot = scratch("g.dot");
    let json = scratch("g.json");
    let out =
        schur(&["graph", "--d", "2", "--n", "3", "--dot", dot.to_str().unwrap(), "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(
        text.lines().filter(|l| l.trim_start().starts_with('v') && l.contains("[label=") && !l.contains("->")).count(),
        13
    );

    let dumped: GraphJson = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(SwyGraph::from_json(&dumped).unwrap(), SwyGraph::build(2, 3));

    let text = stdout(&schur(&["graph", "--n", "0"]));
    assert_eq!(text, "level 0: ():1\n1 nodes, 0 edges\n");

    let out = schur(&["graph", "--n", "2", "--dot", "/nonexistent/dir/g.dot"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn check_suites() {
    let out = schur(&["check", "--d", "2", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().all(|l| l.contains(" PASS ")), "{text}");

    let text = stdout(&schur(&["check", "--d", "3", "--n", "3"]));
    assert!(text.lines().next().unwrap().contains(" SKIP "));
    assert_eq!(text.lines().filter(|l| l.contains(" PASS ")).count(), 3);

    assert_eq!(schur(&["check", "--d", "2", "--n", "0"]).status.code(), Some(0));
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&schur(&["check", "--n", "2", "--format", "json"]))).unwrap();
    assert_eq!(json[0]["suite"], "pattern-equivalence");
    assert_eq!(json[0]["status"], "pass");
}

#[test]
fn size_bound_from_env_and_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_schur"))
        .args(["matrix", "--n", "4"])
        .env("SCHUR_SIZE_BOUND", "8")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exceeds the size bound 8"));
    let text = stdout(&schur(&["check", "--n", "4", "--size-bound", "8"]));
    assert!(text.lines().last().unwrap().contains(" SKIP "));
}

#[test]
fn matrix_json() {
    let out = schur(&["matrix", "--n", "2", "--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["order"], "triplet-major");
    assert_eq!(json["basis"].as_array().unwrap().len(), 4);
    assert_eq!(json["entries"].as_array().unwrap().len(), 6);
    assert_eq!(stdout(&schur(&["matrix", "--n", "2", "--format", "json"])), stdout(&out));
    let text = stdout(&schur(&["matrix", "--n", "1"]));
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn engines_and_usage() {
    let louck = stdout(&schur(&["encode", "011010"]));
    assert_eq!(stdout(&schur(&["encode", "--engine", "pattern", "011010"])), louck);
    assert_eq!(stdout(&schur(&["encode", "--engine", "both", "011010"])), louck);
    assert_eq!(schur(&["encode", "--engine", "pattern", "--d", "3", "1"]).status.code(), Some(2));
    assert_eq!(schur(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(schur(&["encode", "--d", "0", "1"]).status.code(), Some(1));
    assert_eq!(schur(&["--help"]).status.code(), Some(0));
}
