use std::path::Path;
use std::process::{Command, Stdio};

use abfactor::cli::run;
use serde_json::Value;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("abfactor").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_then_find_factor() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("h.edges");
    let (code, out, _) = invoke(&["construct", "example1", "--a", "4", "--b", "12", "--t", "9", "--out", path(&file)]);
    assert_eq!(code, 0);
    let header = json(&out);
    assert_eq!(header["result"]["vertices"], 20);
    assert_eq!(header["result"]["edges"], 79);
    assert_eq!(header["params"]["family"]["t"], 9);
    assert_eq!(header["tool"]["name"], "abfactor");

    let (code, out, _) = invoke(&["find-factor", "--graph", path(&file), "--a", "4", "--b", "12", "--even"]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["result"]["status"], "absent");
}

#[test]
fn invalid_construction_is_a_usage_error() {
    let (code, _, err) = invoke(&["construct", "example1", "--a", "4", "--b", "12", "--t", "8"]);
    assert_eq!(code, 2);
    assert!(err.contains("49/6"), "{err}");
}

#[test]
fn found_factor_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("k.edges");
    let factor = dir.path().join("f.json");
    assert_eq!(invoke(&["construct", "kxy", "--x", "3", "--y", "3", "--out", path(&graph)]).0, 0);
    let (code, out, _) = invoke(&["find-factor", "--graph", path(&graph), "--a", "2", "--b", "2"]);
    assert_eq!(code, 0);
    std::fs::write(&factor, &out).unwrap();
    let (code, out, _) = invoke(&["verify", "--graph", path(&graph), "--factor", path(&factor), "--a", "2", "--b", "2"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(json(&out)["result"]["valid"], true);

    std::fs::write(&factor, r#"{"edges": [[0, 3]]}"#).unwrap();
    let (code, out, _) = invoke(&["verify", "--graph", path(&graph), "--factor", path(&factor), "--a", "2", "--b", "2"]);
    assert_eq!(code, 1);
    assert_eq!(json(&out)["result"]["valid"], false);
}

#[test]
fn conditions_and_criterion() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("l.edges");
    invoke(&["construct", "example2", "--a", "4", "--b", "24", "--t", "6", "--out", path(&graph)]);
    let (code, out, _) = invoke(&["check-conditions", "--graph", path(&graph), "--a", "4", "--b", "24", "--conjecture"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"]["holds"], true);
    let (code, _, _) = invoke(&["check-conditions", "--graph", path(&graph), "--a", "4", "--b", "24", "--theorem"]);
    assert_eq!(code, 1);
    // 33 vertices exceed the exhaustive criterion limit
    let (code, _, err) = invoke(&["criterion", "--graph", path(&graph), "--a", "4", "--b", "24"]);
    assert_eq!(code, 3, "{err}");

    let star = dir.path().join("star.edges");
    std::fs::write(&star, "4 3\n0 1\n0 2\n0 3\n").unwrap();
    let (code, out, _) = invoke(&["criterion", "--graph", path(&star), "--a", "2", "--b", "2"]);
    assert_eq!(code, 1);
    assert!(json(&out)["result"]["witness"]["T"].is_array());
}

#[test]
fn spectral_and_dot_output() {
    let (code, dot, _) = invoke(&["construct", "kxy", "--x", "2", "--y", "6", "--dot"]);
    assert_eq!(code, 0);
    assert!(dot.starts_with("graph G {"));
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k.dot");
    std::fs::write(&file, dot).unwrap();
    let (code, out, _) = invoke(&["spectral", "--graph", path(&file)]);
    assert_eq!(code, 0);
    let l = json(&out)["result"]["lambda1"].as_f64().unwrap();
    assert!((l - 12f64.sqrt()).abs() < 1e-9);
}

#[test]
fn sweep_streams_records_then_summary() {
    let (code, out, _) = invoke(&["sweep", "--n", "5", "--a", "2", "--b", "2", "--exhaustive", "--jobs", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<Value> = out.lines().map(json).collect();
    let summary = lines.last().unwrap();
    assert_eq!(summary["result"]["summary"]["absent"], 0);
    assert_eq!(lines.len() - 1, summary["result"]["summary"]["candidates"].as_u64().unwrap() as usize + 1);

    let (code, _, err) = invoke(&["sweep", "--n", "5", "--a", "2", "--b", "2", "--random", "--count", "5"]);
    assert_eq!(code, 2, "{err}");
    let args = ["sweep", "--n", "6", "--a", "2", "--b", "4", "--random", "--count", "30", "--seed", "9"];
    assert_eq!(invoke(&args).1, invoke(&args).1);
}

#[test]
fn usage_errors() {
    assert_eq!(invoke(&[]).0, 2);
    assert_eq!(invoke(&["spectral"]).0, 2);
    assert_eq!(invoke(&["spectral", "--graph", "/nonexistent/g.edges"]).0, 2);
    let (code, _, _) = invoke(&["check-conditions", "--graph", "x", "--a", "4", "--b", "4", "--theorem", "--conjecture"]);
    assert_eq!(code, 2);
    assert_eq!(invoke(&["repro", "--claim", "no-such-claim"]).0, 2);
}

#[test]
fn repro_single_claim() {
    let (code, out, _) = invoke(&["repro", "--claim", "cubic", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["result"][0]["pass"], true);
}

#[test]
fn output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("p.edges");
    std::fs::write(&graph, "5 7\n0 1\n1 2\n2 0\n2 3\n3 4\n4 2\n0 3\n").unwrap();
    let args = ["find-factor", "--graph", path(&graph), "--a", "2", "--b", "4", "--even"];
    let (first, second) = (invoke(&args), invoke(&args));
    assert_eq!(first, second);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_abfactor");
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("h.edges");
    let status = Command::new(bin)
        .args(["construct", "hna", "--n", "6", "--a", "3", "--out", path(&graph)])
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let output = Command::new(bin)
        .args(["find-factor", "--graph", path(&graph), "--a", "3", "--b", "4"])
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    let status = Command::new(bin).arg("bogus").stderr(Stdio::null()).status().unwrap();
    assert_eq!(status.code(), Some(2));
}
