mod common;

use drg_uniform::families::hamming;
use drg_uniform::graph_core::parse_edge_list;
use drg_uniform::terwilliger::{graph_isomorphic, DEFAULT_ISO_LIMIT};
use serde_json::Value;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_drg-uniform"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas").join(format!("{name}.schema.json"));
    let text = std::fs::read_to_string(path).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(name: &str, doc: &Value) {
    let v = schema(name);
    let errors: Vec<String> = v.iter_errors(doc).map(|e| format!("{} at {}", e, e.instance_path())).collect();
    assert!(errors.is_empty(), "{name}: {errors:?}\n{doc:#}");
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

/// Writes `family <args>` to a temp dir and returns the edge list path.
fn family(dir: &Path, file: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(file);
    let mut full = vec!["family"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["-o", path.to_str().unwrap()]);
    let out = run(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn family_round_trip_and_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let path = family(dir.path(), "h33.txt", &["hamming", "3", "3"]);
    let g = parse_edge_list(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let h = hamming(3, 3, 1000).unwrap();
    assert!(graph_isomorphic(&g, &h, DEFAULT_ISO_LIMIT).unwrap().is_some());
    let side: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("h33.txt.json")).unwrap()).unwrap();
    assert_valid("family", &side);
    assert_eq!(side["vertices"], 27);
}

#[test]
fn certify_output_matches_schema_and_values() {
    let dir = tempfile::tempdir().unwrap();
    let path = family(dir.path(), "h33.txt", &["hamming", "3", "3"]);
    let p = path.to_str().unwrap();
    let single = json(&run(&["certify-uniform", p, "--base", "4"]));
    assert_valid("certificate", &single);
    assert_eq!(single["verdict"], "StronglyUniform");
    assert_eq!(single["e_minus"], serde_json::json!(["0", "-1/2", "-1/2"]));
    assert_eq!(single["e_plus"], serde_json::json!(["-1/2", "-1/2", "0"]));
    assert_eq!(single["config"]["vertex_budget"], 100000);
    let all = json(&run(&["certify-uniform", p, "--all-bases"]));
    assert_valid("certificate", &all);
}

#[test]
fn every_command_output_matches_its_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = family(dir.path(), "j63.txt", &["johnson", "6", "3"]);
    let p = path.to_str().unwrap();
    assert_valid("analysis", &json(&run(&["analyze", p])));
    assert_valid("certificate", &json(&run(&["certify-uniform", p])));
    assert_valid("decompose", &json(&run(&["decompose", p, "--algebra", "Tf"])));
    assert_valid("decompose", &json(&run(&["decompose", p, "--max-endpoint", "1"])));
    let flat = dir.path().join("flat.txt");
    let out = run(&["flatten", p, "--base", "3", "-o", flat.to_str().unwrap()]);
    assert!(out.status.success());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("flat.txt.json")).unwrap()).unwrap();
    assert_valid("flatten", &report);
    let fg = parse_edge_list(&std::fs::read_to_string(&flat).unwrap()).unwrap();
    assert!(fg.is_bipartite());
    let suite = json(&run(&["verify-theorem", "hamming"]));
    assert_valid("suite", &suite);
    assert_eq!(suite["passed"], true);
}

#[test]
fn config_file_is_validated_and_applied() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("cfg.json");
    std::fs::write(&good, r#"{"vertex_budget": 5000, "retry_count": 3}"#).unwrap();
    let path = family(dir.path(), "h33.txt", &["hamming", "3", "3"]);
    let out = json(&run(&["--config", good.to_str().unwrap(), "certify-uniform", path.to_str().unwrap()]));
    assert_eq!(out["config"]["vertex_budget"], 5000);
    assert_eq!(out["config"]["retry_count"], 3);
    assert_valid("config", &out["config"]);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"vertex_budgett": 5}"#).unwrap();
    let out = run(&["--config", bad.to_str().unwrap(), "family", "hamming", "2", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    // Budget exceeded.
    assert_eq!(run(&["--budget", "10", "family", "hamming", "3", "3"]).status.code(), Some(3));
    let path = family(dir.path(), "h33.txt", &["hamming", "3", "3"]);
    assert_eq!(run(&["--budget", "10", "analyze", path.to_str().unwrap()]).status.code(), Some(3));
    // Malformed input.
    let junk = dir.path().join("junk.txt");
    std::fs::write(&junk, "0 1\nzero two\n").unwrap();
    assert_eq!(run(&["analyze", junk.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(2));
    // Other failures.
    assert_eq!(run(&["family", "nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["verify-theorem", "no_such_suite"]).status.code(), Some(1));
    assert_eq!(run(&["analyze", dir.path().join("missing.txt").to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let path = family(dir.path(), "d11.txt", &["doob", "1", "1"]);
    let p = path.to_str().unwrap();
    for args in [vec!["certify-uniform", p], vec!["decompose", p, "--max-endpoint", "2"]] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
}
