use std::process::{Command, Output};

use serde_json::Value;

fn diagcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diagcat")).args(args).output().expect("diagcat runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn jacobi_dims_as_json() {
    let o = diagcat(&["dims", "jac", "--d", "0..2", "--n", "0..3", "--m", "0", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 12);
    assert!(rows.iter().any(|r| r["d"] == "1" && r["n"] == "2" && r["dim"] == 3));
}

#[test]
fn six_chord_words_and_empty_casimir_space() {
    let o = diagcat(&["dims", "al0", "--m", "2", "--n", "2"]);
    assert_eq!(stdout(&o).trim(), "m=2 n=2  dim 6");
    let o = diagcat(&["dims", "clc0", "--n", "1", "--d", "0..3", "--csv"]);
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "d,n,dim");
    assert!(lines[1..].iter().all(|l| l.ends_with(",0")));
    assert_eq!(lines.len(), 5);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(diagcat(&["dims", "jac", "--d", "3..1"]).status.code(), Some(2));
    assert_eq!(diagcat(&["dims", "nothing"]).status.code(), Some(2));
    assert_eq!(diagcat(&["decompose", "B7"]).status.code(), Some(2));
    assert_eq!(diagcat(&["verify", "no_such_check"]).status.code(), Some(2));
    assert_eq!(diagcat(&["verify"]).status.code(), Some(2));
}

#[test]
fn verify_writes_stable_reports() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let o = diagcat(&["verify", "quadratic", "basis_counts", "--dmax", "2", "--json", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert_eq!(stdout(&o).lines().count(), 2);
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&bytes).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"][0]["id"], "quadratic");
    assert!(v["checks"][0]["anchor"].as_str().unwrap().len() > 10);
    assert!(v["checks"][0].get("runtime_ms").is_none());
}

#[test]
fn decompositions() {
    let o = diagcat(&["decompose", "TA2", "--N", "6"]);
    let out = stdout(&o);
    assert!(out.contains("primitive idempotents 2"), "{out}");
    assert!(out.contains("image of the symmetrizer: {(4)}"));
    assert!(out.contains("kernel of the symmetrizer: {(1,1,1), (2), (2,2)}"));
    let o = diagcat(&["decompose", "A0modA2", "--N", "4", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["endomorphisms"]["primitive_idempotents"], 1);
    let o = diagcat(&["decompose", "zero", "--N", "2", "--json"]);
    assert!(o.status.success());
}

#[test]
fn cache_directory_holds_one_file_per_dimension() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--cache-dir", dir.path().to_str().unwrap(), "dims", "catlie", "--m", "0..3", "--n", "2"];
    let first = stdout(&diagcat(&args));
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 4);
    assert_eq!(stdout(&diagcat(&args)), first);
}

#[test]
fn homspace_listing_and_actions() {
    let o = diagcat(&["homspace", "show", "jac", "--d", "1", "--n", "2"]);
    let out = stdout(&o);
    assert!(out.lines().next().unwrap().ends_with("dim 3"), "{out}");
    assert_eq!(out.lines().count(), 4);
    let run = |e: &str| stdout(&diagcat(&["act", "--module", "A1", "--N", "4", "--n", "2", "--offset", "1", "--expr", e]));
    let lhs = run("mu . (id(H) * S) . delta");
    assert_eq!(lhs.lines().count(), 3);
    assert_eq!(lhs, run("eta . eps"));
    let o = diagcat(&["--jobs", "2", "act", "--module", "A1", "--N", "4", "--n", "7", "--expr", "id(H)"]);
    assert_eq!(o.status.code(), Some(1));
}
