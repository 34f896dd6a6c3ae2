//! End-to-end tests of the installed binary: pinned outputs, JSON shapes,
//! determinism, and exit codes.

use std::process::{Command, Output};

use serde_json::Value;

fn hamsplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hamsplit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = hamsplit(args);
    assert!(
        out.status.success(),
        "command {args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    serde_json::from_str(&stdout_of(args)).expect("valid JSON on stdout")
}

#[test]
fn equation_prints_lowest_first_coefficients() {
    let out = stdout_of(&["equation", "--n", "5", "--component", "odd"]);
    assert_eq!(out.trim(), "[15, -13, -3, 1]");
}

#[test]
fn krawtchouk_single_values() {
    for (n, k, l, want) in [("5", "4", "1", "-3"), ("6", "4", "2", "-1"), ("8", "6", "3", "2")] {
        let out = stdout_of(&["krawtchouk", "--n", n, "--k", k, "--ell", l]);
        assert_eq!(out.trim(), want, "n={n} k={k} l={l}");
    }
}

#[test]
fn krawtchouk_row_csv() {
    let out = stdout_of(&["krawtchouk", "--n", "4", "--k", "2", "--format", "csv"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n,k,ell,value");
    assert_eq!(lines[1], "4,2,0,6");
    assert_eq!(lines.len(), 6);
}

#[test]
fn dims_symbolic_contains_closed_forms() {
    let v = json_of(&["dims", "--n", "8", "--symbolic"]);
    assert_eq!(v["d_2"]["gx"], "15");
    assert_eq!(v["d_2"]["gy"], "-64");
    assert_eq!(v["d_2"]["c"], "0");
    // The degenerate extra unknown solves to zero.
    assert_eq!(v["d_-16"]["gx"], "0");
    assert_eq!(v["d_-16"]["gy"], "0");
    assert_eq!(v["d_-16"]["c"], "0");
    assert_eq!(v["n"], 8);
}

#[test]
fn dims_evaluates_at_given_genera() {
    let v = json_of(&["dims", "--n", "8", "--gx", "9", "--gy", "1"]);
    assert_eq!(v["d_-14"], "8");
    assert_eq!(v["d_2"], "120");
    assert_eq!(v["e_28"], "1");
}

#[test]
fn spectrum_reports_dimension_and_eigen_list() {
    let v = json_of(&["spectrum", "--n", "8", "--k", "6", "--subspace", "+e"]);
    assert_eq!(v["dimension"], 3);
    assert_eq!(v["eigen_list"][0][0], 0);
    assert_eq!(v["eigen_list"][0][1], "28");
    assert_eq!(v["eigen_list"][2][1], "-4");
    assert_eq!(v["char_poly"], v["min_poly"]);
}

#[test]
fn spectrum_accepts_hyphenated_subspace_names() {
    let v = json_of(&["spectrum", "--n", "6", "--k", "4", "--subspace", "-o"]);
    assert_eq!(v["dimension"], 1);
    assert_eq!(v["eigen_list"][0][0], 1);
    assert_eq!(v["eigen_list"][0][1], "-5");
}

#[test]
fn sigma_equation_prints_coefficient_pairs() {
    let out = stdout_of(&["equation", "--n", "8", "--sigma"]);
    assert_eq!(out.trim(), "[[448, 0], [-118, 102], [-16, -12], [1, 0]]");
}

#[test]
fn full_verify_sweep_passes() {
    let out = hamsplit(&["verify", "--n-from", "3", "--n-to", "12", "--suite", "all"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "pass");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    // Sorted by degree, then name.
    let keys: Vec<(i64, String)> = checks
        .iter()
        .map(|c| (c["n"].as_i64().unwrap(), c["name"].as_str().unwrap().to_string()))
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn verify_csv_is_a_flat_table() {
    let out = stdout_of(&[
        "verify", "--n-from", "3", "--n-to", "4", "--suite", "odd", "--format", "csv",
    ]);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "n,name,anchor,status,detail");
    assert!(out.lines().skip(1).all(|l| l.starts_with("3,") || l.starts_with("4,")));
}

#[test]
fn covering_output_is_deterministic_and_one_based() {
    let first = stdout_of(&["covering", "--n", "4", "--branches", "8", "--seed", "7"]);
    let second = stdout_of(&["covering", "--n", "4", "--branches", "8", "--seed", "7"]);
    assert_eq!(first, second);
    let v: Value = serde_json::from_str(&first).unwrap();
    assert_eq!(v["n"], 4);
    assert_eq!(v["genus_Y"], 1);
    assert_eq!(v["handles"].as_array().unwrap().len(), 2);
    let branches = v["branches"].as_array().unwrap();
    assert_eq!(branches.len(), 8);
    for b in branches {
        let perm = b[0].as_array().unwrap();
        let signs = b[1].as_array().unwrap();
        assert_eq!(perm.len(), 4);
        assert_eq!(signs.len(), 4);
        let mut image: Vec<i64> = perm.iter().map(|p| p.as_i64().unwrap()).collect();
        image.sort();
        assert_eq!(image, vec![1, 2, 3, 4]);
        assert!(signs.iter().all(|s| s == 0 || s == 1));
    }
}

#[test]
fn covering_search_failure_exits_one() {
    let out = hamsplit(&["covering", "--n", "5", "--branches", "2", "--genus-y", "0", "--seed", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("no instance found"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["tridiag", "--n", "4"],
        vec!["spectrum", "--n", "5", "--k", "3", "--subspace", "e"],
        vec!["equation", "--n", "8"],
        vec!["dims", "--n", "11"],
        vec!["verify", "--n-from", "5", "--n-to", "3"],
        vec!["equation", "--n", "5", "--format", "csv"],
        vec!["nonsense"],
    ] {
        let out = hamsplit(&args);
        assert_eq!(out.status.code(), Some(2), "args: {args:?}");
    }
}
