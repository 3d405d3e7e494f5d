//! End-to-end tests of the binary: exit codes, output shapes, determinism,
//! and the documented JSON schemas.

use serde_json::Value;
use std::path::PathBuf;
use std::process::{Command, Output};

fn earringlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_earringlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn tmp_file(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!(
        "earringlab-test-{}-{}",
        std::process::id(),
        name
    ));
    dir
}

#[test]
fn tau_reports_value_and_oracle_bracket() {
    let out = earringlab(&["tau", "1,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1/2"), "{text}");
    assert!(text.contains("OK"));

    let zero = earringlab(&["tau", "1"]);
    assert!(stdout(&zero).starts_with("tau(1) = 0"));
}

#[test]
fn tau_rejects_sequences_outside_b() {
    for bad in ["2", "1,5", "x", ""] {
        let out = earringlab(&["tau", bad]);
        assert_eq!(out.status.code(), Some(2), "literal {bad:?}");
    }
}

#[test]
fn enum_b_lists_in_order_and_guards_depth() {
    let out = earringlab(&["enum-b", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1,1\n1,2\n");
    let deep = earringlab(&["enum-b", "9"]);
    assert_eq!(deep.status.code(), Some(2));
}

#[test]
fn density_csv_has_grid_rows() {
    let path = tmp_file("density.csv");
    let out = earringlab(&[
        "density",
        "--depth",
        "4",
        "--grid",
        "50",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "grid_point,distance");
    assert_eq!(lines.len(), 52); // header + 51 grid points
    std::fs::remove_file(&path).ok();
}

#[test]
fn sigma_csv_endpoints_and_bounds() {
    let path = tmp_file("sigma.csv");
    let out = earringlab(&[
        "sigma",
        "1",
        "--samples",
        "256",
        "--depth",
        "6",
        "--csv",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 257); // header + 256 rows
    // all error bounds are at most the 2^-6 scale bound
    for row in &lines[1..] {
        let bound = row.split(',').nth(3).unwrap();
        let value = earring_core::rational::parse_rational(bound).unwrap();
        assert!(value <= earring_core::rational::rat(1, 64), "{row}");
    }
    std::fs::remove_file(&path).ok();

    // sigma_2 starts and ends at the origin (circle column 0)
    let path2 = tmp_file("sigma2.csv");
    let out = earringlab(&[
        "sigma",
        "2",
        "--samples",
        "10",
        "--depth",
        "4",
        "--csv",
        path2.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path2).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[1].split(',').nth(1) == Some("0"));
    assert!(lines[10].split(',').nth(1) == Some("0"));
    std::fs::remove_file(&path2).ok();
}

#[test]
fn sigma_usage_errors() {
    let out = earringlab(&["sigma", "1", "--samples", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let svg = tmp_file("sigma.svg");
    let ok = earringlab(&[
        "sigma",
        "1",
        "--samples",
        "32",
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert!(ok.status.success());
    let content = std::fs::read_to_string(&svg).unwrap();
    assert!(content.starts_with("<svg"));
    assert!(content.contains("polyline"));
    std::fs::remove_file(&svg).ok();
}

#[test]
fn word_output_and_guard() {
    let out = earringlab(&["word", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("abAB"));
    assert!(text.contains("is_single_commutator: true"));

    let two = earringlab(&["word", "2"]);
    assert!(two.status.success());
    assert!(stdout(&two).contains("is_single_commutator: false"));

    let three = earringlab(&["word", "3"]);
    assert!(three.status.success());
    let text3 = stdout(&three);
    assert!(text3.contains("[a,b]^6"));
    assert!(!text3.contains("is_single_commutator"));

    assert_eq!(earringlab(&["word", "4"]).status.code(), Some(2));
}

#[test]
fn suite_exit_codes_and_json_schema() {
    let out = earringlab(&["suite", "seqorder", "--json"]);
    assert!(out.status.success());
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["pass"], Value::Bool(true));
    let suites = value["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 1);
    for check in suites[0]["checks"].as_array().unwrap() {
        assert!(check["id"].is_string());
        assert!(check["pass"].is_boolean());
        assert!(check["params"].is_string());
        assert!(check["detail"].is_string());
    }

    let unknown = earringlab(&["suite", "nonsense"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn suite_injected_failure_exits_one() {
    let out = earringlab(&[
        "suite",
        "freegroup",
        "--json",
        "--inject-failure",
        "zz-simulated",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["pass"], Value::Bool(false));
    let checks = value["suites"][0]["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["id"] == "zz-simulated" && c["pass"] == Value::Bool(false)));
}

#[test]
fn suite_output_is_deterministic() {
    let a = earringlab(&["suite", "freegroup", "--json"]);
    let b = earringlab(&["suite", "freegroup", "--json"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn homology_of_circle_complex() {
    let path = tmp_file("circle.json");
    std::fs::write(&path, r#"{"top_simplices": [[0,1],[1,2],[0,2]]}"#).unwrap();
    let out = earringlab(&["homology", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("H_0 = Z"));
    assert!(text.contains("H_1 = Z"));

    let json_out = earringlab(&["homology", path.to_str().unwrap(), "--json"]);
    let value: Value = serde_json::from_str(&stdout(&json_out)).unwrap();
    assert_eq!(value["homology"][1]["betti"], Value::from(1));
    std::fs::remove_file(&path).ok();

    let missing = earringlab(&["homology", "/nonexistent/file.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn current_demo_round_trip() {
    let path = tmp_file("current.json");
    std::fs::write(
        &path,
        r#"{"circles": 3, "edges": [{"circle": 2, "intervals": [{"from": "0", "to": "1", "weight": 1, "orientation": 1}]}]}"#,
    )
    .unwrap();
    let out = earringlab(&[
        "current-demo",
        path.to_str().unwrap(),
        "--epsilon",
        "1/2",
        "--json",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["pass"], Value::Bool(true));
    assert_eq!(value["round_trip"], Value::Bool(true));
    assert_eq!(value["certificates"]["pass"], Value::Bool(true));
    assert!(!value["certificates"]["pieces"].as_array().unwrap().is_empty());
    std::fs::remove_file(&path).ok();

    let bad_eps = earringlab(&[
        "current-demo",
        "/nonexistent.json",
        "--epsilon",
        "x",
    ]);
    assert_eq!(bad_eps.status.code(), Some(2));
}

#[test]
fn config_file_and_overrides() {
    let path = tmp_file("config.json");
    std::fs::write(&path, r#"{"depth": 5, "samples": 16}"#).unwrap();
    let out = earringlab(&[
        "sigma",
        "1",
        "--config",
        path.to_str().unwrap(),
        "--json",
    ]);
    assert!(out.status.success());
    let value: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["depth"], Value::from(5));
    assert_eq!(value["samples"], Value::from(16));
    // CLI flag beats the file
    let out2 = earringlab(&[
        "sigma",
        "1",
        "--config",
        path.to_str().unwrap(),
        "--depth",
        "6",
        "--json",
    ]);
    let value2: Value = serde_json::from_str(&stdout(&out2)).unwrap();
    assert_eq!(value2["depth"], Value::from(6));
    std::fs::remove_file(&path).ok();
}
