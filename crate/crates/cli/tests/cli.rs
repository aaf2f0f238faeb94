//! Black-box tests of the binary: JSON shapes, exit codes, CSV mode.

use std::process::{Command, Output};

use serde_json::Value;

const SYMMETRIC: &str = "2.6339157938496336";
const WORKED_WORD: &[&str] = &[
    "x1", "x4-", "x1", "y3", "x2", "x5-", "y3-", "x4-", "x1", "x4-", "y2", "x3-", "x6", "y2-",
];

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pants-census"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {out:?}");
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn paths_count_matches_contract() {
    let v = json_of(&["paths", "count", "--length", "4"]);
    assert_eq!(v["schema"], "pants-census/1");
    assert_eq!(v["n"], 4);
    assert_eq!(v["H"], 12);
    assert_eq!(json_of(&["paths", "count", "--length", "7"])["H"], 0);
}

#[test]
fn paths_enumerate_lists_words() {
    let v = json_of(&["paths", "enumerate", "--length", "2", "--primitive"]);
    assert_eq!(v["count"], 6);
    let words: Vec<&Value> = v["paths"].as_array().unwrap().iter().collect();
    assert!(words.iter().all(|p| p["word_length"] == 6));
    let over = run(&["paths", "enumerate", "--length", "30"]);
    assert_eq!(over.status.code(), Some(1), "beyond the default budget");
}

#[test]
fn word_subcommands_reproduce_the_worked_word() {
    let mut args = vec!["word", "validate", "--word"];
    args.extend(WORKED_WORD);
    let v = json_of(&args);
    assert_eq!(v["ok"], true);
    assert_eq!(v["length"], 14);
    assert_eq!(v["primitive"], true);

    let mut args = vec!["word", "intersect", "--word"];
    args.extend(WORKED_WORD);
    let v = json_of(&args);
    assert_eq!(v["i_w"], 26);
    assert_eq!(v["subwords"].as_array().unwrap().len(), 4);
}

#[test]
fn invalid_words_exit_with_domain_error() {
    let out = run(&["word", "validate", "--word", "x1", "y1"]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(v["error"].as_str().unwrap().contains("not incident"));
}

#[test]
fn usage_errors_exit_two() {
    let out = run(&["paths", "count"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn geometry_solve_reports_the_symmetric_metric() {
    let v = json_of(&["geometry", "solve", "--boundary", SYMMETRIC, SYMMETRIC, SYMMETRIC]);
    let l_max = v["metric"]["l_max"].as_f64().unwrap();
    assert!((l_max - 2.0f64.acosh()).abs() < 1e-12);
    let tr = v["peripheral_traces"][2].as_f64().unwrap();
    assert!((tr.abs() - 2.0 * (2.0f64.acosh()).cosh()).abs() < 1e-9);
}

#[test]
fn oracle_reports_both_intersection_numbers() {
    let mut args = vec!["oracle", "intersections", "--boundary", SYMMETRIC, SYMMETRIC, SYMMETRIC, "--word"];
    args.extend(WORKED_WORD);
    let v = json_of(&args);
    assert_eq!(v["i_w"], 26);
    assert_eq!(v["i_geo"], 6);
    assert_eq!(v["pieces"].as_array().unwrap().len(), 6);
    let total: f64 = v["pieces"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["length"].as_f64().unwrap())
        .sum();
    assert!((total - v["geodesic_length"].as_f64().unwrap()).abs() < 1e-9);
}

#[test]
fn census_hits_the_reference_point() {
    let v = json_of(&["census", "--L", "21.08", "--K", "48", "--boundary", "2.634", "2.634", "2.634"]);
    assert_eq!(v["count"], 12);
    assert_eq!(v["records"].as_array().unwrap().len(), 12);
    assert_eq!(v["path_length_budget"], 4);
    assert!(v["lower_bound"].as_f64().unwrap() <= 12.0);
    assert_eq!(v["oriented_classes"], true);
    for r in v["records"].as_array().unwrap() {
        assert!(r["exact_length"].as_f64().unwrap() <= r["length_upper_bound"].as_f64().unwrap());
        assert!(r["word_intersection"].as_u64().unwrap() <= 48);
    }
}

#[test]
fn census_with_oracle_populates_counts() {
    let v = json_of(&[
        "census", "--L", "11.0", "--K", "12", "--boundary", SYMMETRIC, SYMMETRIC, SYMMETRIC,
        "--with-oracle",
    ]);
    assert_eq!(v["count"], 6);
    for r in v["records"].as_array().unwrap() {
        let geo = r["oracle_intersections"].as_u64().unwrap();
        assert!(geo <= r["word_intersection"].as_u64().unwrap());
    }
}

#[test]
fn bounds_evaluate_and_enforce_hypotheses() {
    let v = json_of(&["bound", "pants", "--L", "21.08", "--K", "48", "--boundary", "2.634", "2.634", "2.634"]);
    assert_eq!(v["value"].as_f64().unwrap(), 4.0);
    let rejected = run(&["bound", "pants", "--L", "21.08", "--K", "11", "--boundary", "2.634", "2.634", "2.634"]);
    assert_eq!(rejected.status.code(), Some(1));

    let v = json_of(&[
        "bound", "surface", "--g", "2", "--n", "0", "--area", "12.566", "--sys", "1", "--cx",
        "1", "--L", "1000", "--K", "48",
    ]);
    assert!(v["value"].as_f64().unwrap() > 0.0);
    assert_eq!(v["exponent"], 6);
    assert_eq!(v["headline_hypothesis"], true);
    let s_x = v["s_x"].as_f64().unwrap();
    assert!((s_x - 3.0 * 12.566f64.asinh()).abs() < 1e-12);
    let rejected = run(&[
        "bound", "surface", "--g", "2", "--n", "0", "--area", "12.566", "--sys", "1", "--cx",
        "1", "--L", "100", "--K", "48",
    ]);
    assert_eq!(rejected.status.code(), Some(1));
}

#[test]
fn csv_mode_emits_tables_and_pairs() {
    let out = run(&["census", "--L", "21.08", "--K", "48", "--boundary", "2.634", "2.634", "2.634", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap();
    assert!(header.contains("exact_length"));
    assert_eq!(lines.count(), 12);

    let out = run(&["paths", "count", "--length", "4", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("H,12"));
}

#[test]
fn alphabet_dump_is_complete() {
    let v = json_of(&["alphabet", "dump"]);
    let edges = v["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 18);
    let x1 = edges.iter().find(|e| e["label"] == "x1").unwrap();
    assert_eq!(x1["boundary_successor"], "x4-");
    assert_eq!(x1["hexagon"], "front");
    assert_eq!(v["hexagon_relators"].as_array().unwrap().len(), 2);
}
