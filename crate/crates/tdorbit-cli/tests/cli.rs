//! End-to-end tests of the command-line surface: output stability, exit
//! codes, and the wire formats.

use std::process::{Command, Output};

fn tdorbit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdorbit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn counts_json_is_stable_and_correct() {
    let a = tdorbit(&["counts", "--n", "3", "--q", "2", "--format", "json"]);
    assert!(a.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(parsed["orbits"]["0"], 8);
    assert_eq!(parsed["orbits"]["2"], 6);
    assert_eq!(parsed["classes"]["0"], 4);
    assert_eq!(parsed["classes"]["1"], 6);
    assert_eq!(parsed["classes"]["2"], 4);
    // byte-identical across runs
    let b = tdorbit(&["counts", "--n", "3", "--q", "2", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn orbit_enumeration_counts() {
    let out = tdorbit(&[
        "orbits",
        "--n",
        "3",
        "--q",
        "2",
        "--enumerate",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["count"], 14);
    assert_eq!(parsed["orbits"].as_array().unwrap().len(), 14);
}

#[test]
fn class_enumeration_counts() {
    let out = tdorbit(&[
        "classes",
        "--n",
        "2",
        "--q",
        "3",
        "--enumerate",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // 9 central classes + 2 of dimension 1
    assert_eq!(parsed["count"], 11);
}

#[test]
fn partitions_flock_listing() {
    let out = tdorbit(&["partitions", "--n", "6", "--flocks"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("8 odd-type + 13 even-type flocks"));
    let out = tdorbit(&[
        "partitions",
        "--n",
        "6",
        "--flocks",
        "--containers",
        "--format",
        "json",
    ]);
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["odd"].as_array().unwrap().len(), 8);
    assert_eq!(parsed["even"].as_array().unwrap().len(), 13);
    assert!(parsed["odd"][0]["container"].is_array());
}

#[test]
fn char_table_wire_format() {
    let out = tdorbit(&[
        "irreps",
        "--n",
        "2",
        "--q",
        "3",
        "--char-table",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let irreps = parsed["irreps"].as_array().unwrap();
    assert_eq!(irreps.len(), 11);
    // cyclotomic values serialize as {"p": p, "coeffs": [...]}
    let first_value = &irreps[0]["values"][0];
    assert_eq!(first_value["p"], 3);
    assert_eq!(first_value["coeffs"].as_array().unwrap().len(), 2);
    // dimensions: nine 1-dimensional, two 3-dimensional
    let dims: Vec<u64> = irreps
        .iter()
        .map(|i| i["dimension"].as_u64().unwrap())
        .collect();
    assert_eq!(dims.iter().filter(|&&d| d == 1).count(), 9);
    assert_eq!(dims.iter().filter(|&&d| d == 3).count(), 2);
}

#[test]
fn model_reports_multiplicity_one() {
    let out = tdorbit(&["model", "--n", "2", "--q", "2", "--format", "json"]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["model"], true);
    for m in parsed["multiplicities"].as_array().unwrap() {
        assert_eq!(m["num"], 1);
        assert_eq!(m["den"], 1);
    }
}

#[test]
fn verify_all_suites_exit_zero() {
    let out = tdorbit(&["verify", "--n", "2", "--q", "3", "--suite", "all"]);
    assert!(out.status.success(), "{}", stdout(&out));
    assert!(stdout(&out).contains("all"));
    assert!(!stdout(&out).contains("[FAIL]"));
}

#[test]
fn flag_errors_exit_two() {
    let out = tdorbit(&["counts", "--n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = tdorbit(&["counts", "--n", "3", "--q", "4"]);
    assert_eq!(out.status.code(), Some(2), "non-prime q is a flag error");
    let out = tdorbit(&["verify", "--n", "2", "--q", "2", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_exceeded_exits_three() {
    let out = tdorbit(&[
        "orbits",
        "--n",
        "5",
        "--q",
        "3",
        "--enumerate",
        "--budget",
        "16",
    ]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("tdorbit-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("counts.json");
    let out = tdorbit(&[
        "counts",
        "--n",
        "2",
        "--q",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let contents = std::fs::read_to_string(&path).unwrap();
    let parsed: serde_json::Value = serde_json::from_str(&contents).unwrap();
    assert_eq!(parsed["orbits"]["0"], 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn jobs_flag_accepted() {
    let seq = tdorbit(&[
        "counts", "--n", "4", "--q", "3", "--jobs", "1", "--format", "csv",
    ]);
    let par = tdorbit(&[
        "counts", "--n", "4", "--q", "3", "--jobs", "4", "--format", "csv",
    ]);
    assert!(seq.status.success() && par.status.success());
    assert_eq!(seq.stdout, par.stdout);
}
