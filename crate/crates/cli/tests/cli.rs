use std::process::{Command, Output};

use anyon_data::dump::matrix_from_json;
use anyon_data::{parse_labels, Label, ModelParams};
use braid_engine::BraidEngine;
use serde_json::Value;

fn nss(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nss")).args(args).env_remove("NSS_TOL").output().unwrap()
}

fn stdout_json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

fn stderr_json(o: &Output) -> Value {
    let text = String::from_utf8_lossy(&o.stderr);
    assert_eq!(text.lines().count(), 1, "{text}");
    serde_json::from_str(text.trim()).unwrap()
}

const W: &str = "b2^2 X b2^2 X b2^-2";

#[test]
fn braid_prints_w_and_its_norms() {
    let o = nss(&["braid", "--alpha", "12/5", "--system", "a,psi,s,s", "--charge", "a", "--word", W]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    let su11 = v["norms"]["psi01"].as_f64().unwrap();
    let su2 = v["norms"]["psi23"].as_f64().unwrap();
    assert!((su11 - 0.832).abs() < 1e-3 && (su2 - 0.904).abs() < 1e-3, "{su11} {su2}");
    let m = matrix_from_json(&v["matrix"]).unwrap();
    assert_eq!(m.shape(), (4, 4));
}

#[test]
fn printed_matrices_round_trip_exactly() {
    let o = nss(&["braid", "--alpha", "12/5", "--word", "b2 X^-1 b2^2"]);
    let printed = matrix_from_json(&stdout_json(&o)["matrix"]).unwrap();
    let engine = BraidEngine::new(ModelParams::parse("12/5").unwrap());
    let leaves = parse_labels("a,psi,s,s").unwrap();
    let m = engine.evaluate_map(&"b2 X^-1 b2^2".parse().unwrap(), &leaves, Label::ALPHA).unwrap().matrix;
    for (a, b) in printed.iter().zip(m.iter()) {
        assert_eq!(a.re.to_bits(), b.re.to_bits());
        assert_eq!(a.im.to_bits(), b.im.to_bits());
    }
}

#[test]
fn integer_alpha_is_a_numeric_error() {
    let o = nss(&["model", "--alpha", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let e = stderr_json(&o);
    assert_eq!(e["error"], "IntegerAlpha");
    assert_eq!(e["code"], 3);
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["frobnicate"],
        vec!["model", "--format", "csv"],
        vec!["braid", "--word", "b9"],
        vec!["braid", "--system", "a,q", "--word", "X"],
        vec!["model", "--alpha", "two"],
        vec!["model", "--tol", "-1"],
        vec!["space"],
    ] {
        let o = nss(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert_eq!(stderr_json(&o)["code"], 2, "{args:?}");
    }
}

#[test]
fn model_dump_has_every_table() {
    let o = nss(&["model", "--alpha", "2.4"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    for key in ["alpha", "B", "F", "R", "s", "t"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    assert!((v["alpha"].as_f64().unwrap() - 2.4).abs() < 1e-15);
}

#[test]
fn space_reports_ordering_and_metric() {
    let o = nss(&["space", "--qubits", "2", "--alpha", "2.4"]);
    let v = stdout_json(&o);
    assert_eq!(v["metric"], serde_json::json!([1, 1, 1, 1, -1, 1]));
    assert_eq!(v["encoding"].as_array().unwrap().len(), 4);
    assert!(v["ordering"].is_string());
    let csv = nss(&["space", "--system", "a,psi,s,s", "--format", "csv"]);
    let text = String::from_utf8(csv.stdout).unwrap();
    assert_eq!(text.lines().next(), Some("index,tree,metric,computational"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn reichardt_csv_and_precision_limit() {
    let o = nss(&["reichardt", "--k", "2", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8(o.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "k,su2,su11,ratio_law_defect");
    assert_eq!(lines.len(), 4);
    assert!(text.ends_with('\n'));

    let o = nss(&["reichardt", "--k", "4"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(stderr_json(&o)["error"], "PrecisionExhausted");

    let o = nss(&["reichardt", "--k", "4", "--extended", "384"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    assert!(v[4]["su11"].as_f64().unwrap() < 1e-49);
}

#[test]
fn tolerance_falls_back_to_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_nss")).args(["model"]).env("NSS_TOL", "nonsense").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_nss")).args(["model"]).env("NSS_TOL", "1e-9").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("nss-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("space.json");
    let o = nss(&["space", "--qubits", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["basis"].as_array().unwrap().len(), 2);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn search_finds_w_like_words() {
    let o = nss(&["search", "--max-len", "6", "--threshold", "0.95", "--jobs", "2", "--limit", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = stdout_json(&o);
    let hits = v.as_array().unwrap();
    assert!(!hits.is_empty() && hits.len() <= 5);
    for h in hits {
        assert!(h["su2"].as_f64().unwrap() <= 0.95 && h["su11"].as_f64().unwrap() <= 0.95);
    }
}

#[test]
fn verify_passes_at_two_point_four() {
    let o = nss(&["verify", "--alpha", "2.4", "--seed", "0"]);
    let v = stdout_json(&o);
    let failed: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(o.status.code(), Some(0), "failed checks: {failed:?}");
}
