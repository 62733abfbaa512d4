use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn modjl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modjl")).args(args).output().expect("run binary")
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).expect("golden file")
}

fn stdout(out: &Output) -> String {
    assert_eq!(out.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn classes_match_golden() {
    assert_eq!(stdout(&modjl(&["classes", "--p", "3"])), golden("classes_q3.json"));
}

#[test]
fn jl_of_cuspidal_character_matches_golden() {
    assert_eq!(stdout(&modjl(&["jl", "--p", "3", "--char-exp", "1"])), golden("jl_q3_exp1.json"));
}

#[test]
fn jl_csv_matches_golden() {
    let out = modjl(&["jl", "--p", "3", "--char-exp", "0", "--format", "csv"]);
    assert_eq!(stdout(&out), golden("jl_q3_trivial.csv"));
}

#[test]
fn jl_star_matches_golden() {
    let out = modjl(&["jl-star", "--p", "3", "--r", "0", "--m", "0"]);
    assert_eq!(stdout(&out), golden("jl_star_q3_trivial.json"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(modjl(&["verify", "--p", "3", "--suite", "thm42"]).status.code(), Some(0));
    assert_eq!(modjl(&["verify", "--p", "3", "--suite", "span"]).status.code(), Some(2));
    assert_eq!(modjl(&["verify", "--p", "5", "--suite", "span"]).status.code(), Some(0));
}

#[test]
fn bad_input_exits_with_three() {
    assert_eq!(modjl(&["classes", "--p", "9"]).status.code(), Some(3));
    assert_eq!(modjl(&["decompose", "--p", "3", "--in", "/nonexistent/x.json"]).status.code(), Some(3));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"group":"GL2","q":3}"#).unwrap();
    assert_eq!(modjl(&["decompose", "--p", "3", "--in", bad.to_str().unwrap()]).status.code(), Some(3));
    let wrong_q = dir.path().join("wrong_q.json");
    std::fs::write(&wrong_q, stdout(&modjl(&["dl", "--p", "5", "--char-exp", "1"]))).unwrap();
    assert_eq!(modjl(&["decompose", "--p", "3", "--in", wrong_q.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("classes.json");
    let out = modjl(&["classes", "--p", "3", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("classes_q3.json"));
}

#[test]
fn decompose_round_trips_a_class_function() {
    let dir = tempfile::tempdir().unwrap();
    let classfn = dir.path().join("jl.json");
    let out = modjl(&["jl", "--p", "5", "--char-exp", "7", "--as", "classfn", "--out", classfn.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let decomposed = stdout(&modjl(&["decompose", "--p", "5", "--in", classfn.to_str().unwrap()]));
    let direct = stdout(&modjl(&["jl", "--p", "5", "--char-exp", "7"]));
    assert_eq!(decomposed, direct);

    let chi = dir.path().join("chi.json");
    std::fs::write(&chi, r#"{"group":"LX","q":5,"basis":"l-characters","coeffs":[{"label":{"exp":7},"value":1}]}"#).unwrap();
    let via_groth = stdout(&modjl(&["jl", "--p", "5", "--in", chi.to_str().unwrap()]));
    assert_eq!(via_groth, direct);
}

#[test]
fn transport_and_weights_have_expected_shape() {
    let dir = tempfile::tempdir().unwrap();
    let iota = dir.path().join("iota.json");
    std::fs::write(&iota, r#"{"group":"GL2","q":3,"entries":[{"label":{"r":[0],"m":0},"value":1}]}"#).unwrap();
    let iota = iota.to_str().unwrap();

    let d: Value = serde_json::from_str(&stdout(&modjl(&["transport-iota", "--p", "3", "--in", iota]))).unwrap();
    assert_eq!(d["q"], 3);
    let entries = d["entries"].as_array().expect("dense entries");
    assert_eq!(entries.len(), 8);
    assert!(entries.iter().all(|e| e["label"]["exp"].is_u64() && e["value"].is_i64()));

    let w: Value = serde_json::from_str(&stdout(&modjl(&["serre-weights", "--p", "3", "--in", iota]))).unwrap();
    let weights = w["weights"].as_array().expect("weight list");
    assert!(weights.iter().all(|l| l["r"].is_array() && l["m"].is_u64()));
}
