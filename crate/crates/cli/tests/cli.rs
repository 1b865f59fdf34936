use std::process::{Command, Output};

use serde_json::{json, Value};

const HYPERGEOMETRIC: &str = "theta^2 - t*(theta + 1/2)^2";

fn limhodge(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_limhodge")).args(args).output().expect("binary runs")
}

fn document(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn solve_theta_squared_golden() {
    let out = limhodge(&["solve", "--op", "theta^2", "--nmax", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = document(&out);
    let mut f0 = vec!["0/1"; 11];
    f0[0] = "1/1";
    assert_eq!(doc["command"], "solve");
    assert_eq!(doc["operator"], json!({ "order": 2, "q": ["(0)/(1)", "(0)/(1)"] }));
    assert_eq!(doc["result"]["f"], json!([f0, vec!["0/1"; 11]]));
    assert_eq!(doc["result"]["residuals_vanish"], true);
    assert_eq!(doc["diagnostics"], json!({ "tail_estimates": {}, "timings": {} }));
}

#[test]
fn solve_hypergeometric_coefficients() {
    let out = limhodge(&["solve", "--op", HYPERGEOMETRIC, "--nmax", "3"]);
    let doc = document(&out);
    assert_eq!(doc["result"]["f"][0], json!(["1/1", "1/4", "9/64", "25/256"]));
    assert_eq!(doc["operator"]["q"], json!(["(1*t)/(-1 + 1*t)", "(1/4*t)/(-1 + 1*t)"]));
}

#[test]
fn limit_of_symbol_with_vanishing_twist() {
    let out = limhodge(&["limit", "--op", HYPERGEOMETRIC, "--symbol", "1 + t*theta"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(document(&out)["result"]["limit"], json!(["1/1", "0/1"]));
}

#[test]
fn indicial_reports_exponents() {
    let doc = document(&limhodge(&["indicial", "--op", "theta^3 + 2*theta"]));
    assert_eq!(doc["result"]["mum"], false);
    assert_eq!(doc["result"]["exponents_all_zero"], false);
    let doc = document(&limhodge(&["indicial", "--op", "theta^3 - t"]));
    assert_eq!(doc["result"]["mum"], true);
    assert_eq!(doc["result"]["coefficients"], json!(["0/1", "0/1", "0/1", "1/1"]));
}

#[test]
fn monodromy_is_unipotent() {
    let doc = document(&limhodge(&["monodromy", "--op", "theta^3"]));
    let r = &doc["result"];
    assert_eq!(r["maximally_unipotent"], true);
    assert_eq!(r["exp_log_roundtrip"], true);
    assert_eq!(r["rescaled_gamma"], json!([["1/1", "1/1", "1/2"], ["0/1", "1/1", "1/1"], ["0/1", "0/1", "1/1"]]));
}

#[test]
fn legendre_suite_passes() {
    let out = limhodge(&["verify", "--suite", "legendre", "--t", "0.25"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(document(&out)["result"]["passed"], true);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["functional", "--op", HYPERGEOMETRIC, "--symbol", "1 + t*theta", "--z", "0.1,1.5", "--nmax", "60"];
    let a = limhodge(&args);
    let b = limhodge(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn domain_errors_exit_one() {
    let out = limhodge(&["solve", "--op", "theta^2 + 1"]);
    assert_eq!(out.status.code(), Some(1));
    let doc = document(&out);
    assert_eq!(doc["error"]["kind"], "NotMUM");
    assert_eq!(doc["result"], Value::Null);
    assert!(!out.stderr.is_empty());
}

#[test]
fn usage_errors_exit_two() {
    let out = limhodge(&["solve", "--op", "theta^^2"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(document(&out)["error"]["kind"], "Syntax");
    assert_eq!(limhodge(&["functional", "--op", "theta^2", "--symbol", "1"]).status.code(), Some(2));
    assert_eq!(limhodge(&["solve"]).status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("limhodge-out-{}.json", std::process::id()));
    let out = limhodge(&["filtrations", "--op", "theta^2", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(doc["command"], "filtrations");
}

#[test]
fn timings_only_on_request() {
    let doc = document(&limhodge(&["filtrations", "--op", "theta^2", "--timings"]));
    assert!(doc["diagnostics"]["timings"]["total_seconds"].is_f64());
}
