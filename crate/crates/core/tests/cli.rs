use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn colorheis(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_colorheis"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).expect("one JSON object")
}

#[test]
fn normal_order_of_ab() {
    let o = colorheis(&["normal-order", "A*B"], "");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "B*A + 1\n");
}

#[test]
fn verify_reference_parameters() {
    let o = colorheis(&["verify", "--c", "1", "--phi", "1:1", "--psi", "", "--window", "12", "--emit", "json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["ok"], Value::Bool(true));
    for key in ["r1", "r2", "r3"] {
        assert_eq!(v["residuals"][key]["entries"], Value::Array(vec![]), "{key}");
    }
    assert_eq!(v["input"]["phi"], "1:1");
}

#[test]
fn nogo_small_bidegree() {
    let o = colorheis(&["nogo", "--M", "4", "--N", "4", "--emit", "json"], "");
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["result"]["nullity"], 0);
    assert_eq!(v["input"]["M"], 4);
}

#[test]
fn exit_codes() {
    // parse error, even phi, window overrun
    assert_eq!(colorheis(&["normal-order", "A^(2)"], "").status.code(), Some(2));
    assert_eq!(colorheis(&["verify", "--phi", "2:1"], "").status.code(), Some(2));
    assert_eq!(colorheis(&["apply", "--t", "--window", "3", "--poly", "x^5"], "").status.code(), Some(2));
    assert_eq!(colorheis(&["nogo", "--M", "9", "--N", "0"], "").status.code(), Some(2));
    // genuine check failures
    assert_eq!(colorheis(&["recurrence-check", "--c", "1", "--d", "1"], "").status.code(), Some(1));
    assert_eq!(
        colorheis(&["verify", "--v", "0:1", "--w", "0:1"], "").status.code(),
        Some(1)
    );
    assert_eq!(
        colorheis(&["verify", "--v", "0:1", "--w", "0:1", "--first-two"], "").status.code(),
        Some(0)
    );
}

#[test]
fn build_output_feeds_verify() {
    let built = colorheis(&["build", "--c", "1/2", "--phi", "1:1,3:-1/3", "--psi", "1:2", "--window", "6", "--emit", "json"], "");
    assert_eq!(built.status.code(), Some(0));
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(&built.stdout).unwrap();
    let path = file.path().to_str().unwrap();
    let o = colorheis(&["verify", "--file", path], "");
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));

    // bare parameters through stdin
    let params = json(&built)["result"]["params"].to_string();
    let o = colorheis(&["verify", "--file", "-", "--emit", "json"], &params);
    assert_eq!(json(&o)["ok"], Value::Bool(true));
}

#[test]
fn series_json_round_trips_through_apply() {
    let o = colorheis(&["normal-order", "A^2*B^2", "--emit", "json"], "");
    let series = json(&o)["result"].to_string();
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(series.as_bytes()).unwrap();
    // (B^2 A^2 + 4 B A + 2) x^2 = 2x^2 + 8x^2 + 2x^2
    let o = colorheis(&["apply", "--series", file.path().to_str().unwrap(), "--poly", "x^2"], "");
    assert_eq!(stdout(&o), "12*x^2\n");
    let o = colorheis(&["apply", "--expr", "A^2*B^2", "--poly", "-"], "x^2");
    assert_eq!(stdout(&o), "12*x^2\n");
}

#[test]
fn random_verification_is_deterministic_across_jobs() {
    let one = colorheis(&["verify", "--random", "6", "--seed", "5", "--window", "6", "--emit", "json"], "");
    let four = colorheis(&["verify", "--random", "6", "--seed", "5", "--window", "6", "--jobs", "4", "--emit", "json"], "");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn block_and_interp_commands() {
    let o = colorheis(&["blocks", "--kind", "pauli", "--s", "3", "--random", "5", "--seed", "1"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = colorheis(&["blocks", "--kind", "direct-sum", "--p0", "x^2 + 1", "--p1", "-x"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = colorheis(&["interp", "--kind", "euler", "--alpha", "2", "--extra", "3"], "");
    assert_eq!(o.status.code(), Some(0));
    let o = colorheis(&["interp", "--kind", "stirling", "--poly", "x^7 - 3x^2", "--emit", "json"], "");
    assert_eq!(json(&o)["residuals"][0]["residual"], "0");
}

#[test]
fn numbers_and_help() {
    let o = colorheis(&["numbers", "--kind", "bernoulli", "--n", "4"], "");
    assert_eq!(stdout(&o), "1 -1/2 1/6 0 -1/30\n");
    let o = colorheis(&["--help"], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("normal-order"));
    assert_eq!(colorheis(&["frobnicate"], "").status.code(), Some(2));
}
