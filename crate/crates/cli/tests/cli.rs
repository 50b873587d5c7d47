use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> (i32, Value) {
    run_with_stdin(args, None)
}

fn run_with_stdin(args: &[&str], stdin: Option<&str>) -> (i32, Value) {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hessian-moduli"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    if let Some(text) = stdin {
        child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
    }
    let out = child.wait_with_output().unwrap();
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

const U0: &str = "[[1,0,0,0,0,0],[0,1,0,0,0,0],[0,0,0,1,0,0],[0,0,1,0,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]";
const I_TOWER: &str = r#"["0","0","1","0"]"#;

#[test]
fn invariants_of_the_fermat_parameter() {
    let (code, v) = run(&["invariants", "--lambda", r#"["1","1","1","1","1"]"#]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "ok");
    assert_eq!(v["command"], "invariants");
    assert_eq!(v["outputs"]["delta_sing"], "-1215");
    assert_eq!(v["outputs"]["I8"], "-15");
    assert_eq!(v["outputs"]["delta_km"], "5");
}

#[test]
fn degenerate_parameter_reports_delta_km() {
    let (code, v) = run(&["invariants", "--lambda", r#"["0","1","1","1","1"]"#]);
    assert_eq!(code, 0);
    assert!(v["outputs"]["delta_km"].is_null());
    assert!(v["outputs"]["locus"]["sylvester_degenerate"].as_bool().unwrap());
    assert_eq!(v["diagnostics"].as_array().unwrap().len(), 1);
}

#[test]
fn malformed_input_is_a_usage_error() {
    let (code, v) = run(&["invariants", "--lambda", r#"["1/0","1","1","1","1"]"#]);
    assert_eq!(code, 2);
    assert_eq!(v["status"], "error");
    assert_eq!(v["diagnostics"][0], "lambda[0]: denominator is zero");
    let (code, _) = run(&["invariants", "--lambda", "[1,2"]);
    assert_eq!(code, 2);
    let (code, _) = run(&["verify", "--suite", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn orthogonal_group_commands() {
    let (code, v) = run(&["orth", "to-s5", "--matrix", U0]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["permutation"], "(12)");
    let (code, v) = run(&["orth", "check", "--matrix", U0]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["orthogonal"], true);
    let (code, v) = run(&["orth", "check", "--matrix", "[[2,0,0,0,0,0],[0,1,0,0,0,0],[0,0,1,0,0,0],[0,0,0,1,0,0],[0,0,0,0,1,0],[0,0,0,0,0,1]]"]);
    assert_eq!(code, 1);
    assert_eq!(v["outputs"]["orthogonal"], false);
    let (code, v) = run_with_stdin(&["orth", "disc-action", "--matrix", "-"], Some(U0));
    assert_eq!(code, 0);
    assert_eq!(v["inputs"]["matrix"][2][3], 1);
}

#[test]
fn correspondence_round_trip() {
    let (code, v) = run(&["correspond", "o2h", "--matrix", U0]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["uses_t"], true);
    let (code, v) = run(&[
        "herm",
        "check",
        "--matrix",
        "[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[1,0],[0,0],[0,0]],[[2,0],[0,0],[1,0],[0,0]],[[0,0],[0,0],[0,0],[1,0]]]",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["membership"], "HGamma1");
}

#[test]
fn period_map_and_heegner() {
    let zero = r#"["0","0","0","0"]"#;
    let tau = format!("[[{I_TOWER},{zero}],[{zero},{I_TOWER}]]");
    let (code, v) = run(&["heegner", "--tau", &tau]);
    assert_eq!(code, 0);
    assert_eq!(v["outputs"]["ns"], true);
    assert_eq!(v["outputs"]["node"], false);
    let (code, v) = run(&["map", "tau-to-z", "--tau", &tau]);
    assert_eq!(code, 0);
    let z = serde_json::to_string(&v["outputs"]["z"]).unwrap();
    let (code, back) = run(&["map", "z-to-tau", "--z", &z]);
    assert_eq!(code, 0);
    assert_eq!(back["outputs"]["tau"], serde_json::from_str::<Value>(&tau).unwrap());
    let bad = format!(r#"[[["0","0","-1","0"],"0"],["0",{I_TOWER}]]"#);
    let (code, v) = run(&["heegner", "--tau", &bad]);
    assert_eq!(code, 1);
    assert_eq!(v["status"], "error");
}

#[test]
fn verify_is_reproducible() {
    let a = run(&["verify", "--suite", "delta-km", "--seed", "3"]);
    let b = run(&["verify", "--suite", "delta-km", "--seed", "3"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    let (code, v) = run(&["verify", "--suite", "group-iso", "--seed", "1"]);
    assert_eq!(code, 1);
    assert!(v["diagnostics"].as_array().unwrap().iter().any(|d| d.as_str().unwrap().contains("psi.u2")));
}
