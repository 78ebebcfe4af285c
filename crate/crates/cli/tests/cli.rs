use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_genlaguerre"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn coeffs_classical_degree_two() {
    let v = json_of(&[
        "coeffs", "--alpha", "1", "--beta", "0", "--q", "1", "--n", "2", "--method", "closed", "--format", "json",
    ]);
    assert_eq!(v["coeffs"], json!(["1", "-2", "1/2"]));
    assert_eq!(v["method"], "closed");
    assert_eq!(v["beta"], "0");
}

#[test]
fn coeffs_n_zero_every_method() {
    for m in ["series", "closed", "recurrence", "determinant", "composition"] {
        let v = json_of(&["coeffs", "--alpha", "2", "--beta", "7/2", "--n", "0", "--method", m, "--format", "json"]);
        assert_eq!(v["coeffs"], json!(["1"]), "{m}");
    }
}

#[test]
fn coeffs_q_two() {
    let v = json_of(&["coeffs", "--q", "2", "--n", "2", "--method", "series", "--format", "json"]);
    assert_eq!(v["coeffs"], json!(["1", "2"]));
}

#[test]
fn coeffs_csv_and_plain() {
    let o = run(&["coeffs", "--n", "2", "--format", "csv"]);
    assert_eq!(stdout(&o), "k,coeff\n0,1\n1,-2\n2,1/2\n");
    let o = run(&["coeffs", "--n", "2"]);
    assert_eq!(stdout(&o).trim(), "1 - 2*z + 1/2*z^2");
}

#[test]
fn eval_exact_examples() {
    assert_eq!(stdout(&run(&["eval", "--n", "1", "--z", "1"])).trim(), "0");
    assert_eq!(stdout(&run(&["eval", "--n", "2", "--z", "2"])).trim(), "-1");
    let v = json_of(&["eval", "--n", "2", "--z", "-1/2", "--method", "determinant", "--format", "json"]);
    assert_eq!(v["value"], "17/8");
}

#[test]
fn eval_float_reports_condition() {
    let v = json_of(&["eval", "--float", "--alpha", "1.5", "--beta", "0.25", "--n", "6", "--z", "0.7", "--format", "json"]);
    assert!(v["value"].is_f64());
    assert!(v["abs_term_sum"].as_f64().unwrap() >= v["value"].as_f64().unwrap().abs());
    assert!(v["condition"].as_f64().unwrap() >= 1.0);
}

#[test]
fn table_lists_every_index() {
    let o = run(&["table", "--nmax", "2", "--method", "recurrence"]);
    assert_eq!(stdout(&o), "L_0 = 1\nL_1 = 1 - z\nL_2 = 1 - 2*z + 1/2*z^2\n");
    let v = json_of(&["table", "--nmax", "3", "--alpha", "2", "--format", "json"]);
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["coeffs", "--q", "2", "--n", "3", "--method", "determinant"],
        &["coeffs", "--n", "3", "--beta", "-1"],
        &["coeffs", "--n", "3", "--alpha", "0"],
        &["coeffs", "--n", "3", "--alpha", "3/2"],
        &["coeffs", "--n", "3", "--method", "bogus"],
        &["coeffs", "--n", "15", "--method", "composition"],
        &["eval", "--n", "3", "--z", "1/0"],
        &["verify", "--qs", "2"],
        &["verify", "--inject-fault", "nope"],
        &["bench", "--nmax", "20"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn composition_cap_can_be_raised() {
    let v = json_of(&["coeffs", "--n", "15", "--method", "composition", "--composition-cap", "15", "--format", "json"]);
    let closed = json_of(&["coeffs", "--n", "15", "--format", "json"]);
    assert_eq!(v["coeffs"], closed["coeffs"]);
}

#[test]
fn verify_higher_q_with_compatible_methods() {
    let o = run(&["verify", "--qs", "2,3", "--methods", "series,closed", "--nmax", "10", "--format", "plain"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
}

#[test]
fn verify_fault_is_localized() {
    let o = run(&["verify", "--inject-fault", "composition,1,7/2,1,4,0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "fail");
    let d = &v["first_discrepancy"];
    assert_eq!((d["alpha"].clone(), d["beta"].clone(), d["n"].clone(), d["index"].clone()), (json!(1), json!("7/2"), json!(4), json!(0)));
    let failing: Vec<&Value> = v["grid"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|p| p["pairs"].as_array().unwrap().iter().any(|s| s["status"] == "fail"))
        .collect();
    assert_eq!(failing.len(), 1);
}

#[test]
fn bench_csv_header() {
    let o = run(&["bench", "--nmax", "3", "--reps", "1", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("method,n,nanos"));
    assert_eq!(lines.count(), 5 * 4);
}
