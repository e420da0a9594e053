use std::process::{Command, Output};

use serde_json::Value;

fn discdeg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_discdeg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn compute_json(args: &[&str]) -> Value {
    let out = discdeg(&[&["compute"], args].concat());
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn compute_cubic_hypersurface() {
    let v = compute_json(&["--N", "4", "--degrees", "3", "--char", "0"]);
    assert_eq!(v["deg_i"], serde_json::json!(["80"]));
    assert_eq!(v["deg"], "80");
    // d (d-1)^N = 3 * 16
    assert_eq!(v["deg_var"], "48");
    assert_eq!(v["cross_check"]["xi_closed_agrees"], true);
    assert_eq!(v["cross_check"]["oracle_agrees"], true);
}

#[test]
fn compute_fields_are_ordered_and_stringly_typed() {
    let out = discdeg(&["compute", "--N", "2", "--degrees", "2,3", "--char", "3"]);
    let text = stdout(&out);
    let keys = [
        "\"N\"",
        "\"c\"",
        "\"degrees\"",
        "\"p\"",
        "\"mu\"",
        "\"defective\"",
        "\"deg\"",
        "\"deg_i\"",
        "\"deg_var\"",
        "\"mod_p_verdict\"",
        "\"cross_check\"",
    ];
    let positions: Vec<usize> = keys
        .iter()
        .map(|k| text.find(k).unwrap_or_else(|| panic!("{k} missing")))
        .collect();
    assert!(positions.windows(2).all(|w| w[0] < w[1]), "{text}");
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["N"], "2");
    assert_eq!(v["degrees"], serde_json::json!(["2", "3"]));
    assert_eq!(v["p"], "3");
}

#[test]
fn compute_binary_quadric_mod_two() {
    let v = compute_json(&["--N", "1", "--degrees", "2", "--char", "2"]);
    assert_eq!(v["deg"], "1");
    assert_eq!(v["mu"], "2");
    assert_eq!(v["mod_p_verdict"], "square_of_irreducible");
}

#[test]
fn compute_defective_pair_of_planes() {
    let v = compute_json(&["--N", "3", "--degrees", "1,1", "--char", "0"]);
    assert_eq!(v["defective"], true);
    assert_eq!(v["deg"], "0");
    assert_eq!(v["deg_i"], serde_json::json!(["0", "0"]));
    assert_eq!(v["deg_var"], "0");
    assert_eq!(v["mod_p_verdict"], "unit");
}

#[test]
fn compute_without_cross_check_reports_nulls() {
    let v = compute_json(&["--N", "2", "--degrees", "2", "--no-cross-check"]);
    assert_eq!(v["cross_check"]["xi_closed_agrees"], Value::Null);
    assert_eq!(v["cross_check"]["oracle_agrees"], Value::Null);
}

#[test]
fn compute_table_format() {
    let out = discdeg(&[
        "compute",
        "--N",
        "2",
        "--degrees",
        "2,2",
        "--format",
        "table",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.lines()
            .any(|l| l.starts_with("deg_var") && l.ends_with(" 8")),
        "{text}"
    );
}

#[test]
fn compute_is_byte_deterministic() {
    let args = ["compute", "--N", "3", "--degrees", "2,3,1", "--char", "2"];
    assert_eq!(discdeg(&args).stdout, discdeg(&args).stdout);
}

#[test]
fn invalid_profiles_exit_two_naming_the_constraint() {
    for (args, needle) in [
        (
            vec!["compute", "--N", "1", "--degrees", "2,2,2"],
            "c <= N+1",
        ),
        (vec!["compute", "--N", "2", "--degrees", "2,0"], "d_i >= 1"),
        (
            vec!["compute", "--N", "2", "--degrees", "2", "--char", "4"],
            "prime",
        ),
        (vec!["symbolic", "--c", "5", "--N", "2"], "c <= N+1"),
    ] {
        let out = discdeg(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "{args:?}: {err}");
    }
}

#[test]
fn symbolic_formulas() {
    let out = discdeg(&["symbolic", "--c", "1", "--N", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("deg_1 = 3*d1^2 - 6*d1 + 3\n"));
    let out = stdout(&discdeg(&["symbolic", "--c", "2", "--N", "1"]));
    assert!(out.contains("deg_var = d1*d2\n"), "{out}");
    let out = stdout(&discdeg(&["symbolic", "--c", "2", "--N", "2"]));
    assert!(
        out.contains("deg_var = d1^2*d2 + d1*d2^2 - 2*d1*d2\n"),
        "{out}"
    );
}

fn summary(text: &str) -> Value {
    let last = text.lines().last().expect("verify prints a summary");
    serde_json::from_str::<Value>(last).unwrap()["summary"].clone()
}

#[test]
fn verify_battery_passes() {
    let out = discdeg(&["verify", "--max-k", "4", "--max-degree", "3"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    let s = summary(&text);
    assert_eq!(s["failures"], 0);
    for line in text.lines().filter(|l| !l.starts_with("{\"summary\"")) {
        let v: Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["pass"], true, "{line}");
        assert_eq!(v["expected"], v["actual"], "{line}");
    }
}

#[test]
fn verify_with_algebraic_oracle() {
    let out = discdeg(&[
        "verify",
        "--max-k",
        "2",
        "--max-degree",
        "4",
        "--with-algebraic-oracle",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = stdout(&out);
    assert!(text.contains("\"check\":\"sylvester_partial_degrees\""));
    assert!(text.contains("\"check\":\"discriminant_mod_2\""));
    assert_eq!(summary(&text)["failures"], 0);
}

#[test]
fn verify_output_is_byte_deterministic() {
    let args = ["verify", "--max-k", "3", "--max-degree", "3"];
    assert_eq!(discdeg(&args).stdout, discdeg(&args).stdout);
}

#[test]
fn zero_bounds_are_usage_errors() {
    assert_eq!(
        discdeg(&["verify", "--max-k", "0", "--max-degree", "3"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        discdeg(&["verify", "--max-k", "3", "--max-degree", "0"])
            .status
            .code(),
        Some(2)
    );
}
