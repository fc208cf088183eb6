//! End-to-end tests of the `lieexp` binary: documented examples, exit codes
//! and conformance of every JSON output to `docs/schema.json`.

use std::process::Command;

use serde_json::{json, Value};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn lieexp(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_lieexp"))
        .args(args)
        .env_remove("LIEEXP_MAX_WINDOW")
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn ok(args: &[&str]) -> String {
    let r = lieexp(args);
    assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
    r.stdout
}

fn schema() -> Value {
    let text =
        std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../docs/schema.json")).unwrap();
    serde_json::from_str(&text).unwrap()
}

fn validator(def: &str) -> jsonschema::Validator {
    let doc = schema();
    assert!(doc["$defs"][def].is_object(), "no definition {def}");
    let sub = json!({
        "$schema": doc["$schema"],
        "$defs": doc["$defs"],
        "$ref": format!("#/$defs/{def}"),
    });
    jsonschema::validator_for(&sub).unwrap()
}

/// Validates `instance` against `$defs/<def>` of the shipped schema.
fn conforms(def: &str, instance: &Value) {
    let errors: Vec<String> = validator(def)
        .iter_errors(instance)
        .map(|e| format!("{} at {}", e, e.instance_path()))
        .collect();
    assert!(errors.is_empty(), "{def}: {errors:#?}");
}

fn json_of(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    serde_json::from_str(&ok(&full)).unwrap()
}

#[test]
fn bracket_of_the_center_pair_is_the_constant_a() {
    let out = ok(&[
        "bracket",
        "--algebra",
        "H(1,1)",
        "e^{2*x1}*e^{3*y1}*y1",
        "e^{-2*x1}*e^{-3*y1}",
    ]);
    assert_eq!(out, "2\n");
}

#[test]
fn printing_follows_the_canonical_format() {
    assert_eq!(
        ok(&["parse-check", "--algebra", "H(1)", "-2 - 12*y1"]),
        "-12*y1 - 2\n"
    );
    assert_eq!(ok(&["parse-check", "--algebra", "W(1)", "x1 D1 - x1 D1"]), "0\n");
}

#[test]
fn jacobi_of_witt_basis_vanishes() {
    assert_eq!(
        ok(&["jacobi", "--algebra", "W(1)", "D1", "x1 D1", "x1^2 D1"]),
        "0\n"
    );
}

#[test]
fn automorphism_verdicts() {
    let accepted =
        |d: &str, xd: &str| json_of(&["automorphism-check", "--algebra", "W+(1)", d, xd])["accepted"].clone();
    assert_eq!(accepted("D1", "x1 D1 + 3 D1"), true);
    assert_eq!(accepted("D1", "2*x1 D1"), false);
    assert_eq!(accepted("D1", "x1^2 D1"), false);
}

#[test]
fn exit_codes() {
    let usage = lieexp(&["bracket", "--algebra", "Q(1)", "x1", "y1"]);
    assert_eq!(usage.code, 2);
    assert!(usage.stderr.contains("--algebra"), "{}", usage.stderr);
    assert_eq!(lieexp(&["bracket", "--algebra", "H(1)", "x1"]).code, 2);
    assert_eq!(lieexp(&["no-such-command"]).code, 2);

    let domain = lieexp(&["parse-check", "--algebra", "W(1; x1:[1])", "x1^-2"]);
    assert_eq!(domain.code, 1);
    assert!(domain.stderr.starts_with("error:"), "{}", domain.stderr);
    assert_eq!(lieexp(&["parse-check", "--algebra", "H(1)", "x1 +* y1"]).code, 1);
    assert_eq!(lieexp(&["hamiltonian", "--algebra", "W(1)", "x1 D1"]).code, 1);

    assert_eq!(lieexp(&["--help"]).code, 0);
}

#[test]
fn window_limit_from_environment() {
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_lieexp"))
            .args([
                "center",
                "--algebra",
                "H(1,1)",
                "--poly-cap",
                "2",
                "--exp-cap",
                "1",
            ])
            .env("LIEEXP_MAX_WINDOW", limit)
            .output()
            .unwrap()
    };
    let refused = run("10");
    assert_eq!(refused.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&refused.stderr).contains("exceeds the limit of 10"));
    assert_eq!(run("many").status.code(), Some(2));
    assert_eq!(run("100000").status.code(), Some(0));
}

#[test]
fn text_tables_are_aligned() {
    let out = ok(&["decompose", "--algebra", "H(1,1)", "e^{2*x1}*y1 + x1 + e^{-1*y1}"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 3, "{out}");
    let column = |l: &str| {
        l.find("  ")
            .map(|i| i + l[i..].chars().take_while(|c| *c == ' ').count())
    };
    let first = column(lines[0]);
    assert!(lines.iter().all(|l| column(l) == first), "{out}");
}

#[test]
fn element_outputs_conform() {
    for args in [
        vec!["bracket", "--algebra", "W(1; x1:[1])", "e^{1*x1} D1", "x1^2 D1"],
        vec!["jacobi", "--algebra", "H(2)", "x1*y2", "x2^2", "y1*y2"],
        vec!["hamiltonian", "--algebra", "H(1)", "x1^2*y1"],
        vec![
            "parse-check",
            "--algebra",
            "Hbar(1,1)",
            "1/2*e^{-1*x1}*x1^-2*y1 + 3",
        ],
    ] {
        conforms("element", &json_of(&args));
    }
    let v = json_of(&[
        "parse-check",
        "--algebra",
        "W(1; x1:[1])",
        "-1/2*e^{2*x1}*x1^3 D1",
    ]);
    assert_eq!(
        v["terms"][0],
        json!({"coeff": "-1/2", "exp": {"x1^1": 2}, "poly": {"x1": 3}, "d": 1})
    );
}

#[test]
fn structural_outputs_conform() {
    conforms(
        "gradeOutput",
        &json_of(&["grade", "--algebra", "H(1,1)", "e^{2*x1}*y1"]),
    );
    conforms(
        "decomposition",
        &json_of(&["decompose", "--algebra", "H(1,1)", "e^{2*x1}*y1 + x1"]),
    );
    conforms(
        "stats",
        &json_of(&[
            "stats",
            "--algebra",
            "H(2,2)",
            "e^{3*x1}*e^{4*x2}*x1^5*x2^7 + 9*e^{4*x1}*x2^7",
        ]),
    );
    conforms(
        "center",
        &json_of(&[
            "center",
            "--algebra",
            "H(1,1)",
            "--poly-cap",
            "1",
            "--exp-cap",
            "1",
        ]),
    );
    conforms(
        "adDiagonal",
        &json_of(&["addiag", "--algebra", "H(1)", "--poly-cap", "2", "x1*y1"]),
    );
    conforms(
        "adDiagonal",
        &json_of(&["addiag", "--algebra", "H(1)", "--poly-cap", "2", "x1^2*y1"]),
    );
    conforms(
        "adDiagonalSearch",
        &json_of(&["addiag", "--algebra", "H(2)", "--poly-cap", "2"]),
    );
    conforms(
        "divergence",
        &json_of(&["divergence", "--algebra", "W(2)", "x1 D1 + x1*x2 D2"]),
    );
    conforms(
        "derivation",
        &json_of(&[
            "derivation-check",
            "--algebra",
            "H(1)",
            "--alpha",
            "3/2",
            "--inner",
            "x1*y1^2",
        ]),
    );
    conforms(
        "derivation",
        &json_of(&["derivation-check", "--algebra", "H(1)", "--identity"]),
    );
    conforms(
        "automorphism",
        &json_of(&["automorphism-check", "--algebra", "W+(1)", "D1", "x1 D1 + 3 D1"]),
    );
}

#[test]
fn closure_report_carries_every_field() {
    let v = json_of(&[
        "closure",
        "--algebra",
        "W(1; x1:[1])",
        "--poly-cap",
        "2",
        "--exp-cap",
        "1",
        "e^{1*x1} D1",
    ]);
    conforms("closureReport", &v);
    let listed = schema()["$defs"]["closureReport"]["required"]
        .as_array()
        .unwrap()
        .len();
    assert_eq!(v.as_object().unwrap().len(), listed);
    assert_eq!(v["coverage"], "1");

    let check = validator("closureReport");
    let mut missing = v.clone();
    missing.as_object_mut().unwrap().remove("discard_rate");
    assert!(!check.is_valid(&missing));
    let mut inexact = v.clone();
    inexact["coverage"] = json!(1.0);
    assert!(!check.is_valid(&inexact));
}

#[test]
fn simplicity_json_is_deterministic_and_conforms() {
    let args = [
        "simplicity",
        "--algebra",
        "Hbar(1,0)",
        "--poly-cap",
        "0",
        "--exp-cap",
        "2",
        "--seeds",
        "4",
        "--rng",
        "7",
        "--control",
        "--json",
    ];
    let first = ok(&args);
    assert_eq!(first, ok(&args));
    let v: Value = serde_json::from_str(&first).unwrap();
    conforms("experiment", &v);
    assert_eq!(v["seeds"], 4);
    assert_eq!(v["min_coverage"], "1");
    assert!(v["control"].is_object());
}

#[test]
fn obstructed_window_reports_its_bound() {
    let v = json_of(&[
        "closure",
        "--algebra",
        "Hbar(1,1)",
        "--poly-cap",
        "1",
        "--exp-cap",
        "1",
        "e^{1*x1}*y1",
    ]);
    conforms("closureReport", &v);
    assert_eq!(v["attains_bound"], true);
    assert_ne!(v["coverage_bound"], "1");
    assert_eq!(v["coverage"], v["coverage_bound"]);
    assert!(!v["unreached"].as_array().unwrap().is_empty());
}
