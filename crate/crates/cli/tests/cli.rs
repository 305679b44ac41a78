//! End-to-end tests of the `xlag` binary: exit-code contract, golden output
//! strings, determinism, schema validity of JSON reports, and the CSV round
//! trip.

use serde_json::Value;
use std::process::{Command, Output};

fn xlag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_xlag"))
        .args(args)
        .env("NO_COLOR", "1")
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn gen_matches_reference_tables() {
    let out = xlag(&["gen", "--family", "III", "--m", "1", "--n", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "L[1,2]^(III): x^2 - 2*a*x + a*(a+1)\n");

    let out = xlag(&["gen", "--family", "III", "--m", "1", "--n", "0"]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), "L[1,0]^(III): 1\n");
}

#[test]
fn gen_rejects_excluded_degree_with_exit_2() {
    let out = xlag(&["gen", "--family", "III", "--m", "2", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("degree 1 excluded"), "{err}");
}

#[test]
fn bad_flags_exit_2() {
    let out = xlag(&["gen", "--family", "IV", "--m", "1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = xlag(&["verify", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = xlag(&["roots", "--m", "1", "--k", "1", "--alpha", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_appendix_passes_with_15_records() {
    let out = xlag(&["verify", "--suite", "appendix", "--json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(v["passed"], 15);
    assert_eq!(v["failed"], 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 15);
}

#[test]
fn verify_json_validates_against_shipped_schema() {
    let schema_text = std::fs::read_to_string(
        std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas/report.schema.json"),
    )
    .expect("schema shipped in-repo");
    let schema: Value = serde_json::from_str(&schema_text).unwrap();
    let out = xlag(&[
        "verify", "--suite", "norms", "--family", "III", "--alpha", "-0.5", "--m", "1", "--nmax",
        "4", "--json",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let instance: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    let errors = validate(&schema, &instance, "$");
    assert!(errors.is_empty(), "schema violations: {errors:?}");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let args = ["verify", "--suite", "appendix", "--format", "json"];
    let a = stdout_of(&xlag(&args));
    let b = stdout_of(&xlag(&args));
    assert_eq!(a, b);
    let args = [
        "roots", "--m", "1", "--k", "2", "--alpha", "-0.5", "--format", "json",
    ];
    let a = stdout_of(&xlag(&args));
    let b = stdout_of(&xlag(&args));
    assert_eq!(a, b);
}

#[test]
fn gen_csv_round_trips_through_the_parser() {
    let out = xlag(&[
        "gen", "--family", "III", "--m", "2", "--n", "4", "--format", "csv",
    ]);
    assert!(out.status.success());
    let body = stdout_of(&out);
    let rows: Vec<&str> = body.lines().skip(1).collect();
    let (m, n, poly) = xlag_cli::render::parse_csv_rows(&rows).expect("parses");
    assert_eq!((m, n), (2, 4));
    assert_eq!(poly, xlaguerre::exceptional::xlag3(2, 4).unwrap());
}

#[test]
fn roots_report_values() {
    let out = xlag(&["roots", "--m", "1", "--k", "1", "--alpha", "-0.5", "--json"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["verdict"], "pass");
    let pos = v["positive_roots"][0].as_f64().unwrap();
    let neg = v["negative_roots"][0].as_f64().unwrap();
    assert!((pos - 0.2071067811865475).abs() < 1e-10);
    assert!((neg + 1.2071067811865475).abs() < 1e-10);
}

#[test]
fn spectral_examples() {
    let out = xlag(&[
        "spectral", "--op", "T_III", "--m", "1", "--alpha", "-0.5", "--cutoff", "4", "--json",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["deficiency_index"][0], 1);
    assert_eq!(v["endpoint_zero"], "limit-circle");
    let lambdas: Vec<f64> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["eigenvalue"].as_f64().unwrap())
        .collect();
    assert_eq!(lambdas, vec![-1.5, 0.5, 1.5, 2.5]);

    let out = xlag(&[
        "spectral", "--op", "T_I", "--m", "2", "--alpha", "1.5", "--cutoff", "3", "--json",
    ]);
    let v: Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(v["deficiency_index"][0], 0);
    assert_eq!(v["boundary_condition"], "none");
    let lambdas: Vec<f64> = v["spectrum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["eigenvalue"].as_f64().unwrap())
        .collect();
    assert_eq!(lambdas, vec![0.0, 1.0, 2.0]);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = xlag(&[
        "verify",
        "--suite",
        "appendix",
        "--json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).is_empty());
    let body = std::fs::read_to_string(&path).unwrap();
    let v: Value = serde_json::from_str(&body).unwrap();
    assert_eq!(v["failed"], 0);
}

/// Minimal JSON-Schema validator covering the subset the shipped schema
/// uses: type, required, properties, additionalProperties, items, enum,
/// minimum.
fn validate(schema: &Value, instance: &Value, path: &str) -> Vec<String> {
    let mut errors = Vec::new();
    if let Some(ty) = schema.get("type").and_then(|t| t.as_str()) {
        let ok = match ty {
            "object" => instance.is_object(),
            "array" => instance.is_array(),
            "string" => instance.is_string(),
            "integer" => instance.is_i64() || instance.is_u64(),
            "number" => instance.is_number(),
            "boolean" => instance.is_boolean(),
            _ => true,
        };
        if !ok {
            errors.push(format!("{path}: expected type {ty}"));
            return errors;
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(|e| e.as_array()) {
        if !allowed.contains(instance) {
            errors.push(format!("{path}: {instance} not in enum"));
        }
    }
    if let Some(min) = schema.get("minimum").and_then(|m| m.as_i64()) {
        if let Some(v) = instance.as_i64() {
            if v < min {
                errors.push(format!("{path}: {v} below minimum {min}"));
            }
        }
    }
    if let Some(obj) = instance.as_object() {
        if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
            for key in required {
                let key = key.as_str().unwrap();
                if !obj.contains_key(key) {
                    errors.push(format!("{path}: missing required key {key}"));
                }
            }
        }
        let props = schema.get("properties").and_then(|p| p.as_object());
        let additional = schema.get("additionalProperties");
        for (key, value) in obj {
            if let Some(sub) = props.and_then(|p| p.get(key)) {
                errors.extend(validate(sub, value, &format!("{path}.{key}")));
            } else {
                match additional {
                    Some(Value::Bool(false)) => {
                        errors.push(format!("{path}: unexpected key {key}"))
                    }
                    Some(sub @ Value::Object(_)) => {
                        errors.extend(validate(sub, value, &format!("{path}.{key}")));
                    }
                    _ => {}
                }
            }
        }
    }
    if let Some(arr) = instance.as_array() {
        if let Some(items) = schema.get("items") {
            for (i, item) in arr.iter().enumerate() {
                errors.extend(validate(items, item, &format!("{path}[{i}]")));
            }
        }
    }
    errors
}
