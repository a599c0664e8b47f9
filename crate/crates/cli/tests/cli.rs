//! Black-box tests against the built binary: output shape, determinism,
//! exit codes, and conformance of `--json` output to the shipped schema.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ptwreath"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn schema() -> Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas/report.schema.json");
    serde_json::from_str(&std::fs::read_to_string(path).expect("schema file")).expect("valid json")
}

/// Validates the subset of JSON Schema the report schema uses: `type`,
/// `required`, `properties`, `additionalProperties`, `items`, `enum`,
/// `minimum`, `minLength`.
fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(t) = schema.get("type").and_then(Value::as_str) {
        let ok = match t {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.as_u64().is_some() || value.as_i64().is_some(),
            other => return Err(format!("{path}: unhandled schema type {other}")),
        };
        if !ok {
            return Err(format!("{path}: expected {t}, got {value}"));
        }
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return Err(format!("{path}: {value} not one of {options:?}"));
        }
    }
    if let Some(min) = schema.get("minimum").and_then(Value::as_i64) {
        if value.as_i64().unwrap_or(i64::MAX) < min {
            return Err(format!("{path}: {value} below minimum {min}"));
        }
    }
    if let Some(min) = schema.get("minLength").and_then(Value::as_u64) {
        if (value.as_str().map_or(0, str::len) as u64) < min {
            return Err(format!("{path}: shorter than {min}"));
        }
    }
    if let Some(required) = schema.get("required").and_then(Value::as_array) {
        for key in required.iter().filter_map(Value::as_str) {
            if value.get(key).is_none() {
                return Err(format!("{path}: missing required key {key}"));
            }
        }
    }
    if let Some(object) = value.as_object() {
        let properties = schema.get("properties").and_then(Value::as_object);
        for (key, item) in object {
            match properties.and_then(|p| p.get(key)) {
                Some(sub) => validate(sub, item, &format!("{path}/{key}"))?,
                None => match schema.get("additionalProperties") {
                    Some(Value::Bool(false)) => {
                        return Err(format!("{path}: unexpected key {key}"));
                    }
                    Some(sub) if sub.is_object() => {
                        validate(sub, item, &format!("{path}/{key}"))?
                    }
                    _ => {}
                },
            }
        }
    }
    if let (Some(array), Some(items)) = (value.as_array(), schema.get("items")) {
        for (i, item) in array.iter().enumerate() {
            validate(items, item, &format!("{path}/{i}"))?;
        }
    }
    Ok(())
}

fn assert_valid_report(out: &Output) -> Value {
    let report: Value = serde_json::from_str(&stdout(out)).expect("json output");
    validate(&schema(), &report, "$").unwrap();
    report
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("check {name} present"))
}

#[test]
fn order_prints_the_closed_formula_value() {
    let out = run(&["order", "5", "5", "--json", "--no-timing"]);
    assert!(out.status.success());
    let report = assert_valid_report(&out);
    assert_eq!(
        check(&report, "formula")["values"]["order"],
        "88798957515761812069376"
    );
}

#[test]
fn every_report_variant_matches_the_schema() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("edges.txt");
    let runs: Vec<Vec<&str>> = vec![
        vec!["order", "2", "2", "--enumerate"],
        vec!["verify-generators", "2", "2"],
        vec!["verify-congruence", "2", "2", "--no-timing"],
        vec!["verify-presentation", "2", "2", "--define"],
        vec!["eval", "x1 x2", "2", "2", "--block"],
        vec!["enumerate", "2", "2", "--gens", "x1,x2", "--export", edges.to_str().unwrap()],
        vec!["enumerate", "2", "2", "--limit", "5"],
    ];
    for mut args in runs {
        args.push("--json");
        let out = run(&args);
        assert!(out.status.code() == Some(0), "{args:?}: {out:?}");
        assert_valid_report(&out);
    }
}

#[test]
fn no_timing_output_is_reproducible() {
    for args in [
        ["verify-generators", "2", "2", "--no-timing"].as_slice(),
        ["verify-presentation", "2", "2", "--no-timing", "--json"].as_slice(),
    ] {
        let first = run(args);
        let second = run(args);
        assert!(first.status.success());
        assert_eq!(first.stdout, second.stdout, "{args:?} not reproducible");
    }
}

#[test]
fn eval_prints_elements() {
    let out = run(&["eval", "( rho sigma )^2", "2", "2", "--block"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "n=2 m=2 [-,-,3,4]\n");

    let out = run(&["eval", "x1^2", "2", "2"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "([1,2] | [1,2] ; [1,2])\n");
}

#[test]
fn eval_rejects_bad_words_with_usage_exit() {
    for args in [
        ["eval", "nosuch", "2", "2"].as_slice(),
        ["eval", "pi ^", "2", "2"].as_slice(),
        ["eval", "pi", "1", "2"].as_slice(),
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn domain_errors_exit_2() {
    for args in [
        ["order", "0", "2"].as_slice(),
        ["enumerate", "2", "2", "--gens", "x1,bogus"].as_slice(),
        ["verify-presentation", "4", "2"].as_slice(),
        ["verify-presentation", "2", "2", "--rp", "/nonexistent.rel"].as_slice(),
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn failing_checks_exit_1() {
    // a relation set that collapses everything cannot present the monoid
    let dir = tempfile::tempdir().unwrap();
    let rp = dir.path().join("collapse.rel");
    let mut file = std::fs::File::create(&rp).unwrap();
    writeln!(file, "pi = 1\nrho = 1\ntau = 1\nsigma = 1").unwrap();
    drop(file);
    let out = run(&[
        "verify-presentation", "2", "2", "--rp", rp.to_str().unwrap(), "--json", "--no-timing",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = assert_valid_report(&out);
    assert_eq!(check(&report, "rp-self-check")["status"], "fail");
    // with an unvalidated part, coset counts must be skipped, never trusted
    let out = run(&[
        "verify-presentation", "2", "2", "--rp", rp.to_str().unwrap(), "--define", "--json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = assert_valid_report(&out);
    assert_eq!(check(&report, "defines-wreath-product")["status"], "skipped");
    assert_eq!(check(&report, "defines-block-monoid")["status"], "skipped");
}

#[test]
fn blown_limits_skip_instead_of_failing() {
    let out = run(&["enumerate", "3", "3", "--limit", "10", "--json", "--no-timing"]);
    assert_eq!(out.status.code(), Some(0));
    let report = assert_valid_report(&out);
    assert_eq!(check(&report, "closure")["status"], "skipped");
}

#[test]
fn exported_edges_describe_the_right_cayley_graph() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("unit.edges");
    let out = run(&[
        "enumerate", "2", "2", "--gens", "x1,x2", "--export", path.to_str().unwrap(),
        "--json", "--no-timing",
    ]);
    assert!(out.status.success());
    let report = assert_valid_report(&out);
    let closure = check(&report, "closure");
    assert_eq!(closure["values"]["size"], "8");
    assert_eq!(closure["values"]["edges"], "16");

    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 16);
    for line in lines {
        let parts: Vec<&str> = line.split(' ').collect();
        let (from, gen, to) = (parts[0], parts[1], parts[2]);
        assert!(from.parse::<usize>().unwrap() < 8);
        assert!(to.parse::<usize>().unwrap() < 8);
        assert!(gen == "x1" || gen == "x2");
    }
}

#[test]
fn explicit_relation_files_match_the_bundled_sets() {
    let rp = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/rp_n2.rel");
    let rt = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/data/rt_m2.rel");
    let out = run(&[
        "verify-presentation", "2", "2",
        "--rp", rp.to_str().unwrap(),
        "--rt", rt.to_str().unwrap(),
        "--define", "--json", "--no-timing",
    ]);
    assert_eq!(out.status.code(), Some(0), "{out:?}");
    let report = assert_valid_report(&out);
    assert_eq!(check(&report, "defines-wreath-product")["values"]["size"], "324");
    assert_eq!(check(&report, "defines-block-monoid")["values"]["size"], "289");
    assert!(report["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
}
