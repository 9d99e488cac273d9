use std::collections::HashMap;
use std::process::{Command, Output};

use partition_verify::identities::catalog;
use serde_json::Value;

fn pverify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pverify")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn verify_euler_passes() {
    let o = pverify(&["verify", "--id", "euler_distinct_odd", "--order", "500"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("euler_distinct_odd"));
}

#[test]
fn sequence_prefix() {
    let o = pverify(&["sequence", "--id", "igppf4", "--len", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1,1,1,2,3,4,5,7,10,13,16,21");
}

#[test]
fn count_prime_to_three() {
    let o = pverify(&["count", "--n", "7", "--constraint", "prime-to-3"]);
    assert_eq!(stdout(&o).trim(), "9");
    let o = pverify(&["count", "--n", "9", "--constraint", "distinct-not-div:5"]);
    assert_eq!(stdout(&o).trim(), "6");
}

#[test]
fn expand_text_and_json() {
    let o = pverify(&["expand", "--product", "(1-x^k)^-1", "--order", "10"]);
    assert_eq!(stdout(&o).trim(), "1,1,2,3,5,7,11,15,22,30,42");
    let o = pverify(&["expand", "--product", "theta4_inv_def", "--order", "9", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let coeffs: Vec<&str> = v["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(coeffs, ["1", "2", "4", "8", "14", "24", "40", "64", "100", "154"]);
}

#[test]
fn arith_value() {
    assert_eq!(stdout(&pverify(&["arith", "--fn", "two_nu", "--n", "20"])).trim(), "4");
    assert_eq!(stdout(&pverify(&["arith", "--fn", "a_plus", "--n", "4", "--s", "4"])).trim(), "0");
    assert_eq!(pverify(&["arith", "--fn", "q_s", "--n", "4"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two_with_diagnostics() {
    for args in [
        vec!["frobnicate"],
        vec!["verify", "--bogus"],
        vec!["verify", "--id", "no_such_identity"],
        vec!["count", "--n", "3", "--constraint", "nope"],
        vec!["dirichlet", "--id", "d99"],
        vec!["analytic", "--check", "nothing"],
        vec!["schur", "--check", "littlewood", "--m", "3", "--s", "2"],
    ] {
        let o = pverify(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn verify_all_lists_every_record_once() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = pverify(&["verify-all", "--order-scale", "0.25", "--format", "json", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["tool_version"], env!("CARGO_PKG_VERSION"));
    assert!(report["timestamp"].is_string());
    let checks = report["checks"].as_array().unwrap();
    let mut seen: HashMap<&str, usize> = HashMap::new();
    for c in checks {
        *seen.entry(c["id"].as_str().unwrap()).or_default() += 1;
        assert_eq!(c["module"], "identities");
        assert_eq!(c["status"], "match", "{c}");
    }
    let ids: Vec<&str> = catalog().iter().map(|r| r.id.as_str()).collect();
    assert_eq!(checks.iter().map(|c| c["id"].as_str().unwrap()).collect::<Vec<_>>(), ids, "catalog order");
    assert!(seen.values().all(|&n| n == 1));
    let claims: Vec<&Value> = checks.iter().filter(|c| c["claim"] == true).collect();
    assert_eq!(claims.len(), 1);
    assert_eq!(claims[0]["id"], "two_modular");
}

#[test]
fn json_report_reparses_to_the_same_document() {
    let o = pverify(&["dirichlet", "--id", "d64", "--limit", "1000", "--format", "json"]);
    let text = stdout(&o);
    let first: Value = serde_json::from_str(&text).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&first).unwrap()).unwrap();
    assert_eq!(first, again);
    let keys: Vec<&String> = first["checks"][0].as_object().unwrap().keys().collect();
    for k in ["module", "id", "parameters", "status", "elapsed_ms", "claim"] {
        assert!(keys.iter().any(|key| key.as_str() == k), "{k}");
    }
}

#[test]
fn text_output_is_deterministic() {
    let args = ["verify-all", "--order-scale", "0.2", "--threads", "2"];
    let a = pverify(&args);
    let b = pverify(&["verify-all", "--order-scale", "0.2"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout(&a).lines().count(), catalog().len() + 1);
}

#[test]
fn check_subcommands_pass() {
    for args in [
        vec!["dirichlet", "--limit", "2000"],
        vec!["dirichlet", "--id", "d60@4"],
        vec!["analytic", "--check", "mellin", "--s", "3"],
        vec!["analytic", "--check", "theta"],
        vec!["analytic", "--check", "hagis", "--s", "10", "--n", "2000"],
        vec!["analytic", "--check", "hyperbolic", "--t", "2", "--terms", "10000"],
        vec!["analytic", "--check", "parastat", "--t", "0.1"],
        vec!["schur", "--check", "det-vs-ssyt", "--s", "2", "--m", "3"],
        vec!["schur", "--check", "littlewood", "--m", "2", "--d", "6"],
    ] {
        let o = pverify(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        assert!(stdout(&o).contains(" 0 failed"), "{args:?}");
    }
}

#[test]
fn claims_can_be_excluded_from_the_exit_status() {
    let o = pverify(&["verify-all", "--order-scale", "0.1", "--strict", "false"]);
    assert_eq!(o.status.code(), Some(0));
    let o = pverify(&["verify-all", "--strict", "maybe"]);
    assert_eq!(o.status.code(), Some(2));
}
