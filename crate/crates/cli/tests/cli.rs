//! End to end tests against the compiled binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn enumerate_partial_injections_on_three_points() {
    let out = run(&[
        "enumerate",
        "--category",
        "fininj",
        "--construction",
        "P",
        "--object-size",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("elements: 34 (closed form predicts 34)"));
    assert!(text.contains("inverse: true"));
}

#[test]
fn enumerate_second_iteration_on_two_points() {
    let out = run(&[
        "enumerate",
        "--category",
        "fininj",
        "--construction",
        "Piter:2",
        "--object-size",
        "2",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("elements: 14 (closed form predicts 14)"));
    assert!(text.contains("idempotents: 9"));
    assert!(text.contains("orthodox: true"));
    assert!(text.contains("inverse: false"));
}

#[test]
fn enumerate_q_over_the_dual_category() {
    let out = run(&[
        "enumerate",
        "--category",
        "finsurj-op",
        "--construction",
        "Q",
        "--object-size",
        "3",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("factorizable: true"));
    // Proper subset of the 32-element dual monoid.
    let q: usize = text
        .lines()
        .find_map(|l| l.strip_prefix("elements: "))
        .and_then(|l| l.split_whitespace().next())
        .unwrap()
        .parse()
        .unwrap();
    assert!(0 < q && q < 32);
}

#[test]
fn export_is2_as_json() {
    let out = run(&[
        "export",
        "--category",
        "fininj",
        "--construction",
        "P",
        "--object-size",
        "2",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 7);
    assert_eq!(v["table"].as_array().unwrap().len(), 7);
    assert_eq!(v["table"][0].as_array().unwrap().len(), 7);
    assert_eq!(v["idempotents"].as_array().unwrap().len(), 4);
    assert_eq!(v["verdicts"]["inverse"], serde_json::Value::Bool(true));
}

#[test]
fn export_trivial_monoid() {
    let out = run(&[
        "export",
        "--category",
        "finsurj-op",
        "--construction",
        "P",
        "--object-size",
        "1",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 1);
    assert_eq!(v["table"], serde_json::json!([[0]]));
}

#[test]
fn export_rs22_as_csv() {
    let out = run(&[
        "export",
        "--category",
        "fininj",
        "--construction",
        "Piter:2",
        "--object-size",
        "2",
        "--format",
        "cayley-csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 15);
    assert_eq!(lines[0].matches('"').count(), 28);
    for row in &lines[1..] {
        assert_eq!(row.split(',').count(), 14);
        assert!(row.split(',').all(|c| c.parse::<usize>().unwrap() < 14));
    }
}

#[test]
fn exports_are_deterministic() {
    let args = [
        "export",
        "--category",
        "fininj",
        "--construction",
        "Pquasi:2",
        "--object-size",
        "2",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn export_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("is2.json");
    let out = run(&[
        "export",
        "--category",
        "fininj",
        "--construction",
        "P",
        "--object-size",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["elements"].as_array().unwrap().len(), 7);
}

#[test]
fn size_cap_reports_the_prediction() {
    let out = run(&[
        "enumerate",
        "--category",
        "fininj",
        "--construction",
        "P",
        "--object-size",
        "3",
        "--cap",
        "5",
    ]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("size cap exceeded"));
    assert!(err.contains("34"));
}

#[test]
fn verify_suites_pass() {
    for suite in ["isn", "rsnk", "ibp"] {
        let out = run(&["verify", "--suite", suite, "--max-n", "3", "--max-k", "2"]);
        assert!(out.status.success(), "suite {suite} failed");
        let text = stdout(&out);
        assert!(text.contains("PASS"));
        assert!(!text.contains("FAIL"));
    }
}

#[test]
fn verify_rejects_unknown_suite() {
    let out = run(&["verify", "--suite", "bogus"]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("unknown suite"));
}

#[test]
fn iteration_over_the_dual_category_fails_gracefully() {
    let out = run(&[
        "enumerate",
        "--category",
        "finsurj-op",
        "--construction",
        "Piter:2",
        "--object-size",
        "2",
    ]);
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("ComplementUnsupported"));
}
