use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_evifuse"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

/// Value printed on the line starting with `prefix`.
fn value_after(text: &str, prefix: &str) -> f64 {
    let line = text
        .lines()
        .find(|l| l.starts_with(prefix))
        .unwrap_or_else(|| panic!("no line `{prefix}` in\n{text}"));
    line.rsplit(['=', ' ']).next().unwrap().parse().unwrap()
}

fn assert_near(got: f64, want: f64, tol: f64) {
    assert!((got - want).abs() <= tol, "{got} vs {want}");
}

#[test]
fn hyperset_listings() {
    let three = stdout(&["hyperset", "3"]);
    let lines: Vec<_> = three.lines().collect();
    assert_eq!(lines.len(), 20);
    assert_eq!(lines[19], "count: 19");

    let two = stdout(&["hyperset", "2"]);
    assert_eq!(two.lines().count(), 6);
    assert!(two.lines().any(|l| l.starts_with("t1 & t2 ")));

    let zero = stdout(&["hyperset", "0"]);
    let elements: Vec<_> = zero.lines().filter(|l| !l.starts_with("count")).collect();
    assert_eq!(elements.len(), 1);
    assert!(elements[0].starts_with("{}"));
}

#[test]
fn hyperset_rejects_large_frames() {
    assert_eq!(run(&["hyperset", "6"]).status.code(), Some(2));
    assert_eq!(
        run(&["hyperset", "7", "--allow-huge"]).status.code(),
        Some(2)
    );
}

#[test]
fn weather_under_dempster() {
    let out = stdout(&["fuse", &fixture("weather.json")]);
    let rows: Vec<_> = out.lines().skip(2).take(3).collect();
    assert_eq!(
        rows[0].split_whitespace().collect::<Vec<_>>(),
        ["S", "0.9772"]
    );
    assert_eq!(
        rows[1].split_whitespace().collect::<Vec<_>>(),
        ["R", "0.0155"]
    );
    assert_eq!(
        rows[2].split_whitespace().collect::<Vec<_>>(),
        ["S", "|", "R", "0.0073"]
    );
    assert_near(value_after(&out, "K ="), 0.876, 1e-9);
}

#[test]
fn zadeh_under_dsm_keeps_the_intersection_on_top() {
    let out = stdout(&["fuse", &fixture("zadeh_dsm.json")]);
    assert!(out.starts_with("rule: dsm\n"));
    let top = out.lines().nth(2).unwrap();
    assert_eq!(
        top.split_whitespace().collect::<Vec<_>>(),
        ["M", "&", "C", "0.9801"]
    );
    assert_near(value_after(&out, "total before"), 1.0, 1e-9);
}

#[test]
fn zadeh_under_dempster_warns() {
    let out = run(&["fuse", &fixture("zadeh_dst.json")]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_near(value_after(&text, "T "), 1.0, 1e-9);
    assert_near(value_after(&text, "K ="), 1e-4, 1e-9);
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning: conflict"));
}

#[test]
fn dsm_rule_can_be_forced_on_classical_sources() {
    let out = stdout(&["fuse", "--rule", "dsm", &fixture("zadeh_dst.json")]);
    assert!(out.lines().nth(2).unwrap().starts_with("M & C"));
}

#[test]
fn entropy_of_two_sources() {
    let out = stdout(&["entropy", &fixture("entropy.json")]);
    assert_near(value_after(&out, "H(M1) ="), 1.0889, 1e-3);
    assert_near(value_after(&out, "H(M2) ="), 1.2206, 1e-3);
    assert_near(value_after(&out, "H(M1, M2) ="), 2.3095, 1e-3);
    assert_near(value_after(&out, "H(M1 | M2) ="), 1.0889, 1e-3);
    assert_near(value_after(&out, "H(M2 | M1) ="), 1.2206, 1e-3);
    assert_near(value_after(&out, "H(combined) ="), 0.96023, 1e-3);
    assert!(value_after(&out, "chain-rule residual").abs() < 1e-9);
}

#[test]
fn generalized_entropy_with_strength_column() {
    let out = stdout(&["entropy", "--generalized", &fixture("b15.json")]);
    assert_near(value_after(&out, "H_g(B15) ="), 1.299, 1.5e-3);
    let row = out.lines().find(|l| l.starts_with("t1 & t2")).unwrap();
    assert!(row.contains("1/2"));
}

#[test]
fn certain_source_has_no_entropy() {
    let out = stdout(&["entropy", &fixture("certain.json")]);
    assert_eq!(out, "H(sure) = 0.0000\n");
}

#[test]
fn pignistic_tables() {
    let out = stdout(&["pignistic", &fixture("weather.json")]);
    assert_near(value_after(&out, "S "), 0.84, 1e-9);
    let out = stdout(&["pignistic", &fixture("entropy.json")]);
    assert_near(value_after(&out, "t1 "), 0.7, 1e-9);
}

#[test]
fn query_on_fused_zadeh() {
    let out = stdout(&[
        "query",
        &fixture("zadeh_dsm.json"),
        "--bel",
        "M & C",
        "--bel",
        "M",
        "--bel",
        "T",
    ]);
    assert_near(value_after(&out, "Bel(M & C) ="), 0.9801, 1e-9);
    assert_near(value_after(&out, "Bel(M) ="), 0.99, 1e-9);
    assert_near(value_after(&out, "Bel(T) ="), 0.0199, 1e-9);
    assert!(out.contains("  + m(M & C) = 0.9801"));
}

#[test]
fn conditional_query() {
    let out = stdout(&[
        "query",
        &fixture("weather.json"),
        "--bel",
        "S",
        "--given",
        "S | R",
    ]);
    assert_near(value_after(&out, "Bel(S) given S | R ="), 0.9772, 5e-5);
}

#[test]
fn interval_to_masses() {
    let out = stdout(&["interval2bpa", "--lo", "0.2", "--hi", "0.4"]);
    assert_near(value_after(&out, "m(A) "), 0.124, 5e-3);
    assert_near(value_after(&out, "m(A^c) "), 0.524, 5e-3);
    assert_near(value_after(&out, "m(A | A^c) "), 0.2, 1e-9);
    assert_eq!(out.lines().count(), 5);
}

#[test]
fn neutrosophic_reports_fuse() {
    let out = stdout(&[
        "nfuse",
        &fixture("witness_a.json"),
        &fixture("witness_b.json"),
    ]);
    assert_near(value_after(&out, "total ="), 1.0, 1e-9);
    let single = stdout(&["nfuse", &fixture("witness_a.json")]);
    assert_ne!(out, single);
    let strict = stdout(&["nfuse", "--strict-paper", &fixture("witness_a.json")]);
    assert_ne!(strict, single);
}

#[test]
fn classify_dialetheist() {
    let out = stdout(&["classify", "(1;0;1)"]);
    assert!(out
        .lines()
        .any(|l| l.starts_with("labels:") && l.contains("dialetheist")));
    assert_near(value_after(&out, "n_sup ="), 2.0, 1e-12);
}

#[test]
fn neutrosophic_operators() {
    assert_eq!(
        stdout(&["nop", "and", "(0.3;0;0)", "(0.6;0;0)"]),
        "(0.18; 0; 0)\n"
    );
    assert_eq!(
        stdout(&["nop", "or", "(0.3;0;0)", "(0.6;0;0)"]),
        "(0.72; 0; 0)\n"
    );
    assert_eq!(
        stdout(&["nop", "not", "(0.3;0.2;0.6)"]),
        "(0.7; 0.8; 0.4)\n"
    );
    assert_eq!(
        stdout(&["nop", "subset", "(0.3;0.4;0.6)", "([0.2,0.5];[0,0.4];0.6)"]),
        "true\n"
    );
    let product = stdout(&["nop", "difference", "(0.6;0.2;0.3)", "(0.5;0.1;0.4)"]);
    let legacy = stdout(&[
        "nop",
        "difference",
        "--legacy-preface-difference",
        "(0.6;0.2;0.3)",
        "(0.5;0.1;0.4)",
    ]);
    assert_ne!(product, legacy);
    assert_eq!(run(&["nop", "and", "(1;0;0)"]).status.code(), Some(2));
}

#[test]
fn validation_errors_exit_with_two() {
    let out = run(&["entropy", &fixture("invalid.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("sum to"));
    assert_eq!(
        run(&["fuse", &fixture("certain.json")]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["fuse", &fixture("missing.json")]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["classify", "(1;0"]).status.code(), Some(2));
}

#[test]
fn total_contradiction_exits_with_three() {
    let out = run(&["fuse", &fixture("total_conflict.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("contradictory"));
}

#[test]
fn json_output_round_trips() {
    for (rule, file) in [("dempster", "weather.json"), ("dsm", "zadeh_dsm.json")] {
        let json = stdout(&["fuse", "--json", "--rule", rule, &fixture(file)]);
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["rule"], rule);

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("fused.json");
        std::fs::write(&path, &json).unwrap();
        let reread = stdout(&["pignistic", "--json", path.to_str().unwrap()]);
        let p: Value = serde_json::from_str(&reread).unwrap();
        let total: f64 = p["fused"]
            .as_object()
            .unwrap()
            .values()
            .map(|x| x.as_f64().unwrap())
            .sum();
        assert_near(total, 1.0, 1e-9);
    }
}

#[test]
fn fixtures_rerun_identically() {
    let cases: [&[&str]; 4] = [
        &["fuse", &fixture("weather.json")],
        &["fuse", &fixture("zadeh_dsm.json"), "--json"],
        &["entropy", "--generalized", &fixture("entropy.json")],
        &[
            "nfuse",
            &fixture("witness_a.json"),
            &fixture("witness_b.json"),
        ],
    ];
    for args in cases {
        assert_eq!(stdout(args), stdout(args));
    }
}
