use std::process::Command;

use weyl_diagrams::cli::{run, Outcome};

fn call(args: &[&str]) -> Outcome {
    run(std::iter::once("weyl-diagrams").chain(args.iter().copied()))
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_weyl-diagrams"))
}

#[test]
fn verify_a2_json() {
    let out = call(&["verify", "--type", "A", "--rank", "2", "--word", "1,2,1", "--format", "json"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let report: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(report["positive_count"], 6);
    assert_eq!(report["interval_count"], 6);
    assert_eq!(report["type"], "A2");
    assert!(report.get("elapsed_ms").is_none());
    for (key, value) in report.as_object().unwrap() {
        if key.ends_with("_ok") {
            assert_eq!(value, true, "{key}");
        }
    }
}

#[test]
fn verify_output_is_deterministic_and_written() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let args = [
        "verify", "--type", "A", "--rank", "3", "--word", "2,1,3,2", "--format", "json", "--output",
        path.to_str().unwrap(),
    ];
    let first = call(&args);
    let second = call(&args);
    assert_eq!(first, second);
    assert_eq!(first.code, 0);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first.stdout);
    let report: serde_json::Value = serde_json::from_str(&first.stdout).unwrap();
    assert_eq!(report["le_equivalence_ok"], true);
    assert_eq!(report["positive_count"], 14);
}

#[test]
fn verify_timing_only_on_request() {
    let out = call(&["verify", "--type", "B", "--rank", "2", "--word", "1,2", "--timing"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("elapsed_ms:"));
}

#[test]
fn positive_diagram_example() {
    let out = call(&["positive", "--type", "A", "--rank", "2", "--word", "1,2,1", "--diagram", "1,3"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "false\n");
    let out = call(&["positive", "--type", "A", "--rank", "2", "--word", "1,2,1", "--diagram", "2,3"]);
    assert_eq!(out.stdout, "true\n");
}

#[test]
fn non_reduced_word_is_precondition_error() {
    let out = call(&["betas", "--type", "A", "--rank", "2", "--word", "1,1"]);
    assert_eq!(out.code, 3);
    assert!(out.stderr.contains("1,1"), "{}", out.stderr);
    assert_eq!(out.stderr.lines().count(), 1);
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors() {
    let bad_token = call(&["positive", "--type", "A", "--rank", "2", "--word", "1,x", "--diagram", ""]);
    assert_eq!(bad_token.code, 2);
    assert_eq!(call(&["betas", "--type", "A", "--rank", "2"]).code, 2);
    assert_eq!(call(&["frobnicate"]).code, 2);
    assert_eq!(call(&["roots", "--type", "E", "--rank", "5"]).code, 2);
    assert_eq!(call(&["qm", "--p", "0", "--m", "2"]).code, 2);
}

#[test]
fn out_of_range_positions_are_precondition_errors() {
    let out = call(&["positive", "--type", "A", "--rank", "2", "--word", "1,2,1", "--diagram", "4"]);
    assert_eq!(out.code, 3);
    let out = call(&["betas", "--type", "A", "--rank", "2", "--word", "3"]);
    assert_eq!(out.code, 3);
}

#[test]
fn empty_word_and_diagram() {
    let out = call(&["enumerate", "--type", "A", "--rank", "2", "--word", ""]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout, "{}\ncount: 1\n");
    let out = call(&["zeta", "--type", "A", "--rank", "2", "--word", "1,2", "--diagram", ""]);
    assert!(out.stdout.contains("zeta: length 0"));
}

#[test]
fn enumerate_and_interval() {
    let out = call(&["enumerate", "--type", "A", "--rank", "2", "--word", "1,2,1"]);
    assert_eq!(out.stdout, "{}\n{1}\n{2}\n{1,2}\n{2,3}\n{1,2,3}\ncount: 6\n");
    let out = call(&["interval", "--type", "A", "--rank", "3", "--word", "2,1,3,2"]);
    assert_eq!(out.stdout, "14\n");
}

#[test]
fn zeta_and_diagram_for() {
    let out = call(&["zeta", "--type", "A", "--rank", "2", "--word", "1,2,1", "--diagram", "1,2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["zeta"]["length"], 2);
    assert_eq!(v["zeta"]["one_line"], serde_json::json!([2, 3, 1]));
    assert_eq!(v["zeta_prime"]["one_line"], serde_json::json!([3, 1, 2]));

    let out = call(&["diagram-for", "--type", "A", "--rank", "2", "--word", "1,2,1", "--element", "2,1"]);
    assert_eq!(out.stdout, "{2,3}\n");
    let out = call(&["diagram-for", "--type", "A", "--rank", "2", "--word", "1,2", "--element", "2,1"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.starts_with("none"));
}

#[test]
fn census_and_roots() {
    let out = call(&["census", "--type", "B", "--rank", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!((v["n"].as_u64(), v["positive_count"].as_u64(), v["group_order"].as_u64()), (Some(4), Some(8), Some(8)));
    let out = call(&["roots", "--type", "A", "--rank", "2"]);
    assert_eq!(out.stdout, "a1\na2\na1+a2\n");
}

#[test]
fn grid_commands() {
    let out = call(&["qm", "--p", "2", "--m", "2"]);
    assert_eq!((out.code, out.stdout.as_str(), out.stderr.as_str()), (0, "2,1,3,2\n", ""));
    let out = call(&["qm", "--p", "1", "--m", "3"]);
    assert!(out.stderr.starts_with("warning:"));

    assert_eq!(call(&["le", "--p", "2", "--m", "2", "--grid", "1,2 2,2"]).stdout, "true\n");
    assert_eq!(call(&["le", "--p", "2", "--m", "2", "--grid", "1,2 2,1"]).stdout, "true\n");
    assert_eq!(call(&["le", "--p", "2", "--m", "2", "--grid", "2,2"]).stdout, "false\n");

    let out = call(&["pipedream", "--p", "2", "--m", "2", "--grid", "1,1 1,2 2,1 2,2"]);
    assert_eq!(out.stdout, "3 4 1 2\n");
    let out = call(&["pipedream", "--p", "2", "--m", "2", "--render"]);
    assert!(!out.stdout.contains('+'));
    assert_eq!(weyl_diagrams::grassmann::trace_wiring(&out.stdout).unwrap(), vec![1, 2, 3, 4]);
}

#[test]
fn binary_exit_codes_and_cap_override() {
    let ok = binary().args(["positive", "--type", "A", "--rank", "2", "--word", "1,2,1", "--diagram", "1,3"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout), "false\n");

    let capped = binary()
        .env("WEYL_DIAGRAMS_SWEEP_CAP", "2")
        .args(["enumerate", "--type", "A", "--rank", "2", "--word", "1,2,1"])
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(4));

    let bad_cap = binary()
        .env("WEYL_DIAGRAMS_SWEEP_CAP", "lots")
        .args(["enumerate", "--type", "A", "--rank", "2", "--word", "1,2,1"])
        .output()
        .unwrap();
    assert_eq!(bad_cap.status.code(), Some(2));

    let help = binary().arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&help.stdout).contains("1-based"));
}

#[test]
fn d3_warning_on_stderr() {
    let out = call(&["census", "--type", "D", "--rank", "3"]);
    assert_eq!(out.code, 0);
    assert!(out.stderr.contains("D3 is isomorphic to A3"));
}
