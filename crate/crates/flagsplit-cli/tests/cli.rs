//! End-to-end runs of the binary: golden JSON outputs, report round-trips,
//! and the exit-status contract.

use std::process::{Command, Output};

use flagsplit::report::{NormalReport, SplitReport};

fn flagsplit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_flagsplit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(args: &[&str]) -> serde_json::Value {
    let out = flagsplit(args);
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn golden(name: &str) -> serde_json::Value {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn generate_matches_golden() {
    assert_eq!(
        stdout_json(&["generate", "A2", "--json"]),
        golden("generate_a2.json")
    );
}

#[test]
fn leq_matches_golden_and_prints_true() {
    assert_eq!(
        stdout_json(&["leq", "A2", "1", "12", "--json"]),
        golden("leq_a2.json")
    );
    let out = flagsplit(&["leq", "A2", "1", "12"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "true");
}

#[test]
fn hasse_export_matches_golden() {
    assert_eq!(
        stdout_json(&["export", "A1", "--format", "json"]),
        golden("hasse_a1.json")
    );
    let dot = flagsplit(&["export", "A1", "--format", "dot"]);
    assert!(String::from_utf8_lossy(&dot.stdout).starts_with("digraph bruhat {"));
}

#[test]
fn intersect_matches_golden() {
    assert_eq!(
        stdout_json(&["intersect", "B2", "e:121", "e:212", "--json"]),
        golden("intersect_b2.json")
    );
}

#[test]
fn verify_normal_round_trips_against_schema() {
    let value = stdout_json(&["verify-normal", "A1", "--json"]);
    assert_eq!(value, golden("verify_normal_a1.json"));
    let report: NormalReport = serde_json::from_value(value).unwrap();
    assert_eq!(report.r#type, "verify-normal");
    assert!(report.failures.is_empty());
}

#[test]
fn verify_splitting_round_trips_against_schema() {
    let value = stdout_json(&["verify-splitting", "--n", "2", "--prime", "3", "--json"]);
    assert_eq!(value, golden("splitting_n2_p3.json"));
    let report: SplitReport = serde_json::from_value(value).unwrap();
    assert!(report.failures.is_empty());
    assert_eq!(report.candidates.iter().filter(|c| c.accepted).count(), 2);
}

#[test]
fn exit_status_contract() {
    // success
    let ok = flagsplit(&["verify-star", "A2"]);
    assert_eq!(ok.status.code(), Some(0));

    // verification failure: a closed system that breaks the subsystem axiom
    let bad = flagsplit(&["verify-normal", "A2", "--seed-list", "e:121,e:e"]);
    assert_eq!(bad.status.code(), Some(1));
    let text = String::from_utf8_lossy(&bad.stdout);
    assert!(text.contains("violation"), "counterexamples are printed");

    // usage errors
    let unknown = flagsplit(&["generate", "H3"]);
    assert_eq!(unknown.status.code(), Some(2));
    let over_cap = flagsplit(&["generate", "E8"]);
    assert_eq!(over_cap.status.code(), Some(2));
    let bad_word = flagsplit(&["leq", "A2", "13", "12"]);
    assert_eq!(bad_word.status.code(), Some(2));
    let bad_args = flagsplit(&["no-such-verb"]);
    assert_eq!(bad_args.status.code(), Some(2));
}

#[test]
fn closure_reports_whether_the_family_is_full() {
    let value = stdout_json(&["closure", "A2", "--json"]);
    assert_eq!(value["full_family"], serde_json::Value::Bool(true));
    assert_eq!(value["members"].as_array().unwrap().len(), 19);

    let partial = stdout_json(&["closure", "A2", "--seed-list", "e:12,e:21", "--json"]);
    assert_eq!(partial["full_family"], serde_json::Value::Bool(false));
}

#[test]
fn decompose_identifies_cells() {
    // x31 = 0 with x21, x32 nonzero: the generic point of that divisor
    let value = stdout_json(&[
        "decompose",
        "--n",
        "3",
        "--prime",
        "2",
        "1,0,0;1,1,0;0,1,1",
        "--json",
    ]);
    assert_eq!(value["opposite_word"], "e");
    assert_eq!(value["schubert_word"], "12");
    let singular = flagsplit(&["decompose", "--n", "2", "--prime", "2", "1,1;1,1"]);
    assert_eq!(singular.status.code(), Some(2));
}

#[test]
fn user_candidates_flow_through_the_sweep() {
    let dir = std::env::temp_dir().join("flagsplit-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("candidates.json");
    std::fs::write(&path, r#"[["x21 + x32"], ["x21*x31 + x32"]]"#).unwrap();
    let value = stdout_json(&[
        "verify-splitting",
        "--n",
        "3",
        "--prime",
        "2",
        "--candidates",
        path.to_str().unwrap(),
        "--json",
    ]);
    let report: SplitReport = serde_json::from_value(value).unwrap();
    let users: Vec<_> = report
        .candidates
        .iter()
        .filter(|c| c.label.starts_with("user-candidate"))
        .collect();
    assert_eq!(users.len(), 2);
    assert!(users.iter().all(|c| !c.accepted));
    assert!(report.failures.is_empty());
}
