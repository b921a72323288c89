//! End-to-end runs of the `deborda` binary: JSON contracts on stdout,
//! human-readable failures on stderr, exit statuses 0/1/2/3.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

const DEMO: &str = "2: a > b > c\n6: b > a > c\n7: c > a > b\n1: c > b > a\n";

fn demo_file(dir: &tempfile::TempDir) -> PathBuf {
    let path = dir.path().join("demo.txt");
    std::fs::write(&path, DEMO).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deborda"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(output: &Output) -> Value {
    assert!(
        output.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

#[test]
fn winners_by_rule_and_by_scoring() {
    let dir = tempfile::tempdir().unwrap();
    let profile = demo_file(&dir);
    let profile = profile.to_str().unwrap();

    let by_rule = run(&["winners", "--profile", profile, "--rule", "standard"]);
    let doc = stdout_json(&by_rule);
    assert_eq!(doc["winners"], serde_json::json!(["a"]));
    assert_eq!(doc["estimates"]["a"], "17");

    let by_scoring = run(&["winners", "--profile", profile, "--scoring", "0,1,2"]);
    assert_eq!(stdout_json(&by_scoring), doc);

    let plurality = run(&["winners", "--profile", profile, "--rule", "plurality"]);
    assert_eq!(stdout_json(&plurality)["winners"], serde_json::json!(["c"]));
}

#[test]
fn winners_needs_exactly_one_scoring_source() {
    let dir = tempfile::tempdir().unwrap();
    let profile = demo_file(&dir);
    let profile = profile.to_str().unwrap();

    let neither = run(&["winners", "--profile", profile]);
    assert_eq!(neither.status.code(), Some(2));

    let both = run(&[
        "winners",
        "--profile",
        profile,
        "--rule",
        "standard",
        "--scoring",
        "0,1,2",
    ]);
    assert_eq!(both.status.code(), Some(2));
}

#[test]
fn score_vectors_document() {
    let dir = tempfile::tempdir().unwrap();
    let profile = demo_file(&dir);
    let out = run(&["score-vectors", "--profile", profile.to_str().unwrap()]);
    let doc = stdout_json(&out);
    assert_eq!(
        doc,
        serde_json::json!({"a": [2, 15], "b": [6, 9], "c": [8, 8]})
    );
}

#[test]
fn eligible_reports_all_candidates() {
    let dir = tempfile::tempdir().unwrap();
    let profile = demo_file(&dir);
    let out = run(&[
        "eligible",
        "--profile",
        profile.to_str().unwrap(),
        "--mode",
        "strict",
    ]);
    let doc = stdout_json(&out);
    let verdicts = doc.as_array().unwrap();
    assert_eq!(verdicts.len(), 3);
    assert_eq!(verdicts[0]["candidate"], "a");
    assert_eq!(verdicts[0]["eligible"], true);
    assert_eq!(verdicts[1]["candidate"], "b");
    assert_eq!(verdicts[1]["eligible"], false);
    assert!(verdicts[1]["certificate"].is_object());
    assert_eq!(verdicts[2]["candidate"], "c");
    assert_eq!(verdicts[2]["eligible"], true);
    assert!(verdicts[2]["witness"].is_object());
}

#[test]
fn eligible_mode_defaults_to_strict() {
    let dir = tempfile::tempdir().unwrap();
    let profile = demo_file(&dir);
    let out = run(&[
        "eligible",
        "--profile",
        profile.to_str().unwrap(),
        "--candidate",
        "b",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(doc["mode"], "strict");
    assert_eq!(doc["eligible"], false);
}

#[test]
fn certify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let profile = demo_file(&dir);
    let profile = profile.to_str().unwrap();

    let ineligible = run(&["certify", "--profile", profile, "--candidate", "b"]);
    let doc = stdout_json(&ineligible);
    assert_eq!(doc["candidate"], "b");
    assert!(doc["certificate"]["weights"].is_object());

    let eligible = run(&["certify", "--profile", profile, "--candidate", "a"]);
    assert_eq!(eligible.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&eligible.stderr).contains("eligible"));

    let unknown = run(&["certify", "--profile", profile, "--candidate", "zz"]);
    assert_eq!(unknown.status.code(), Some(1));
}

#[test]
fn bad_profiles_exit_1_with_line_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "1: a > b\n2: a > a\n").unwrap();
    let out = run(&["score-vectors", "--profile", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("line 2"), "stderr: {stderr}");
}

#[test]
fn missing_file_exits_2() {
    let out = run(&["score-vectors", "--profile", "/nonexistent/profile.txt"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&out.stderr).is_empty());
}

#[test]
fn missing_profile_flag_exits_2() {
    let out = run(&["score-vectors"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_profile_format() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("demo.json");
    std::fs::write(
        &path,
        serde_json::json!({
            "candidates": ["a", "b", "c"],
            "ballots": [
                {"weight": 2, "order": ["a", "b", "c"]},
                {"weight": 6, "order": ["b", "a", "c"]},
                {"weight": 7, "order": ["c", "a", "b"]},
                {"weight": 1, "order": ["c", "b", "a"]},
            ]
        })
        .to_string(),
    )
    .unwrap();
    let out = run(&[
        "winners",
        "--profile",
        path.to_str().unwrap(),
        "--format",
        "json",
        "--rule",
        "antiplurality",
    ]);
    assert_eq!(stdout_json(&out)["winners"], serde_json::json!(["a"]));
}

#[test]
fn oracle_check_passes_on_demo_profile() {
    let dir = tempfile::tempdir().unwrap();
    let profile = demo_file(&dir);
    let out = run(&[
        "oracle-check",
        "--profile",
        profile.to_str().unwrap(),
        "--mode",
        "weak",
        "--bound",
        "20",
        "--require-equality",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(doc["subset_check"], "PASS");
    assert_eq!(doc["equality_check"], "PASS");
    assert_eq!(doc["oracle_eligible"], serde_json::json!(["a", "c"]));
}

#[test]
fn oracle_check_guard_exits_1() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wide.txt");
    std::fs::write(&path, "1: a > b > c > d > e\n").unwrap();
    let out = run(&[
        "oracle-check",
        "--profile",
        path.to_str().unwrap(),
        "--bound",
        "1000",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn plot_writes_svg_and_json_twin() {
    let dir = tempfile::tempdir().unwrap();
    let profile = demo_file(&dir);
    let svg_path = dir.path().join("hull.svg");
    let out = run(&[
        "plot",
        "--profile",
        profile.to_str().unwrap(),
        "-o",
        svg_path.to_str().unwrap(),
    ]);
    let stdout_doc = stdout_json(&out);
    assert_eq!(stdout_doc["boundary"], serde_json::json!(["a", "c"]));

    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.contains("<polyline class=\"pareto\" points=\"8,8 2,15\"/>"));

    let twin: Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("hull.json")).unwrap())
            .unwrap();
    assert_eq!(twin, stdout_doc);
}

#[test]
fn plot_rejects_other_dimensions() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("pair.txt");
    std::fs::write(&path, "1: x > y\n").unwrap();
    let out = run(&[
        "plot",
        "--profile",
        path.to_str().unwrap(),
        "-o",
        dir.path().join("pair.svg").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("p=3"));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let profile = demo_file(&dir);
    let args = [
        "eligible",
        "--profile",
        profile.to_str().unwrap(),
        "--mode",
        "weak",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verbose_reports_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let profile = demo_file(&dir);
    let out = run(&[
        "score-vectors",
        "--profile",
        profile.to_str().unwrap(),
        "-v",
    ]);
    assert!(out.status.success());
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("3 candidates"));
    assert!(stderr.contains("16 voters"));
}
