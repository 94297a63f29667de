use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(args)
        .env_remove("ANALYZER_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn assert_golden(args: &[&str], name: &str) {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", stderr(&out));
    assert_eq!(stdout(&out), golden(name), "{args:?}");
}

#[test]
fn analyze_text_matches_golden() {
    assert_golden(&["analyze", "2,3,3"], "analyze_2_3_3.txt");
}

#[test]
fn sequence_may_be_split_across_arguments() {
    let joined = stdout(&run(&["analyze", "2,3,3"]));
    assert_eq!(stdout(&run(&["analyze", "2", "3", "3"])), joined);
    assert_eq!(stdout(&run(&["analyze", "(2, 3, 3)"])), joined);
}

#[test]
fn structured_reports_match_golden() {
    let full = [
        "--format",
        "structured",
        "--oracle",
        "--cartan",
        "--retract",
    ];
    let mut args = vec!["analyze"];
    args.extend(full);
    args.push("2,3,3,3");
    assert_golden(&args, "analyze_2_3_3_3_full.json");
    *args.last_mut().unwrap() = "2,3";
    assert_golden(&args, "analyze_2_3_full.json");
}

#[test]
fn section_subcommands_match_golden() {
    assert_golden(&["cartan", "2,3,3,3"], "cartan_2_3_3_3.txt");
    assert_golden(&["retract", "3,2,3"], "retract_3_2_3.txt");
    assert_golden(&["oracle", "2,2"], "oracle_2_2.txt");
}

#[test]
fn structured_output_is_one_json_object_per_line() {
    let out = run(&["analyze", "--format", "json", "--cartan", "2,3,3,3"]);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["cartan"]["determinant"], 2);
    assert_eq!(v["cartan"]["snfDiagonal"], serde_json::json!([1, 1, 1, 2]));
    assert!(v.get("oracle").is_none());
}

#[test]
fn batch_file_gives_one_report_per_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("batch.txt");
    std::fs::write(&path, "2,3,3\n# comment\n\n2 3\n2,2\n").unwrap();
    let out = run(&[
        "analyze",
        "--format",
        "structured",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let reports: Vec<Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let inputs: Vec<&Value> = reports.iter().map(|r| &r["input"]).collect();
    assert_eq!(
        inputs,
        [
            &serde_json::json!([2, 3, 3]),
            &serde_json::json!([2, 3]),
            &serde_json::json!([2, 2])
        ]
    );
}

#[test]
fn batch_file_reports_bad_lines_and_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("batch.txt");
    std::fs::write(&path, "2,3\n3,1,2\n2,2\n").unwrap();
    let out = run(&[
        "analyze",
        "--format",
        "structured",
        "--file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout(&out).lines().count(), 2);
    assert!(stderr(&out).contains("3,1,2"));
}

#[test]
fn invalid_input_exits_two_with_reason() {
    for (input, needle) in [
        ("3,1,2", "admissibility"),
        ("2,x,3", "x"),
        ("2,0", "0"),
        ("2,1,1", "disconnected"),
        ("1,1", "disconnected"),
    ] {
        let out = run(&["analyze", input]);
        assert_eq!(out.status.code(), Some(2), "{input}");
        assert!(stdout(&out).is_empty(), "{input}");
        let err = stderr(&out).to_lowercase();
        assert!(err.contains(needle), "{input}: {err}");
    }
}

#[test]
fn missing_sequence_is_a_usage_error() {
    assert_eq!(run(&["analyze"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn census_matches_golden_and_exits_zero() {
    assert_golden(
        &["census", "--n-max", "3", "--c-max", "4", "--no-timing"],
        "census_3_4.json",
    );
}

#[test]
fn census_smallest_bounds() {
    let out = run(&["census", "--n-max", "2", "--c-max", "2"]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    // (1), (2), (2,2), (2,1)
    assert_eq!(v["algebrasChecked"], 4);
    assert_eq!(v["failures"], 0);
    assert!(v["elapsedMs"].is_number());
}

#[test]
fn census_is_independent_of_job_count() {
    let args = ["census", "--n-max", "4", "--c-max", "5", "--no-timing"];
    let single = stdout(&run(&args));
    let parallel = Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(args)
        .env("ANALYZER_JOBS", "4")
        .output()
        .unwrap();
    assert_eq!(stdout(&parallel), single);
    let mut flagged = args.to_vec();
    flagged.extend(["--jobs", "3"]);
    assert_eq!(stdout(&run(&flagged)), single);
}

#[test]
fn census_check_selection() {
    let out = run(&[
        "census",
        "--n-max",
        "3",
        "--c-max",
        "3",
        "--checks",
        "determinant,snf-shape",
    ]);
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    let keys: Vec<&String> = v["perCheck"].as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 2);

    let out = run(&["census", "--checks", "no-such-check"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no-such-check"));
}

#[test]
fn census_rejects_bad_bounds() {
    for args in [["--n-max", "0"], ["--c-max", "0"]] {
        let mut full = vec!["census"];
        full.extend(args);
        let out = run(&full);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!stderr(&out).is_empty());
    }
    assert_eq!(run(&["census", "--n-max", "-1"]).status.code(), Some(2));
}

#[test]
fn census_text_format_summarizes() {
    let out = run(&[
        "census",
        "--n-max",
        "3",
        "--c-max",
        "3",
        "--format",
        "text",
        "--no-timing",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("algebras checked:"));
    assert!(text.contains("failures: 0  findings: 0  skips: 0"));
}

#[test]
fn checks_lists_every_identifier() {
    let out = run(&["checks"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text
        .lines()
        .any(|l| l.starts_with("finite-global-dimension")));
    assert!(text.lines().count() >= 20);
}
