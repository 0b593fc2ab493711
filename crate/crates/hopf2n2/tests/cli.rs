//! End-to-end tests of the command-line binary: exit codes, output
//! determinism, and the documented format constraints.

use std::process::{Command, Output};

fn hopf2n2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf2n2"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = hopf2n2(&["verify", "--n", "2", "--suite", "idempotents"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "hfl/1");
    assert_eq!(doc["pass"], true);
}

#[test]
fn small_parameters_are_usage_errors() {
    let out = hopf2n2(&["verify", "--n", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hopf2n2(&["verify", "--n", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hopf2n2(&["verify", "--n", "two"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flags_and_missing_args_are_usage_errors() {
    assert_eq!(hopf2n2(&["verify"]).status.code(), Some(2));
    assert_eq!(
        hopf2n2(&["verify", "--n", "2", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(hopf2n2(&["frobnicate", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn help_exits_zero() {
    assert_eq!(hopf2n2(&["--help"]).status.code(), Some(0));
}

#[test]
fn table_output_is_byte_identical_across_runs() {
    for format in ["json", "csv", "text"] {
        let first = hopf2n2(&["table", "--n", "3", "--format", format]);
        let second = hopf2n2(&["table", "--n", "3", "--format", format]);
        assert_eq!(first.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout, "format {format}");
        assert!(!first.stdout.is_empty());
    }
}

#[test]
fn csv_table_has_the_flat_schema() {
    let out = hopf2n2(&["table", "--n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,b,c,mult"));
    // 5 simples, each row a nonzero structure constant.
    assert!(text.lines().count() > 25);
    assert!(text.contains("S_{0,1},S_{0,1},S_3,1"));
}

#[test]
fn csv_is_only_for_tables() {
    let out = hopf2n2(&["verify", "--n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hopf2n2(&["presentation", "--n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
    let out = hopf2n2(&["idempotents", "--n", "2", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn json_table_matches_the_declared_shape() {
    let out = hopf2n2(&["table", "--n", "3", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "hfl/1");
    assert_eq!(doc["n"], 3);
    let simples = doc["simples"].as_array().unwrap();
    assert_eq!(simples.len(), 9);
    let table = doc["table"].as_array().unwrap();
    assert_eq!(table.len(), 9);
    assert_eq!(table[0].as_array().unwrap().len(), 9);
    // The unit row: S_0 * X = X.
    assert_eq!(doc["table"][0][4][simples[4].as_str().unwrap()], 1);
}

#[test]
fn presentation_prints_the_worked_example() {
    let out = hopf2n2(&["presentation", "--n", "7", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("y^14 - 1"));
    assert!(text.contains("z*y^7 - z"));
    assert!(text.contains("z^4 - z^3*y^4 - 4*z^2*y + 3*z*y^5 + y^9 + y^2"));
    assert!(text.contains("verdict: pass"));
}

#[test]
fn out_flag_writes_the_same_bytes_as_stdout() {
    let path = std::env::temp_dir().join(format!("hopf2n2-table-{}.json", std::process::id()));
    let piped = hopf2n2(&["table", "--n", "2", "--format", "json"]);
    let filed = hopf2n2(&[
        "table",
        "--n",
        "2",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(filed.status.code(), Some(0));
    assert!(filed.stdout.is_empty());
    let written = std::fs::read(&path).unwrap();
    assert_eq!(written, piped.stdout);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn all_parameter_covers_the_documented_range() {
    let out = hopf2n2(&["idempotents", "--n", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let results = doc["results"].as_array().unwrap();
    let ns: Vec<u64> = results.iter().map(|r| r["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, vec![2, 3, 4, 5, 6, 7, 8]);
    assert_eq!(results[6]["count"], 44);
}
