use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn specbound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specbound")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("terminated by signal")
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn success_and_nothing_applies() {
    let ok = specbound(&["bounds", "--family", "complete", "--n", "4"]);
    assert_eq!(code(&ok), 0);
    assert!(String::from_utf8_lossy(&ok.stdout).contains("\"Thm3.1\""));

    let none = specbound(&["bounds", "--family", "path", "--n", "5"]);
    assert_eq!(code(&none), 2);
    let report: serde_json::Value = serde_json::from_slice(&none.stdout).unwrap();
    assert!(report["bounds"].as_array().unwrap().is_empty());
    assert!(!report["skipped"].as_array().unwrap().is_empty());
}

#[test]
fn input_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "1 2\n2 three\n").unwrap();
    let out = specbound(&["bounds", "--edges", path_str(&bad)]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));

    let missing = dir.path().join("missing.txt");
    assert_eq!(code(&specbound(&["bounds", "--edges", path_str(&missing)])), 1);

    let good = dir.path().join("good.txt");
    fs::write(&good, "1 2\n").unwrap();
    let both = specbound(&["bounds", "--family", "complete", "--n", "3", "--edges", path_str(&good)]);
    assert_eq!(code(&both), 1);

    assert_eq!(code(&specbound(&["bounds", "--family", "nonsense", "--n", "3"])), 1);
    assert_eq!(code(&specbound(&["regions", "--family", "cycle", "--n", "4"])), 1);
}

#[test]
fn non_constant_row_sum_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let m = dir.path().join("m.json");
    fs::write(
        &m,
        r#"{"n": 2, "entries": [[{"re": 1, "im": 0}, {"re": 2, "im": 0}], [{"re": 0, "im": 0}, {"re": 1, "im": 0}]]}"#,
    )
    .unwrap();
    let refined = specbound(&["regions", "--input", path_str(&m), "--method", "rowsum-gersgorin"]);
    assert_eq!(code(&refined), 3);
    let plain = specbound(&["regions", "--input", path_str(&m), "--method", "gersgorin"]);
    assert_eq!(code(&plain), 0);
}

#[test]
fn verify_corpus_graph_passes() {
    let out = specbound(&["verify", "--family", "petersen"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.lines().last().unwrap().ends_with(", 0 failed"), "{text}");
    assert!(!text.contains("FAIL"));
}

#[test]
fn unwritable_output_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("no-such-dir").join("out.csv");
    let out = specbound(&["sweep", "--family", "star:4..6", "--matrix", "laplacian", "--out", path_str(&target)]);
    assert_eq!(code(&out), 1);
    assert!(!target.exists());
}
