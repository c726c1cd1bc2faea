use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn stwiener(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stwiener"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn gen_then_sw() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("star.txt");
    let f = file.to_str().unwrap();
    let o = stwiener(&["gen", "starlike", "--segments", "1,1,1", "--out", f]);
    assert!(o.status.success());
    let o = stwiener(&["sw", "--k", "3", "--in", f]);
    assert_eq!(stdout(&o), "9\n");
    let o = stwiener(&["sw", "--profile", "--in", f]);
    assert_eq!(stdout(&o), "1\t0\n2\t9\n3\t9\n4\t3\n");
}

#[test]
fn gen_formats_and_family_note() {
    let o = stwiener(&["gen", "balanced", "--n", "7", "--m", "3", "--format", "dot"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("graph"));
    let o = stwiener(&["gen", "family", "--n", "8", "--m", "5", "--which", "ii"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 7);
    assert!(String::from_utf8_lossy(&o.stderr).contains("t = 6"));
}

#[test]
fn enumerate_counts_and_codes() {
    let o = stwiener(&["enumerate", "--n", "8", "--count-only"]);
    assert_eq!(stdout(&o), "23\n");
    let o = stwiener(&["enumerate", "--n", "6", "--num-segments", "3", "--count-only"]);
    assert_eq!(stdout(&o), "2\n");
    let o = stwiener(&["enumerate", "--n", "6", "--segments", "1,1,1,1,1"]);
    let codes: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(codes.len(), 2);
    assert!(codes.iter().all(|c| c.starts_with('(') && c.len() == 12));
    let again = stwiener(&["enumerate", "--n", "9"]);
    assert_eq!(again.stdout, stwiener(&["enumerate", "--n", "9"]).stdout);
}

#[test]
fn verify_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("r.json");
    let o = stwiener(&[
        "verify", "theorem1", "--max-n", "7", "--k", "2,3", "--report", file.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0 violated"));
    let json: Value = serde_json::from_str(&fs::read_to_string(&file).unwrap()).unwrap();
    let reports = json.as_array().unwrap();
    assert!(!reports.is_empty());
    let r = &reports[0];
    assert_eq!(r["theorem"], "theorem1");
    assert!(r["extremalValue"].is_string());
    assert!(r["instanceClass"]["segments"].is_array());
}

#[test]
fn verify_lemma_and_family() {
    let o = stwiener(&["verify", "lemma31", "--samples", "30", "--seed", "42", "--k", "2,3,4"]);
    assert_eq!(o.status.code(), Some(0));
    let o = stwiener(&["verify", "theorem5max", "--max-n", "8", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("confirmed-with-notes"));
}

#[test]
fn optimize_minimize_reaches_starlike() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("t.txt");
    // two adjacent branch vertices
    fs::write(&file, "0 1\n0 2\n0 3\n1 4\n1 5\n").unwrap();
    let o = stwiener(&["optimize", "--in", file.to_str().unwrap(), "--k", "2", "--direction", "min", "--trace"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("reattach"));
    let result = stwiener::parse_edge_list(&text).unwrap();
    assert_eq!(result.branch_vertices().len(), 1);
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(stwiener(&["sw", "--in", "x"]).status.code(), Some(2));
    assert_eq!(stwiener(&["gen", "starlike", "--segments", "2,1"]).status.code(), Some(2));
    assert_eq!(stwiener(&["sw", "--k", "2", "--in", "/nonexistent"]).status.code(), Some(2));
    assert_eq!(stwiener(&["verify", "theorem1", "--max-n", "30"]).status.code(), Some(2));
    assert_eq!(stwiener(&["gen", "family", "--n", "8", "--m", "4", "--which", "i"]).status.code(), Some(2));
    assert_eq!(stwiener(&["enumerate", "--n", "5", "--segments", "3,1,1"]).status.code(), Some(2));
}
