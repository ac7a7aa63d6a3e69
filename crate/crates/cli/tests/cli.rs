use std::path::Path;
use std::process::{Command, Output};

use rfsemi::{classify_pf, count_configs, rf_matrices, NumericalSemigroup};

fn rfsemi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rfsemi")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn summary(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn analyze_prints_invariants() {
    let o = rfsemi(&["analyze", "64,67,91,138,150"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("frobenius: 654\n"));
    assert!(text.contains("pseudo-frobenius: 209,327,445,654\n"));
    assert!(text.contains("genus: 329\n"));
    assert!(text.contains("type: 4\n"));
    assert!(text.contains("almost symmetric: true\n"));

    let o = rfsemi(&["analyze", "5,12,13", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["frobenius"], 21);
    assert_eq!(v["pf"], serde_json::json!([19, 21]));
    assert_eq!(v["genus"], 13);
    assert_eq!(v["symmetric"], false);
}

#[test]
fn rf_matches_library() {
    let o = rfsemi(&["rf", "5,12,13", "19"]);
    assert!(o.status.success());
    let s: NumericalSemigroup = "5,12,13".parse().unwrap();
    let expected: Vec<String> = rf_matrices(&s, 19, 1000)
        .unwrap()
        .iter()
        .map(|m| m.to_string())
        .collect();
    assert_eq!(stdout(&o), expected.join("\n"));
    assert!(stdout(&o).contains("-1 2 0\n1 -1 2\n4 1 -1\n"));

    let o = rfsemi(&["rf", "64,67,91,138,150", "327"]);
    assert_eq!(
        stdout(&o),
        "-1 0 1 0 2\n4 -1 0 1 0\n0 4 -1 0 1\n3 0 3 -1 0\n0 3 0 2 -1\n"
    );

    let o = rfsemi(&["rf", "5,12,13", "20"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn classify_lines() {
    let o = rfsemi(&["classify", "64,67,91,138,150"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "209 good 3*91-64\n327 bad\n445 good 8*64-67\n654 frobenius\n"
    );

    let o = rfsemi(&["classify", "64,67,91,138,150", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let s: NumericalSemigroup = "64,67,91,138,150".parse().unwrap();
    assert_eq!(v["bad"], serde_json::json!(classify_pf(&s).unwrap().bad));
    assert_eq!(v["good"][0]["witness"]["k"], 3);

    let o = rfsemi(&["classify", "5,12,13"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn configs_listing_and_count() {
    let o = rfsemi(&["configs", "--order", "5", "--count-only"]);
    assert_eq!(stdout(&o).trim(), count_configs(5).unwrap().to_string());

    let o = rfsemi(&["configs", "--order", "4"]);
    let text = stdout(&o);
    let blocks: Vec<&str> = text.split("\n\n").collect();
    assert_eq!(blocks.len(), 9);
    assert!(blocks.iter().all(|b| b.lines().count() == 5));

    assert_eq!(rfsemi(&["configs", "--order", "2"]).status.code(), Some(2));
}

#[test]
fn bad_input_is_a_usage_error() {
    for args in [
        vec!["analyze", "4,x"],
        vec!["analyze", "4,6"],
        vec!["analyze", "0,3"],
        vec!["analyze", ""],
    ] {
        let o = rfsemi(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
    }
}

fn census_args<'a>(dir: &'a Path, extra: &[&'a str]) -> Vec<String> {
    let mut v: Vec<String> = ["census", "--embdim", "5", "--max-gen", "24", "--jobs", "2", "--out"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    v.push(dir.join("c.jsonl").display().to_string());
    v.extend(extra.iter().map(|s| s.to_string()));
    v
}

#[test]
fn census_and_resume() {
    let dir = tempfile::tempdir().unwrap();
    let args = census_args(dir.path(), &["--stop-after", "4"]);
    let o = rfsemi(&args.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(o.status.code(), Some(0));
    let v = summary(&o);
    assert_eq!(v["complete"], false);
    assert_eq!(v["partitions_done"], 4);

    let ckpt = dir.path().join("c.jsonl.ckpt");
    let o = rfsemi(&["resume", "--checkpoint", ckpt.to_str().unwrap(), "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = summary(&o);
    assert_eq!(v["complete"], true);
    assert_eq!(v["violations"], serde_json::json!([]));
    let lines = std::fs::read_to_string(dir.path().join("c.jsonl"))
        .unwrap()
        .lines()
        .count();
    assert_eq!(v["records_emitted"], lines as u64);

    let missing = dir.path().join("nope.ckpt");
    assert_eq!(
        rfsemi(&["resume", "--checkpoint", missing.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn large_census_needs_confirmation() {
    let o = rfsemi(&["census", "--embdim", "5", "--max-gen", "200"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("--i-have-hours"));
    let o = rfsemi(&[
        "census",
        "--embdim",
        "9",
        "--max-gen",
        "20",
        "--out",
        "/nonexistent/x.jsonl",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_paper_passes() {
    let o = rfsemi(&["verify-paper"]);
    let text = stdout(&o);
    assert_eq!(o.status.code(), Some(0), "{text}");
    assert!(text.lines().count() >= 10);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
}
