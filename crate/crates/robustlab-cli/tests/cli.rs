// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

use std::process::Command;

fn robustlab() -> Command {
    Command::new(env!("CARGO_BIN_EXE_robustlab"))
}

#[test]
fn list_names_scenarios() {
    let out = robustlab().arg("list").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("monconj-lower-bound"));
    assert!(text.contains("Thm conj-df-leq"));
}

#[test]
fn run_then_report_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.json");
    std::fs::write(
        &config,
        r#"[{"version":1,"scenario":"parity-exact","trials":4,"base_seed":3,"output":"parity"},
            {"version":1,"scenario":"leq-lambda-lt-rho","trials":2,"transcript":true,"output":"leq"}]"#,
    )
    .unwrap();
    let out = robustlab()
        .args(["run", "--config"])
        .arg(&config)
        .arg("--out-dir")
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("wall clock"));
    for f in [
        "parity.json",
        "parity.csv",
        "leq.json",
        "leq.csv",
        "leq.transcript.jsonl",
    ] {
        assert!(dir.path().join(f).exists(), "{f}");
    }
    let out = robustlab()
        .args(["report", "--replay", "--input"])
        .arg(dir.path().join("parity.json"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS"));
}

#[test]
fn schema_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("bad.json");
    std::fs::write(
        &config,
        r#"{"version":1,"scenario":"parity-exact","trials":1,"tau":0.5}"#,
    )
    .unwrap();
    let out = robustlab()
        .args(["run", "--config"])
        .arg(&config)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = robustlab().args(["run"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn failed_predicate_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("strict.json");
    std::fs::write(
        &config,
        r#"{"version":1,"scenario":"majority-fourier","trials":20,"kappa":0.05,"delta":0.01}"#,
    )
    .unwrap();
    let out = robustlab()
        .args(["run", "--format", "json", "--config"])
        .arg(&config)
        .arg("--out-dir")
        .arg(dir.path())
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(1),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
}
