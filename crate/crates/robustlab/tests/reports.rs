// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

use robustlab::harness::{
    emit_report, list_scenarios, run_scenario, ReportFormat, ScenarioConfig, ScenarioReport,
};

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("robustlab-reports-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn every_scenario_replays_from_its_echo() {
    for s in list_scenarios() {
        let trials = if s.id == "dimension-table" { 2 } else { 3 };
        let a = run_scenario(&ScenarioConfig::new(s.id, trials, 99)).unwrap();
        assert_eq!(a.records.len() as u64, trials, "{}", s.id);
        assert!(a.predicate.statement.len() > 10);
        assert_eq!(a.predicate.anchor, s.anchor);
        let text = a.to_json();
        let back = ScenarioReport::from_json(&text).unwrap();
        let again = run_scenario(&back.config).unwrap();
        assert_eq!(again.to_json(), text, "{}", s.id);
    }
}

#[test]
fn emitted_files_are_byte_stable() {
    let mut c = ScenarioConfig::new("leq-conjunction-queries", 4, 5);
    c.n = Some(10);
    let a = run_scenario(&c).unwrap();
    let b = run_scenario(&c).unwrap();
    let (ja, jb) = (scratch("a.json"), scratch("b.json"));
    let (ca, cb) = (scratch("a.csv"), scratch("b.csv"));
    emit_report(&a, ReportFormat::Json, &ja).unwrap();
    emit_report(&b, ReportFormat::Json, &jb).unwrap();
    emit_report(&a, ReportFormat::Csv, &ca).unwrap();
    emit_report(&b, ReportFormat::Csv, &cb).unwrap();
    assert_eq!(std::fs::read(&ja).unwrap(), std::fs::read(&jb).unwrap());
    assert_eq!(std::fs::read(&ca).unwrap(), std::fs::read(&cb).unwrap());
    let csv = std::fs::read_to_string(&ca).unwrap();
    assert_eq!(csv.lines().count(), 5);
    assert!(
        csv.starts_with("trial,seed,target_literals,queries,counterexamples,robustly_consistent\n")
    );
}

#[test]
fn unwritable_path_is_an_io_error() {
    let r = run_scenario(&ScenarioConfig::new("leq-vs-eq", 1, 0)).unwrap();
    let bad = std::path::Path::new("/nonexistent-dir/for/robustlab/r.json");
    assert!(matches!(
        emit_report(&r, ReportFormat::Json, bad),
        Err(robustlab::Error::Io(_))
    ));
}

#[test]
fn transcripts_are_json_lines() {
    let mut c = ScenarioConfig::new("leq-lambda-lt-rho", 2, 1);
    c.transcript = Some(true);
    let r = run_scenario(&c).unwrap();
    assert!(!r.transcript.is_empty());
    for line in &r.transcript {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(v.get("oracle").is_some());
    }
}

#[test]
fn reports_agree_across_threads() {
    let c = ScenarioConfig::new("majority-fourier", 16, 3);
    let a = run_scenario(&c).unwrap().to_json();
    let b = std::thread::spawn(move || run_scenario(&c).unwrap().to_json())
        .join()
        .unwrap();
    assert_eq!(a, b);
}
