// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Command-line front end for the scenario harness.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use robustlab::harness::{
    emit_report, list_scenarios, run_scenario, ReportFormat, ScenarioConfig, ScenarioReport,
};

#[derive(Parser)]
#[command(
    name = "robustlab",
    version,
    about = "Robust learning scenarios on the boolean hypercube"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List scenario ids, anchors and parameters.
    List {
        /// Print JSON instead of a table.
        #[arg(long)]
        json: bool,
    },
    /// Run a config file holding one config or an array of configs.
    Run {
        #[arg(long, conflicts_with = "scenario")]
        config: Option<PathBuf>,
        /// Run one scenario with default parameters.
        #[arg(long, required_unless_present = "config")]
        scenario: Option<String>,
        #[arg(long, default_value_t = 1, requires = "scenario")]
        trials: u64,
        #[arg(long, default_value_t = 0, requires = "scenario")]
        seed: u64,
        /// Directory for reports.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Both)]
        format: Format,
    },
    /// Validate a JSON report and print its verdict.
    Report {
        #[arg(long)]
        input: PathBuf,
        /// Also rerun the echoed config and compare bytes.
        #[arg(long)]
        replay: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Both,
}

/// Exit status: 0 when every predicate passes, 1 when one fails, 2 on
/// usage or configuration errors.
fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::List { json } => {
            let list = list_scenarios();
            if json {
                println!("{}", serde_json::to_string_pretty(&list)?);
            } else {
                for s in list {
                    println!("{:<26} {:<28} {}", s.id, s.anchor, s.params.join(","));
                    println!("{:<26} {}", "", s.description);
                }
            }
            Ok(true)
        }
        Command::Run {
            config,
            scenario,
            trials,
            seed,
            out_dir,
            format,
        } => {
            let configs = match (config, scenario) {
                (Some(path), _) => read_configs(&path)?,
                (None, Some(id)) => vec![ScenarioConfig::new(&id, trials, seed)],
                (None, None) => bail!("either --config or --scenario is required"),
            };
            let resolved: Vec<ScenarioConfig> = configs
                .iter()
                .map(|c| {
                    c.resolve()
                        .with_context(|| format!("config for `{}`", c.scenario))
                })
                .collect::<anyhow::Result<_>>()?;
            std::fs::create_dir_all(&out_dir).with_context(|| out_dir.display().to_string())?;
            let mut all = true;
            for (i, c) in resolved.iter().enumerate() {
                let report = run_scenario(c)?;
                let stem = match &c.output {
                    Some(s) => s.clone(),
                    None if resolved.len() == 1 => c.scenario.clone(),
                    None => format!("{}-{i}", c.scenario),
                };
                write_outputs(&report, &out_dir, &stem, format)?;
                eprintln!(
                    "{stem}: wall clock {:.3} s",
                    report.wall_clock.as_secs_f64()
                );
                print_verdict(&stem, &report);
                all &= report.predicate.pass;
            }
            Ok(all)
        }
        Command::Report { input, replay } => {
            let text =
                std::fs::read_to_string(&input).with_context(|| input.display().to_string())?;
            let report = ScenarioReport::from_json(&text)?;
            if replay {
                let again = run_scenario(&report.config)?;
                if again.to_json() != text {
                    bail!(
                        "replay of {} differs from the stored report",
                        input.display()
                    );
                }
            }
            print_verdict(&input.display().to_string(), &report);
            Ok(report.predicate.pass)
        }
    }
}

fn read_configs(path: &Path) -> anyhow::Result<Vec<ScenarioConfig>> {
    let text = std::fs::read_to_string(path).with_context(|| path.display().to_string())?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| path.display().to_string())?;
    let items = match value {
        serde_json::Value::Array(v) => v,
        v => vec![v],
    };
    if items.is_empty() {
        bail!("{} holds no configs", path.display());
    }
    items
        .into_iter()
        .map(|v| Ok(ScenarioConfig::from_json(&v.to_string())?))
        .collect()
}

fn write_outputs(
    report: &ScenarioReport,
    dir: &Path,
    stem: &str,
    format: Format,
) -> anyhow::Result<()> {
    if matches!(format, Format::Json | Format::Both) {
        emit_report(
            report,
            ReportFormat::Json,
            &dir.join(format!("{stem}.json")),
        )?;
    }
    if matches!(format, Format::Csv | Format::Both) {
        emit_report(report, ReportFormat::Csv, &dir.join(format!("{stem}.csv")))?;
    }
    if !report.transcript.is_empty() {
        let mut text = report.transcript.join("\n");
        text.push('\n');
        let path = dir.join(format!("{stem}.transcript.jsonl"));
        std::fs::write(&path, text).with_context(|| path.display().to_string())?;
    }
    Ok(())
}

fn print_verdict(label: &str, report: &ScenarioReport) {
    let p = &report.predicate;
    println!(
        "{} {label} [{}] {}",
        if p.pass { "PASS" } else { "FAIL" },
        p.anchor,
        p.statement
    );
    for (k, v) in &report.aggregate {
        println!("  {k} = {v}");
    }
}
