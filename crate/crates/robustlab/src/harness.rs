// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Scenario registry, configuration and reports.
//!
//! A scenario reproduces one construction end to end: it draws per-trial
//! randomness from `(base_seed, trial)`, runs a representative learner
//! against the construction's targets and oracles, and evaluates an
//! acceptance predicate over the trial records. Reports are deterministic
//! functions of their echoed configuration; wall-clock time is kept out of
//! the serialized form so that files are byte-stable.
//!
//! Config JSON (schema version 1): `version`, `scenario`, `trials`,
//! `base_seed`, optional `output`, and the scenario's own parameters among
//! `n`, `rho`, `lambda`, `alpha`, `epsilon`, `delta`, `kappa`, `w`, `b`,
//! `tau`, `m`, `queries`, `distribution`, `transcript`. Setting a parameter
//! the scenario does not use is a schema error.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::time::Duration;

use rand::seq::SliceRandom;
use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::concepts::{enumerate_class, ClassSpec, Concept, Hypothesis};
use crate::dimensions::{
    littlestone_dimension, robust_loss_class, shatters, vc_dimension, FiniteClass, Restriction,
};
use crate::distributions::Distribution;
use crate::error::{invalid, Error, Result};
use crate::exec::Exec;
use crate::hypercube::{ball, BitVector};
use crate::learners::{
    learn_conjunction, learn_majority, learn_parity, majority_sample_size, precision_game,
    robust_leq_driver, ConjunctionLearner, DriverMode, Halving, OnlineLearner, RealHalfspace, Soa,
    Winnow,
};
use crate::oracles::{Adversary, LeqAnswer, OracleSession, Policy};
use crate::rng::{self, Rng};
use crate::robustrisk::{clopper_pearson, fast_loss, robust_risk_exact, MC_CONFIDENCE};

/// Config schema version.
pub const CONFIG_VERSION: u32 = 1;

/// Report schema version.
pub const REPORT_VERSION: u32 = 1;

/// Largest accepted trial count.
pub const MAX_TRIALS: u64 = 1_000_000;

/// Absolute slack of lower-bound predicates.
pub const LOWER_BOUND_SLACK: f64 = 0.02;

/// Largest dimension of the brute-force table columns.
pub const TABLE_FULL_LIMIT: usize = 6;

const Z99: f64 = 2.5758293035489004;

/// Distribution family of the threshold sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistributionKind {
    Uniform,
    /// Independent bits with `Pr[x_i = 1] = alpha / (1 + alpha)`.
    Product,
    /// `x_2 = x_1` with probability `alpha / (1 + alpha)`, other bits uniform.
    CorrelatedPair,
}

impl DistributionKind {
    pub fn build(self, n: usize, alpha: f64) -> Result<Distribution> {
        match self {
            DistributionKind::Uniform => Distribution::uniform(n),
            DistributionKind::Product => Distribution::product_alpha(n, alpha),
            DistributionKind::CorrelatedPair => {
                Distribution::correlated_pair(n, alpha / (1.0 + alpha))
            }
        }
    }
}

/// A scenario run request.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioConfig {
    pub version: u32,
    pub scenario: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rho: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<f64>,
    /// Sample size, or its cap where the scenario derives one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    /// Membership query budget.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub queries: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distribution: Option<DistributionKind>,
    /// Keep the oracle transcript of trial 0.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub transcript: Option<bool>,
    pub trials: u64,
    #[serde(default)]
    pub base_seed: u64,
    /// Output path stem; `.json` and `.csv` are appended.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output: Option<String>,
}

impl ScenarioConfig {
    /// A config for `scenario` with every parameter at its default.
    pub fn new(scenario: &str, trials: u64, base_seed: u64) -> Self {
        ScenarioConfig {
            version: CONFIG_VERSION,
            scenario: scenario.to_string(),
            n: None,
            rho: None,
            lambda: None,
            alpha: None,
            epsilon: None,
            delta: None,
            kappa: None,
            w: None,
            b: None,
            tau: None,
            m: None,
            queries: None,
            distribution: None,
            transcript: None,
            trials,
            base_seed,
            output: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Checks the schema and fills unset parameters with their defaults.
    pub fn resolve(&self) -> Result<ScenarioConfig> {
        if self.version != CONFIG_VERSION {
            return Err(invalid(format!(
                "config version {} unsupported (expected {CONFIG_VERSION})",
                self.version
            )));
        }
        if self.trials == 0 || self.trials > MAX_TRIALS {
            return Err(invalid(format!("trials must be in 1..={MAX_TRIALS}")));
        }
        let s = find(&self.scenario)?;
        for p in Param::ALL {
            if p.is_set(self) && !s.params.contains(&p) {
                return Err(invalid(format!(
                    "parameter `{}` is not used by scenario `{}`",
                    p.name(),
                    s.id
                )));
            }
        }
        let mut c = self.clone();
        (s.defaults)(&mut c);
        (s.validate)(&c)?;
        Ok(c)
    }
}

/// Scenario parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Param {
    N,
    Rho,
    Lambda,
    Alpha,
    Epsilon,
    Delta,
    Kappa,
    W,
    B,
    Tau,
    M,
    Queries,
    Distribution,
    Transcript,
}

impl Param {
    pub const ALL: [Param; 14] = [
        Param::N,
        Param::Rho,
        Param::Lambda,
        Param::Alpha,
        Param::Epsilon,
        Param::Delta,
        Param::Kappa,
        Param::W,
        Param::B,
        Param::Tau,
        Param::M,
        Param::Queries,
        Param::Distribution,
        Param::Transcript,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Param::N => "n",
            Param::Rho => "rho",
            Param::Lambda => "lambda",
            Param::Alpha => "alpha",
            Param::Epsilon => "epsilon",
            Param::Delta => "delta",
            Param::Kappa => "kappa",
            Param::W => "w",
            Param::B => "b",
            Param::Tau => "tau",
            Param::M => "m",
            Param::Queries => "queries",
            Param::Distribution => "distribution",
            Param::Transcript => "transcript",
        }
    }

    fn is_set(self, c: &ScenarioConfig) -> bool {
        match self {
            Param::N => c.n.is_some(),
            Param::Rho => c.rho.is_some(),
            Param::Lambda => c.lambda.is_some(),
            Param::Alpha => c.alpha.is_some(),
            Param::Epsilon => c.epsilon.is_some(),
            Param::Delta => c.delta.is_some(),
            Param::Kappa => c.kappa.is_some(),
            Param::W => c.w.is_some(),
            Param::B => c.b.is_some(),
            Param::Tau => c.tau.is_some(),
            Param::M => c.m.is_some(),
            Param::Queries => c.queries.is_some(),
            Param::Distribution => c.distribution.is_some(),
            Param::Transcript => c.transcript.is_some(),
        }
    }
}

/// One report value.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Cell {
    Bool(bool),
    Int(i64),
    Float(f64),
    Text(String),
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Bool(v) => write!(f, "{v}"),
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Float(v) => write!(f, "{v:?}"),
            Cell::Text(v) => f.write_str(v),
        }
    }
}

impl Cell {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Int(v) => Some(*v as f64),
            Cell::Float(v) => Some(*v),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Cell::Bool(v) => Some(*v),
            _ => None,
        }
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<u64> for Cell {
    fn from(v: u64) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        if v.is_finite() {
            Cell::Float(v)
        } else {
            Cell::Text(format!("{v}"))
        }
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

/// Per-trial values in column order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub values: Vec<Cell>,
}

/// The acceptance predicate and its verdict.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Predicate {
    /// The result the scenario reproduces.
    pub anchor: String,
    pub statement: String,
    pub scope: String,
    pub pass: bool,
}

/// Result of a scenario run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioReport {
    pub report_version: u32,
    /// The resolved configuration; rerunning it reproduces the report.
    pub config: ScenarioConfig,
    pub columns: Vec<String>,
    pub records: Vec<TrialRecord>,
    pub aggregate: BTreeMap<String, Cell>,
    pub predicate: Predicate,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub transcript: Vec<String>,
    #[serde(skip)]
    pub wall_clock: Duration,
}

/// Output format of [`emit_report`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl ScenarioReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Columns `trial`, `seed`, then the scenario's columns.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["trial".to_string(), "seed".to_string()];
        header.extend(self.columns.iter().cloned());
        w.write_record(&header)
            .map_err(|e| Error::Io(e.to_string()))?;
        for r in &self.records {
            let mut row = vec![r.trial.to_string(), r.seed.to_string()];
            row.extend(r.values.iter().map(Cell::to_string));
            w.write_record(&row).map_err(|e| Error::Io(e.to_string()))?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        String::from_utf8(bytes).map_err(|e| Error::Io(e.to_string()))
    }

    /// Parses and validates a serialized report.
    pub fn from_json(text: &str) -> Result<Self> {
        let r: ScenarioReport =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        r.validate()?;
        Ok(r)
    }

    /// Structural checks: schema versions, a resolved config, one record per
    /// trial with matching seeds and widths.
    pub fn validate(&self) -> Result<()> {
        if self.report_version != REPORT_VERSION {
            return Err(invalid(format!(
                "report version {} unsupported",
                self.report_version
            )));
        }
        if self.config.resolve()? != self.config {
            return Err(invalid("report config is not in resolved form"));
        }
        if self.records.len() as u64 != self.config.trials {
            return Err(invalid("record count differs from the trial count"));
        }
        for (t, r) in self.records.iter().enumerate() {
            if r.trial != t as u64 || r.seed != rng::trial_seed(self.config.base_seed, r.trial) {
                return Err(invalid(format!(
                    "record {t} has a foreign trial index or seed"
                )));
            }
            if r.values.len() != self.columns.len() {
                return Err(invalid(format!("record {t} has {} values", r.values.len())));
            }
        }
        Ok(())
    }

    /// Values of one column.
    pub fn column(&self, name: &str) -> Option<Vec<&Cell>> {
        let i = self.columns.iter().position(|c| c == name)?;
        Some(self.records.iter().map(|r| &r.values[i]).collect())
    }
}

/// Writes `report` to `path` in `format`.
pub fn emit_report(report: &ScenarioReport, format: ReportFormat, path: &Path) -> Result<()> {
    let text = match format {
        ReportFormat::Json => report.to_json(),
        ReportFormat::Csv => report.to_csv()?,
    };
    std::fs::write(path, text).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// Catalog entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScenarioInfo {
    pub id: &'static str,
    pub anchor: &'static str,
    pub description: &'static str,
    pub params: Vec<&'static str>,
}

struct Scenario {
    id: &'static str,
    anchor: &'static str,
    description: &'static str,
    params: &'static [Param],
    defaults: fn(&mut ScenarioConfig),
    validate: fn(&ScenarioConfig) -> Result<()>,
    run: fn(&ScenarioConfig) -> Result<Outcome>,
}

struct Outcome {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    aggregate: Vec<(&'static str, Cell)>,
    statement: String,
    scope: &'static str,
    pass: bool,
    transcript: Vec<String>,
}

use Param as P;

const REGISTRY: &[Scenario] = &[
    Scenario {
        id: "monconj-lower-bound",
        anchor: "Thm mon-conj",
        description: "Disjoint length-2rho monotone conjunctions are indistinguishable on 2^(kappa rho) uniform examples",
        params: &[P::N, P::Rho, P::Kappa],
        defaults: |c| {
            c.n.get_or_insert(16);
            c.rho.get_or_insert(4.0);
            c.kappa.get_or_insert(1.5);
        },
        validate: validate_lower_bound,
        run: run_monconj_lower_bound,
    },
    Scenario {
        id: "lmq-lower-bound",
        anchor: "Thm conj-lmq-lb",
        description: "Sign-pattern conjunction pairs defeat a sample plus local membership queries",
        params: &[P::N, P::Rho, P::Lambda, P::M, P::Queries],
        defaults: |c| {
            c.n.get_or_insert(16);
            c.rho.get_or_insert(4.0);
            c.lambda.get_or_insert(1);
            c.m.get_or_insert(16);
            c.queries.get_or_insert(8);
        },
        validate: validate_lmq,
        run: run_lmq_lower_bound,
    },
    Scenario {
        id: "monconj-threshold",
        anchor: "Thm mon-conj-rob",
        description: "Monotone conjunctions are log(n)-robustly learnable under log-Lipschitz distributions",
        params: &[P::N, P::Rho, P::Alpha, P::Epsilon, P::Delta, P::M, P::Distribution],
        defaults: |c| {
            let n = *c.n.get_or_insert(20);
            c.rho.get_or_insert((n.max(1) as f64).log2().floor());
            c.alpha.get_or_insert(2.0);
            c.epsilon.get_or_insert(0.1);
            c.delta.get_or_insert(0.1);
            c.m.get_or_insert(60_000);
            c.distribution.get_or_insert(DistributionKind::Uniform);
        },
        validate: validate_threshold,
        run: run_monconj_threshold,
    },
    Scenario {
        id: "dictator-impossibility",
        anchor: "Lemma dictators",
        description: "Dictators x1 and x2 agree on every example when x1 = x2 almost surely",
        params: &[P::N, P::M],
        defaults: |c| {
            c.n.get_or_insert(8);
            c.m.get_or_insert(32);
        },
        validate: |c| {
            check_range("n", get(c.n), 2, 20)?;
            check_range("m", get(c.m), 1, 1_000_000)?;
            Ok(())
        },
        run: run_dictator_impossibility,
    },
    Scenario {
        id: "nontrivial-impossibility",
        anchor: "Thm no-df-rl",
        description: "A skewed product hides the difference between x1 and x1 x2 from polynomial samples",
        params: &[P::N, P::M, P::Kappa],
        defaults: |c| {
            c.n.get_or_insert(16);
            c.m.get_or_insert(16);
            c.kappa.get_or_insert(3.0);
        },
        validate: |c| {
            check_range("n", get(c.n), 2, 128)?;
            check_range("m", get(c.m), 1, 1_000_000)?;
            check_real("kappa", get(c.kappa), 0.0, 64.0)?;
            Ok(())
        },
        run: run_nontrivial_impossibility,
    },
    Scenario {
        id: "leq-lambda-lt-rho",
        anchor: "Thm mon-conj-df-leq",
        description: "With lambda < rho, x1..x_rho and x1..x_(rho+1) produce identical LEQ transcripts under a point mass",
        params: &[P::N, P::Rho, P::Lambda, P::M, P::Transcript],
        defaults: |c| {
            c.n.get_or_insert(8);
            c.rho.get_or_insert(2.0);
            c.lambda.get_or_insert(1);
            c.m.get_or_insert(4);
            c.transcript.get_or_insert(false);
        },
        validate: |c| {
            let n = check_range("n", get(c.n), 2, 20)?;
            let rho = int_rho(c)?;
            if !(get(c.lambda) < rho && rho < n) {
                return Err(invalid("need lambda < rho < n"));
            }
            check_range("m", get(c.m), 1, 10_000)?;
            Ok(())
        },
        run: run_leq_lambda_lt_rho,
    },
    Scenario {
        id: "leq-conjunction-queries",
        anchor: "Thm conj-df-leq",
        description: "The conjunction learner is robustly consistent after at most m + 2n local equivalence queries",
        params: &[P::N, P::Rho, P::Epsilon, P::Delta, P::Transcript],
        defaults: |c| {
            c.n.get_or_insert(16);
            c.rho.get_or_insert(2.0);
            c.epsilon.get_or_insert(0.1);
            c.delta.get_or_insert(0.1);
            c.transcript.get_or_insert(false);
        },
        validate: |c| {
            let n = check_range("n", get(c.n), 1, 64)?;
            let rho = int_rho(c)?;
            check_ball(n, rho)?;
            check_real("epsilon", get(c.epsilon), 0.0, 1.0)?;
            check_real("delta", get(c.delta), 0.0, 1.0)?;
            Ok(())
        },
        run: run_leq_conjunction_queries,
    },
    Scenario {
        id: "leq-winnow-ltf",
        anchor: "Thm ltf-bool-df",
        description: "Winnow behind local equivalence queries learns weight-W threshold functions within m kappa W^2 log n queries",
        params: &[P::N, P::W, P::Rho, P::Epsilon, P::Delta, P::Kappa],
        defaults: |c| {
            c.n.get_or_insert(32);
            c.w.get_or_insert(4);
            c.rho.get_or_insert(1.0);
            c.epsilon.get_or_insert(0.1);
            c.delta.get_or_insert(0.1);
            c.kappa.get_or_insert(8.0);
        },
        validate: |c| {
            let n = check_range("n", get(c.n), 2, 128)?;
            check_range("w", get(c.w) as usize, 1, 1024)?;
            let rho = int_rho(c)?;
            check_ball(n, rho)?;
            check_real("epsilon", get(c.epsilon), 0.0, 1.0)?;
            check_real("delta", get(c.delta), 0.0, 1.0)?;
            check_real("kappa", get(c.kappa), 0.0, 8.0)?;
            Ok(())
        },
        run: run_leq_winnow_ltf,
    },
    Scenario {
        id: "leq-soa",
        anchor: "Thm soa",
        description: "The standard optimal algorithm behind local equivalence queries uses at most m Lit queries",
        params: &[P::N, P::Rho, P::Epsilon, P::Delta],
        defaults: |c| {
            c.n.get_or_insert(5);
            c.rho.get_or_insert(1.0);
            c.epsilon.get_or_insert(0.1);
            c.delta.get_or_insert(0.1);
        },
        validate: |c| {
            let n = check_range("n", get(c.n), 1, 7)?;
            check_ball(n, int_rho(c)?)?;
            check_real("epsilon", get(c.epsilon), 0.0, 1.0)?;
            check_real("delta", get(c.delta), 0.0, 1.0)?;
            Ok(())
        },
        run: run_leq_soa,
    },
    Scenario {
        id: "parity-exact",
        anchor: "Thm parity-uniform",
        description: "Gaussian elimination recovers parities exactly under alpha-log-Lipschitz products",
        params: &[P::N, P::Alpha, P::Epsilon, P::Delta],
        defaults: |c| {
            c.n.get_or_insert(12);
            c.alpha.get_or_insert(2.0);
            c.epsilon.get_or_insert(0.25);
            c.delta.get_or_insert(0.01);
        },
        validate: |c| {
            check_range("n", get(c.n), 1, 20)?;
            let alpha = check_real("alpha", get(c.alpha), 1.0, 1e6)?;
            let eps = check_real("epsilon", get(c.epsilon), 0.0, 1.0)?;
            check_real("delta", get(c.delta), 0.0, 1.0)?;
            if eps >= 1.0 / (1.0 + alpha) {
                return Err(invalid("epsilon must be below 1 / (1 + alpha)"));
            }
            Ok(())
        },
        run: run_parity_exact,
    },
    Scenario {
        id: "majority-fourier",
        anchor: "Thm maj-fc",
        description: "Thresholded singleton Fourier estimates recover majorities under the uniform distribution",
        params: &[P::N, P::Delta, P::Kappa],
        defaults: |c| {
            c.n.get_or_insert(9);
            c.delta.get_or_insert(0.1);
            c.kappa.get_or_insert(16.0);
        },
        validate: |c| {
            check_range("n", get(c.n), 1, 64)?;
            check_real("delta", get(c.delta), 0.0, 1.0)?;
            check_real("kappa", get(c.kappa), 0.0, 64.0)?;
            Ok(())
        },
        run: run_majority_fourier,
    },
    Scenario {
        id: "precision-perceptron",
        anchor: "Thm ltf-real-precision",
        description: "The Perceptron makes at most B^2 / tau^2 mistakes against a precision-tau adversary",
        params: &[P::N, P::B, P::Tau, P::Rho, P::M],
        defaults: |c| {
            c.n.get_or_insert(2);
            c.b.get_or_insert(1.0);
            c.tau.get_or_insert(0.1);
            c.rho.get_or_insert(0.3);
            c.m.get_or_insert(20);
        },
        validate: |c| {
            check_range("n", get(c.n), 1, 64)?;
            check_range("m", get(c.m), 1, 100_000)?;
            let b = check_real("b", get(c.b), 0.0, 1e6)?;
            let rho = get(c.rho);
            let tau = get(c.tau);
            if !(0.0 < tau && tau <= rho && rho < b) {
                return Err(invalid("need 0 < tau <= rho < b"));
            }
            Ok(())
        },
        run: run_precision_perceptron,
    },
    Scenario {
        id: "leq-adversarial-tree",
        anchor: "Thm lit-queries",
        description: "A tree-ordered LEQ forces (d - 1) / 2 counterexamples on average from a restricted Littlestone tree",
        params: &[P::N, P::Transcript],
        defaults: |c| {
            c.n.get_or_insert(8);
            c.transcript.get_or_insert(false);
        },
        validate: |c| {
            check_range("n", get(c.n), 2, 10)?;
            Ok(())
        },
        run: run_leq_adversarial_tree,
    },
    Scenario {
        id: "leq-vs-eq",
        anchor: "Thm leq-better-eq",
        description: "Monotone dictators under a point mass: one 1-LEQ query against log n EQ counterexamples",
        params: &[P::N],
        defaults: |c| {
            c.n.get_or_insert(16);
        },
        validate: |c| {
            check_range("n", get(c.n), 2, crate::oracles::EQ_LIMIT)?;
            Ok(())
        },
        run: run_leq_vs_eq,
    },
    Scenario {
        id: "eq-vs-leq",
        anchor: "Thm eq-better-leq",
        description: "Singletons hidden near 1/epsilon anchors: one EQ query against 1/epsilon stalled LEQ queries",
        params: &[P::N, P::Lambda, P::Epsilon],
        defaults: |c| {
            c.n.get_or_insert(12);
            c.lambda.get_or_insert(1);
            c.epsilon.get_or_insert(0.25);
        },
        validate: |c| {
            let n = check_range("n", get(c.n), 2, crate::oracles::EQ_LIMIT)?;
            let eps = check_real("epsilon", get(c.epsilon), 0.0, 1.0)?;
            let k = (1.0 / eps).floor() as usize;
            let lambda = check_range("lambda", get(c.lambda), 1, n)?;
            if k < 1 || (k - 1) * (2 * lambda + 1) > n {
                return Err(invalid("need (floor(1/epsilon) - 1)(2 lambda + 1) <= n"));
            }
            Ok(())
        },
        run: run_eq_vs_leq,
    },
    Scenario {
        id: "dimension-table",
        anchor: "Table restricted-vc-bounds",
        description: "Brute-force VC, restricted VC and robust-loss VC values; trial t uses dimension n + t",
        params: &[P::N, P::Rho],
        defaults: |c| {
            c.n.get_or_insert(3);
            c.rho.get_or_insert(1.0);
        },
        validate: |c| {
            let n = check_range("n", get(c.n), 1, 12)?;
            if n as u64 + c.trials - 1 > 8 {
                return Err(invalid("dimension-table sweeps n + trials - 1 <= 8"));
            }
            let rho = int_rho(c)?;
            if rho == 0 {
                return Err(invalid("rho must be at least 1"));
            }
            Ok(())
        },
        run: run_dimension_table,
    },
];

fn find(id: &str) -> Result<&'static Scenario> {
    REGISTRY
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| invalid(format!("unknown scenario `{id}`")))
}

/// Ids, descriptions, anchors and parameters of every scenario.
pub fn list_scenarios() -> Vec<ScenarioInfo> {
    REGISTRY
        .iter()
        .map(|s| ScenarioInfo {
            id: s.id,
            anchor: s.anchor,
            description: s.description,
            params: s.params.iter().map(|p| p.name()).collect(),
        })
        .collect()
}

/// Validates `config` and runs every trial.
pub fn run_scenario(config: &ScenarioConfig) -> Result<ScenarioReport> {
    let start = std::time::Instant::now();
    let c = config.resolve()?;
    let s = find(&c.scenario)?;
    let out = (s.run)(&c)?;
    let records = out
        .rows
        .into_iter()
        .enumerate()
        .map(|(t, values)| TrialRecord {
            trial: t as u64,
            seed: rng::trial_seed(c.base_seed, t as u64),
            values,
        })
        .collect();
    Ok(ScenarioReport {
        report_version: REPORT_VERSION,
        config: c,
        columns: out.columns.iter().map(|s| s.to_string()).collect(),
        records,
        aggregate: out
            .aggregate
            .into_iter()
            .map(|(k, v)| (k.to_string(), v))
            .collect(),
        predicate: Predicate {
            anchor: s.anchor.to_string(),
            statement: out.statement,
            scope: out.scope.to_string(),
            pass: out.pass,
        },
        transcript: out.transcript,
        wall_clock: start.elapsed(),
    })
}

fn get<T: Copy>(v: Option<T>) -> T {
    v.expect("parameter resolved by defaults")
}

fn check_range(name: &str, v: usize, lo: usize, hi: usize) -> Result<usize> {
    if v < lo || v > hi {
        return Err(invalid(format!("{name} = {v} not in {lo}..={hi}")));
    }
    Ok(v)
}

/// Checks `lo < v <= hi`.
fn check_real(name: &str, v: f64, lo: f64, hi: f64) -> Result<f64> {
    if !(v > lo && v <= hi) {
        return Err(invalid(format!("{name} = {v} not in ({lo}, {hi}]")));
    }
    Ok(v)
}

fn int_rho(c: &ScenarioConfig) -> Result<usize> {
    let r = get(c.rho);
    if !(r >= 0.0 && r.fract() == 0.0 && r <= 128.0) {
        return Err(invalid(format!(
            "rho = {r} must be a nonnegative integer here"
        )));
    }
    Ok(r as usize)
}

fn check_ball(n: usize, rho: usize) -> Result<()> {
    if rho > n || crate::hypercube::ball_size(n, rho) > 1 << 20 {
        return Err(invalid(format!(
            "ball of radius {rho} in dimension {n} is too large to sweep"
        )));
    }
    Ok(())
}

fn validate_lower_bound(c: &ScenarioConfig) -> Result<()> {
    let n = check_range("n", get(c.n), 4, 128)?;
    let rho = int_rho(c)?;
    if rho == 0 || 4 * rho > n {
        return Err(invalid("need 1 <= rho <= n / 4"));
    }
    let kappa = check_real("kappa", get(c.kappa), 0.0, 2.0)?;
    if (kappa * rho as f64) > 24.0 {
        return Err(invalid("sample size 2^(kappa rho) above 2^24"));
    }
    Ok(())
}

fn validate_lmq(c: &ScenarioConfig) -> Result<()> {
    let n = check_range("n", get(c.n), 4, 128)?;
    let rho = int_rho(c)?;
    if rho < 1 || 4 * rho > n {
        return Err(invalid("need 1 <= rho <= n / 4"));
    }
    check_range("lambda", get(c.lambda), 1, n)?;
    check_range("m", get(c.m), 1, 1 << 20)?;
    check_range("queries", get(c.queries), 0, 1 << 20)?;
    Ok(())
}

fn validate_threshold(c: &ScenarioConfig) -> Result<()> {
    let n = check_range("n", get(c.n), 2, 64)?;
    let rho = int_rho(c)?;
    if rho > n {
        return Err(invalid("rho above n"));
    }
    check_real("alpha", get(c.alpha), 0.0, 1e6)?;
    if get(c.alpha) < 1.0 {
        return Err(invalid("alpha must be at least 1"));
    }
    check_real("epsilon", get(c.epsilon), 0.0, 1.0)?;
    check_real("delta", get(c.delta), 0.0, 1.0)?;
    check_range("m", get(c.m), 1, 10_000_000)?;
    Ok(())
}

fn run_trials<T, F>(c: &ScenarioConfig, f: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(u64, &mut Rng) -> Result<T> + Sync + Send,
{
    Exec::default()
        .map(c.trials as usize, |t| {
            f(t as u64, &mut rng::for_trial(c.base_seed, t as u64))
        })
        .into_iter()
        .collect()
}

fn mean(v: impl IntoIterator<Item = f64>) -> f64 {
    let (s, k) = v
        .into_iter()
        .fold((0.0, 0usize), |(s, k), x| (s + x, k + 1));
    if k == 0 {
        0.0
    } else {
        s / k as f64
    }
}

fn std_dev(v: &[f64]) -> f64 {
    if v.len() < 2 {
        return 0.0;
    }
    let m = mean(v.iter().copied());
    (v.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (v.len() - 1) as f64).sqrt()
}

/// `k` distinct indices from `1..=n` in random order.
fn random_indices(r: &mut Rng, n: usize, k: usize) -> Vec<usize> {
    let mut all: Vec<usize> = (1..=n).collect();
    all.shuffle(r);
    all.truncate(k);
    all
}

fn labelled(d: &Distribution, target: &Concept, m: usize, r: &mut Rng) -> Vec<(BitVector, bool)> {
    (0..m)
        .map(|_| {
            let x = d.sample(r);
            (x, target.eval(&x))
        })
        .collect()
}

const ANY_ALGORITHM: &str =
    "the bound holds for every learner; this run instantiates one representative learner";

fn run_monconj_lower_bound(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let rho = int_rho(c)?;
    let kappa = get(c.kappa);
    let m = 2f64.powf(kappa * rho as f64).ceil() as usize;
    let d = Distribution::uniform(n)?;
    let rows = run_trials(c, |_, r| {
        let idx = random_indices(r, n, 4 * rho);
        let c1 = Concept::mon_conj(n, &idx[..2 * rho])?;
        let c2 = Concept::mon_conj(n, &idx[2 * rho..])?;
        let first = r.random_bool(0.5);
        let target = if first { &c1 } else { &c2 };
        let sample = labelled(&d, target, m, r);
        let indistinct = sample.iter().all(|(x, _)| !c1.eval(x) && !c2.eval(x));
        let h = learn_conjunction(&sample, true)?;
        let risk = robust_risk_exact(target, &h, rho, &d)?;
        Ok((first, indistinct, risk))
    })?;
    let trials = rows.len() as u64;
    let mean_risk = mean(rows.iter().map(|r| r.2));
    let k = rows.iter().filter(|r| r.1).count() as u64;
    let expected = (1.0 - 2f64.powi(-2 * rho as i32)).powf(2.0 * m as f64);
    let (lo, hi) = clopper_pearson(k, trials, MC_CONFIDENCE);
    let consistent = lo <= expected && expected <= hi;
    let bound = 5.0 / 48.0;
    let pair = {
        let c1 = Concept::mon_conj(n, &(1..=2 * rho).collect::<Vec<_>>())?;
        let c2 = Concept::mon_conj(n, &(2 * rho + 1..=4 * rho).collect::<Vec<_>>())?;
        robust_risk_exact(&c1, &c2, rho, &d)?
    };
    let pass = mean_risk >= bound - LOWER_BOUND_SLACK && consistent;
    Ok(Outcome {
        columns: vec!["target", "all_negative", "risk"],
        rows: rows
            .iter()
            .map(|&(f, a, risk)| vec![Cell::from(if f { 1usize } else { 2 }), a.into(), risk.into()])
            .collect(),
        aggregate: vec![
            ("sample_size", m.into()),
            ("mean_risk", mean_risk.into()),
            ("risk_bound", bound.into()),
            ("pair_risk", pair.into()),
            ("pair_risk_bound", ((1.0 - 2f64.powi(-2 * rho as i32)) / 2.0).into()),
            ("all_negative_rate", (k as f64 / trials as f64).into()),
            ("all_negative_expected", expected.into()),
            ("all_negative_ci_low", lo.into()),
            ("all_negative_ci_high", hi.into()),
            ("all_negative_consistent", consistent.into()),
        ],
        statement: format!(
            "mean robust risk >= 5/48 - {LOWER_BOUND_SLACK} and the 99% Clopper-Pearson interval of the \
             all-negative sample rate contains (1 - 2^(-2 rho))^(2m)"
        ),
        scope: ANY_ALGORITHM,
        pass,
        transcript: Vec::new(),
    })
}

fn run_lmq_lower_bound(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let rho = int_rho(c)?;
    let lambda = get(c.lambda);
    let m = get(c.m);
    let queries = get(c.queries);
    let d = Distribution::uniform(n)?;
    let rows = run_trials(c, |t, r| {
        let idx = random_indices(r, n, 4 * rho);
        let signed = |v: &[usize], r: &mut Rng| -> Vec<i32> {
            v.iter()
                .map(|&i| {
                    if r.random_bool(0.5) {
                        i as i32
                    } else {
                        -(i as i32)
                    }
                })
                .collect()
        };
        let l1 = signed(&idx[..2 * rho], r);
        let l2 = signed(&idx[2 * rho..], r);
        let c1 = Concept::conj(n, &l1)?;
        let c2 = Concept::conj(n, &l2)?;
        let first = r.random_bool(0.5);
        let target = if first { c1.clone() } else { c2.clone() };
        let mut s = OracleSession::new(
            target.clone(),
            lambda,
            Policy::default(),
            rng::splitmix64(t),
        )?
        .with_distribution(d.clone())?;
        let mut data = Vec::with_capacity(m + queries);
        for _ in 0..m {
            data.push(s.ex_draw()?);
        }
        for q in 0..queries {
            let (x, _) = data[q % m];
            let mut z = x;
            for i in random_indices(r, n, lambda.min(n)) {
                z = z.flipped(i);
            }
            let y = s.lmq_query(&z)?;
            data.push((z, y));
        }
        let indistinct = data.iter().all(|(x, _)| !c1.eval(x) && !c2.eval(x));
        let h = learn_conjunction(&data, false)?;
        let risk = robust_risk_exact(&target, &h, rho, &d)?;
        let pair = robust_risk_exact(&c1, &c2, rho, &d)?;
        Ok((first, indistinct, risk, pair, s.counters().lmq))
    })?;
    let mean_risk = mean(rows.iter().map(|r| r.2));
    let min_pair = rows.iter().map(|r| r.3).fold(f64::INFINITY, f64::min);
    let bound = 15.0 / 256.0;
    let pair_bound = (1.0 - 2f64.powi(-2 * rho as i32)) / 2.0;
    let pass = mean_risk >= bound - LOWER_BOUND_SLACK && min_pair >= pair_bound;
    Ok(Outcome {
        columns: vec!["target", "all_negative", "risk", "pair_risk", "lmq"],
        rows: rows
            .iter()
            .map(|&(f, a, risk, pair, q)| {
                vec![Cell::from(if f { 1usize } else { 2 }), a.into(), risk.into(), pair.into(), q.into()]
            })
            .collect(),
        aggregate: vec![
            ("mean_risk", mean_risk.into()),
            ("risk_bound", bound.into()),
            ("all_negative_rate", mean(rows.iter().map(|r| f64::from(u8::from(r.1)))).into()),
            ("min_pair_risk", min_pair.into()),
            ("pair_risk_bound", pair_bound.into()),
        ],
        statement: format!(
            "mean robust risk >= 15/256 - {LOWER_BOUND_SLACK} and every pair has robust risk >= (1 - 2^(-2 rho)) / 2"
        ),
        scope: ANY_ALGORITHM,
        pass,
        transcript: Vec::new(),
    })
}

/// Sample size of the threshold construction and the `eta` it uses.
pub fn threshold_sample_size(n: usize, alpha: f64, epsilon: f64, delta: f64) -> (f64, f64) {
    let eta = 1.0 / (1.0 + alpha);
    let nf = n as f64;
    let l0 = (2.0 / eta * nf.ln()).max(8.0 / (eta * eta) * (1.0 / epsilon).ln());
    let m = ((nf.ln() - delta.ln()) / eta.powf(l0 + 1.0)).ceil();
    (m, eta)
}

fn run_monconj_threshold(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let rho = int_rho(c)?;
    let eps = get(c.epsilon);
    let delta = get(c.delta);
    let kind = get(c.distribution);
    let d = kind.build(n, get(c.alpha))?;
    let alpha = d.log_lipschitz_alpha()?;
    let (m_theory, _) = threshold_sample_size(n, alpha, eps, delta);
    let m = if m_theory < get(c.m) as f64 {
        m_theory as usize
    } else {
        get(c.m)
    };
    let rows = run_trials(c, |_, r| {
        let len = r.random_range(1..=n);
        let target = Concept::mon_conj(n, &random_indices(r, n, len))?;
        let sample = labelled(&d, &target, m, r);
        let h = learn_conjunction(&sample, true)?;
        let risk = robust_risk_exact(&target, &h, rho, &d)?;
        Ok((len, h == target, risk))
    })?;
    let failures = rows.iter().filter(|r| r.2 > eps).count();
    let rate = failures as f64 / rows.len() as f64;
    Ok(Outcome {
        columns: vec!["length", "exact", "risk", "failed"],
        rows: rows
            .iter()
            .map(|&(l, e, risk)| vec![l.into(), e.into(), risk.into(), (risk > eps).into()])
            .collect(),
        aggregate: vec![
            ("alpha", alpha.into()),
            ("sample_size", m.into()),
            ("sample_size_formula", m_theory.into()),
            ("exact_rate", mean(rows.iter().map(|r| f64::from(u8::from(r.1)))).into()),
            ("mean_risk", mean(rows.iter().map(|r| r.2)).into()),
            ("failure_rate", rate.into()),
        ],
        statement: "fraction of trials with robust risk > epsilon is <= delta, target length uniform on 1..=n, \
                    sample size min(m, formula)"
            .into(),
        scope: "monotone conjunction elimination learner; one distribution per run",
        pass: rate <= delta,
        transcript: Vec::new(),
    })
}

fn run_dictator_impossibility(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let m = get(c.m);
    let d = Distribution::correlated_pair(n, 1.0)?;
    let dictators: Vec<Concept> = (1..=n)
        .map(|i| Concept::dictator(n, i, true))
        .collect::<Result<_>>()?;
    let rows = run_trials(c, |_, r| {
        let first = r.random_bool(0.5);
        let target = &dictators[if first { 0 } else { 1 }];
        let sample = labelled(&d, target, m, r);
        let pick = dictators
            .iter()
            .position(|h| sample.iter().all(|(x, y)| h.eval(x) == *y))
            .expect("the target is consistent");
        let risk = robust_risk_exact(target, &dictators[pick], 1, &d)?;
        Ok((first, pick + 1, risk))
    })?;
    let mean_risk = mean(rows.iter().map(|r| r.2));
    let pair = robust_risk_exact(&dictators[0], &dictators[1], 1, &d)?;
    Ok(Outcome {
        columns: vec!["target", "learned", "risk"],
        rows: rows
            .iter()
            .map(|&(f, p, risk)| {
                vec![
                    Cell::from(if f { 1usize } else { 2 }),
                    p.into(),
                    risk.into(),
                ]
            })
            .collect(),
        aggregate: vec![("mean_risk", mean_risk.into()), ("pair_risk", pair.into())],
        statement: "mean 1-robust risk >= 0.45 with x1 = x2 almost surely".into(),
        scope: "first consistent dictator; the bound holds for every learner",
        pass: mean_risk >= 0.45,
        transcript: Vec::new(),
    })
}

fn run_nontrivial_impossibility(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let m = get(c.m);
    let skew = get(c.kappa);
    let d = Distribution::skewed_toward(&BitVector::zeros(n), &[1, 2], skew)?;
    let c1 = Concept::mon_conj(n, &[1])?;
    let c2 = Concept::mon_conj(n, &[1, 2])?;
    let rows = run_trials(c, |_, r| {
        let first = r.random_bool(0.5);
        let target = if first { &c1 } else { &c2 };
        let sample = labelled(&d, target, m, r);
        let agree = sample.iter().all(|(x, _)| c1.eval(x) == c2.eval(x));
        let h = learn_conjunction(&sample, true)?;
        let risk = robust_risk_exact(target, &h, 1, &d)?;
        Ok((first, agree, risk))
    })?;
    let mean_risk = mean(rows.iter().map(|r| r.2));
    let pair = robust_risk_exact(&c1, &c2, 1, &d)?;
    let eta = (n as f64).powf(-skew);
    Ok(Outcome {
        columns: vec!["target", "labels_agree", "risk"],
        rows: rows
            .iter()
            .map(|&(f, a, risk)| {
                vec![
                    Cell::from(if f { 1usize } else { 2 }),
                    a.into(),
                    risk.into(),
                ]
            })
            .collect(),
        aggregate: vec![
            ("eta", eta.into()),
            ("mean_risk", mean_risk.into()),
            ("pair_risk", pair.into()),
            ("pair_risk_bound", (1.0 - eta).powi(2).into()),
        ],
        statement: "mean 1-robust risk >= 0.45 under the product skewed toward 0 on {x1, x2}"
            .into(),
        scope: ANY_ALGORITHM,
        pass: mean_risk >= 0.45,
        transcript: Vec::new(),
    })
}

fn run_leq_lambda_lt_rho(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let rho = int_rho(c)?;
    let lambda = get(c.lambda);
    let m = get(c.m);
    let d = Distribution::point_mass(BitVector::zeros(n));
    let c1 = Concept::mon_conj(n, &(1..=rho).collect::<Vec<_>>())?;
    let c2 = Concept::mon_conj(n, &(1..=rho + 1).collect::<Vec<_>>())?;
    let run = |target: &Concept, seed: u64| -> Result<(Vec<String>, Concept, u64)> {
        let mut s = OracleSession::new(target.clone(), lambda, Policy::default(), seed)?
            .with_distribution(d.clone())?
            .record_transcript();
        for _ in 0..m {
            s.ex_draw()?;
        }
        let sample = s.sample().to_vec();
        let mut l = ConjunctionLearner::new(n, true);
        for x in &sample {
            l.update(x, target.eval(x))?;
        }
        let out = robust_leq_driver(
            &mut l,
            &mut s,
            &sample,
            DriverMode::Sequential,
            (m + 2 * n) as u64,
        )?;
        Ok((s.transcript().to_vec(), l.hypothesis(), out.queries))
    };
    let rows = run_trials(c, |t, r| {
        let first = r.random_bool(0.5);
        let seed = rng::splitmix64(t);
        let (t1, h1, q) = run(&c1, seed)?;
        let (t2, h2, _) = run(&c2, seed)?;
        let identical = t1 == t2 && h1 == h2;
        let (target, h) = if first { (&c1, &h1) } else { (&c2, &h2) };
        let risk = robust_risk_exact(target, h, rho, &d)?;
        let expected =
            (robust_risk_exact(&c1, &h1, rho, &d)? + robust_risk_exact(&c2, &h2, rho, &d)?) / 2.0;
        Ok((first, identical, q, risk, expected, t1))
    })?;
    let trials = rows.len() as u64;
    let k = rows.iter().filter(|r| r.3 > 0.5).count() as u64;
    let (lo, hi) = clopper_pearson(k, trials, MC_CONFIDENCE);
    let identical = rows.iter().all(|r| r.1);
    let min_expected = rows.iter().map(|r| r.4).fold(f64::INFINITY, f64::min);
    let pass = identical && min_expected >= 0.5 && lo <= 0.5 && 0.5 <= hi;
    let transcript = if get(c.transcript) {
        rows[0].5.clone()
    } else {
        Vec::new()
    };
    Ok(Outcome {
        columns: vec!["target", "transcripts_identical", "queries", "risk", "expected_risk"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    Cell::from(if r.0 { 1usize } else { 2 }),
                    r.1.into(),
                    r.2.into(),
                    r.3.into(),
                    r.4.into(),
                ]
            })
            .collect(),
        aggregate: vec![
            ("mean_risk", (k as f64 / trials as f64).into()),
            ("risk_ci_low", lo.into()),
            ("risk_ci_high", hi.into()),
            ("min_expected_risk", min_expected.into()),
            ("pair_risk", robust_risk_exact(&c1, &c2, rho, &d)?.into()),
        ],
        statement: "transcripts for both targets are byte-identical, the risk averaged over the two targets is \
                    >= 1/2 in every trial, and 1/2 lies in the 99% interval of the observed risk"
            .into(),
        scope: "monotone conjunction learner with the sequential LEQ driver; the bound holds for every learner",
        pass,
        transcript,
    })
}

fn run_leq_conjunction_queries(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let rho = int_rho(c)?;
    let eps = get(c.epsilon);
    let delta = get(c.delta);
    let m = ((n as f64 + (1.0 / delta).ln()) / eps).ceil() as usize;
    let bound = (m + 2 * n) as u64;
    let d = Distribution::uniform(n)?;
    let rows = run_trials(c, |t, r| {
        let lits: Vec<i32> = (1..=n as i32)
            .filter_map(|i| match r.random_range(0..4) {
                0 => Some(i),
                1 => Some(-i),
                _ => None,
            })
            .collect();
        let target = Concept::conj(n, &lits)?;
        let mut s = OracleSession::new(target.clone(), rho, Policy::default(), rng::splitmix64(t))?
            .with_distribution(d.clone())?;
        if t == 0 && get(c.transcript) {
            s = s.record_transcript();
        }
        let mut l = ConjunctionLearner::new(n, false);
        for _ in 0..m {
            let (x, y) = s.ex_draw()?;
            l.update(&x, y)?;
        }
        let sample = s.sample().to_vec();
        let out = robust_leq_driver(&mut l, &mut s, &sample, DriverMode::Sequential, bound)?;
        let h = l.hypothesis();
        let mut consistent = true;
        for x in &sample {
            consistent &= !fast_loss(&target, &h, x, rho)?;
        }
        Ok((
            lits.len(),
            out.queries,
            out.counterexamples,
            consistent,
            s.transcript().to_vec(),
        ))
    })?;
    let within = rows.iter().all(|r| r.1 <= bound);
    let consistent = rows.iter().all(|r| r.3);
    let transcript = rows[0].4.clone();
    Ok(Outcome {
        columns: vec!["target_literals", "queries", "counterexamples", "robustly_consistent"],
        rows: rows
            .iter()
            .map(|r| vec![r.0.into(), r.1.into(), r.2.into(), r.3.into()])
            .collect(),
        aggregate: vec![
            ("sample_size", m.into()),
            ("query_bound", bound.into()),
            ("max_queries", rows.iter().map(|r| r.1).max().unwrap_or(0).into()),
            ("mean_queries", mean(rows.iter().map(|r| r.1 as f64)).into()),
            ("all_robustly_consistent", consistent.into()),
        ],
        statement: "LEQ queries <= m + 2n in every run, m = ceil((n + ln(1/delta)) / epsilon), and the output has \
                    zero robust loss on the sample"
            .into(),
        scope: "uniform examples, random conjunction targets, first-in-ball-order counterexamples",
        pass: within && consistent,
        transcript,
    })
}

fn random_ltf(n: usize, w: u64, r: &mut Rng) -> Result<Concept> {
    let mut weights = vec![0i64; n];
    let mut bias = 0i64;
    for _ in 0..w {
        let j = r.random_range(0..=n);
        let slot = if j == n { &mut bias } else { &mut weights[j] };
        if *slot == 0 {
            *slot = if r.random_bool(0.5) { 1 } else { -1 };
        } else {
            *slot += slot.signum();
        }
    }
    Concept::ltf_bool(weights, bias, w)
}

fn run_leq_winnow_ltf(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let w = get(c.w);
    let rho = int_rho(c)?;
    let eps = get(c.epsilon);
    let delta = get(c.delta);
    let kappa = get(c.kappa);
    let nf = n as f64;
    let m = ((nf + (n.min(w as usize) as f64) * (w as f64 + nf).ln() + (1.0 / delta).ln()) / eps)
        .ceil() as usize;
    let bound = (m as f64 * kappa * (w * w) as f64 * nf.log2()).floor() as u64;
    let d = Distribution::uniform(n)?;
    let rows = run_trials(c, |t, r| {
        let target = random_ltf(n, w, r)?;
        let mut s = OracleSession::new(target.clone(), rho, Policy::default(), rng::splitmix64(t))?
            .with_distribution(d.clone())?;
        for _ in 0..m {
            s.ex_draw()?;
        }
        let sample = s.sample().to_vec();
        let mut l = Winnow::for_weight(n, w);
        let res = robust_leq_driver(&mut l, &mut s, &sample, DriverMode::RoundRobin, bound);
        match res {
            Ok(out) => Ok((out.queries, out.counterexamples, out.rounds, true)),
            Err(Error::BudgetExceeded { .. }) => Ok((bound, l.mistakes(), 0, false)),
            Err(e) => Err(e),
        }
    })?;
    let within = rows.iter().all(|r| r.3);
    Ok(Outcome {
        columns: vec!["queries", "counterexamples", "rounds", "within_bound"],
        rows: rows
            .iter()
            .map(|r| vec![r.0.into(), r.1.into(), r.2.into(), r.3.into()])
            .collect(),
        aggregate: vec![
            ("sample_size", m.into()),
            ("query_bound", bound.into()),
            (
                "max_queries",
                rows.iter().map(|r| r.0).max().unwrap_or(0).into(),
            ),
            (
                "max_counterexamples",
                rows.iter().map(|r| r.1).max().unwrap_or(0).into(),
            ),
        ],
        statement: "LEQ queries <= m kappa W^2 log2(n) in every run".into(),
        scope: "Winnow on doubled features, uniform examples, random integer targets of weight W",
        pass: within,
        transcript: Vec::new(),
    })
}

fn run_leq_soa(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let rho = int_rho(c)?;
    let eps = get(c.epsilon);
    let delta = get(c.delta);
    let concepts = enumerate_class(&ClassSpec::MonConj, n, 1 << 16)?;
    let class = FiniteClass::cube(&concepts)?;
    let lit = littlestone_dimension(&class, None, None)?;
    let m = (((concepts.len() as f64).ln() + (1.0 / delta).ln()) / eps).ceil() as usize;
    let bound = (m * lit) as u64;
    let d = Distribution::uniform(n)?;
    let rows = run_trials(c, |t, r| {
        let target = concepts[r.random_range(0..concepts.len())].clone();
        let mut s = OracleSession::new(target.clone(), rho, Policy::default(), rng::splitmix64(t))?
            .with_distribution(d.clone())?;
        for _ in 0..m {
            s.ex_draw()?;
        }
        let sample = s.sample().to_vec();
        let mut l = Soa::new(class.clone(), None)?;
        let out = robust_leq_driver(
            &mut l,
            &mut s,
            &sample,
            DriverMode::RoundRobin,
            bound + m as u64,
        )?;
        Ok((out.queries, out.counterexamples, out.rounds))
    })?;
    let within = rows.iter().all(|r| r.0 <= bound);
    Ok(Outcome {
        columns: vec!["queries", "counterexamples", "rounds", "within_bound"],
        rows: rows
            .iter()
            .map(|r| vec![r.0.into(), r.1.into(), r.2.into(), (r.0 <= bound).into()])
            .collect(),
        aggregate: vec![
            ("class_size", concepts.len().into()),
            ("littlestone", lit.into()),
            ("sample_size", m.into()),
            ("query_bound", bound.into()),
            (
                "max_queries",
                rows.iter().map(|r| r.0).max().unwrap_or(0).into(),
            ),
            (
                "max_counterexamples",
                rows.iter().map(|r| r.1).max().unwrap_or(0).into(),
            ),
        ],
        statement: "LEQ queries <= m Lit in every run, m = ceil((ln|C| + ln(1/delta)) / epsilon)"
            .into(),
        scope: "monotone conjunctions on the full cube, uniform examples, round-robin LEQ driver",
        pass: within,
        transcript: Vec::new(),
    })
}

/// `min` over nonempty `S` of `Pr[parity_S(x) = 1]`, from the Walsh transform
/// of the mass table.
pub fn parity_error_floor(d: &Distribution) -> Result<f64> {
    let n = d.n();
    let mut t = d.pmf_table()?;
    let mut h = 1;
    while h < t.len() {
        for i in (0..t.len()).step_by(2 * h) {
            for j in i..i + h {
                let (a, b) = (t[j], t[j + h]);
                t[j] = a + b;
                t[j + h] = a - b;
            }
        }
        h *= 2;
    }
    Ok((1..1usize << n)
        .map(|s| (1.0 - t[s]) / 2.0)
        .fold(f64::INFINITY, f64::min))
}

fn run_parity_exact(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let alpha = get(c.alpha);
    let eps = get(c.epsilon);
    let delta = get(c.delta);
    let m = ((n as f64 * 2f64.ln() + (1.0 / delta).ln()) / eps).ceil() as usize;
    let d = Distribution::product_alpha(n, alpha)?;
    let rows = run_trials(c, |_, r| {
        let idx: Vec<usize> = (1..=n).filter(|_| r.random_bool(0.5)).collect();
        let target = Concept::parity(n, &idx)?;
        let sample = labelled(&d, &target, m, r);
        let h = learn_parity(&sample)?;
        Ok((idx.len(), h == target))
    })?;
    let rate = mean(rows.iter().map(|r| f64::from(u8::from(r.1))));
    let floor = parity_error_floor(&d)?;
    let floor_bound = 1.0 / (1.0 + alpha);
    Ok(Outcome {
        columns: vec!["target_size", "exact"],
        rows: rows.iter().map(|r| vec![r.0.into(), r.1.into()]).collect(),
        aggregate: vec![
            ("sample_size", m.into()),
            ("recovery_rate", rate.into()),
            ("error_floor", floor.into()),
            ("error_floor_bound", floor_bound.into()),
        ],
        statement: "every run recovers the target parity, and every wrong parity has error >= 1/(1 + alpha) \
                    (exact Walsh transform)"
            .into(),
        scope: "Gaussian elimination learner, product distribution with Pr[x_i = 1] = alpha / (1 + alpha)",
        pass: rate == 1.0 && floor >= floor_bound - 1e-12,
        transcript: Vec::new(),
    })
}

fn run_majority_fourier(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let delta = get(c.delta);
    let kappa = get(c.kappa);
    let m = majority_sample_size(n, delta, kappa);
    let d = Distribution::uniform(n)?;
    let rows = run_trials(c, |_, r| {
        let mut size = r.random_range(1..=n);
        if size % 2 == 0 {
            size -= 1;
        }
        let mut idx = random_indices(r, n, size);
        idx.sort_unstable();
        let target = Concept::majority(n, &idx)?;
        let sample = labelled(&d, &target, m, r);
        let h = learn_majority(&sample)?;
        Ok((size, h == target))
    })?;
    let rate = mean(rows.iter().map(|r| f64::from(u8::from(r.1))));
    Ok(Outcome {
        columns: vec!["target_size", "exact"],
        rows: rows.iter().map(|r| vec![r.0.into(), r.1.into()]).collect(),
        aggregate: vec![("sample_size", m.into()), ("recovery_rate", rate.into())],
        statement: "exact recovery rate >= 1 - delta with m = ceil(kappa n ln(n / delta))".into(),
        scope: "uniform distribution, odd-size targets of random size",
        pass: rate >= 1.0 - delta,
        transcript: Vec::new(),
    })
}

fn run_precision_perceptron(c: &ScenarioConfig) -> Result<Outcome> {
    use rand_distr::{Distribution as _, StandardNormal};
    let dim = get(c.n);
    let b = get(c.b);
    let tau = get(c.tau);
    let rho = get(c.rho);
    let m = get(c.m);
    let bound = (b / tau).powi(2);
    let unit = |r: &mut Rng| -> Vec<f64> {
        loop {
            let v: Vec<f64> = (0..dim).map(|_| StandardNormal.sample(r)).collect();
            let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
            if norm > 1e-9 {
                return v.into_iter().map(|x| x / norm).collect();
            }
        }
    };
    let rows = run_trials(c, |_, r| {
        let target = RealHalfspace::new(unit(r), 0.0);
        let sample: Vec<Vec<f64>> = (0..m)
            .map(|_| {
                let s = (b - rho) * r.random::<f64>().powf(1.0 / dim as f64);
                unit(r).into_iter().map(|x| s * x).collect()
            })
            .collect();
        let g = precision_game(&target, &sample, rho, tau, 1 + bound.ceil() as u64)?;
        Ok((g.mistakes, g.queries, g.rounds))
    })?;
    let within = rows.iter().all(|r| r.0 as f64 <= bound);
    Ok(Outcome {
        columns: vec!["mistakes", "queries", "rounds", "within_bound"],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    r.0.into(),
                    r.1.into(),
                    r.2.into(),
                    (r.0 as f64 <= bound).into(),
                ]
            })
            .collect(),
        aggregate: vec![
            ("mistake_bound", bound.into()),
            (
                "max_mistakes",
                rows.iter().map(|r| r.0).max().unwrap_or(0).into(),
            ),
            (
                "mean_mistakes",
                mean(rows.iter().map(|r| r.0 as f64)).into(),
            ),
        ],
        statement: "Perceptron mistakes <= B^2 / tau^2 in every game".into(),
        scope: "homogeneous unit-normal targets, sample uniform in the ball of radius B - rho",
        pass: within,
        transcript: Vec::new(),
    })
}

fn point_term(x: &BitVector) -> Vec<i32> {
    (1..=x.n())
        .map(|i| if x.get(i) { i as i32 } else { -(i as i32) })
        .collect()
}

/// Indicator of the subset of `points` selected by `mask`.
fn indicator(n: usize, points: &[BitVector], mask: u64) -> Result<Concept> {
    let mut nodes: Vec<(Vec<i32>, bool)> = points
        .iter()
        .enumerate()
        .filter(|(j, _)| mask >> j & 1 == 1)
        .map(|(_, p)| (point_term(p), true))
        .collect();
    nodes.push((Vec::new(), false));
    Concept::decision_list(n, nodes)
}

fn run_leq_adversarial_tree(c: &ScenarioConfig) -> Result<Outcome> {
    let d = get(c.n);
    let n = d;
    let root = BitVector::zeros(n);
    let mut nodes = vec![root];
    for i in 1..d {
        nodes.push(BitVector::unit(n, i)?);
    }
    let class: Vec<Concept> = (0..1u64 << d)
        .map(|mask| indicator(n, &nodes, mask))
        .collect::<Result<_>>()?;
    let restricted = littlestone_dimension(&FiniteClass::cube(&class)?, Some(1.0), None)?;
    let policy = Policy::Adversarial {
        strategy: Adversary::TreeOrder {
            order: nodes.clone(),
        },
    };
    let dist = Distribution::point_mass(root);
    let rows = run_trials(c, |t, r| {
        let mask = 1 | (r.random_range(0..1u64 << (d - 1)) << 1);
        let target = class[mask as usize].clone();
        let mut s = OracleSession::new(target.clone(), 1, policy.clone(), rng::splitmix64(t))?
            .with_distribution(dist.clone())?;
        if t == 0 && get(c.transcript) {
            s = s.record_transcript();
        }
        let (x, y) = s.ex_draw()?;
        let mut l = Halving::new(class.clone())?;
        l.update(&x, y)?;
        let out = robust_leq_driver(&mut l, &mut s, &[x], DriverMode::Sequential, 4 * d as u64)?;
        let exact = nodes.iter().all(|z| l.predict(z) == target.eval(z));
        Ok((out.counterexamples, exact, s.transcript().to_vec()))
    })?;
    let counts: Vec<f64> = rows.iter().map(|r| r.0 as f64).collect();
    let mean_ce = mean(counts.iter().copied());
    let expected = (d - 1) as f64 / 2.0;
    let tolerance =
        LOWER_BOUND_SLACK + Z99 * ((d - 1) as f64).sqrt() / 2.0 / (rows.len() as f64).sqrt();
    let exact = rows.iter().all(|r| r.1);
    let transcript = rows[0].2.clone();
    Ok(Outcome {
        columns: vec!["counterexamples", "exact_on_ball"],
        rows: rows.iter().map(|r| vec![r.0.into(), r.1.into()]).collect(),
        aggregate: vec![
            ("depth", d.into()),
            ("restricted_littlestone", restricted.into()),
            ("mean_counterexamples", mean_ce.into()),
            ("sd_counterexamples", std_dev(&counts).into()),
            ("expected", expected.into()),
            ("tolerance", tolerance.into()),
        ],
        statement: format!(
            "restricted Littlestone dimension = d and mean counterexamples >= (d - 1)/2 - ({LOWER_BOUND_SLACK} + \
             99% normal half-width)"
        ),
        scope: "halving learner over all labelings of the tree nodes; the bound holds for every learner",
        pass: restricted == d && exact && mean_ce >= expected - tolerance,
        transcript,
    })
}

fn run_leq_vs_eq(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let origin = BitVector::zeros(n);
    let floor_log = (usize::BITS - 1 - n.leading_zeros()) as u64;
    let dictators: Vec<Concept> = (1..=n)
        .map(|i| Concept::dictator(n, i, true))
        .collect::<Result<_>>()?;
    let rows = run_trials(c, |t, r| {
        let i = r.random_range(1..=n);
        let target = Concept::dictator(n, i, true)?;
        let mut s = OracleSession::new(target.clone(), 1, Policy::default(), rng::splitmix64(t))?
            .with_distribution(Distribution::point_mass(origin))?;
        let (x, _) = s.ex_draw()?;
        let zero = Concept::constant(n, false);
        let learned = match s.leq_query(&zero, &x)? {
            LeqAnswer::Counterexample(z) => Concept::dictator(n, z.ones_indices()[0], true)?,
            LeqAnswer::Agree => zero,
        };
        let leq_exact = learned == target;
        let leq_queries = s.counters().leq;
        let policy = Policy::Adversarial {
            strategy: Adversary::DictatorHalving,
        };
        let mut e = OracleSession::new(target, 1, policy, rng::splitmix64(t))?;
        let mut h = Halving::new(dictators.clone())?;
        let mut ce = 0u64;
        loop {
            match e.eq_query(&h)? {
                LeqAnswer::Agree => break,
                LeqAnswer::Counterexample(z) => {
                    ce += 1;
                    let y = !h.predict(&z);
                    h.update(&z, y)?;
                }
            }
            if ce > n as u64 {
                return Err(Error::Protocol("EQ did not converge".into()));
            }
        }
        Ok((leq_queries, leq_exact, ce))
    })?;
    let pass = rows.iter().all(|r| r.0 == 1 && r.1 && r.2 >= floor_log);
    Ok(Outcome {
        columns: vec!["leq_queries", "leq_exact", "eq_counterexamples"],
        rows: rows.iter().map(|r| vec![r.0.into(), r.1.into(), r.2.into()]).collect(),
        aggregate: vec![
            ("floor_log2_n", floor_log.into()),
            ("min_eq_counterexamples", rows.iter().map(|r| r.2).min().unwrap_or(0).into()),
        ],
        statement: "one 1-LEQ query identifies the dictator, and the halving adversary forces >= floor(log2 n) EQ \
                    counterexamples in every run"
            .into(),
        scope: "halving learner against the EQ adversary; the EQ bound holds for every learner",
        pass,
        transcript: Vec::new(),
    })
}

/// `k` anchors with pairwise disjoint `lambda`-balls: `0` and one block of
/// `2 lambda + 1` ones per further anchor.
pub fn disjoint_anchors(n: usize, k: usize, lambda: usize) -> Result<Vec<BitVector>> {
    let w = 2 * lambda + 1;
    (0..k)
        .map(|j| {
            let ones: Vec<usize> = if j == 0 {
                Vec::new()
            } else {
                ((j - 1) * w + 1..=j * w).collect()
            };
            BitVector::from_ones(n, &ones)
        })
        .collect()
}

fn run_eq_vs_leq(c: &ScenarioConfig) -> Result<Outcome> {
    let n = get(c.n);
    let lambda = get(c.lambda);
    let k = (1.0 / get(c.epsilon)).floor() as usize;
    let anchors = disjoint_anchors(n, k, lambda)?;
    let rows_w: Vec<(BitVector, u64)> = anchors.iter().map(|a| (*a, 1)).collect();
    let d = Distribution::finite_exact(n, &rows_w)?;
    let zero = Concept::constant(n, false);
    let rows = run_trials(c, |t, r| {
        let host = anchors[r.random_range(0..k)];
        let near: Vec<BitVector> = ball(&host, lambda).skip(1).collect();
        let hidden = Concept::singleton(near[r.random_range(0..near.len())]);
        let mut e = OracleSession::new(
            hidden.clone(),
            lambda,
            Policy::default(),
            rng::splitmix64(t),
        )?;
        let eq_exact = match e.eq_query(&zero)? {
            LeqAnswer::Counterexample(z) => Concept::singleton(z) == hidden,
            LeqAnswer::Agree => false,
        };
        let policy = Policy::Adversarial {
            strategy: Adversary::SingletonStalling {
                anchors: anchors.clone(),
            },
        };
        let mut s =
            OracleSession::new(Concept::singleton(host), lambda, policy, rng::splitmix64(t))?
                .with_distribution(d.clone())?;
        while s.sample().len() < k {
            if s.counters().ex > 1000 * k as u64 {
                return Err(Error::Protocol("anchors not collected".into()));
            }
            s.ex_draw()?;
        }
        let mut order = s.sample().to_vec();
        order.shuffle(r);
        let mut learned = zero.clone();
        for x in &order {
            if let LeqAnswer::Counterexample(z) = s.leq_query(&zero, x)? {
                learned = Concept::singleton(z);
                break;
            }
        }
        let risk = robust_risk_exact(s.target(), &learned, lambda, &d)?;
        Ok((
            e.counters().eq,
            eq_exact,
            s.counters().leq,
            s.counters().ex,
            risk,
        ))
    })?;
    let pass = rows
        .iter()
        .all(|r| r.0 == 1 && r.1 && r.2 >= k as u64 && r.4 == 0.0);
    Ok(Outcome {
        columns: vec!["eq_queries", "eq_exact", "leq_queries", "ex_draws", "final_risk"],
        rows: rows
            .iter()
            .map(|r| vec![r.0.into(), r.1.into(), r.2.into(), r.3.into(), r.4.into()])
            .collect(),
        aggregate: vec![
            ("anchors", k.into()),
            ("min_leq_queries", rows.iter().map(|r| r.2).min().unwrap_or(0).into()),
        ],
        statement: "one EQ query identifies the singleton, while the stalling LEQ needs >= floor(1/epsilon) queries \
                    before the robust risk reaches 0, in every run"
            .into(),
        scope: "constant-zero queries at distinct anchors in random order; the LEQ bound holds for every learner",
        pass,
        transcript: Vec::new(),
    })
}

/// The `2^(n+1)` threshold functions realizing every labeling of
/// `{0, e_1, ..., e_n}`.
pub fn ltf_witness_class(n: usize) -> Result<Vec<Concept>> {
    (0..1u64 << (n + 1))
        .map(|mask| {
            let b0 = mask & 1 == 1;
            let weights: Vec<i64> = (1..=n)
                .map(|i| i64::from(mask >> i & 1 == 1) - i64::from(b0))
                .collect();
            Concept::ltf_bool(weights, if b0 { 0 } else { -1 }, 2 * n as u64 + 1)
        })
        .collect()
}

/// Whether the width-2 decision lists built on `{0} ∪ {x^K : |K| = 2}`
/// realize every labeling of those points.
pub fn dl_witness_shatters(n: usize) -> Result<bool> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let d = pairs.len();
    if d + 1 > 20 {
        return Err(invalid("decision list witness too large"));
    }
    let mut points = vec![BitVector::zeros(n)];
    for &(i, j) in &pairs {
        points.push(BitVector::from_ones(n, &[i, j])?);
    }
    let lists: Vec<Concept> = (0..1u64 << (d + 1))
        .map(|mask| {
            let mut nodes: Vec<(Vec<i32>, bool)> = pairs
                .iter()
                .enumerate()
                .map(|(j, &(a, b))| (vec![a as i32, b as i32], mask >> (j + 1) & 1 == 1))
                .collect();
            nodes.push((Vec::new(), mask & 1 == 1));
            Concept::decision_list(n, nodes)
        })
        .collect::<Result<_>>()?;
    let f = FiniteClass::from_concepts(&lists, points.clone())?;
    let within = points.iter().all(|p| p.weight() <= 2);
    Ok(within && shatters(&f, &(0..points.len()).collect::<Vec<_>>()))
}

/// Greedy code of pairwise distance at least `2 rho + 1`, at most 8 words.
fn spread_points(n: usize, rho: usize) -> Vec<BitVector> {
    let mut out: Vec<BitVector> = Vec::new();
    for i in 0..1u64 << n {
        let x = BitVector::from_index(n, i);
        if out.iter().all(|y| y.distance(&x) > 2 * rho) {
            out.push(x);
            if out.len() == 8 {
                break;
            }
        }
    }
    out
}

/// Constants, conjunction and nor of all variables, and dictators, as
/// threshold functions.
pub fn ltf_surrogate(n: usize) -> Result<Vec<Concept>> {
    let budget = 2 * n as u64 + 1;
    let mut out = vec![
        Concept::ltf_bool(vec![0; n], -1, budget)?,
        Concept::ltf_bool(vec![0; n], 0, budget)?,
        Concept::ltf_bool(vec![1; n], -(n as i64), budget)?,
        Concept::ltf_bool(vec![-1; n], 0, budget)?,
    ];
    for i in 0..n {
        let mut w = vec![0; n];
        w[i] = 1;
        out.push(Concept::ltf_bool(w, -1, budget)?);
    }
    Ok(out)
}

fn run_dimension_table(c: &ScenarioConfig) -> Result<Outcome> {
    let n0 = get(c.n);
    let rho = int_rho(c)?;
    let rows = run_trials(c, |t, _| {
        let n = n0 + t as usize;
        let restrict = Restriction::member(rho as f64);
        let na = || Cell::from("n/a");
        let mut row: Vec<Cell> = vec![n.into()];
        let mut ok = true;
        if n <= TABLE_FULL_LIMIT {
            let conj = FiniteClass::cube(&enumerate_class(&ClassSpec::Conj, n, 1 << 16)?)?;
            let vc = vc_dimension(&conj, None)?.value;
            let rvc = vc_dimension(&conj, Some(restrict))?.value;
            let want = if rho == 1 && n >= 3 { 2 } else { n };
            ok &= vc == n && rvc == want;
            let ltf = FiniteClass::cube(&ltf_witness_class(n)?)?;
            let lvc = vc_dimension(&ltf, None)?.value;
            let lrvc = vc_dimension(&ltf, Some(restrict))?.value;
            ok &= lvc == n + 1 && lrvc == n + 1;
            let dl = if n >= 2 {
                dl_witness_shatters(n)?
            } else {
                true
            };
            ok &= dl;
            let spread = spread_points(n, rho);
            let gap_class: Vec<Concept> = (0..1u64 << spread.len())
                .map(|mask| indicator(n, &spread, mask))
                .collect::<Result<_>>()?;
            let gap = FiniteClass::cube(&gap_class)?;
            let gvc = vc_dimension(&gap, None)?.value;
            let grvc = vc_dimension(&gap, Some(restrict))?.value;
            ok &= gvc == spread.len() && grvc == 1;
            row.extend([
                vc.into(),
                rvc.into(),
                want.into(),
                lvc.into(),
                lrvc.into(),
                dl.into(),
                spread.len().into(),
                gvc.into(),
                grvc.into(),
            ]);
        } else {
            row.extend((0..9).map(|_| na()));
        }
        if n >= 2 {
            let s = FiniteClass::cube(&ltf_surrogate(n)?)?;
            let loss = robust_loss_class(&s, &s, n - 1)?;
            let v = vc_dimension(&loss, None)?.value;
            ok &= v == 2;
            row.push(v.into());
        } else {
            row.push(na());
        }
        row.push(ok.into());
        Ok(row)
    })?;
    let pass = rows
        .iter()
        .all(|r| r.last().and_then(Cell::as_bool) == Some(true));
    Ok(Outcome {
        columns: vec![
            "n",
            "conj_vc",
            "conj_restricted_vc",
            "conj_restricted_expected",
            "ltf_vc",
            "ltf_restricted_vc",
            "dl2_witness_shatters",
            "gap_points",
            "gap_vc",
            "gap_restricted_vc",
            "ltf_loss_vc_far",
            "row_matches",
        ],
        rows,
        aggregate: vec![("rho", rho.into()), ("full_columns_up_to", TABLE_FULL_LIMIT.into())],
        statement: "conjunction VC = n, restricted VC = 2 at rho = 1 and n at rho >= 2; threshold VC and restricted \
                    VC = n + 1; the width-2 list witness is shattered within distance 2 of 0; the gap class has VC = \
                    d and restricted VC = 1; robust-loss VC of threshold pairs at rho = n - 1 is 2"
            .into(),
        scope: "threshold columns use witness and surrogate families of integer threshold functions with weight \
                at most 2n + 1",
        pass,
        transcript: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick(id: &str, trials: u64) -> ScenarioReport {
        run_scenario(&ScenarioConfig::new(id, trials, 11)).unwrap()
    }

    #[test]
    fn catalog_contains_required_ids() {
        let ids: Vec<&str> = list_scenarios().iter().map(|s| s.id).collect();
        for id in [
            "monconj-lower-bound",
            "leq-conjunction-queries",
            "precision-perceptron",
            "dimension-table",
            "eq-vs-leq",
        ] {
            assert!(ids.contains(&id), "{id}");
        }
        let by_id = |id: &str| list_scenarios().into_iter().find(|s| s.id == id).unwrap();
        assert_eq!(by_id("monconj-lower-bound").anchor, "Thm mon-conj");
        assert_eq!(by_id("leq-conjunction-queries").anchor, "Thm conj-df-leq");
        assert_eq!(
            by_id("precision-perceptron").anchor,
            "Thm ltf-real-precision"
        );
    }

    #[test]
    fn schema_rejections() {
        let mut c = ScenarioConfig::new("parity-exact", 1, 0);
        c.tau = Some(0.1);
        assert!(run_scenario(&c).is_err());
        let c = ScenarioConfig::new("parity-exact", 0, 0);
        assert!(run_scenario(&c).is_err());
        let mut c = ScenarioConfig::new("parity-exact", 1, 0);
        c.version = 2;
        assert!(run_scenario(&c).is_err());
        let mut c = ScenarioConfig::new("parity-exact", 1, 0);
        c.epsilon = Some(0.5);
        assert!(run_scenario(&c).is_err());
        assert!(run_scenario(&ScenarioConfig::new("no-such", 1, 0)).is_err());
        let text = r#"{"version":1,"scenario":"leq-vs-eq","trials":1,"colour":3}"#;
        assert!(ScenarioConfig::from_json(text).is_err());
        let text = r#"{"version":1,"scenario":"leq-vs-eq","trials":2,"n":8}"#;
        let c = ScenarioConfig::from_json(text).unwrap();
        assert_eq!(c.resolve().unwrap().n, Some(8));
    }

    #[test]
    fn reports_are_byte_stable_and_round_trip() {
        let a = quick("majority-fourier", 5);
        let b = quick("majority-fourier", 5);
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.to_csv().unwrap(), b.to_csv().unwrap());
        assert_eq!(a.to_csv().unwrap().lines().count(), 6);
        let back = ScenarioReport::from_json(&a.to_json()).unwrap();
        assert_eq!(back.to_json(), a.to_json());
        let again = run_scenario(&back.config).unwrap();
        assert_eq!(again.to_json(), a.to_json());
    }

    #[test]
    fn tampered_reports_fail_validation() {
        let a = quick("leq-vs-eq", 2);
        let mut bad = a.clone();
        bad.records.pop();
        assert!(bad.validate().is_err());
        let mut bad = a.clone();
        bad.records[0].seed ^= 1;
        assert!(bad.validate().is_err());
        let mut bad = a;
        bad.records[1].values.pop();
        assert!(bad.validate().is_err());
    }

    #[test]
    fn example_table_cell() {
        let mut c = ScenarioConfig::new("dimension-table", 1, 0);
        c.n = Some(4);
        let r = run_scenario(&c).unwrap();
        let cell = r.column("conj_restricted_vc").unwrap();
        assert_eq!(cell[0], &Cell::Int(2));
        assert!(r.predicate.pass);
    }

    #[test]
    fn small_runs_pass() {
        for (id, trials) in [
            ("dictator-impossibility", 200),
            ("nontrivial-impossibility", 200),
            ("leq-lambda-lt-rho", 60),
            ("leq-vs-eq", 3),
            ("eq-vs-leq", 5),
            ("parity-exact", 20),
            ("precision-perceptron", 20),
        ] {
            let r = quick(id, trials);
            assert!(r.predicate.pass, "{id}: {:?}", r.aggregate);
        }
    }

    #[test]
    fn helper_witnesses() {
        assert!(dl_witness_shatters(4).unwrap());
        let f = FiniteClass::cube(&ltf_witness_class(3).unwrap()).unwrap();
        assert_eq!(vc_dimension(&f, None).unwrap().value, 4);
        let a = disjoint_anchors(9, 4, 1).unwrap();
        for i in 0..4 {
            for j in 0..i {
                assert!(a[i].distance(&a[j]) > 2);
            }
        }
        let floor = parity_error_floor(&Distribution::product_alpha(6, 2.0).unwrap()).unwrap();
        assert!((floor - 4.0 / 9.0).abs() < 1e-12);
        let (m, eta) = threshold_sample_size(20, 1.0, 0.1, 0.1);
        assert_eq!(eta, 0.5);
        assert!(m > 1e20);
    }
}
