// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Learning algorithms: batch learners over labelled samples, online
//! learners with a mistake counter, and drivers that turn an online learner
//! into a robust learner through local equivalence queries.
//!
//! Batch learners return a hypothesis consistent with their sample or a
//! realizability error. Online learners implement [`OnlineLearner`]:
//! `update(x, y)` counts a mistake whenever the current prediction at `x`
//! differs from `y` and then changes the state.

use std::cell::RefCell;
use std::collections::BTreeSet;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::concepts::{dl_terms, term_holds, Concept, Hypothesis};
use crate::dimensions::{FiniteClass, LitEngine};
use crate::error::{invalid, Error, Result};
use crate::hypercube::{bits, BitVector};
use crate::oracles::{LeqAnswer, OracleSession};

/// Labelled examples.
pub type Sample = [(BitVector, bool)];

/// String ids under which learners are selected in configs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LearnerId {
    Conjunction,
    MonotoneConjunction,
    DecisionList,
    Parity,
    Majority,
    Halving,
    Soa,
    Winnow,
    Perceptron,
}

impl LearnerId {
    pub const ALL: [LearnerId; 9] = [
        LearnerId::Conjunction,
        LearnerId::MonotoneConjunction,
        LearnerId::DecisionList,
        LearnerId::Parity,
        LearnerId::Majority,
        LearnerId::Halving,
        LearnerId::Soa,
        LearnerId::Winnow,
        LearnerId::Perceptron,
    ];
}

fn sample_dim(sample: &Sample) -> Result<usize> {
    let n = sample
        .first()
        .map(|(x, _)| x.n())
        .ok_or_else(|| invalid("empty sample"))?;
    if let Some((x, _)) = sample.iter().find(|(x, _)| x.n() != n) {
        return Err(Error::DimensionMismatch {
            left: x.n(),
            right: n,
        });
    }
    Ok(n)
}

fn check_consistent(h: &Concept, sample: &Sample) -> Result<()> {
    match sample.iter().find(|(x, y)| h.eval(x) != *y) {
        Some((x, y)) => Err(Error::Realizability(format!(
            "no hypothesis in the class labels {x} as {}",
            u8::from(*y)
        ))),
        None => Ok(()),
    }
}

/// Literal-elimination state shared by the batch and online conjunction
/// learners. Starts from every literal (every positive literal when
/// monotone) and drops the literals falsified by positive examples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjunctionLearner {
    n: usize,
    literals: BTreeSet<i32>,
    monotone: bool,
    mistakes: u64,
}

impl ConjunctionLearner {
    pub fn new(n: usize, monotone: bool) -> Self {
        let literals = (1..=n as i32)
            .flat_map(|i| if monotone { vec![i] } else { vec![i, -i] })
            .collect();
        ConjunctionLearner {
            n,
            literals,
            monotone,
            mistakes: 0,
        }
    }

    fn holds(&self, x: &BitVector) -> bool {
        self.literals
            .iter()
            .all(|&l| x.get(l.unsigned_abs() as usize) == (l > 0))
    }

    fn eliminate(&mut self, x: &BitVector) {
        self.literals
            .retain(|&l| x.get(l.unsigned_abs() as usize) == (l > 0));
    }

    pub fn literals(&self) -> Vec<i32> {
        self.literals.iter().copied().collect()
    }

    /// The current hypothesis; a literal set holding a complementary pair is
    /// the constant-false conjunction.
    pub fn hypothesis(&self) -> Concept {
        let contradictory = self
            .literals
            .iter()
            .any(|l| *l > 0 && self.literals.contains(&-l));
        if contradictory {
            return Concept::constant(self.n, false);
        }
        if self.literals.is_empty() {
            return Concept::constant(self.n, true);
        }
        if self.monotone {
            let idx: Vec<usize> = self.literals.iter().map(|&l| l as usize).collect();
            Concept::mon_conj(self.n, &idx).expect("valid indices")
        } else {
            Concept::conj(self.n, &self.literals()).expect("valid literals")
        }
    }
}

impl Hypothesis for ConjunctionLearner {
    fn dim(&self) -> usize {
        self.n
    }

    fn predict(&self, x: &BitVector) -> bool {
        self.holds(x)
    }

    fn describe(&self) -> serde_json::Value {
        self.hypothesis().describe()
    }
}

/// Learner of conjunctions by literal elimination.
pub fn learn_conjunction(sample: &Sample, monotone: bool) -> Result<Concept> {
    let n = sample_dim(sample)?;
    let mut l = ConjunctionLearner::new(n, monotone);
    for (x, y) in sample {
        if *y {
            l.eliminate(x);
        }
    }
    let h = l.hypothesis();
    check_consistent(&h, sample)?;
    Ok(h)
}

/// Greedy learner of width-`k` decision lists (`k <= 3`).
///
/// Repeatedly picks the first term, in order of width and then literal
/// order, whose covered examples share one label; the empty term is tried
/// first. This is the 1-decision-list loop run on the coordinates of the
/// width-`k` term embedding.
pub fn learn_decision_list(sample: &Sample, k: usize) -> Result<Concept> {
    if !(1..=3).contains(&k) {
        return Err(invalid(format!("width {k} outside 1..=3")));
    }
    let n = sample_dim(sample)?;
    let mut terms = vec![Vec::new()];
    terms.extend(dl_terms(n, k));
    let mut rest: Vec<(BitVector, bool)> = sample.to_vec();
    let mut nodes: Vec<(Vec<i32>, bool)> = Vec::new();
    while !rest.is_empty() {
        let pick = terms.iter().find_map(|t| {
            let mut label = None;
            for (x, y) in &rest {
                if term_holds(x, t) {
                    match label {
                        None => label = Some(*y),
                        Some(b) if b != *y => return None,
                        _ => {}
                    }
                }
            }
            label.map(|b| (t.clone(), b))
        });
        let (t, b) = pick.ok_or_else(|| {
            Error::Realizability(format!(
                "no pure term of width <= {k} on {} examples",
                rest.len()
            ))
        })?;
        rest.retain(|(x, _)| !term_holds(x, &t));
        let done = t.is_empty();
        nodes.push((t, b));
        if done {
            break;
        }
    }
    // The last node covers every remaining point, so it becomes the default.
    if let Some(last) = nodes.last_mut() {
        last.0.clear();
    }
    let h = Concept::decision_list(n, nodes)?;
    check_consistent(&h, sample)?;
    Ok(h)
}

/// Parity learner: solves `X a = y` over GF(2) by Gaussian elimination,
/// pivoting from the highest variable down, and sets free variables to 0.
pub fn learn_parity(sample: &Sample) -> Result<Concept> {
    let n = sample_dim(sample)?;
    let mut rows: Vec<(u128, bool)> = sample
        .iter()
        .map(|(x, y)| {
            let [lo, hi] = x.words();
            ((hi as u128) << 64 | lo as u128, *y)
        })
        .collect();
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut r = 0;
    for col in (0..n).rev() {
        let Some(p) = (r..rows.len()).find(|&i| rows[i].0 >> col & 1 == 1) else {
            continue;
        };
        rows.swap(r, p);
        let (pm, py) = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row.0 >> col & 1 == 1 {
                row.0 ^= pm;
                row.1 ^= py;
            }
        }
        pivots.push((r, col));
        r += 1;
    }
    if rows[r..].iter().any(|&(m, y)| m == 0 && y) {
        return Err(Error::Realizability("parity system is inconsistent".into()));
    }
    // Reduced rows with free variables at 0 read off the pivot values.
    let indices: Vec<usize> = pivots
        .iter()
        .filter(|&&(row, _)| rows[row].1)
        .map(|&(_, col)| col + 1)
        .collect();
    let h = Concept::parity(n, &indices)?;
    check_consistent(&h, sample)?;
    Ok(h)
}

/// Lower bound on the singleton coefficient of a relevant majority variable.
pub fn majority_coefficient_bound(n: usize) -> f64 {
    (2.0 / (PI * n as f64)).sqrt()
}

/// Inclusion threshold of [`learn_majority`]: half the coefficient bound.
pub fn majority_threshold(n: usize) -> f64 {
    majority_coefficient_bound(n) / 2.0
}

/// Sample size `ceil(kappa n ln(n / delta))`.
pub fn majority_sample_size(n: usize, delta: f64, kappa: f64) -> usize {
    (kappa * n as f64 * (n as f64 / delta).ln()).ceil().max(1.0) as usize
}

/// Empirical singleton coefficients `mean(y x_i)` in the ±1 encoding.
pub fn singleton_estimates(sample: &Sample) -> Result<Vec<f64>> {
    let n = sample_dim(sample)?;
    let mut acc = vec![0i64; n];
    for (x, y) in sample {
        let sy = if *y { -1 } else { 1 };
        for (i, a) in acc.iter_mut().enumerate() {
            let sx = if x.get(i + 1) { -1 } else { 1 };
            *a += sy * sx;
        }
    }
    let m = sample.len() as f64;
    Ok(acc.into_iter().map(|a| a as f64 / m).collect())
}

/// Majority learner under the uniform distribution: keeps the variables
/// whose estimated coefficient clears [`majority_threshold`]. An even
/// selection is repaired by flipping the decision closest to the threshold.
pub fn learn_majority(sample: &Sample) -> Result<Concept> {
    let n = sample_dim(sample)?;
    let est = singleton_estimates(sample)?;
    let t = majority_threshold(n);
    let mut chosen: Vec<usize> = (0..n).filter(|&i| est[i] >= t).collect();
    if chosen.len().is_multiple_of(2) {
        let flip = (0..n)
            .min_by(|&a, &b| (est[a] - t).abs().total_cmp(&(est[b] - t).abs()))
            .expect("n >= 1");
        match chosen.iter().position(|&i| i == flip) {
            Some(p) => {
                chosen.remove(p);
            }
            None => {
                chosen.push(flip);
                chosen.sort_unstable();
            }
        }
    }
    let idx: Vec<usize> = chosen.iter().map(|i| i + 1).collect();
    Concept::majority(n, &idx)
}

/// An online learner over the hypercube.
pub trait OnlineLearner: Hypothesis {
    /// Feeds the true label of `x`, counting a mistake if the current
    /// prediction differs.
    fn update(&mut self, x: &BitVector, y: bool) -> Result<()>;

    fn mistakes(&self) -> u64;

    fn id(&self) -> LearnerId;
}

impl OnlineLearner for ConjunctionLearner {
    /// Negative counterexamples are impossible while the target's literals
    /// are a subset of the hypothesis literals, so they raise an error.
    fn update(&mut self, x: &BitVector, y: bool) -> Result<()> {
        let p = self.holds(x);
        if p == y {
            return Ok(());
        }
        if !y {
            return Err(Error::Realizability(format!(
                "negative counterexample {x} for a conjunction hypothesis"
            )));
        }
        self.mistakes += 1;
        self.eliminate(x);
        Ok(())
    }

    fn mistakes(&self) -> u64 {
        self.mistakes
    }

    fn id(&self) -> LearnerId {
        LearnerId::Conjunction
    }
}

/// Majority vote over the consistent concepts of a finite class.
#[derive(Clone, Debug)]
pub struct Halving {
    n: usize,
    version: Vec<Concept>,
    mistakes: u64,
}

impl Halving {
    pub fn new(class: Vec<Concept>) -> Result<Self> {
        let n = class
            .first()
            .map(Concept::n)
            .ok_or_else(|| invalid("empty class"))?;
        Ok(Halving {
            n,
            version: class,
            mistakes: 0,
        })
    }

    pub fn version_space(&self) -> &[Concept] {
        &self.version
    }
}

impl Hypothesis for Halving {
    fn dim(&self) -> usize {
        self.n
    }

    fn predict(&self, x: &BitVector) -> bool {
        let ones = self.version.iter().filter(|c| c.eval(x)).count();
        2 * ones >= self.version.len()
    }
}

impl OnlineLearner for Halving {
    fn update(&mut self, x: &BitVector, y: bool) -> Result<()> {
        let before = self.version.len();
        let wrong = self.predict(x) != y;
        self.version.retain(|c| c.eval(x) == y);
        if self.version.is_empty() {
            return Err(Error::Realizability(format!(
                "no concept labels {x} as {}",
                u8::from(y)
            )));
        }
        if wrong {
            self.mistakes += 1;
            debug_assert!(2 * self.version.len() <= before, "mistake without halving");
        }
        Ok(())
    }

    fn mistakes(&self) -> u64 {
        self.mistakes
    }

    fn id(&self) -> LearnerId {
        LearnerId::Halving
    }
}

/// Standard optimal algorithm over an explicit class: predicts the label
/// whose version space has the larger Littlestone dimension, ties to 1.
/// With a precision radius, the version spaces keep only concepts constant
/// on the ball around the query point.
pub struct Soa {
    class: FiniteClass,
    version: Vec<u64>,
    engine: RefCell<LitEngine>,
    mistakes: u64,
}

impl Soa {
    pub fn new(class: FiniteClass, precision: Option<f64>) -> Result<Self> {
        let mut engine = LitEngine::new(&class, precision, None);
        let version = bits::full(class.len());
        engine.lit(&version)?;
        Ok(Soa {
            class,
            version,
            engine: RefCell::new(engine),
            mistakes: 0,
        })
    }

    pub fn class(&self) -> &FiniteClass {
        &self.class
    }

    pub fn version_size(&self) -> usize {
        bits::count(&self.version)
    }

    /// Littlestone dimension of the current version space.
    pub fn current_dimension(&self) -> Result<usize> {
        self.engine.borrow_mut().lit(&self.version)
    }

    pub fn predict_point(&self, p: usize) -> Result<bool> {
        let mut e = self.engine.borrow_mut();
        let (zero, one) = e
            .children(&self.version, p)
            .ok_or_else(|| invalid("unknown point"))?;
        match (bits::is_empty(&zero), bits::is_empty(&one)) {
            (_, true) => Ok(false),
            (true, false) => Ok(true),
            _ => Ok(e.lit(&one)? >= e.lit(&zero)?),
        }
    }

    pub fn update_point(&mut self, p: usize, y: bool) -> Result<()> {
        let wrong = self.predict_point(p)? != y;
        let (zero, one) = self
            .engine
            .borrow()
            .children(&self.version, p)
            .ok_or_else(|| invalid("unknown point"))?;
        let next = if y { one } else { zero };
        if bits::is_empty(&next) {
            return Err(Error::Realizability(format!(
                "no concept labels point {p} as {}",
                u8::from(y)
            )));
        }
        self.version = next;
        if wrong {
            self.mistakes += 1;
        }
        Ok(())
    }
}

impl Hypothesis for Soa {
    fn dim(&self) -> usize {
        match self.class.points() {
            crate::dimensions::Points::Cube { n, .. } => *n,
            crate::dimensions::Points::Line { .. } => 1,
        }
    }

    /// Points outside the class's point list are predicted 0; a memo budget
    /// failure falls back to the tie rule.
    fn predict(&self, x: &BitVector) -> bool {
        match self.class.point_index(x) {
            Some(p) => self.predict_point(p).unwrap_or(true),
            None => false,
        }
    }
}

impl OnlineLearner for Soa {
    fn update(&mut self, x: &BitVector, y: bool) -> Result<()> {
        let p = self
            .class
            .point_index(x)
            .ok_or_else(|| invalid(format!("{x} outside the class's points")))?;
        self.update_point(p, y)
    }

    fn mistakes(&self) -> u64 {
        self.mistakes
    }

    fn id(&self) -> LearnerId {
        LearnerId::Soa
    }
}

/// Multiplicative-update linear separator on the doubled features
/// `x_1..x_n, 1-x_1..1-x_n` plus a constant feature.
#[derive(Clone, Debug, PartialEq)]
pub struct Winnow {
    n: usize,
    weights: Vec<f64>,
    threshold: f64,
    factor: f64,
    mistakes: u64,
}

impl Winnow {
    /// Initial weights 1, threshold equal to the feature count, factor 2.
    pub fn new(n: usize) -> Self {
        Self::with_params(n, (2 * n + 1) as f64, 2.0)
    }

    /// Factor `1 + 1 / (2 (w + 1))` for targets whose absolute weights and
    /// bias sum to at most `w`.
    pub fn for_weight(n: usize, w: u64) -> Self {
        Self::with_params(n, (2 * n + 1) as f64, 1.0 + 1.0 / (2.0 * (w as f64 + 1.0)))
    }

    pub fn with_params(n: usize, threshold: f64, factor: f64) -> Self {
        Winnow {
            n,
            weights: vec![1.0; 2 * n + 1],
            threshold,
            factor,
            mistakes: 0,
        }
    }

    fn active(&self, x: &BitVector) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        let x = *x;
        (1..=n)
            .map(move |i| if x.get(i) { i - 1 } else { n + i - 1 })
            .chain(std::iter::once(2 * n))
    }

    fn score(&self, x: &BitVector) -> f64 {
        self.active(x).map(|k| self.weights[k]).sum()
    }
}

impl Hypothesis for Winnow {
    fn dim(&self) -> usize {
        self.n
    }

    fn predict(&self, x: &BitVector) -> bool {
        self.score(x) >= self.threshold
    }
}

impl OnlineLearner for Winnow {
    fn update(&mut self, x: &BitVector, y: bool) -> Result<()> {
        if self.predict(x) == y {
            return Ok(());
        }
        self.mistakes += 1;
        let scale = if y { self.factor } else { 1.0 / self.factor };
        let active: Vec<usize> = self.active(x).collect();
        for k in active {
            self.weights[k] *= scale;
        }
        Ok(())
    }

    fn mistakes(&self) -> u64 {
        self.mistakes
    }

    fn id(&self) -> LearnerId {
        LearnerId::Winnow
    }
}

/// Halfspace `z -> 1[w . z + bias > 0]` on real vectors.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealHalfspace {
    pub weights: Vec<f64>,
    pub bias: f64,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

impl RealHalfspace {
    pub fn new(weights: Vec<f64>, bias: f64) -> Self {
        RealHalfspace { weights, bias }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn eval(&self, z: &[f64]) -> bool {
        dot(&self.weights, z) + self.bias > 0.0
    }

    /// Signed distance to the boundary, or `None` for a constant function.
    pub fn signed_distance(&self, z: &[f64]) -> Option<f64> {
        let w = norm(&self.weights);
        (w > 0.0).then(|| (dot(&self.weights, z) + self.bias) / w)
    }

    /// Whether the function is constant with value `b` on the closed ball
    /// of radius `tau` around `z`.
    pub fn constant_on_ball(&self, z: &[f64], tau: f64, b: bool) -> bool {
        match self.signed_distance(z) {
            None => (self.bias > 0.0) == b,
            Some(d) => {
                if b {
                    d > tau
                } else {
                    d <= -tau
                }
            }
        }
    }
}

/// Additive-update homogeneous halfspace learner on real vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Perceptron {
    weights: Vec<f64>,
    mistakes: u64,
}

impl Perceptron {
    pub fn new(dim: usize) -> Self {
        Perceptron {
            weights: vec![0.0; dim],
            mistakes: 0,
        }
    }

    pub fn hypothesis(&self) -> RealHalfspace {
        RealHalfspace::new(self.weights.clone(), 0.0)
    }

    pub fn predict(&self, z: &[f64]) -> bool {
        dot(&self.weights, z) > 0.0
    }

    pub fn update(&mut self, z: &[f64], y: bool) {
        if self.predict(z) == y {
            return;
        }
        self.mistakes += 1;
        let s = if y { 1.0 } else { -1.0 };
        for (w, v) in self.weights.iter_mut().zip(z) {
            *w += s * v;
        }
    }

    pub fn mistakes(&self) -> u64 {
        self.mistakes
    }
}

/// Constraint `g . z >= beta` with unit `g`, or a constant verdict.
enum Halfplane {
    Always,
    Never,
    Cut(Vec<f64>, f64),
}

/// `f` constant `b` with margin `tau` around `z`, as a constraint on `z`.
fn margin_constraint(f: &RealHalfspace, tau: f64, b: bool) -> Halfplane {
    let w = norm(&f.weights);
    if w == 0.0 {
        return if (f.bias > 0.0) == b {
            Halfplane::Always
        } else {
            Halfplane::Never
        };
    }
    let g: Vec<f64> = f.weights.iter().map(|v| v / w).collect();
    let off = f.bias / w;
    if b {
        Halfplane::Cut(g, tau - off)
    } else {
        Halfplane::Cut(g.iter().map(|v| -v).collect(), tau + off)
    }
}

/// Nearest point to `x` satisfying the given constraints (at most two).
fn project(x: &[f64], cuts: &[(Vec<f64>, f64)]) -> Option<Vec<f64>> {
    let ok = |z: &[f64]| cuts.iter().all(|(g, b)| dot(g, z) >= b - 1e-12);
    let mut cands: Vec<Vec<f64>> = vec![x.to_vec()];
    for (g, b) in cuts {
        let t = b - dot(g, x);
        cands.push(x.iter().zip(g).map(|(v, gi)| v + t * gi).collect());
    }
    if let [(g1, b1), (g2, b2)] = cuts {
        let c = dot(g1, g2);
        let det = 1.0 - c * c;
        if det > 1e-12 {
            let r1 = b1 - dot(g1, x);
            let r2 = b2 - dot(g2, x);
            let l1 = (r1 - c * r2) / det;
            let l2 = (r2 - c * r1) / det;
            cands.push(
                x.iter()
                    .zip(g1.iter().zip(g2))
                    .map(|(v, (a, b))| v + l1 * a + l2 * b)
                    .collect(),
            );
        }
    }
    cands
        .into_iter()
        .filter(|z| ok(z))
        .min_by(|a, b| distance(a, x).total_cmp(&distance(b, x)))
}

fn distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(u, v)| (u - v) * (u - v))
        .sum::<f64>()
        .sqrt()
}

/// Counterexample of a precision-`tau` adversary with budget `rho` at `x`:
/// the nearest `z` with `|z - x| <= rho - tau` such that target and
/// hypothesis are both constant, and disagree, on the `tau` ball around
/// `z`. `None` when no such point exists.
pub fn precision_adversary(
    c: &RealHalfspace,
    h: &RealHalfspace,
    x: &[f64],
    rho: f64,
    tau: f64,
) -> Option<Vec<f64>> {
    if rho < tau || c.dim() != x.len() || h.dim() != x.len() {
        return None;
    }
    let radius = rho - tau;
    let mut best: Option<Vec<f64>> = None;
    for b in [true, false] {
        let mut cuts = Vec::new();
        let mut feasible = true;
        for hp in [margin_constraint(c, tau, b), margin_constraint(h, tau, !b)] {
            match hp {
                Halfplane::Always => {}
                Halfplane::Never => feasible = false,
                Halfplane::Cut(g, beta) => cuts.push((g, beta)),
            }
        }
        if !feasible {
            continue;
        }
        if let Some(z) = project(x, &cuts) {
            if distance(&z, x) <= radius + 1e-12
                && best
                    .as_ref()
                    .is_none_or(|bz| distance(&z, x) < distance(bz, x))
            {
                best = Some(z);
            }
        }
    }
    best
}

/// Outcome of a query-driven learning run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DriverOutcome {
    pub queries: u64,
    pub counterexamples: u64,
    pub rounds: u64,
}

/// How the LEQ driver visits sample points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DriverMode {
    /// Query each point until it agrees, never returning to it. Valid when
    /// agreement on a ball survives later updates, as for conjunctions.
    Sequential,
    /// Sweep all points until one full sweep agrees everywhere.
    RoundRobin,
}

fn budget_breach(queries: u64, limit: u64) -> Error {
    Error::BudgetExceeded {
        what: "equivalence queries".into(),
        count: queries as u128,
        limit: limit as u128,
    }
}

/// Feeds counterexamples from local equivalence queries at the sample
/// points to `learner` until every point agrees. The learner's state is the
/// output hypothesis.
pub fn robust_leq_driver(
    learner: &mut dyn OnlineLearner,
    session: &mut OracleSession,
    sample: &[BitVector],
    mode: DriverMode,
    max_queries: u64,
) -> Result<DriverOutcome> {
    let mut out = DriverOutcome::default();
    let mut ask =
        |learner: &mut dyn OnlineLearner, x: &BitVector, out: &mut DriverOutcome| -> Result<bool> {
            if out.queries >= max_queries {
                return Err(budget_breach(out.queries + 1, max_queries));
            }
            out.queries += 1;
            match session.leq_query(&*learner as &dyn Hypothesis, x)? {
                LeqAnswer::Agree => Ok(true),
                LeqAnswer::Counterexample(z) => {
                    out.counterexamples += 1;
                    let y = !learner.predict(&z);
                    learner.update(&z, y)?;
                    Ok(false)
                }
            }
        };
    match mode {
        DriverMode::Sequential => {
            out.rounds = 1;
            for x in sample {
                while !ask(learner, x, &mut out)? {}
            }
        }
        DriverMode::RoundRobin => loop {
            out.rounds += 1;
            let mut all = true;
            for x in sample {
                all &= ask(learner, x, &mut out)?;
            }
            if all {
                break;
            }
        },
    }
    Ok(out)
}

/// Outcome of a Perceptron game against a precision-bounded adversary.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GameOutcome {
    pub mistakes: u64,
    pub queries: u64,
    pub rounds: u64,
    pub hypothesis: RealHalfspace,
}

/// Runs the Perceptron against [`precision_adversary`] at every sample
/// point until no counterexample remains or `max_rounds` sweeps pass.
pub fn precision_game(
    target: &RealHalfspace,
    sample: &[Vec<f64>],
    rho: f64,
    tau: f64,
    max_rounds: u64,
) -> Result<GameOutcome> {
    let mut p = Perceptron::new(target.dim());
    let mut queries = 0;
    let mut rounds = 0;
    loop {
        if rounds >= max_rounds {
            return Err(Error::BudgetExceeded {
                what: "precision game rounds".into(),
                count: rounds as u128 + 1,
                limit: max_rounds as u128,
            });
        }
        rounds += 1;
        let mut clean = true;
        for x in sample {
            queries += 1;
            if let Some(z) = precision_adversary(target, &p.hypothesis(), x, rho, tau) {
                clean = false;
                p.update(&z, target.eval(&z));
            }
        }
        if clean {
            break;
        }
    }
    Ok(GameOutcome {
        mistakes: p.mistakes(),
        queries,
        rounds,
        hypothesis: p.hypothesis(),
    })
}
