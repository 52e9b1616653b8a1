// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Query oracles around a hidden target: random examples (EX), local
//! membership queries (LMQ), local equivalence queries (LEQ) and global
//! equivalence queries (EQ).
//!
//! LMQ points must lie within distance `lambda` of a sample point; LEQ
//! anchors must be sample points. Sample points are the points returned by
//! [`OracleSession::ex_draw`] plus any supplied with
//! [`OracleSession::with_sample`]. EQ is LEQ with radius `n` anchored at the
//! all-zero point.
//!
//! When several counterexamples exist the [`Policy`] picks one. The default
//! returns the first disagreement in ball order. Adversarial policies may
//! move the hidden target, as long as every answer given so far stays
//! consistent with it.
//!
//! Every answer is checked for soundness in debug builds, and Agree answers
//! are re-checked against an independent sweep when `n <= 14`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::concepts::{Concept, Hypothesis};
use crate::distributions::Distribution;
use crate::error::{invalid, Error, Result};
use crate::hypercube::{ball, check_limit, BitVector};
use crate::rng::{self, Rng};

/// Largest dimension for EQ sweeps.
pub const EQ_LIMIT: usize = 20;

/// Counterexample selection rule.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum Policy {
    /// First disagreement in ball order.
    #[default]
    FirstInBallOrder,
    /// Uniform over all disagreements in the ball.
    UniformRandom,
    Adversarial {
        strategy: Adversary,
    },
}

/// Adversarial counterexample strategies.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum Adversary {
    /// EQ against monotone dictators: keeps the largest consistent index set.
    DictatorHalving,
    /// LEQ against singletons hidden near `anchors`: reveals the target only
    /// at the last distinct anchor queried.
    SingletonStalling { anchors: Vec<BitVector> },
    /// Returns the first disagreement in `order`, then falls back to ball
    /// order.
    TreeOrder { order: Vec<BitVector> },
}

/// Answer of an equivalence query.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LeqAnswer {
    Agree,
    Counterexample(BitVector),
}

/// Per-oracle query tallies.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub ex: u64,
    pub lmq: u64,
    pub leq: u64,
    pub eq: u64,
    /// Rejected non-local queries.
    pub violations: u64,
}

#[derive(Clone, Debug)]
enum AdversaryState {
    None,
    Halving { candidates: Vec<usize> },
    Stalling { queried: Vec<bool> },
}

/// A hidden target with its oracles. Learners should only use the query
/// methods; [`OracleSession::target`] exists for evaluation after a run.
#[derive(Clone, Debug)]
pub struct OracleSession {
    target: Concept,
    distribution: Option<Distribution>,
    sample: Vec<BitVector>,
    sample_set: HashSet<BitVector>,
    lambda: usize,
    policy: Policy,
    counters: Counters,
    transcript: Option<Vec<String>>,
    rng: Rng,
    state: AdversaryState,
}

impl OracleSession {
    pub fn new(target: Concept, lambda: usize, policy: Policy, seed: u64) -> Result<Self> {
        let n = target.n();
        let state = match &policy {
            Policy::Adversarial {
                strategy: Adversary::DictatorHalving,
            } => {
                if !matches!(target, Concept::Dictator { positive: true, .. }) {
                    return Err(invalid("dictator halving needs a monotone dictator target"));
                }
                AdversaryState::Halving {
                    candidates: (1..=n).collect(),
                }
            }
            Policy::Adversarial {
                strategy: Adversary::SingletonStalling { anchors },
            } => {
                if !matches!(target, Concept::Singleton { .. }) || anchors.is_empty() {
                    return Err(invalid(
                        "singleton stalling needs a singleton target and anchors",
                    ));
                }
                if anchors.iter().any(|a| a.n() != n) {
                    return Err(invalid("anchor dimension differs from the target"));
                }
                AdversaryState::Stalling {
                    queried: vec![false; anchors.len()],
                }
            }
            _ => AdversaryState::None,
        };
        let mut s = OracleSession {
            target,
            distribution: None,
            sample: Vec::new(),
            sample_set: HashSet::new(),
            lambda,
            policy,
            counters: Counters::default(),
            transcript: None,
            rng: rng::seeded(seed),
            state,
        };
        s.place_stalled_target();
        Ok(s)
    }

    pub fn with_distribution(mut self, d: Distribution) -> Result<Self> {
        if d.n() != self.n() {
            return Err(Error::DimensionMismatch {
                left: d.n(),
                right: self.n(),
            });
        }
        self.distribution = Some(d);
        Ok(self)
    }

    /// Adds anchor points to the sample without drawing them.
    pub fn with_sample(mut self, points: &[BitVector]) -> Result<Self> {
        for x in points {
            self.add_sample_point(*x)?;
        }
        Ok(self)
    }

    /// Starts recording JSON-lines transcripts.
    pub fn record_transcript(mut self) -> Self {
        self.transcript = Some(Vec::new());
        self
    }

    pub fn n(&self) -> usize {
        self.target.n()
    }

    pub fn lambda(&self) -> usize {
        self.lambda
    }

    pub fn policy(&self) -> &Policy {
        &self.policy
    }

    pub fn counters(&self) -> Counters {
        self.counters
    }

    pub fn sample(&self) -> &[BitVector] {
        &self.sample
    }

    pub fn transcript(&self) -> &[String] {
        self.transcript.as_deref().unwrap_or(&[])
    }

    /// The current target. Adversarial policies may have moved it.
    pub fn target(&self) -> &Concept {
        &self.target
    }

    /// Consistent dictator indices kept by the halving adversary.
    pub fn dictator_candidates(&self) -> Option<&[usize]> {
        match &self.state {
            AdversaryState::Halving { candidates } => Some(candidates),
            _ => None,
        }
    }

    fn add_sample_point(&mut self, x: BitVector) -> Result<()> {
        if x.n() != self.n() {
            return Err(Error::DimensionMismatch {
                left: x.n(),
                right: self.n(),
            });
        }
        if self.sample_set.insert(x) {
            self.sample.push(x);
        }
        Ok(())
    }

    fn log(
        &mut self,
        oracle: &str,
        input: serde_json::Value,
        answer: serde_json::Value,
        counter: u64,
    ) {
        if let Some(t) = &mut self.transcript {
            let line =
                json!({"oracle": oracle, "input": input, "answer": answer, "counter": counter});
            t.push(line.to_string());
        }
    }

    /// Draws `(x, c(x))` with `x` from the session distribution.
    pub fn ex_draw(&mut self) -> Result<(BitVector, bool)> {
        let d = self
            .distribution
            .as_ref()
            .ok_or_else(|| invalid("session has no distribution"))?;
        let x = d.sample(&mut self.rng);
        let y = self.target.eval(&x);
        self.add_sample_point(x)?;
        self.counters.ex += 1;
        let c = self.counters.ex;
        self.log("ex", json!(null), json!({"x": x, "y": y}), c);
        Ok((x, y))
    }

    /// `c(x)` for a point within distance `lambda` of the sample.
    pub fn lmq_query(&mut self, x: &BitVector) -> Result<bool> {
        if x.n() != self.n() {
            return Err(Error::DimensionMismatch {
                left: x.n(),
                right: self.n(),
            });
        }
        if !self.sample.iter().any(|s| s.distance(x) <= self.lambda) {
            self.counters.violations += 1;
            return Err(Error::Protocol(format!(
                "membership query {x} is farther than {} from every sample point",
                self.lambda
            )));
        }
        let y = self.target.eval(x);
        self.counters.lmq += 1;
        let c = self.counters.lmq;
        self.log("lmq", json!({"x": x}), json!(y), c);
        Ok(y)
    }

    /// Local equivalence query of `h` on `B_lambda(x)` for a sample point `x`.
    pub fn leq_query(&mut self, h: &dyn Hypothesis, x: &BitVector) -> Result<LeqAnswer> {
        if h.dim() != self.n() || x.n() != self.n() {
            return Err(Error::DimensionMismatch {
                left: h.dim().max(x.n()),
                right: self.n(),
            });
        }
        if !self.sample_set.contains(x) {
            self.counters.violations += 1;
            return Err(Error::Protocol(format!(
                "equivalence query anchored at {x} outside the sample"
            )));
        }
        let answer = match self.policy.clone() {
            Policy::FirstInBallOrder => self.first_disagreement(h, x, self.lambda),
            Policy::UniformRandom => self.random_disagreement(h, x, self.lambda),
            Policy::Adversarial { strategy } => match strategy {
                Adversary::TreeOrder { order } => {
                    self.ordered_disagreement(h, x, self.lambda, &order)
                }
                Adversary::SingletonStalling { anchors } => {
                    self.stall(x, &anchors);
                    self.first_disagreement(h, x, self.lambda)
                }
                Adversary::DictatorHalving => {
                    return Err(invalid("dictator halving answers global queries only"))
                }
            },
        };
        self.check_answer(h, x, self.lambda, answer);
        self.counters.leq += 1;
        let c = self.counters.leq;
        self.log(
            "leq",
            json!({"anchor": x, "hypothesis": h.describe()}),
            answer_json(answer),
            c,
        );
        Ok(answer)
    }

    /// Global equivalence query of `h` (`n <= 20`).
    pub fn eq_query(&mut self, h: &dyn Hypothesis) -> Result<LeqAnswer> {
        let n = self.n();
        check_limit(n, EQ_LIMIT)?;
        if h.dim() != n {
            return Err(Error::DimensionMismatch {
                left: h.dim(),
                right: n,
            });
        }
        let origin = BitVector::zeros(n);
        let answer = match self.policy.clone() {
            Policy::FirstInBallOrder => self.first_disagreement(h, &origin, n),
            Policy::UniformRandom => self.random_disagreement(h, &origin, n),
            Policy::Adversarial { strategy } => match strategy {
                Adversary::DictatorHalving => self.halve(h),
                Adversary::TreeOrder { order } => self.ordered_disagreement(h, &origin, n, &order),
                Adversary::SingletonStalling { .. } => {
                    return Err(invalid("singleton stalling answers local queries only"))
                }
            },
        };
        self.check_answer(h, &origin, n, answer);
        self.counters.eq += 1;
        let c = self.counters.eq;
        self.log(
            "eq",
            json!({"hypothesis": h.describe()}),
            answer_json(answer),
            c,
        );
        Ok(answer)
    }

    fn first_disagreement(&self, h: &dyn Hypothesis, x: &BitVector, r: usize) -> LeqAnswer {
        match ball(x, r).find(|z| h.predict(z) != self.target.eval(z)) {
            Some(z) => LeqAnswer::Counterexample(z),
            None => LeqAnswer::Agree,
        }
    }

    fn random_disagreement(&mut self, h: &dyn Hypothesis, x: &BitVector, r: usize) -> LeqAnswer {
        use rand::Rng as _;
        let all: Vec<BitVector> = ball(x, r)
            .filter(|z| h.predict(z) != self.target.eval(z))
            .collect();
        if all.is_empty() {
            LeqAnswer::Agree
        } else {
            LeqAnswer::Counterexample(all[self.rng.random_range(0..all.len())])
        }
    }

    fn ordered_disagreement(
        &self,
        h: &dyn Hypothesis,
        x: &BitVector,
        r: usize,
        order: &[BitVector],
    ) -> LeqAnswer {
        order
            .iter()
            .filter(|z| z.n() == x.n() && z.distance(x) <= r)
            .find(|z| h.predict(z) != self.target.eval(z))
            .map_or_else(
                || self.first_disagreement(h, x, r),
                |z| LeqAnswer::Counterexample(*z),
            )
    }

    /// Moves the hidden singleton next to the first anchor not yet queried.
    fn place_stalled_target(&mut self) {
        let (
            AdversaryState::Stalling { queried },
            Policy::Adversarial {
                strategy: Adversary::SingletonStalling { anchors },
            },
        ) = (&self.state, &self.policy)
        else {
            return;
        };
        let host = queried.iter().position(|q| !q).unwrap_or(anchors.len() - 1);
        let a = anchors[host];
        // The nearest non-anchor point of the host ball.
        let point = ball(&a, self.lambda.max(1))
            .skip(1)
            .find(|z| !anchors.contains(z))
            .unwrap_or(a);
        self.target = Concept::singleton(point);
    }

    fn stall(&mut self, x: &BitVector, anchors: &[BitVector]) {
        if let AdversaryState::Stalling { queried } = &mut self.state {
            let open_before = queried.iter().filter(|q| !**q).count();
            if let Some(p) = anchors.iter().position(|a| a == x) {
                // The last open anchor keeps the target.
                if !queried[p] && open_before > 1 {
                    queried[p] = true;
                }
            }
        }
        self.place_stalled_target();
    }

    fn halve(&mut self, h: &dyn Hypothesis) -> LeqAnswer {
        let n = self.n();
        let AdversaryState::Halving { candidates } = &self.state else {
            unreachable!("halving state");
        };
        let ones = |x: &BitVector| candidates.iter().filter(|&&i| x.get(i)).count();
        let mut best_one: Option<(usize, BitVector)> = None;
        let mut best_zero: Option<(usize, BitVector)> = None;
        for x in ball(&BitVector::zeros(n), n) {
            let k = ones(&x);
            if h.predict(&x) {
                if best_one.is_none_or(|(b, _)| k < b) {
                    best_one = Some((k, x));
                }
            } else if best_zero.is_none_or(|(b, _)| k > b) {
                best_zero = Some((k, x));
            }
        }
        let size = candidates.len();
        let keep_zero = best_zero.map_or(0, |(k, _)| k);
        let keep_one = best_one.map_or(0, |(k, _)| size - k);
        if keep_zero == 0 && keep_one == 0 {
            return LeqAnswer::Agree;
        }
        let (z, label) = if keep_zero >= keep_one {
            (best_zero.unwrap().1, true)
        } else {
            (best_one.unwrap().1, false)
        };
        let next: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&i| z.get(i) == label)
            .collect();
        self.target = Concept::Dictator {
            n,
            index: next[0],
            positive: true,
        };
        self.state = AdversaryState::Halving { candidates: next };
        LeqAnswer::Counterexample(z)
    }

    fn check_answer(&self, h: &dyn Hypothesis, x: &BitVector, r: usize, answer: LeqAnswer) {
        if !cfg!(debug_assertions) {
            return;
        }
        match answer {
            LeqAnswer::Counterexample(z) => {
                assert!(z.distance(x) <= r, "counterexample {z} outside B_{r}({x})");
                assert_ne!(
                    h.predict(&z),
                    self.target.eval(&z),
                    "counterexample {z} agrees"
                );
            }
            LeqAnswer::Agree if self.n() <= 14 => {
                let n = self.n();
                for i in 0..1u64 << n {
                    let z = BitVector::from_index(n, i);
                    if z.distance(x) <= r {
                        assert_eq!(
                            h.predict(&z),
                            self.target.eval(&z),
                            "agree answer wrong at {z}"
                        );
                    }
                }
            }
            LeqAnswer::Agree => {}
        }
    }
}

fn answer_json(a: LeqAnswer) -> serde_json::Value {
    match a {
        LeqAnswer::Agree => json!("agree"),
        LeqAnswer::Counterexample(z) => json!({"counterexample": z}),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concepts::{enumerate_class, ClassSpec};
    use crate::robustrisk::robust_loss;
    use rand::Rng as _;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn ex_examples() {
        let c = Concept::mon_conj(4, &[1, 2]).unwrap();
        let x = bv("1101");
        let mut s = OracleSession::new(c.clone(), 1, Policy::default(), 1)
            .unwrap()
            .with_distribution(Distribution::point_mass(x))
            .unwrap();
        for _ in 0..10 {
            assert_eq!(s.ex_draw().unwrap(), (x, true));
        }
        assert_eq!(s.counters().ex, 10);
        let mut u = OracleSession::new(c.clone(), 1, Policy::default(), 2)
            .unwrap()
            .with_distribution(Distribution::uniform(4).unwrap())
            .unwrap();
        for _ in 0..50 {
            let (x, y) = u.ex_draw().unwrap();
            assert_eq!(y, c.eval(&x));
        }
    }

    #[test]
    fn lmq_examples() {
        let c = Concept::parity(4, &[1, 3]).unwrap();
        let anchor = bv("1000");
        let mut s = OracleSession::new(c.clone(), 0, Policy::default(), 1)
            .unwrap()
            .with_sample(&[anchor])
            .unwrap();
        assert!(s.lmq_query(&anchor).unwrap());
        assert!(matches!(s.lmq_query(&bv("1100")), Err(Error::Protocol(_))));
        assert_eq!(s.counters().violations, 1);
        let mut g = OracleSession::new(c.clone(), 4, Policy::default(), 1)
            .unwrap()
            .with_sample(&[anchor])
            .unwrap();
        assert_eq!(g.lmq_query(&bv("0111")).unwrap(), c.eval(&bv("0111")));
        let mut two = OracleSession::new(c, 2, Policy::default(), 1)
            .unwrap()
            .with_sample(&[anchor])
            .unwrap();
        assert!(two.lmq_query(&bv("0110")).is_err());
        assert_eq!(two.counters().lmq, 0);
    }

    #[test]
    fn leq_agrees_on_target() {
        let c = Concept::mon_conj(5, &[2, 4]).unwrap();
        let pts: Vec<BitVector> = (0..32).map(|i| BitVector::from_index(5, i)).collect();
        let mut s = OracleSession::new(c.clone(), 2, Policy::default(), 1)
            .unwrap()
            .with_sample(&pts)
            .unwrap();
        for x in &pts {
            assert_eq!(s.leq_query(&c, x).unwrap(), LeqAnswer::Agree);
        }
        assert!(s.leq_query(&c, &bv("11111")).is_ok());
        let mut fresh = OracleSession::new(c.clone(), 2, Policy::default(), 1).unwrap();
        assert!(matches!(
            fresh.leq_query(&c, &bv("11111")),
            Err(Error::Protocol(_))
        ));
    }

    #[test]
    fn leq_reveals_dictator() {
        let n = 8;
        for i in 1..=n {
            let c = Concept::dictator(n, i, true).unwrap();
            let zero = BitVector::zeros(n);
            let mut s = OracleSession::new(c, 1, Policy::default(), 1)
                .unwrap()
                .with_distribution(Distribution::point_mass(zero))
                .unwrap();
            let (x, _) = s.ex_draw().unwrap();
            let a = s.leq_query(&Concept::constant(n, false), &x).unwrap();
            assert_eq!(a, LeqAnswer::Counterexample(BitVector::unit(n, i).unwrap()));
        }
    }

    #[test]
    fn leq_matches_robust_loss() {
        let mut r = rng::seeded(11);
        let class = enumerate_class(&ClassSpec::Conj, 5, 1000).unwrap();
        for _ in 0..300 {
            let c = &class[r.random_range(0..class.len())];
            let h = &class[r.random_range(0..class.len())];
            let x = BitVector::from_index(5, r.random_range(0..32));
            let rho = r.random_range(0..4);
            let mut s = OracleSession::new(c.clone(), rho, Policy::default(), 1)
                .unwrap()
                .with_sample(&[x])
                .unwrap();
            let a = s.leq_query(h, &x).unwrap();
            let l = robust_loss(c, h, &x, rho).unwrap();
            match a {
                LeqAnswer::Agree => assert!(!l.loss),
                LeqAnswer::Counterexample(z) => assert_eq!(l.witness, Some(z)),
            }
        }
    }

    #[test]
    fn random_policy_is_sound() {
        let c = Concept::parity(6, &[1, 2, 3]).unwrap();
        let h = Concept::parity(6, &[1]).unwrap();
        let x = bv("000000");
        let mut s = OracleSession::new(c.clone(), 2, Policy::UniformRandom, 4)
            .unwrap()
            .with_sample(&[x])
            .unwrap();
        let mut seen = HashSet::new();
        for _ in 0..200 {
            if let LeqAnswer::Counterexample(z) = s.leq_query(&h, &x).unwrap() {
                assert_ne!(c.eval(&z), h.eval(&z));
                seen.insert(z);
            }
        }
        assert!(seen.len() > 3);
    }

    #[test]
    fn eq_examples() {
        let c = Concept::majority(6, &[1, 2, 3]).unwrap();
        let mut s = OracleSession::new(c.clone(), 0, Policy::default(), 1).unwrap();
        assert_eq!(s.eq_query(&c).unwrap(), LeqAnswer::Agree);
        let z = match s.eq_query(&Concept::constant(6, false)).unwrap() {
            LeqAnswer::Counterexample(z) => z,
            LeqAnswer::Agree => panic!("expected a counterexample"),
        };
        assert_eq!(z, bv("110000"));
        assert_eq!(s.counters().eq, 2);
        let big = OracleSession::new(Concept::constant(21, false), 0, Policy::default(), 1);
        assert!(big.unwrap().eq_query(&Concept::constant(21, true)).is_err());
    }

    #[test]
    fn halving_keeps_half() {
        let n = 10;
        let policy = Policy::Adversarial {
            strategy: Adversary::DictatorHalving,
        };
        let mut r = rng::seeded(3);
        let class = enumerate_class(&ClassSpec::Conj, n, 1 << 20).unwrap();
        let mut s =
            OracleSession::new(Concept::dictator(n, 1, true).unwrap(), 0, policy.clone(), 1)
                .unwrap();
        for _ in 0..40 {
            let before = s.dictator_candidates().unwrap().len();
            let h = &class[r.random_range(0..class.len())];
            let a = s.eq_query(h).unwrap();
            let after = s.dictator_candidates().unwrap().len();
            if let LeqAnswer::Counterexample(_) = a {
                assert!(after >= before / 2, "{before} -> {after}");
            }
        }
        assert!(OracleSession::new(Concept::parity(3, &[1]).unwrap(), 0, policy, 1).is_err());
    }

    #[test]
    fn stalling_reveals_last_anchor() {
        let n = 9;
        let anchors = vec![bv("000000000"), bv("111000000"), bv("000111000")];
        let policy = Policy::Adversarial {
            strategy: Adversary::SingletonStalling {
                anchors: anchors.clone(),
            },
        };
        let mut s = OracleSession::new(Concept::singleton(anchors[0]), 1, policy, 1)
            .unwrap()
            .with_sample(&anchors)
            .unwrap();
        let zero = Concept::constant(n, false);
        assert_eq!(s.leq_query(&zero, &anchors[2]).unwrap(), LeqAnswer::Agree);
        assert_eq!(s.leq_query(&zero, &anchors[0]).unwrap(), LeqAnswer::Agree);
        assert_eq!(s.leq_query(&zero, &anchors[0]).unwrap(), LeqAnswer::Agree);
        let last = s.leq_query(&zero, &anchors[1]).unwrap();
        assert_eq!(last, LeqAnswer::Counterexample(bv("011000000")));
    }

    #[test]
    fn transcripts_record_queries() {
        let c = Concept::mon_conj(3, &[1]).unwrap();
        let mut s = OracleSession::new(c.clone(), 1, Policy::default(), 9)
            .unwrap()
            .with_distribution(Distribution::point_mass(bv("000")))
            .unwrap()
            .record_transcript();
        let (x, _) = s.ex_draw().unwrap();
        s.leq_query(&Concept::constant(3, false), &x).unwrap();
        let t = s.transcript();
        assert_eq!(t.len(), 2);
        assert_eq!(
            t[1],
            r#"{"answer":{"counterexample":"100"},"counter":1,"input":{"anchor":"000","hypothesis":{"kind":"constant","n":3,"value":false}},"oracle":"leq"}"#
        );
    }
}
