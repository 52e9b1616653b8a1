// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact-in-the-ball and constant-in-the-ball robust losses and risks.
//!
//! The exact-in-the-ball loss of `h` against `c` at `x` is 1 when some `z`
//! within distance `rho` of `x` has `h(z) != c(z)`; the constant-in-the-ball
//! loss compares `h(z)` with `c(x)` instead.
//!
//! Exact risks use one of two evaluators:
//!
//! * a table sweep: truth tables, their disagreement set, and a breadth-first
//!   `rho`-dilation of that set, weighted by the mass table (`n <= 20`);
//! * for two conjunctions under a distribution that is a finite mixture of
//!   products, a per-variable dynamic program over the unsatisfied-literal
//!   counts of both conjunctions. It runs at any supported dimension.

use rand::Rng;
use serde::Serialize;
use statrs::distribution::{Beta, ContinuousCDF};

use crate::concepts::{literal_holds, Concept};
use crate::distributions::Distribution;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::hypercube::{ball, ball_size, bits, check_limit, BitVector};

/// Largest dimension for table sweeps.
pub const TABLE_LIMIT: usize = 20;

/// Largest ball swept point by point.
pub const BALL_BUDGET: u128 = 1 << 24;

/// Confidence level of Monte-Carlo intervals.
pub const MC_CONFIDENCE: f64 = 0.99;

/// A loss value and, when the loss is 1, the first witness in ball order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LossWitness {
    pub loss: bool,
    pub witness: Option<BitVector>,
}

fn check_dims(c: &Concept, h: &Concept, x: &BitVector, rho: usize) -> Result<()> {
    for m in [h.n(), x.n()] {
        if m != c.n() {
            return Err(Error::DimensionMismatch {
                left: c.n(),
                right: m,
            });
        }
    }
    let size = ball_size(x.n(), rho);
    if size > BALL_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "ball sweep points".into(),
            count: size,
            limit: BALL_BUDGET,
        });
    }
    Ok(())
}

/// Exact-in-the-ball loss by sweeping `B_rho(x)`.
pub fn robust_loss(c: &Concept, h: &Concept, x: &BitVector, rho: usize) -> Result<LossWitness> {
    check_dims(c, h, x, rho)?;
    let witness = ball(x, rho).find(|z| c.eval(z) != h.eval(z));
    Ok(LossWitness {
        loss: witness.is_some(),
        witness,
    })
}

/// Constant-in-the-ball loss by sweeping `B_rho(x)`.
pub fn constant_ball_loss(
    c: &Concept,
    h: &Concept,
    x: &BitVector,
    rho: usize,
) -> Result<LossWitness> {
    check_dims(c, h, x, rho)?;
    let label = c.eval(x);
    let witness = ball(x, rho).find(|z| h.eval(z) != label);
    Ok(LossWitness {
        loss: witness.is_some(),
        witness,
    })
}

/// A conjunction as literal list plus satisfiability.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conj {
    pub literals: Vec<i32>,
    pub satisfiable: bool,
}

impl Conj {
    pub fn of(c: &Concept) -> Option<Conj> {
        c.as_conjunction().map(|(literals, satisfiable)| Conj {
            literals,
            satisfiable,
        })
    }

    /// Number of literals `x` falsifies.
    pub fn unsatisfied(&self, x: &BitVector) -> usize {
        self.literals
            .iter()
            .filter(|&&l| !literal_holds(x, l))
            .count()
    }

    /// Fewest flips that make the conjunction true, if it is satisfiable.
    pub fn min_flips(&self, x: &BitVector) -> Option<usize> {
        self.satisfiable.then(|| self.unsatisfied(x))
    }
}

/// Whether some `z` in `B_rho(x)` satisfies `g`, in closed form.
pub fn conjunction_reachable(g: &Conj, x: &BitVector, rho: usize) -> bool {
    g.min_flips(x).is_some_and(|d| d <= rho)
}

/// Fewest flips from `x` into the region where `a` holds and `b` fails.
fn flips_into(a: &Conj, b: &Conj, x: &BitVector) -> Option<usize> {
    if !a.satisfiable {
        return None;
    }
    let base = a.unsatisfied(x);
    if !b.satisfiable {
        return Some(base);
    }
    b.literals
        .iter()
        .filter(|l| !a.literals.contains(l))
        .map(|&l| {
            if a.literals.contains(&-l) {
                base
            } else {
                base + literal_holds(x, l) as usize
            }
        })
        .min()
}

/// Exact-in-the-ball loss of two conjunctions, in closed form.
pub fn conjunction_pair_loss(c: &Conj, h: &Conj, x: &BitVector, rho: usize) -> bool {
    [flips_into(c, h, x), flips_into(h, c, x)]
        .into_iter()
        .flatten()
        .any(|d| d <= rho)
}

/// Bit set of points with exact-in-the-ball loss 1 (`n <= 20`).
pub fn loss_mask(c: &Concept, h: &Concept, rho: usize) -> Result<Vec<u64>> {
    let n = c.n();
    if h.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: h.n(),
        });
    }
    check_limit(n, TABLE_LIMIT)?;
    let tc = c.truth_table()?;
    let th = h.truth_table()?;
    let diff: Vec<u64> = tc.iter().zip(&th).map(|(a, b)| a ^ b).collect();
    Ok(bits::dilate(n, &diff, rho))
}

/// Bit set of points with constant-in-the-ball loss 1 (`n <= 20`).
pub fn constant_loss_mask(c: &Concept, h: &Concept, rho: usize) -> Result<Vec<u64>> {
    let n = c.n();
    if h.n() != n {
        return Err(Error::DimensionMismatch {
            left: n,
            right: h.n(),
        });
    }
    check_limit(n, TABLE_LIMIT)?;
    let tc = c.truth_table()?;
    let th = h.truth_table()?;
    let size = 1usize << n;
    let not_h: Vec<u64> = th
        .iter()
        .zip(bits::full(size))
        .map(|(a, f)| !a & f)
        .collect();
    let near_zero = bits::dilate(n, &not_h, rho);
    let near_one = bits::dilate(n, &th, rho);
    Ok(tc
        .iter()
        .zip(near_zero.iter().zip(&near_one))
        .map(|(&t, (&z, &o))| (t & z) | (!t & o))
        .collect())
}

fn mask_mass(mask: &[u64], d: &Distribution, early_exit: Option<f64>) -> Result<f64> {
    let table = d.pmf_table()?;
    match early_exit {
        None => Ok(Exec::default().sum_chunks(mask.len(), 256, |r| {
            r.flat_map(|w| bits::iter(&mask[w..w + 1]).map(move |b| 64 * w + b))
                .map(|i| table[i])
                .sum()
        })),
        Some(eps) => {
            let mut acc = 0.0;
            for i in bits::iter(mask) {
                acc += table[i];
                if acc > eps {
                    break;
                }
            }
            Ok(acc)
        }
    }
}

/// An exact or estimated risk value.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RiskValue {
    pub exact: bool,
    pub value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interval: Option<(f64, f64)>,
    /// Points (exact) or draws (estimate) with loss 1, when counted.
    pub witness_count: Option<u64>,
}

/// Exact-in-the-ball robust risk `R^E_rho(h, c)` under `d`.
pub fn robust_risk_exact(c: &Concept, h: &Concept, rho: usize, d: &Distribution) -> Result<f64> {
    robust_risk_exact_early(c, h, rho, d, None)
}

/// As [`robust_risk_exact`], but a table sweep stops as soon as the
/// accumulated mass exceeds `early_exit`; the returned value then only
/// certifies that the risk is above it.
pub fn robust_risk_exact_early(
    c: &Concept,
    h: &Concept,
    rho: usize,
    d: &Distribution,
    early_exit: Option<f64>,
) -> Result<f64> {
    for m in [h.n(), d.n()] {
        if m != c.n() {
            return Err(Error::DimensionMismatch {
                left: c.n(),
                right: m,
            });
        }
    }
    if let (Some(a), Some(b), Some(mix)) = (Conj::of(c), Conj::of(h), d.product_mixture()) {
        return Ok(conjunction_pair_risk(&a, &b, rho, c.n(), &mix));
    }
    let mask = loss_mask(c, h, rho)?;
    mask_mass(&mask, d, early_exit)
}

/// Exact risk with the number of loss points when it is counted.
pub fn robust_risk(c: &Concept, h: &Concept, rho: usize, d: &Distribution) -> Result<RiskValue> {
    if c.n() <= TABLE_LIMIT && d.n() == c.n() {
        let mask = loss_mask(c, h, rho)?;
        return Ok(RiskValue {
            exact: true,
            value: mask_mass(&mask, d, None)?,
            interval: None,
            witness_count: Some(bits::count(&mask) as u64),
        });
    }
    Ok(RiskValue {
        exact: true,
        value: robust_risk_exact(c, h, rho, d)?,
        interval: None,
        witness_count: None,
    })
}

/// Exact constant-in-the-ball robust risk `R^C_rho(h, c)` (`n <= 20`).
pub fn constant_risk_exact(c: &Concept, h: &Concept, rho: usize, d: &Distribution) -> Result<f64> {
    if d.n() != c.n() {
        return Err(Error::DimensionMismatch {
            left: c.n(),
            right: d.n(),
        });
    }
    let mask = constant_loss_mask(c, h, rho)?;
    mask_mass(&mask, d, None)
}

/// Exact mass of `{x : some z in B_rho(x) satisfies g}` under a product
/// mixture.
pub fn conjunction_expansion_mass(g: &Conj, rho: usize, n: usize, mix: &[(f64, Vec<f64>)]) -> f64 {
    let never = Conj {
        literals: Vec::new(),
        satisfiable: false,
    };
    conjunction_pair_risk(g, &never, rho, n, mix)
}

/// Per-variable dynamic program for the exact risk of two conjunctions.
///
/// State: capped unsatisfied counts `a` (of `c`) and `b` (of `h`), and for
/// each side a flag in `{0, 1, 2}` giving the extra flips needed to falsify
/// a literal of the other conjunction: 0 means none exists (infinite), 1 means
/// one flip, 2 means none.
pub fn conjunction_pair_risk(
    c: &Conj,
    h: &Conj,
    rho: usize,
    n: usize,
    mix: &[(f64, Vec<f64>)],
) -> f64 {
    if !c.satisfiable && !h.satisfiable {
        return 0.0;
    }
    let cap = rho + 1;
    let side = cap + 1;
    let idx = |a: usize, b: usize, fc: usize, fh: usize| ((a * side + b) * 3 + fc) * 3 + fh;
    let mut lit_c = vec![0i32; n + 1];
    let mut lit_h = vec![0i32; n + 1];
    if c.satisfiable {
        for &l in &c.literals {
            lit_c[l.unsigned_abs() as usize] = l;
        }
    }
    if h.satisfiable {
        for &l in &h.literals {
            lit_h[l.unsigned_abs() as usize] = l;
        }
    }
    let mut total = 0.0;
    for (weight, p) in mix {
        let mut prob = vec![0.0; side * side * 9];
        prob[idx(0, 0, 0, 0)] = 1.0;
        for i in 1..=n {
            let (lc, lh) = (lit_c[i], lit_h[i]);
            if lc == 0 && lh == 0 {
                continue;
            }
            let mut next = vec![0.0; prob.len()];
            for (bit, q) in [(false, 1.0 - p[i - 1]), (true, p[i - 1])] {
                if q == 0.0 {
                    continue;
                }
                let sat = |l: i32| (l > 0) == bit;
                let da = (lc != 0 && !sat(lc)) as usize;
                let db = (lh != 0 && !sat(lh)) as usize;
                // extra flips to falsify h's literal on this variable inside c
                let gc = if lh == 0 || lh == lc {
                    0
                } else if lc == -lh || !sat(lh) {
                    2
                } else {
                    1
                };
                let gh = if lc == 0 || lc == lh {
                    0
                } else if lh == -lc || !sat(lc) {
                    2
                } else {
                    1
                };
                for a in 0..side {
                    for b in 0..side {
                        for fc in 0..3 {
                            for fh in 0..3 {
                                let v = prob[idx(a, b, fc, fh)];
                                if v == 0.0 {
                                    continue;
                                }
                                let j = idx(
                                    (a + da).min(cap),
                                    (b + db).min(cap),
                                    fc.max(gc),
                                    fh.max(gh),
                                );
                                next[j] += v * q;
                            }
                        }
                    }
                }
            }
            prob = next;
        }
        let extra = |f: usize| match f {
            2 => Some(0),
            1 => Some(1),
            _ => None,
        };
        let mut mass = 0.0;
        for a in 0..side {
            for b in 0..side {
                for fc in 0..3 {
                    for fh in 0..3 {
                        let v = prob[idx(a, b, fc, fh)];
                        if v == 0.0 {
                            continue;
                        }
                        let lossy = match (c.satisfiable, h.satisfiable) {
                            (true, false) => a <= rho,
                            (false, true) => b <= rho,
                            _ => {
                                extra(fc).is_some_and(|e| a + e <= rho)
                                    || extra(fh).is_some_and(|e| b + e <= rho)
                            }
                        };
                        if lossy {
                            mass += v;
                        }
                    }
                }
            }
        }
        total += weight * mass;
    }
    total
}

/// Exact-in-the-ball loss at `x`, using the closed form for two
/// conjunctions and a ball sweep otherwise.
pub fn fast_loss(c: &Concept, h: &Concept, x: &BitVector, rho: usize) -> Result<bool> {
    match (Conj::of(c), Conj::of(h)) {
        (Some(a), Some(b)) => Ok(conjunction_pair_loss(&a, &b, x, rho)),
        _ => Ok(robust_loss(c, h, x, rho)?.loss),
    }
}

/// Two-sided Clopper-Pearson interval for `k` successes in `m` trials.
pub fn clopper_pearson(k: u64, m: u64, confidence: f64) -> (f64, f64) {
    let tail = (1.0 - confidence) / 2.0;
    let (k, mf) = (k as f64, m as f64);
    let lo = if k == 0.0 {
        0.0
    } else {
        Beta::new(k, mf - k + 1.0)
            .expect("positive shapes")
            .inverse_cdf(tail)
    };
    let hi = if k == mf {
        1.0
    } else {
        Beta::new(k + 1.0, mf - k)
            .expect("positive shapes")
            .inverse_cdf(1.0 - tail)
    };
    (lo, hi)
}

/// Monte-Carlo estimate of `R^E_rho(h, c)` from `m` draws, with a 99%
/// Clopper-Pearson interval.
pub fn robust_risk_mc<R: Rng + ?Sized>(
    c: &Concept,
    h: &Concept,
    rho: usize,
    d: &Distribution,
    m: u64,
    rng: &mut R,
) -> Result<RiskValue> {
    if m == 0 {
        return Err(crate::error::invalid("at least one draw is needed"));
    }
    let mut k = 0;
    for _ in 0..m {
        let x = d.sample(rng);
        k += fast_loss(c, h, &x, rho)? as u64;
    }
    Ok(RiskValue {
        exact: false,
        value: k as f64 / m as f64,
        interval: Some(clopper_pearson(k, m, MC_CONFIDENCE)),
        witness_count: Some(k),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concepts::{enumerate_class, ClassSpec};
    use crate::rng;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn loss_examples() {
        let c = Concept::mon_conj(4, &[1, 2]).unwrap();
        let h = Concept::mon_conj(4, &[1, 3]).unwrap();
        for i in 0..16 {
            let x = BitVector::from_index(4, i);
            assert!(!robust_loss(&c, &c, &x, 2).unwrap().loss);
            let l0 = robust_loss(&c, &h, &x, 0).unwrap();
            assert_eq!(l0.loss, c.eval(&x) != h.eval(&x));
        }
        let w = robust_loss(&c, &h, &bv("1000"), 1).unwrap();
        assert_eq!(w.witness, Some(bv("1100")));
        let p = Concept::parity(4, &[1, 2]).unwrap();
        let q = Concept::parity(4, &[2]).unwrap();
        for i in 0..16 {
            assert!(
                robust_loss(&p, &q, &BitVector::from_index(4, i), 1)
                    .unwrap()
                    .loss
            );
        }
        assert!(robust_loss(&c, &h, &bv("10"), 1).is_err());
    }

    #[test]
    fn constant_loss_examples() {
        let c = Concept::mon_conj(4, &[1, 2]).unwrap();
        let one = Concept::constant(4, true);
        for i in 0..16 {
            let x = BitVector::from_index(4, i);
            assert_eq!(
                constant_ball_loss(&c, &one, &x, 2).unwrap().loss,
                !c.eval(&x)
            );
            let h = Concept::mon_conj(4, &[2, 3]).unwrap();
            assert_eq!(
                constant_ball_loss(&c, &h, &x, 0).unwrap().loss,
                c.eval(&x) != h.eval(&x)
            );
        }
        let c6 = Concept::mon_conj(6, &[1, 2]).unwrap();
        let u = Distribution::uniform(6).unwrap();
        assert_eq!(constant_risk_exact(&c6, &c6, 1, &u).unwrap(), 0.75);
    }

    #[test]
    fn closed_form_matches_sweep() {
        let n = 4;
        let class = enumerate_class(&ClassSpec::Conj, n, 1000).unwrap();
        for c in class.iter().step_by(3) {
            for h in class.iter().step_by(5) {
                let (a, b) = (Conj::of(c).unwrap(), Conj::of(h).unwrap());
                for i in 0..16 {
                    let x = BitVector::from_index(n, i);
                    for rho in 0..=3 {
                        assert_eq!(
                            conjunction_pair_loss(&a, &b, &x, rho),
                            robust_loss(c, h, &x, rho).unwrap().loss,
                            "{c:?} {h:?} {x} {rho}"
                        );
                        let g = ball(&x, rho).any(|z| c.eval(&z));
                        assert_eq!(conjunction_reachable(&a, &x, rho), g);
                    }
                }
            }
        }
    }

    #[test]
    fn dynamic_program_matches_tables() {
        let n = 5;
        let class = enumerate_class(&ClassSpec::Conj, n, 1000).unwrap();
        let dists = [
            Distribution::uniform(n).unwrap(),
            Distribution::product(vec![0.2, 0.7, 0.5, 0.9, 0.35]).unwrap(),
            Distribution::correlated_pair(n, 0.85).unwrap(),
        ];
        for c in class.iter().step_by(7) {
            for h in class.iter().step_by(11) {
                for d in &dists {
                    for rho in 0..=3 {
                        let dp = robust_risk_exact(c, h, rho, d).unwrap();
                        let table = mask_mass(&loss_mask(c, h, rho).unwrap(), d, None).unwrap();
                        assert!((dp - table).abs() < 1e-12, "{c:?} {h:?} {rho}");
                    }
                }
            }
        }
    }

    #[test]
    fn risk_examples() {
        let u = Distribution::uniform(6).unwrap();
        let c = Concept::mon_conj(6, &[1, 2]).unwrap();
        assert_eq!(robust_risk_exact(&c, &c, 2, &u).unwrap(), 0.0);
        let p = Concept::parity(6, &[1]).unwrap();
        let q = Concept::parity(6, &[1, 2]).unwrap();
        let r = robust_risk(&p, &q, 1, &u).unwrap();
        assert_eq!((r.value, r.witness_count), (1.0, Some(64)));
        assert!(robust_risk_exact(&p, &q, 1, &Distribution::uniform(21).unwrap()).is_err());
        let early = robust_risk_exact_early(&p, &q, 1, &u, Some(0.1)).unwrap();
        assert!(early > 0.1 && early < 1.0);
    }

    #[test]
    fn monotone_in_radius() {
        let u = Distribution::uniform(8).unwrap();
        let c = Concept::majority(8, &[1, 2, 5]).unwrap();
        let h = Concept::parity(8, &[2, 3]).unwrap();
        let mut last = 0.0;
        for rho in 0..=8 {
            let v = robust_risk_exact(&c, &h, rho, &u).unwrap();
            assert!(v >= last);
            last = v;
        }
        assert_eq!(last, 1.0);
    }

    #[test]
    fn clopper_pearson_reference() {
        let (lo, hi) = clopper_pearson(0, 10, 0.99);
        assert_eq!(lo, 0.0);
        assert!((hi - (1.0 - 0.005f64.powf(0.1))).abs() < 1e-9);
        let (lo, hi) = clopper_pearson(5, 10, 0.95);
        assert!((lo - 0.187086).abs() < 1e-5 && (hi - 0.812914).abs() < 1e-5);
    }

    #[test]
    fn monte_carlo_basics() {
        let u = Distribution::uniform(6).unwrap();
        let c = Concept::mon_conj(6, &[1, 2]).unwrap();
        let mut r = rng::seeded(5);
        let v = robust_risk_mc(&c, &c, 1, &u, 100, &mut r).unwrap();
        assert_eq!(v.value, 0.0);
        assert_eq!(v.interval.unwrap().0, 0.0);
        let h = Concept::mon_conj(6, &[3]).unwrap();
        let one = robust_risk_mc(&c, &h, 1, &u, 1, &mut r).unwrap();
        assert!(one.value == 0.0 || one.value == 1.0);
        assert!(robust_risk_mc(&c, &h, 1, &u, 0, &mut r).is_err());
    }
}
