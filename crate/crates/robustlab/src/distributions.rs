// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Distributions on `{0,1}^n` with exact mass queries.
//!
//! JSON form (field `kind` selects the variant):
//!
//! | kind              | fields                                              |
//! |-------------------|-----------------------------------------------------|
//! | `uniform`         | `n`                                                 |
//! | `product`         | `p` (per-bit `Pr[x_i = 1]`), or `n` and `alpha`     |
//! | `correlated_pair` | `n`, `eta` (`Pr[x_2 = x_1]`)                        |
//! | `finite_support`  | `n`, `points`, and integer `weights` or real `masses` |
//!
//! A product built from `alpha` uses `p_i = alpha / (1 + alpha)` for every
//! bit, which is exactly `alpha`-log-Lipschitz.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::hypercube::{check_exact, BitVector};

/// A probability distribution on `{0,1}^n`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DistributionSpec", into = "DistributionSpec")]
pub enum Distribution {
    Uniform {
        n: usize,
    },
    /// Independent bits with `Pr[x_i = 1] = p[i - 1]`, each strictly inside `(0, 1)`.
    ProductBernoulli {
        p: Vec<f64>,
    },
    /// `x_1` uniform, `x_2 = x_1` with probability `eta`, other bits uniform.
    CorrelatedPair {
        n: usize,
        eta: f64,
    },
    FiniteSupport(FiniteSupport),
}

/// A mass table over finitely many points, sorted by point.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteSupport {
    n: usize,
    points: Vec<BitVector>,
    masses: Vec<f64>,
    /// Integer weights and their total when the table is exact.
    exact: Option<(Vec<u64>, u64)>,
    cumulative: Vec<f64>,
}

impl FiniteSupport {
    fn build(n: usize, mut rows: Vec<(BitVector, f64, Option<u64>)>) -> Result<Self> {
        if rows.is_empty() {
            return Err(invalid("finite support needs at least one point"));
        }
        for (x, m, _) in &rows {
            if x.n() != n {
                return Err(Error::DimensionMismatch {
                    left: x.n(),
                    right: n,
                });
            }
            if !(m.is_finite() && *m >= 0.0) {
                return Err(invalid(format!(
                    "mass {m} at {x} is not a nonnegative number"
                )));
            }
        }
        rows.sort_by_key(|a| a.0);
        if rows.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(invalid("finite support lists a point twice"));
        }
        let total: f64 = rows.iter().map(|r| r.1).sum();
        if total <= 0.0 {
            return Err(invalid("finite support has zero total mass"));
        }
        let exact = if rows.iter().all(|r| r.2.is_some()) {
            let w: Vec<u64> = rows.iter().map(|r| r.2.unwrap()).collect();
            let t = w.iter().sum();
            Some((w, t))
        } else {
            None
        };
        let points: Vec<BitVector> = rows.iter().map(|r| r.0).collect();
        let masses: Vec<f64> = rows.iter().map(|r| r.1 / total).collect();
        let mut acc = 0.0;
        let cumulative = masses
            .iter()
            .map(|m| {
                acc += m;
                acc
            })
            .collect();
        Ok(FiniteSupport {
            n,
            points,
            masses,
            exact,
            cumulative,
        })
    }

    pub fn points(&self) -> &[BitVector] {
        &self.points
    }

    pub fn masses(&self) -> &[f64] {
        &self.masses
    }

    /// Whether masses are stored as exact integer ratios.
    pub fn is_exact(&self) -> bool {
        self.exact.is_some()
    }

    fn position(&self, x: &BitVector) -> Option<usize> {
        self.points.binary_search(x).ok()
    }
}

impl Distribution {
    pub fn uniform(n: usize) -> Result<Self> {
        Self::validated(Distribution::Uniform { n })
    }

    pub fn product(p: Vec<f64>) -> Result<Self> {
        Self::validated(Distribution::ProductBernoulli { p })
    }

    /// The product with every `p_i = alpha / (1 + alpha)`.
    pub fn product_alpha(n: usize, alpha: f64) -> Result<Self> {
        if !(alpha >= 1.0 && alpha.is_finite()) {
            return Err(invalid(format!(
                "alpha = {alpha} must be a finite number >= 1"
            )));
        }
        Self::product(vec![alpha / (1.0 + alpha); n])
    }

    pub fn correlated_pair(n: usize, eta: f64) -> Result<Self> {
        Self::validated(Distribution::CorrelatedPair { n, eta })
    }

    /// Point masses with exact integer weights.
    pub fn finite_exact(n: usize, rows: &[(BitVector, u64)]) -> Result<Self> {
        let rows = rows.iter().map(|&(x, w)| (x, w as f64, Some(w))).collect();
        Ok(Distribution::FiniteSupport(FiniteSupport::build(n, rows)?))
    }

    /// Point masses given as reals, normalized to sum to one.
    pub fn finite_float(n: usize, rows: &[(BitVector, f64)]) -> Result<Self> {
        let rows = rows.iter().map(|&(x, m)| (x, m, None)).collect();
        Ok(Distribution::FiniteSupport(FiniteSupport::build(n, rows)?))
    }

    /// The point mass at `x`.
    pub fn point_mass(x: BitVector) -> Self {
        Self::finite_exact(x.n(), &[(x, 1)]).expect("valid point mass")
    }

    /// The product used against nontrivial classes: bits in `relevant` equal
    /// `z` with probability `1 - eta`, the others are uniform, and
    /// `eta = n^(-c)`.
    pub fn skewed_toward(z: &BitVector, relevant: &[usize], c: f64) -> Result<Self> {
        let n = z.n();
        let eta = (n as f64).powf(-c);
        let mut p = vec![0.5; n];
        for &i in relevant {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
            p[i - 1] = if z.get(i) { 1.0 - eta } else { eta };
        }
        Self::product(p)
    }

    fn validated(d: Distribution) -> Result<Self> {
        let n = d.n();
        if n == 0 || n > crate::hypercube::MAX_DIM {
            return Err(invalid(format!("dimension {n} unsupported")));
        }
        match &d {
            Distribution::ProductBernoulli { p } => {
                if let Some(bad) = p.iter().find(|&&q| !(q > 0.0 && q < 1.0)) {
                    return Err(invalid(format!(
                        "product bit probability {bad} not in (0, 1)"
                    )));
                }
            }
            Distribution::CorrelatedPair { n, eta } => {
                if *n < 2 {
                    return Err(invalid("correlated pair needs n >= 2"));
                }
                if !(*eta >= 0.0 && *eta <= 1.0) {
                    return Err(invalid(format!("eta = {eta} not in [0, 1]")));
                }
            }
            _ => {}
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        match self {
            Distribution::Uniform { n } => *n,
            Distribution::ProductBernoulli { p } => p.len(),
            Distribution::CorrelatedPair { n, .. } => *n,
            Distribution::FiniteSupport(f) => f.n,
        }
    }

    fn check(&self, x: &BitVector) -> Result<()> {
        if x.n() != self.n() {
            Err(Error::DimensionMismatch {
                left: x.n(),
                right: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Probability mass of `x`.
    pub fn pmf(&self, x: &BitVector) -> Result<f64> {
        self.check(x)?;
        Ok(self.mass(x))
    }

    /// Probability mass of `x` without the dimension check.
    pub fn mass(&self, x: &BitVector) -> f64 {
        match self {
            Distribution::Uniform { n } => 0.5f64.powi(*n as i32),
            Distribution::ProductBernoulli { p } => p
                .iter()
                .enumerate()
                .map(|(k, &q)| if x.get(k + 1) { q } else { 1.0 - q })
                .product(),
            Distribution::CorrelatedPair { n, eta } => {
                let pair = if x.get(1) == x.get(2) {
                    *eta
                } else {
                    1.0 - eta
                };
                0.5 * pair * 0.5f64.powi(*n as i32 - 2)
            }
            Distribution::FiniteSupport(f) => f.position(x).map_or(0.0, |k| f.masses[k]),
        }
    }

    /// Exact rational mass, when the variant stores exact values.
    pub fn pmf_exact(&self, x: &BitVector) -> Result<Option<BigRational>> {
        self.check(x)?;
        Ok(match self {
            Distribution::Uniform { n } => {
                Some(BigRational::new(BigInt::from(1), BigInt::from(1) << *n))
            }
            Distribution::FiniteSupport(f) => f.exact.as_ref().map(|(w, total)| {
                let num = f.position(x).map_or(0, |k| w[k]);
                BigRational::new(BigInt::from(num), BigInt::from(*total))
            }),
            _ => None,
        })
    }

    /// Draws one point.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BitVector {
        match self {
            Distribution::Uniform { n } => {
                BitVector::from_words(*n, [rng.random::<u64>(), rng.random::<u64>()])
            }
            Distribution::ProductBernoulli { p } => {
                let mut words = [0u64; 2];
                for (k, &q) in p.iter().enumerate() {
                    if rng.random::<f64>() < q {
                        words[k / 64] |= 1 << (k % 64);
                    }
                }
                BitVector::from_words(p.len(), words)
            }
            Distribution::CorrelatedPair { n, eta } => {
                let mut x = BitVector::from_words(*n, [rng.random::<u64>(), rng.random::<u64>()]);
                let same = rng.random::<f64>() < *eta;
                let b = if same { x.get(1) } else { !x.get(1) };
                x.set(2, b).expect("n >= 2");
                x
            }
            Distribution::FiniteSupport(f) => {
                let u: f64 = rng.random::<f64>() * f.cumulative.last().copied().unwrap_or(1.0);
                let k = f.cumulative.partition_point(|&c| c <= u);
                f.points[k.min(f.points.len() - 1)]
            }
        }
    }

    /// Masses of every point in integer-code order (`n <= 24`).
    pub fn pmf_table(&self) -> Result<Vec<f64>> {
        let n = self.n();
        check_exact(n)?;
        let size = 1usize << n;
        Ok(match self {
            Distribution::Uniform { .. } => vec![0.5f64.powi(n as i32); size],
            Distribution::ProductBernoulli { p } => {
                let mut t = vec![1.0];
                for (k, &q) in p.iter().enumerate() {
                    let mut next = vec![0.0; t.len() * 2];
                    let half = 1usize << k;
                    for (i, &v) in t.iter().enumerate() {
                        next[i] = v * (1.0 - q);
                        next[i + half] = v * q;
                    }
                    t = next;
                }
                t
            }
            Distribution::FiniteSupport(f) => {
                let mut t = vec![0.0; size];
                for (x, &m) in f.points.iter().zip(&f.masses) {
                    t[x.index() as usize] = m;
                }
                t
            }
            Distribution::CorrelatedPair { .. } => (0..size as u64)
                .map(|i| self.mass(&BitVector::from_index(n, i)))
                .collect(),
        })
    }

    /// The distribution as a finite mixture of product distributions, each
    /// given as `(weight, p)` with `p_i = Pr[x_i = 1]` in `[0, 1]`.
    pub fn product_mixture(&self) -> Option<Vec<(f64, Vec<f64>)>> {
        match self {
            Distribution::Uniform { n } => Some(vec![(1.0, vec![0.5; *n])]),
            Distribution::ProductBernoulli { p } => Some(vec![(1.0, p.clone())]),
            Distribution::CorrelatedPair { n, eta } => {
                let mut out = Vec::new();
                for a in [0.0, 1.0] {
                    for b in [0.0, 1.0] {
                        let w = 0.5 * if a == b { *eta } else { 1.0 - eta };
                        if w > 0.0 {
                            let mut p = vec![0.5; *n];
                            p[0] = a;
                            p[1] = b;
                            out.push((w, p));
                        }
                    }
                }
                Some(out)
            }
            Distribution::FiniteSupport(f) if f.points.len() <= 64 => Some(
                f.points
                    .iter()
                    .zip(&f.masses)
                    .filter(|(_, &m)| m > 0.0)
                    .map(|(x, &m)| (m, x.to_bools().iter().map(|&b| b as u8 as f64).collect()))
                    .collect(),
            ),
            Distribution::FiniteSupport(_) => None,
        }
    }

    /// Smallest `alpha` such that neighboring points have mass ratio at most
    /// `alpha`; `+inf` when an edge joins zero and nonzero mass. Exact sweep
    /// over all edges (`n <= 24`).
    pub fn log_lipschitz_alpha(&self) -> Result<f64> {
        let n = self.n();
        let t = self.pmf_table()?;
        Ok(alpha_of_table(n, &t))
    }

    /// Marginal onto the 1-based coordinates `subset`, as a distribution on
    /// `{0,1}^{|subset|}` whose bit `j` is original bit `subset[j - 1]`.
    pub fn marginal(&self, subset: &[usize]) -> Result<Distribution> {
        let n = self.n();
        if subset.is_empty() {
            return Err(invalid("marginal onto an empty coordinate set"));
        }
        for &i in subset {
            if i == 0 || i > n {
                return Err(Error::IndexOutOfRange { index: i, n });
            }
        }
        let t = self.pmf_table()?;
        let k = subset.len();
        let mut m = vec![0.0; 1 << k];
        for (i, &v) in t.iter().enumerate() {
            let mut code = 0usize;
            for (j, &s) in subset.iter().enumerate() {
                code |= ((i >> (s - 1)) & 1) << j;
            }
            m[code] += v;
        }
        let rows: Vec<(BitVector, f64)> = m
            .iter()
            .enumerate()
            .map(|(c, &v)| (BitVector::from_index(k, c as u64), v))
            .collect();
        Distribution::finite_float(k, &rows)
    }

    /// Mass of `{x : x_S = b}` for 1-based coordinates `subset` and values `b`.
    pub fn sub_assignment_mass(&self, subset: &[usize], values: &[bool]) -> Result<f64> {
        if subset.len() != values.len() {
            return Err(Error::DimensionMismatch {
                left: subset.len(),
                right: values.len(),
            });
        }
        let t = self.pmf_table()?;
        Ok(t.iter()
            .enumerate()
            .filter(|(i, _)| {
                subset
                    .iter()
                    .zip(values)
                    .all(|(&s, &b)| ((i >> (s - 1)) & 1 == 1) == b)
            })
            .map(|(_, &v)| v)
            .sum())
    }
}

/// Log-Lipschitz constant of a mass table indexed by integer codes.
pub fn alpha_of_table(n: usize, t: &[f64]) -> f64 {
    let mut alpha: f64 = 1.0;
    for (i, &a) in t.iter().enumerate() {
        for b in 0..n {
            let j = i ^ (1 << b);
            if j < i {
                continue;
            }
            let c = t[j];
            if a == 0.0 && c == 0.0 {
                continue;
            }
            if a == 0.0 || c == 0.0 {
                return f64::INFINITY;
            }
            alpha = alpha.max(a / c).max(c / a);
        }
    }
    alpha
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum DistributionSpec {
    Uniform {
        n: usize,
    },
    Product {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        p: Option<Vec<f64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alpha: Option<f64>,
    },
    CorrelatedPair {
        n: usize,
        eta: f64,
    },
    FiniteSupport {
        n: usize,
        points: Vec<BitVector>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        weights: Option<Vec<u64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        masses: Option<Vec<f64>>,
    },
}

impl TryFrom<DistributionSpec> for Distribution {
    type Error = Error;

    fn try_from(s: DistributionSpec) -> Result<Self> {
        match s {
            DistributionSpec::Uniform { n } => Distribution::uniform(n),
            DistributionSpec::Product { p, n, alpha } => match (p, n, alpha) {
                (Some(p), None, None) => Distribution::product(p),
                (None, Some(n), Some(a)) => Distribution::product_alpha(n, a),
                _ => Err(invalid("product needs either `p` or both `n` and `alpha`")),
            },
            DistributionSpec::CorrelatedPair { n, eta } => Distribution::correlated_pair(n, eta),
            DistributionSpec::FiniteSupport {
                n,
                points,
                weights,
                masses,
            } => match (weights, masses) {
                (Some(w), None) if w.len() == points.len() => {
                    let rows: Vec<_> = points.into_iter().zip(w).collect();
                    Distribution::finite_exact(n, &rows)
                }
                (None, Some(m)) if m.len() == points.len() => {
                    let rows: Vec<_> = points.into_iter().zip(m).collect();
                    Distribution::finite_float(n, &rows)
                }
                _ => Err(invalid(
                    "finite_support needs `weights` or `masses` matching `points`",
                )),
            },
        }
    }
}

impl From<Distribution> for DistributionSpec {
    fn from(d: Distribution) -> Self {
        match d {
            Distribution::Uniform { n } => DistributionSpec::Uniform { n },
            Distribution::ProductBernoulli { p } => DistributionSpec::Product {
                p: Some(p),
                n: None,
                alpha: None,
            },
            Distribution::CorrelatedPair { n, eta } => DistributionSpec::CorrelatedPair { n, eta },
            Distribution::FiniteSupport(f) => match f.exact {
                Some((w, _)) => DistributionSpec::FiniteSupport {
                    n: f.n,
                    points: f.points,
                    weights: Some(w),
                    masses: None,
                },
                None => DistributionSpec::FiniteSupport {
                    n: f.n,
                    points: f.points,
                    weights: None,
                    masses: Some(f.masses),
                },
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn pmf_examples() {
        let u = Distribution::uniform(4).unwrap();
        assert_eq!(u.pmf(&bv("1010")).unwrap(), 1.0 / 16.0);
        let p = Distribution::product(vec![0.75; 5]).unwrap();
        assert!((p.pmf(&BitVector::ones(5)).unwrap() - 0.75f64.powi(5)).abs() < 1e-15);
        let c = Distribution::correlated_pair(5, 0.8).unwrap();
        assert!((c.pmf(&bv("11010")).unwrap() - 0.5 * 0.8 * 0.125).abs() < 1e-15);
        assert!((c.pmf(&bv("10010")).unwrap() - 0.5 * 0.2 * 0.125).abs() < 1e-15);
        assert!(u.pmf(&bv("101")).is_err());
    }

    #[test]
    fn exact_masses() {
        let d = Distribution::finite_exact(3, &[(bv("101"), 1), (bv("000"), 3)]).unwrap();
        let m = d.pmf_exact(&bv("000")).unwrap().unwrap();
        assert_eq!(m, BigRational::new(3.into(), 4.into()));
        assert_eq!(d.pmf(&bv("111")).unwrap(), 0.0);
        let f = Distribution::finite_float(3, &[(bv("101"), 0.5), (bv("000"), 1.5)]).unwrap();
        assert!(f.pmf_exact(&bv("000")).unwrap().is_none());
        assert_eq!(f.pmf(&bv("000")).unwrap(), 0.75);
    }

    #[test]
    fn validation() {
        assert!(Distribution::product(vec![0.5, 1.0]).is_err());
        assert!(Distribution::correlated_pair(1, 0.5).is_err());
        assert!(Distribution::correlated_pair(3, 1.5).is_err());
        assert!(Distribution::finite_exact(2, &[(bv("10"), 1), (bv("10"), 1)]).is_err());
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(
            Distribution::uniform(6)
                .unwrap()
                .log_lipschitz_alpha()
                .unwrap(),
            1.0
        );
        let a = Distribution::product_alpha(6, 3.0)
            .unwrap()
            .log_lipschitz_alpha()
            .unwrap();
        assert!((a - 3.0).abs() < 1e-12);
        let c = Distribution::correlated_pair(6, 0.8)
            .unwrap()
            .log_lipschitz_alpha()
            .unwrap();
        assert!((c - 4.0).abs() < 1e-12);
        let pm = Distribution::point_mass(bv("010"));
        assert_eq!(pm.log_lipschitz_alpha().unwrap(), f64::INFINITY);
        assert!(Distribution::uniform(25)
            .unwrap()
            .log_lipschitz_alpha()
            .is_err());
    }

    #[test]
    fn point_mass_sampling() {
        let x = bv("0110");
        let d = Distribution::point_mass(x);
        let mut r = rng::seeded(1);
        assert!((0..50).all(|_| d.sample(&mut r) == x));
    }

    #[test]
    fn uniform_bit_frequencies() {
        let d = Distribution::uniform(10).unwrap();
        let mut r = rng::seeded(2);
        let m = 1_000_000;
        let mut counts = [0usize; 10];
        for _ in 0..m {
            let x = d.sample(&mut r);
            for (k, c) in counts.iter_mut().enumerate() {
                *c += x.get(k + 1) as usize;
            }
        }
        let sigma = (m as f64 * 0.25).sqrt();
        for c in counts {
            assert!((c as f64 - m as f64 / 2.0).abs() < 3.0 * sigma);
        }
    }

    #[test]
    fn correlated_pair_frequency() {
        let d = Distribution::correlated_pair(6, 0.8).unwrap();
        let mut r = rng::seeded(3);
        let m = 1_000_000;
        let same = (0..m)
            .filter(|_| {
                let x = d.sample(&mut r);
                x.get(1) == x.get(2)
            })
            .count();
        let sigma = (m as f64 * 0.8 * 0.2).sqrt();
        assert!((same as f64 - 0.8 * m as f64).abs() < 3.0 * sigma);
    }

    #[test]
    fn tables_sum_to_one() {
        for d in [
            Distribution::uniform(8).unwrap(),
            Distribution::product(vec![0.1, 0.3, 0.5, 0.7, 0.9, 0.2, 0.4, 0.6]).unwrap(),
            Distribution::correlated_pair(8, 0.3).unwrap(),
        ] {
            let t = d.pmf_table().unwrap();
            assert!((t.iter().sum::<f64>() - 1.0).abs() < 1e-12);
            for (i, &v) in t.iter().enumerate() {
                let direct = d.pmf(&BitVector::from_index(8, i as u64)).unwrap();
                assert!((v - direct).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn mixtures_reproduce_pmf() {
        for d in [
            Distribution::product_alpha(5, 2.0).unwrap(),
            Distribution::correlated_pair(5, 0.7).unwrap(),
            Distribution::finite_exact(5, &[(bv("10101"), 2), (bv("00011"), 1)]).unwrap(),
        ] {
            let mix = d.product_mixture().unwrap();
            for i in 0..32u64 {
                let x = BitVector::from_index(5, i);
                let m: f64 = mix
                    .iter()
                    .map(|(w, p)| {
                        w * p
                            .iter()
                            .enumerate()
                            .map(|(k, &q)| if x.get(k + 1) { q } else { 1.0 - q })
                            .product::<f64>()
                    })
                    .sum();
                assert!((m - d.pmf(&x).unwrap()).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn marginals() {
        let d = Distribution::correlated_pair(4, 0.9).unwrap();
        let m = d.marginal(&[2, 1]).unwrap();
        assert!((m.pmf(&bv("11")).unwrap() - 0.45).abs() < 1e-12);
        assert!((m.pmf(&bv("10")).unwrap() - 0.05).abs() < 1e-12);
        let s = d.sub_assignment_mass(&[1, 2], &[true, true]).unwrap();
        assert!((s - 0.45).abs() < 1e-12);
    }

    #[test]
    fn json_round_trip() {
        let cases = [
            r#"{"kind":"uniform","n":3}"#,
            r#"{"kind":"product","p":[0.25,0.5]}"#,
            r#"{"kind":"correlated_pair","n":4,"eta":0.8}"#,
            r#"{"kind":"finite_support","n":2,"points":["00","11"],"weights":[1,3]}"#,
        ];
        for c in cases {
            let d: Distribution = serde_json::from_str(c).unwrap();
            assert_eq!(serde_json::to_string(&d).unwrap(), c);
        }
        let d: Distribution =
            serde_json::from_str(r#"{"kind":"product","n":3,"alpha":2.0}"#).unwrap();
        assert!((d.pmf(&bv("111")).unwrap() - (2.0f64 / 3.0).powi(3)).abs() < 1e-12);
        assert!(serde_json::from_str::<Distribution>(r#"{"kind":"product","p":[1.5]}"#).is_err());
        assert!(serde_json::from_str::<Distribution>(r#"{"kind":"uniform","n":3,"x":1}"#).is_err());
    }
}
