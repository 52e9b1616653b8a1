// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Brute-force complexity measures of explicit finite classes: VC dimension,
//! growth function, Littlestone dimension, their ball-restricted variants,
//! the precision-bounded Littlestone dimension, and the class of robust
//! losses between two classes.
//!
//! A [`FiniteClass`] is an evaluation table over an explicit point list.
//! Concepts and points are addressed by their row and column indices.
//! Points live either on the hypercube (Hamming metric) or on the real line
//! (absolute difference). Version spaces are bit sets over concept indices.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::concepts::Concept;
use crate::error::{invalid, Error, Result};
use crate::exec::Exec;
use crate::hypercube::{bits, check_limit, BitVector};

/// Largest number of points in a class.
pub const POINT_LIMIT: usize = 1 << 16;

/// Largest dimension for robust-loss classes.
pub const ROBUST_CLASS_LIMIT: usize = 14;

/// Search nodes allowed per shattering search.
pub const SEARCH_BUDGET: u64 = 200_000_000;

/// Memo entries allowed per Littlestone computation.
pub const MEMO_BUDGET: usize = 4_000_000;

/// Slack for ball membership on the real line.
const EPS: f64 = 1e-9;

/// Instance space of a finite class.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Points {
    Cube { n: usize, points: Vec<BitVector> },
    Line { points: Vec<f64> },
}

impl Points {
    pub fn len(&self) -> usize {
        match self {
            Points::Cube { points, .. } => points.len(),
            Points::Line { points } => points.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        match self {
            Points::Cube { points, .. } => points[i].distance(&points[j]) as f64,
            Points::Line { points } => (points[i] - points[j]).abs(),
        }
    }

    /// Bit set of the points within `radius` of point `i`.
    pub fn ball(&self, i: usize, radius: f64) -> Vec<u64> {
        let mut out = bits::empty(self.len());
        for j in 0..self.len() {
            if self.distance(i, j) <= radius + EPS {
                bits::set(&mut out, j);
            }
        }
        out
    }
}

/// An explicit class: deduplicated rows of an evaluation table.
#[derive(Clone, Debug, PartialEq)]
pub struct FiniteClass {
    points: Points,
    rows: Vec<Vec<u64>>,
    cols: Vec<Vec<u64>>,
}

/// A dimension value with a witness: the shattered set or the root path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Dimension {
    pub value: usize,
    pub witness: Vec<usize>,
}

/// Where the ball of a restricted measure is centred.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Anchor {
    /// At a member of the shattered set.
    Member,
    /// At any point of the space.
    Any,
}

/// Ball restriction of a measure.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Restriction {
    pub radius: f64,
    pub anchor: Anchor,
}

impl Restriction {
    pub fn member(radius: f64) -> Self {
        Restriction {
            radius,
            anchor: Anchor::Member,
        }
    }
}

impl FiniteClass {
    /// Builds a class from a table of labels, one row per concept.
    pub fn from_rows(points: Points, rows: &[Vec<bool>]) -> Result<Self> {
        let p = points.len();
        if p == 0 || p > POINT_LIMIT {
            return Err(invalid(format!("{p} points outside 1..={POINT_LIMIT}")));
        }
        let mut seen = HashSet::new();
        let mut packed = Vec::new();
        for row in rows {
            if row.len() != p {
                return Err(Error::DimensionMismatch {
                    left: row.len(),
                    right: p,
                });
            }
            let mut r = bits::empty(p);
            for (j, &b) in row.iter().enumerate() {
                if b {
                    bits::set(&mut r, j);
                }
            }
            if seen.insert(r.clone()) {
                packed.push(r);
            }
        }
        Self::from_bitsets(points, packed)
    }

    fn from_bitsets(points: Points, rows: Vec<Vec<u64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(invalid("empty class"));
        }
        let p = points.len();
        let mut cols = vec![bits::empty(rows.len()); p];
        for (c, r) in rows.iter().enumerate() {
            for j in bits::iter(r) {
                bits::set(&mut cols[j], c);
            }
        }
        Ok(FiniteClass { points, rows, cols })
    }

    /// Restricts concepts to an explicit point list.
    pub fn from_concepts(concepts: &[Concept], points: Vec<BitVector>) -> Result<Self> {
        let n = concepts
            .first()
            .map(Concept::n)
            .ok_or_else(|| invalid("empty class"))?;
        if concepts.iter().any(|c| c.n() != n) || points.iter().any(|x| x.n() != n) {
            return Err(invalid("mixed dimensions"));
        }
        let rows: Vec<Vec<bool>> = concepts
            .iter()
            .map(|c| points.iter().map(|x| c.eval(x)).collect())
            .collect();
        Self::from_rows(Points::Cube { n, points }, &rows)
    }

    /// Restricts concepts to the whole cube, points in index order.
    pub fn cube(concepts: &[Concept]) -> Result<Self> {
        let n = concepts
            .first()
            .map(Concept::n)
            .ok_or_else(|| invalid("empty class"))?;
        check_limit(n, 16)?;
        let points = (0..1u64 << n)
            .map(|i| BitVector::from_index(n, i))
            .collect();
        Self::from_concepts(concepts, points)
    }

    pub fn points(&self) -> &Points {
        &self.points
    }

    /// Number of distinct concepts.
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn label(&self, concept: usize, point: usize) -> bool {
        bits::get(&self.rows[concept], point)
    }

    /// Bit set of the concepts labelling `point` with 1.
    pub fn positives(&self, point: usize) -> &[u64] {
        &self.cols[point]
    }

    /// Column index of a cube point.
    pub fn point_index(&self, x: &BitVector) -> Option<usize> {
        match &self.points {
            Points::Cube { n, points } => {
                if *n <= 16 && points.len() == 1 << n && points[x.index() as usize] == *x {
                    Some(x.index() as usize)
                } else {
                    points.iter().position(|p| p == x)
                }
            }
            Points::Line { .. } => None,
        }
    }

    fn full_cube_dim(&self) -> Option<usize> {
        match &self.points {
            Points::Cube { n, points }
                if points.len() == 1 << n
                    && points
                        .iter()
                        .enumerate()
                        .all(|(i, p)| p.index() == i as u64) =>
            {
                Some(*n)
            }
            _ => None,
        }
    }

    /// Concepts constant 0 and constant 1 on the `radius` ball of `point`.
    pub fn constant_on_ball(&self, point: usize, radius: f64) -> (Vec<u64>, Vec<u64>) {
        let mut zero = bits::full(self.len());
        let mut one = bits::full(self.len());
        for q in bits::iter(&self.points.ball(point, radius)) {
            for (w, (z, o)) in zero.iter_mut().zip(one.iter_mut()).enumerate() {
                *o &= self.cols[q][w];
                *z &= !self.cols[q][w];
            }
        }
        (zero, one)
    }
}

fn and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn and_not(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & !y).collect()
}

fn floor_log2(k: usize) -> usize {
    if k <= 1 {
        0
    } else {
        (usize::BITS - 1 - k.leading_zeros()) as usize
    }
}

/// Whether the class realizes every labelling of `set`.
pub fn shatters(f: &FiniteClass, set: &[usize]) -> bool {
    let mut groups = vec![bits::full(f.len())];
    for &p in set {
        match split_groups(&groups, &f.cols[p]) {
            Some(g) => groups = g,
            None => return false,
        }
    }
    true
}

/// Splits every group by `col`, or `None` if some group fails to split.
fn split_groups(groups: &[Vec<u64>], col: &[u64]) -> Option<Vec<Vec<u64>>> {
    let mut out = Vec::with_capacity(groups.len() * 2);
    for g in groups {
        let one = and(g, col);
        let zero = and_not(g, col);
        if bits::is_empty(&one) || bits::is_empty(&zero) {
            return None;
        }
        out.push(zero);
        out.push(one);
    }
    Some(out)
}

struct Shatter<'a> {
    f: &'a FiniteClass,
    candidates: Vec<usize>,
    cap: usize,
    nodes: u64,
    best: Vec<usize>,
}

impl Shatter<'_> {
    fn search(&mut self, set: &mut Vec<usize>, groups: &[Vec<u64>], from: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes > SEARCH_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "shattering search".into(),
                count: self.nodes as u128,
                limit: SEARCH_BUDGET as u128,
            });
        }
        if set.len() > self.best.len() {
            self.best = set.clone();
        }
        if self.best.len() >= self.cap {
            return Ok(());
        }
        for k in from..self.candidates.len() {
            if set.len() + (self.candidates.len() - k) <= self.best.len() {
                break;
            }
            let p = self.candidates[k];
            if let Some(next) = split_groups(groups, &self.f.cols[p]) {
                set.push(p);
                self.search(set, &next, k + 1)?;
                set.pop();
                if self.best.len() >= self.cap {
                    break;
                }
            }
        }
        Ok(())
    }
}

/// Largest shattered subset of `candidates` that contains `seed`.
fn largest_shattered(
    f: &FiniteClass,
    seed: &[usize],
    candidates: Vec<usize>,
) -> Result<Vec<usize>> {
    let mut groups = vec![bits::full(f.len())];
    for &p in seed {
        match split_groups(&groups, &f.cols[p]) {
            Some(g) => groups = g,
            None => return Ok(Vec::new()),
        }
    }
    let mut s = Shatter {
        f,
        candidates,
        cap: floor_log2(f.len()),
        nodes: 0,
        best: Vec::new(),
    };
    let mut set = seed.to_vec();
    s.search(&mut set, &groups, 0)?;
    let mut best = s.best;
    best.sort_unstable();
    Ok(best)
}

fn pick_best(results: Vec<Result<Vec<usize>>>) -> Result<Dimension> {
    let mut best: Vec<usize> = Vec::new();
    for r in results {
        let w = r?;
        if w.len() > best.len() {
            best = w;
        }
    }
    Ok(Dimension {
        value: best.len(),
        witness: best,
    })
}

/// VC dimension, optionally restricted to sets inside one ball.
pub fn vc_dimension(f: &FiniteClass, restriction: Option<Restriction>) -> Result<Dimension> {
    let p = f.num_points();
    match restriction {
        None => {
            let results = Exec::default().map(p, |first| {
                largest_shattered(f, &[first], (first + 1..p).collect())
            });
            pick_best(results)
        }
        Some(r) => {
            let results = Exec::default().map(p, |a| {
                let ball = f.points.ball(a, r.radius);
                match r.anchor {
                    Anchor::Member => {
                        largest_shattered(f, &[a], bits::iter(&ball).filter(|&q| q != a).collect())
                    }
                    Anchor::Any => largest_shattered(f, &[], bits::iter(&ball).collect()),
                }
            });
            pick_best(results)
        }
    }
}

/// Largest number of labellings realized on a set of `m` points.
pub fn growth_function(f: &FiniteClass, m: usize) -> Result<u128> {
    let p = f.num_points();
    if m > p {
        return Err(invalid(format!("subset size {m} exceeds {p} points")));
    }
    let subsets = crate::hypercube::binomial(p, m);
    if subsets > SEARCH_BUDGET as u128 {
        return Err(Error::BudgetExceeded {
            what: "growth function subsets".into(),
            count: subsets,
            limit: SEARCH_BUDGET as u128,
        });
    }
    let full = 1u128
        .checked_shl(m as u32)
        .unwrap_or(u128::MAX)
        .min(f.len() as u128);
    let mut best = 0u128;
    let mut idx: Vec<usize> = (0..m).collect();
    loop {
        let mut groups = vec![bits::full(f.len())];
        for &q in &idx {
            let mut next = Vec::with_capacity(groups.len() * 2);
            for g in &groups {
                for part in [and(g, &f.cols[q]), and_not(g, &f.cols[q])] {
                    if !bits::is_empty(&part) {
                        next.push(part);
                    }
                }
            }
            groups = next;
        }
        best = best.max(groups.len() as u128);
        if best == full {
            return Ok(best);
        }
        // Next combination in lexicographic order.
        let mut i = m;
        loop {
            if i == 0 {
                return Ok(best);
            }
            i -= 1;
            if idx[i] < p - m + i {
                idx[i] += 1;
                for j in i + 1..m {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Memoized Littlestone recursion over version spaces.
///
/// Each allowed point carries the two concept sets a node there may route
/// to: concepts labelling it 0 and 1, or with a precision radius, concepts
/// constant 0 and constant 1 on its ball.
pub struct LitEngine {
    splits: Vec<(Vec<u64>, Vec<u64>)>,
    points: Vec<usize>,
    memo: HashMap<Vec<u64>, usize>,
}

impl LitEngine {
    pub fn new(f: &FiniteClass, precision: Option<f64>, allowed: Option<&[u64]>) -> Self {
        let points: Vec<usize> = match allowed {
            Some(a) => bits::iter(a).collect(),
            None => (0..f.num_points()).collect(),
        };
        let splits = points
            .iter()
            .map(|&p| match precision {
                Some(tau) if tau > 0.0 => f.constant_on_ball(p, tau),
                _ => {
                    let all = bits::full(f.len());
                    (and_not(&all, &f.cols[p]), f.cols[p].clone())
                }
            })
            .collect();
        LitEngine {
            splits,
            points,
            memo: HashMap::new(),
        }
    }

    /// The two children of `v` at a point, by column index.
    pub fn children(&self, v: &[u64], point: usize) -> Option<(Vec<u64>, Vec<u64>)> {
        let k = self.points.iter().position(|&p| p == point)?;
        let (z, o) = &self.splits[k];
        Some((and(v, z), and(v, o)))
    }

    /// Littlestone dimension of the version space `v`.
    pub fn lit(&mut self, v: &[u64]) -> Result<usize> {
        let size = bits::count(v);
        if size <= 1 {
            return Ok(0);
        }
        if let Some(&d) = self.memo.get(v) {
            return Ok(d);
        }
        if self.memo.len() >= MEMO_BUDGET {
            return Err(Error::BudgetExceeded {
                what: "Littlestone memo".into(),
                count: self.memo.len() as u128,
                limit: MEMO_BUDGET as u128,
            });
        }
        let cap = floor_log2(size);
        let mut best = 0;
        for k in 0..self.splits.len() {
            let zero = and(v, &self.splits[k].0);
            let one = and(v, &self.splits[k].1);
            let (cz, co) = (bits::count(&zero), bits::count(&one));
            if cz == 0 || co == 0 || floor_log2(cz.min(co)) < best {
                continue;
            }
            let (small, large) = if cz <= co { (zero, one) } else { (one, zero) };
            let a = self.lit(&small)?;
            if a < best {
                continue;
            }
            let b = self.lit(&large)?;
            best = best.max(1 + a.min(b));
            if best >= cap {
                break;
            }
        }
        self.memo.insert(v.to_vec(), best);
        Ok(best)
    }
}

/// Littlestone dimension.
///
/// With `precision`, nodes split only into concepts constant on the node's
/// ball of that radius. With `restriction`, every node lies in the ball of
/// that radius around the root.
pub fn littlestone_dimension(
    f: &FiniteClass,
    restriction: Option<f64>,
    precision: Option<f64>,
) -> Result<usize> {
    let all = bits::full(f.len());
    match restriction {
        None => LitEngine::new(f, precision, None).lit(&all),
        Some(r) => {
            let results = Exec::default().map(f.num_points(), |root| -> Result<usize> {
                let ball = f.points.ball(root, r);
                let mut e = LitEngine::new(f, precision, Some(&ball));
                let (zero, one) = e.children(&all, root).expect("root in its ball");
                if bits::is_empty(&zero) || bits::is_empty(&one) {
                    return Ok(0);
                }
                Ok(1 + e.lit(&zero)?.min(e.lit(&one)?))
            });
            results.into_iter().try_fold(0, |m, r| r.map(|v| m.max(v)))
        }
    }
}

/// The class of robust losses `x -> 1[exists z in B_rho(x): c(z) != h(z)]`
/// over pairs from two classes on the whole cube (`n <= 14`).
pub fn robust_loss_class(c: &FiniteClass, h: &FiniteClass, rho: usize) -> Result<FiniteClass> {
    let n = c
        .full_cube_dim()
        .filter(|&n| h.full_cube_dim() == Some(n))
        .ok_or_else(|| invalid("robust loss classes need both classes on the same full cube"))?;
    check_limit(n, ROBUST_CLASS_LIMIT)?;
    let mut deltas = HashSet::new();
    for rc in &c.rows {
        for rh in &h.rows {
            deltas.insert(rc.iter().zip(rh).map(|(a, b)| a ^ b).collect::<Vec<u64>>());
        }
    }
    let mut deltas: Vec<Vec<u64>> = deltas.into_iter().collect();
    deltas.sort_unstable();
    let size = 1usize << n;
    let mut seen = HashSet::new();
    let mut rows = Vec::new();
    for d in &deltas {
        let loss = if rho >= n.saturating_sub(1) && n > 0 {
            loss_far(n, d, rho)
        } else {
            bits::dilate(n, d, rho)
        };
        if seen.insert(loss.clone()) {
            rows.push(loss);
        }
    }
    rows.sort_unstable();
    let points = Points::Cube {
        n,
        points: (0..size as u64)
            .map(|i| BitVector::from_index(n, i))
            .collect(),
    };
    FiniteClass::from_bitsets(points, rows)
}

/// Loss sets for `rho >= n - 1`, where `B_rho(x)` misses at most the
/// complement of `x`.
fn loss_far(n: usize, delta: &[u64], rho: usize) -> Vec<u64> {
    let size = 1usize << n;
    match bits::count(delta) {
        0 => bits::empty(size),
        1 if rho < n => {
            let z = bits::iter(delta).next().expect("one member");
            let mut out = bits::full(size);
            let far = (!z) & (size - 1);
            out[far / 64] &= !(1u64 << (far % 64));
            out
        }
        _ => bits::full(size),
    }
}

/// Thresholds `x -> 1[x >= a]` on a grid of `[0, b]` with step `tau / m`,
/// with one threshold below, between and above every pair of grid points.
pub fn thresholds_grid(b: f64, tau: f64, m: usize) -> Result<FiniteClass> {
    if !(b > 0.0 && tau > 0.0 && m >= 1) {
        return Err(invalid("thresholds need b > 0, tau > 0, m >= 1"));
    }
    let step = tau / m as f64;
    let count = (b / step).round() as usize;
    if count + 1 > POINT_LIMIT {
        return Err(invalid("threshold grid too fine"));
    }
    let points: Vec<f64> = (0..=count).map(|i| i as f64 * step).collect();
    let rows: Vec<Vec<bool>> = (0..=count + 1)
        .map(|j| (0..=count).map(|i| i >= j).collect())
        .collect();
    FiniteClass::from_rows(Points::Line { points }, &rows)
}

/// Sauer–Shelah bound: number of subsets of size at most `d` of `m` items.
pub fn sauer_shelah(m: usize, d: usize) -> u128 {
    (0..=d.min(m))
        .map(|i| crate::hypercube::binomial(m, i))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::concepts::{enumerate_class, ClassSpec};
    use crate::rng;
    use rand::Rng as _;

    fn cube_class(spec: ClassSpec, n: usize) -> FiniteClass {
        FiniteClass::cube(&enumerate_class(&spec, n, 1 << 22).unwrap()).unwrap()
    }

    fn random_class(seed: u64, points: usize, concepts: usize) -> FiniteClass {
        let mut r = rng::seeded(seed);
        let rows: Vec<Vec<bool>> = (0..concepts)
            .map(|_| (0..points).map(|_| r.random_bool(0.5)).collect())
            .collect();
        FiniteClass::from_rows(
            Points::Line {
                points: (0..points).map(|i| i as f64).collect(),
            },
            &rows,
        )
        .unwrap()
    }

    #[test]
    fn conjunction_vc() {
        for n in 3..=4 {
            let f = cube_class(ClassSpec::Conj, n);
            let d = vc_dimension(&f, None).unwrap();
            assert_eq!(d.value, n);
            assert!(shatters(&f, &d.witness));
            assert_eq!(
                vc_dimension(&f, Some(Restriction::member(1.0)))
                    .unwrap()
                    .value,
                2
            );
            assert_eq!(
                vc_dimension(&f, Some(Restriction::member(2.0)))
                    .unwrap()
                    .value,
                n
            );
        }
    }

    #[test]
    fn ltf_vc() {
        let f = cube_class(
            ClassSpec::LtfBool {
                budget: 7,
                max_weight: 7,
            },
            3,
        );
        assert_eq!(vc_dimension(&f, None).unwrap().value, 4);
        assert_eq!(
            vc_dimension(&f, Some(Restriction::member(1.0)))
                .unwrap()
                .value,
            4
        );
    }

    #[test]
    fn singletons_littlestone() {
        let f = cube_class(ClassSpec::Singleton, 4);
        assert_eq!(littlestone_dimension(&f, None, None).unwrap(), 1);
        assert_eq!(vc_dimension(&f, None).unwrap().value, 1);
    }

    #[test]
    fn threshold_precision() {
        for (tau, want) in [(1.0 / 8.0, 2), (1.0 / 16.0, 3), (1.0 / 32.0, 4)] {
            let f = thresholds_grid(1.0, tau, 8).unwrap();
            assert_eq!(
                littlestone_dimension(&f, None, Some(tau)).unwrap(),
                want,
                "tau {tau}"
            );
        }
        let f = thresholds_grid(1.0, 1.0 / 8.0, 2).unwrap();
        assert_eq!(
            littlestone_dimension(&f, None, None).unwrap(),
            floor_log2(f.len())
        );
    }

    #[test]
    fn robust_loss_extremes() {
        let n = 4;
        let f = cube_class(ClassSpec::Conj, n);
        let zero = robust_loss_class(&f, &f, 0).unwrap();
        let sym: Vec<Vec<bool>> = {
            let mut rows = Vec::new();
            for a in 0..f.len() {
                for b in 0..f.len() {
                    rows.push((0..16).map(|p| f.label(a, p) != f.label(b, p)).collect());
                }
            }
            rows
        };
        let sym = FiniteClass::from_rows(f.points().clone(), &sym).unwrap();
        assert_eq!(
            vc_dimension(&zero, None).unwrap().value,
            vc_dimension(&sym, None).unwrap().value
        );
        let all = robust_loss_class(&f, &f, n).unwrap();
        assert_eq!(all.len(), 2);
        assert_eq!(vc_dimension(&all, None).unwrap().value, 1);
        // The far-ball shortcut agrees with dilation.
        let far = robust_loss_class(&f, &f, n - 1).unwrap();
        let mut slow = HashSet::new();
        for a in 0..f.len() {
            for b in 0..f.len() {
                let d: Vec<u64> = f.rows[a]
                    .iter()
                    .zip(&f.rows[b])
                    .map(|(x, y)| x ^ y)
                    .collect();
                slow.insert(bits::dilate(n, &d, n - 1));
            }
        }
        assert_eq!(far.len(), slow.len());
        assert!(far.rows.iter().all(|r| slow.contains(r)));
    }

    #[test]
    fn growth_examples() {
        let f = cube_class(ClassSpec::Conj, 3);
        for m in 0..=3 {
            assert_eq!(growth_function(&f, m).unwrap(), 1 << m);
        }
        let one = FiniteClass::cube(&[Concept::constant(3, true)]).unwrap();
        for m in 0..=4 {
            assert_eq!(growth_function(&one, m).unwrap(), 1);
        }
    }

    #[test]
    fn dimension_chain() {
        for seed in 0..40 {
            let f = random_class(seed, 8, 3 + (seed as usize % 20));
            let vc = vc_dimension(&f, None).unwrap().value;
            let lit = littlestone_dimension(&f, None, None).unwrap();
            assert!(vc <= lit && lit <= floor_log2(f.len()), "seed {seed}");
            for m in 0..=8 {
                assert!(growth_function(&f, m).unwrap() <= sauer_shelah(m, vc));
            }
            let rvc = vc_dimension(&f, Some(Restriction::member(2.0)))
                .unwrap()
                .value;
            let rlit = littlestone_dimension(&f, Some(2.0), None).unwrap();
            assert!(rvc <= vc && rlit <= lit && rvc <= rlit);
        }
    }

    #[test]
    fn dedups_rows() {
        let f = FiniteClass::cube(&[
            Concept::parity(3, &[1]).unwrap(),
            Concept::dictator(3, 1, true).unwrap(),
        ])
        .unwrap();
        assert_eq!(f.len(), 1);
    }
}
