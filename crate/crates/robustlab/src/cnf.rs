// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! CNF formulas over signed literals: expansion sets, resolution closure,
//! covers and matchings, discrepancy formulas of decision-list pairs, and the
//! width-`k` CNF constants.
//!
//! Clauses are literal sets in canonical order (see
//! [`crate::concepts::literal_cmp`]); the clause list is sorted by size and
//! then lexicographically, and duplicates are removed. Tautological clauses
//! are dropped on construction and counted in `dropped_tautologies`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::concepts::{canonical_literals, literal_cmp, literal_holds, Concept, DlNode};
use crate::distributions::Distribution;
use crate::error::{invalid, Error, Result};
use crate::hypercube::{bits, check_exact, check_limit, BitVector, MAX_DIM};

/// Default clause cap for resolution closure.
pub const CLOSURE_CAP: usize = 100_000;

/// Default clause cap for exact cover search.
pub const COVER_CAP: usize = 256;

/// Clause order: by size, then lexicographically in canonical literal order.
pub fn clause_cmp(a: &[i32], b: &[i32]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        a.iter()
            .zip(b)
            .map(|(x, y)| literal_cmp(x, y))
            .find(|o| o.is_ne())
            .unwrap_or(Ordering::Equal)
    })
}

fn is_tautology(clause: &[i32]) -> bool {
    clause.iter().any(|l| clause.contains(&-l))
}

/// A conjunction of clauses over `n` variables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CnfFormula {
    n: usize,
    clauses: Vec<Vec<i32>>,
    dropped_tautologies: usize,
}

impl CnfFormula {
    pub fn new(n: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return Err(invalid(format!("dimension {n} unsupported")));
        }
        let mut kept = Vec::with_capacity(clauses.len());
        let mut dropped = 0;
        for c in clauses {
            for &l in &c {
                let i = l.unsigned_abs() as usize;
                if l == 0 || i > n {
                    return Err(Error::IndexOutOfRange { index: i, n });
                }
            }
            let c = canonical_literals(c);
            if is_tautology(&c) {
                dropped += 1;
            } else {
                kept.push(c);
            }
        }
        kept.sort_by(|a, b| clause_cmp(a, b));
        kept.dedup();
        Ok(CnfFormula {
            n,
            clauses: kept,
            dropped_tautologies: dropped,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Number of tautological clauses removed at construction.
    pub fn dropped_tautologies(&self) -> usize {
        self.dropped_tautologies
    }

    /// Largest clause size.
    pub fn width(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn satisfies(&self, x: &BitVector) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&l| literal_holds(x, l)))
    }

    /// Bit set of points within distance `rho` of a satisfying assignment,
    /// indexed by integer code (`n <= 20`).
    pub fn sat_mask(&self, rho: usize) -> Result<Vec<u64>> {
        check_limit(self.n, 20)?;
        let sat = crate::concepts::truth_table_of(self.n, |x| self.satisfies(x))?;
        Ok(if rho == 0 {
            sat
        } else {
            bits::dilate(self.n, &sat, rho)
        })
    }

    /// Points within distance `rho` of a satisfying assignment.
    pub fn sat_set(&self, rho: usize) -> Result<Vec<BitVector>> {
        let m = self.sat_mask(rho)?;
        Ok(bits::iter(&m)
            .map(|i| BitVector::from_index(self.n, i as u64))
            .collect())
    }

    /// Smallest superset closed under resolution, ignoring tautological
    /// resolvents. Fails once more than `cap` clauses accumulate.
    pub fn resolution_closure(&self, cap: usize) -> Result<CnfFormula> {
        let mut all: Vec<Vec<i32>> = self.clauses.clone();
        let mut seen: HashSet<Vec<i32>> = all.iter().cloned().collect();
        let mut next = 0;
        while next < all.len() {
            let a = all[next].clone();
            for b_idx in 0..next {
                for &l in &a {
                    if !all[b_idx].contains(&-l) {
                        continue;
                    }
                    let r: Vec<i32> = a
                        .iter()
                        .filter(|&&x| x != l)
                        .chain(all[b_idx].iter().filter(|&&x| x != -l))
                        .copied()
                        .collect();
                    let r = canonical_literals(r);
                    if is_tautology(&r) || seen.contains(&r) {
                        continue;
                    }
                    if all.len() >= cap {
                        return Err(Error::BudgetExceeded {
                            what: "resolution closure clauses".into(),
                            count: all.len() as u128 + 1,
                            limit: cap as u128,
                        });
                    }
                    seen.insert(r.clone());
                    all.push(r);
                }
            }
            next += 1;
        }
        let mut out = CnfFormula::new(self.n, all)?;
        out.dropped_tautologies = self.dropped_tautologies;
        Ok(out)
    }

    /// A minimum-size set of literals meeting every clause, by exact
    /// branch and bound. Fails on an empty clause or more than `cap` clauses.
    pub fn minimal_cover(&self, cap: usize) -> Result<Vec<i32>> {
        if self.clauses.len() > cap {
            return Err(Error::BudgetExceeded {
                what: "cover search clauses".into(),
                count: self.clauses.len() as u128,
                limit: cap as u128,
            });
        }
        if self.clauses.iter().any(Vec::is_empty) {
            return Err(invalid("the empty clause has no cover"));
        }
        let mut best: Vec<i32> = self.clauses.iter().map(|c| c[0]).collect();
        best = canonical_literals(best);
        let mut cur = Vec::new();
        cover_search(&self.clauses, &mut cur, &mut best);
        Ok(canonical_literals(best))
    }

    /// Greedy maximal set of clauses with no literal in common, in clause order.
    pub fn literal_disjoint_matching(&self) -> Vec<Vec<i32>> {
        let mut used = BTreeSet::new();
        let mut out = Vec::new();
        for c in &self.clauses {
            if c.iter().all(|l| !used.contains(l)) {
                used.extend(c.iter().copied());
                out.push(c.clone());
            }
        }
        out
    }

    /// Greedy maximal set of clauses with no variable in common, in clause order.
    pub fn variable_disjoint_matching(&self) -> Vec<Vec<i32>> {
        let mut used = BTreeSet::new();
        let mut out = Vec::new();
        for c in &self.clauses {
            if c.iter().all(|l| !used.contains(&l.unsigned_abs())) {
                used.extend(c.iter().map(|l| l.unsigned_abs()));
                out.push(c.clone());
            }
        }
        out
    }

    /// DIMACS text: a `p cnf` header and one 0-terminated clause per line.
    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.n, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                let _ = write!(s, "{l} ");
            }
            s.push_str("0\n");
        }
        s
    }

    /// Parses DIMACS text. Comment lines start with `c`; without a header the
    /// dimension is the largest variable mentioned.
    pub fn from_dimacs(text: &str) -> Result<Self> {
        let mut n = None;
        let mut clauses = Vec::new();
        let mut cur = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') || line.starts_with('%') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let f: Vec<&str> = rest.split_whitespace().collect();
                if f.len() != 3 || f[0] != "cnf" {
                    return Err(Error::Parse(format!("bad header {line:?}")));
                }
                n = Some(
                    f[1].parse::<usize>()
                        .map_err(|e| Error::Parse(format!("{line:?}: {e}")))?,
                );
                continue;
            }
            for tok in line.split_whitespace() {
                let l: i32 = tok
                    .parse()
                    .map_err(|e| Error::Parse(format!("literal {tok:?}: {e}")))?;
                if l == 0 {
                    clauses.push(std::mem::take(&mut cur));
                } else {
                    cur.push(l);
                }
            }
        }
        if !cur.is_empty() {
            clauses.push(cur);
        }
        let n = n.unwrap_or_else(|| {
            clauses
                .iter()
                .flatten()
                .map(|l: &i32| l.unsigned_abs() as usize)
                .max()
                .unwrap_or(1)
        });
        CnfFormula::new(n, clauses)
    }
}

fn cover_search(clauses: &[Vec<i32>], cur: &mut Vec<i32>, best: &mut Vec<i32>) {
    if cur.len() >= best.len() {
        return;
    }
    let open = clauses.iter().find(|c| !c.iter().any(|l| cur.contains(l)));
    let Some(open) = open else {
        *best = cur.clone();
        return;
    };
    if cur.len() + 1 >= best.len() {
        return;
    }
    for &l in open {
        cur.push(l);
        cover_search(clauses, cur, best);
        cur.pop();
    }
}

fn list_parts(c: &Concept) -> Result<(usize, &[DlNode])> {
    match c {
        Concept::DecisionList { n, nodes, .. } => Ok((*n, nodes)),
        _ => Err(invalid("expected a decision list")),
    }
}

/// The CNF of "`x` activates node `i` of `c` and node `j` of `h`" (1-based),
/// optionally closed under resolution.
pub fn discrepancy_formula(
    c: &Concept,
    h: &Concept,
    i: usize,
    j: usize,
    close: bool,
) -> Result<CnfFormula> {
    let (n, cn) = list_parts(c)?;
    let (m, hn) = list_parts(h)?;
    if n != m {
        return Err(Error::DimensionMismatch { left: n, right: m });
    }
    if i == 0 || i > cn.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            n: cn.len(),
        });
    }
    if j == 0 || j > hn.len() {
        return Err(Error::IndexOutOfRange {
            index: j,
            n: hn.len(),
        });
    }
    let mut clauses = Vec::new();
    for (nodes, upto) in [(cn, i), (hn, j)] {
        for d in &nodes[..upto - 1] {
            clauses.push(d.term.iter().map(|l| -l).collect());
        }
        for &l in &nodes[upto - 1].term {
            clauses.push(vec![l]);
        }
    }
    let f = CnfFormula::new(n, clauses)?;
    if close {
        f.resolution_closure(CLOSURE_CAP)
    } else {
        Ok(f)
    }
}

/// Whether no two clauses of `m` share a variable.
pub fn is_variable_disjoint(m: &[Vec<i32>]) -> bool {
    let mut used = BTreeSet::new();
    m.iter()
        .flat_map(|c| {
            let vars: BTreeSet<u32> = c.iter().map(|l| l.unsigned_abs()).collect();
            vars
        })
        .all(|v| used.insert(v))
}

/// Truth values of the clauses of a variable-disjoint matching at `x`.
pub fn matching_embed(x: &BitVector, m: &[Vec<i32>]) -> Result<BitVector> {
    if m.is_empty() {
        return Err(invalid("empty matching"));
    }
    if !is_variable_disjoint(m) {
        return Err(invalid("matching clauses share a variable"));
    }
    for c in m {
        for &l in c {
            let i = l.unsigned_abs() as usize;
            if l == 0 || i > x.n() {
                return Err(Error::IndexOutOfRange { index: i, n: x.n() });
            }
        }
    }
    let b: Vec<bool> = m
        .iter()
        .map(|c| c.iter().any(|&l| literal_holds(x, l)))
        .collect();
    BitVector::from_bits(&b)
}

/// Distribution of [`matching_embed`] of a point drawn from `d` (`n <= 24`).
pub fn matching_pushforward(d: &Distribution, m: &[Vec<i32>]) -> Result<Distribution> {
    let n = d.n();
    check_exact(n)?;
    let table = d.pmf_table()?;
    let mut mass = vec![0.0; 1 << m.len()];
    for (i, &p) in table.iter().enumerate() {
        let y = matching_embed(&BitVector::from_index(n, i as u64), m)?;
        mass[y.index() as usize] += p;
    }
    let rows: Vec<(BitVector, f64)> = mass
        .iter()
        .enumerate()
        .map(|(i, &p)| (BitVector::from_index(m.len(), i as u64), p))
        .collect();
    Distribution::finite_float(m.len(), &rows)
}

/// Constants of the width-`k` CNF expansion bound. `C1` is reported through
/// the exponent of its lower bound, `C1 >= 2^c1_log2_lower`.
#[derive(Clone, Debug, PartialEq)]
pub struct KcnfConstants {
    pub k: u32,
    pub c1_log2_lower: BigRational,
    pub c2: BigRational,
    pub c3: BigRational,
    pub c4: BigRational,
}

impl KcnfConstants {
    /// Whether `C3 >= (eta / 2) C4` at `eta = (1 + alpha)^-k`.
    pub fn margin_holds(&self, alpha: &BigRational) -> bool {
        let eta = eta_for(self.k, alpha);
        self.c3 >= &eta / BigRational::from_integer(2.into()) * &self.c4
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn eta_for(k: u32, alpha: &BigRational) -> BigRational {
    (rat(1) + alpha).pow(-(k as i32))
}

fn check_kcnf(k: u32, alpha: &BigRational) -> Result<()> {
    if k == 0 {
        return Err(invalid("width k must be at least 1"));
    }
    if *alpha < rat(1) {
        return Err(invalid("alpha must be at least 1"));
    }
    Ok(())
}

fn base_case(alpha: &BigRational) -> KcnfConstants {
    let eta = eta_for(1, alpha);
    KcnfConstants {
        k: 1,
        c1_log2_lower: BigRational::zero(),
        c2: BigRational::zero(),
        c3: rat(4) / (&eta * &eta),
        c4: rat(2) / &eta,
    }
}

/// Closed-form constants; `k = 1` is the base case.
pub fn kcnf_constants(k: u32, alpha: &BigRational) -> Result<KcnfConstants> {
    check_kcnf(k, alpha)?;
    if k == 1 {
        return Ok(base_case(alpha));
    }
    let g = rat(8) * (rat(1) + alpha).pow(2 * k as i32);
    let gk1 = g.pow(k as i32 - 1);
    let kk = rat(k as i64);
    Ok(KcnfConstants {
        k,
        c1_log2_lower: -(rat(2) * &kk * &kk * &gk1),
        c2: rat(2) * &gk1,
        c3: g.pow(k as i32),
        c4: rat(2) * (rat(1) + alpha).pow(k as i32) * gk1,
    })
}

/// One unrolling of the dominating recurrence from `C3' = (8 / eta^2)^(k-1)`
/// at `eta = (1 + alpha)^-k`; agrees with [`kcnf_constants`] for `k >= 2`.
pub fn kcnf_constants_unrolled(k: u32, alpha: &BigRational) -> Result<KcnfConstants> {
    check_kcnf(k, alpha)?;
    if k == 1 {
        return Ok(base_case(alpha));
    }
    let eta = eta_for(k, alpha);
    let g = rat(8) / (&eta * &eta);
    let c3p = g.pow(k as i32 - 1);
    let kk = rat(k as i64);
    Ok(KcnfConstants {
        k,
        c1_log2_lower: -(rat(2) * &kk * &kk * &c3p),
        c2: rat(2) * &c3p,
        c3: &g * &c3p,
        c4: rat(2) / &eta * c3p,
    })
}

/// The original recurrence from the base case, with `eta = (1 + alpha)^-j`
/// at level `j`.
pub fn kcnf_recurrence(k: u32, alpha: &BigRational) -> Result<KcnfConstants> {
    check_kcnf(k, alpha)?;
    let mut c = base_case(alpha);
    for j in 2..=k {
        let eta = eta_for(j, alpha);
        let m = if c.c2 > c.c3 {
            c.c2.clone()
        } else {
            c.c3.clone()
        };
        let sum = &c.c2 + &c.c3;
        c = KcnfConstants {
            k: j,
            c1_log2_lower: &c.c1_log2_lower - rat(j as i64) * &sum,
            c2: sum,
            c3: rat(8) / (&eta * &eta) * &m,
            c4: rat(2) / &eta * m,
        };
    }
    Ok(c)
}

impl Serialize for KcnfConstants {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("KcnfConstants", 5)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("c1_log2_lower", &self.c1_log2_lower.to_string())?;
        st.serialize_field("c2", &self.c2.to_string())?;
        st.serialize_field("c3", &self.c3.to_string())?;
        st.serialize_field("c4", &self.c4.to_string())?;
        st.end()
    }
}

impl KcnfConstants {
    /// Whether every constant is at least as demanding as in `other`.
    pub fn dominates(&self, other: &KcnfConstants) -> bool {
        self.c1_log2_lower <= other.c1_log2_lower
            && self.c2 >= other.c2
            && self.c3 >= other.c3
            && self.c4 >= other.c4
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(n: usize, c: &[&[i32]]) -> CnfFormula {
        CnfFormula::new(n, c.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn strs(v: &[BitVector]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn sat_set_examples() {
        let phi = f(2, &[&[1]]);
        assert_eq!(strs(&phi.sat_set(0).unwrap()), ["10", "11"]);
        assert_eq!(phi.sat_set(1).unwrap().len(), 4);
        let unsat = f(2, &[&[1], &[-1]]);
        for rho in 0..3 {
            assert!(unsat.sat_set(rho).unwrap().is_empty());
        }
        assert!(f(21, &[&[1]]).sat_set(0).is_err());
    }

    #[test]
    fn construction_normalizes() {
        let phi = f(3, &[&[2, 1], &[1, -1], &[1, 2], &[3]]);
        assert_eq!(phi.clauses(), &[vec![3], vec![1, 2]]);
        assert_eq!(phi.dropped_tautologies(), 1);
        assert_eq!(phi.width(), 2);
        assert!(CnfFormula::new(2, vec![vec![3]]).is_err());
    }

    #[test]
    fn closure_examples() {
        let phi = f(5, &[&[1, 2, 3], &[-1, 4, 5]]);
        let cl = phi.resolution_closure(CLOSURE_CAP).unwrap();
        assert!(cl.clauses().contains(&vec![2, 3, 4, 5]));
        assert_eq!(cl.width(), 4);
        let plain = f(4, &[&[1, 2], &[3, -4], &[2, 3]]);
        assert_eq!(plain.resolution_closure(CLOSURE_CAP).unwrap(), plain);
        let two = f(4, &[&[1, 2], &[-2, 3], &[-3, -4], &[4, -1]]);
        let cl = two.resolution_closure(CLOSURE_CAP).unwrap();
        assert!(cl.width() <= 2);
        assert_eq!(cl.resolution_closure(CLOSURE_CAP).unwrap(), cl);
        let big = f(
            6,
            &[&[1, 2], &[-1, 3], &[-2, 4], &[-3, 5], &[-4, 6], &[-5, -6]],
        );
        assert!(matches!(
            big.resolution_closure(8),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn cover_examples() {
        assert_eq!(
            f(3, &[&[1, 2], &[1, 3]]).minimal_cover(COVER_CAP).unwrap(),
            [1]
        );
        assert!(f(3, &[]).minimal_cover(COVER_CAP).unwrap().is_empty());
        assert_eq!(
            f(4, &[&[1, 2], &[3, 4]])
                .minimal_cover(COVER_CAP)
                .unwrap()
                .len(),
            2
        );
        assert!(f(2, &[&[1], &[-1]])
            .resolution_closure(CLOSURE_CAP)
            .unwrap()
            .minimal_cover(COVER_CAP)
            .is_err());
    }

    #[test]
    fn matching_examples() {
        assert_eq!(
            f(4, &[&[1, 2], &[3, 4]]).variable_disjoint_matching().len(),
            2
        );
        assert_eq!(
            f(3, &[&[1, 2], &[2, 3]]).variable_disjoint_matching().len(),
            1
        );
        assert_eq!(
            f(3, &[&[1, 2], &[-2, 3]]).literal_disjoint_matching().len(),
            2
        );
        assert_eq!(
            f(3, &[&[1, 2], &[-2, 3]])
                .variable_disjoint_matching()
                .len(),
            1
        );
    }

    #[test]
    fn embed_examples() {
        let m = vec![vec![1, 2]];
        assert_eq!(
            matching_embed(&"00".parse().unwrap(), &m)
                .unwrap()
                .to_string(),
            "0"
        );
        assert_eq!(
            matching_embed(&"10".parse().unwrap(), &m)
                .unwrap()
                .to_string(),
            "1"
        );
        assert!(matching_embed(&"101".parse().unwrap(), &[vec![1, 2], vec![-2, 3]]).is_err());
    }

    #[test]
    fn discrepancy_examples() {
        let c = Concept::decision_list(3, vec![(vec![1], true), (vec![], false)]).unwrap();
        let h = Concept::decision_list(3, vec![(vec![2], true), (vec![], false)]).unwrap();
        let phi = discrepancy_formula(&c, &h, 1, 1, false).unwrap();
        assert_eq!(strs(&phi.sat_set(0).unwrap()), ["110", "111"]);
        let same = discrepancy_formula(&c, &c, 1, 1, true).unwrap();
        assert_eq!(
            strs(&same.sat_set(0).unwrap()),
            ["100", "110", "101", "111"]
        );
        assert!(discrepancy_formula(&c, &h, 3, 1, false).is_err());
    }

    #[test]
    fn dimacs_round_trip() {
        let phi = f(4, &[&[1, -2], &[3], &[-4, 2, 1]]);
        let text = phi.to_dimacs();
        assert!(text.starts_with("p cnf 4 3\n"));
        assert_eq!(CnfFormula::from_dimacs(&text).unwrap(), phi);
        let raw = CnfFormula::from_dimacs("c comment\n1 -2 0\n3 0\n").unwrap();
        assert_eq!(raw.n(), 3);
        assert!(CnfFormula::from_dimacs("p dnf 3 1\n1 0\n").is_err());
    }

    #[test]
    fn constants_base_case() {
        let c = kcnf_constants(1, &rat(1)).unwrap();
        assert!(c.c1_log2_lower.is_zero());
        assert_eq!(
            (c.c2.clone(), c.c3.clone(), c.c4.clone()),
            (rat(0), rat(16), rat(4))
        );
    }

    #[test]
    fn constants_k2() {
        let c = kcnf_constants(2, &rat(1)).unwrap();
        assert_eq!(
            (c.c2.clone(), c.c3.clone(), c.c4.clone()),
            (rat(256), rat(16384), rat(1024))
        );
        assert_eq!(c.c1_log2_lower, rat(-1024));
        assert_eq!(kcnf_constants_unrolled(2, &rat(1)).unwrap(), c);
        let r = kcnf_recurrence(2, &rat(1)).unwrap();
        assert_eq!(
            (r.c2.clone(), r.c3.clone(), r.c4.clone()),
            (rat(16), rat(2048), rat(128))
        );
        assert_eq!(r.c1_log2_lower, rat(-32));
    }

    #[test]
    fn constants_relations() {
        for k in 1..=5u32 {
            for a in [rat(1), rat(2), BigRational::new(3.into(), 2.into()), rat(7)] {
                let c = kcnf_constants(k, &a).unwrap();
                assert!(c.margin_holds(&a), "k = {k}, alpha = {a}");
                assert_eq!(kcnf_constants_unrolled(k, &a).unwrap(), c);
                assert!(c.dominates(&kcnf_recurrence(k, &a).unwrap()), "k = {k}");
                let r = kcnf_recurrence(k, &a).unwrap();
                assert!(r.c3 >= r.c2);
            }
        }
        assert!(kcnf_constants(0, &rat(1)).is_err());
        assert!(kcnf_constants(2, &BigRational::new(1.into(), 2.into())).is_err());
        let json = serde_json::to_string(&kcnf_constants(2, &rat(1)).unwrap()).unwrap();
        assert_eq!(
            json,
            r#"{"k":2,"c1_log2_lower":"-1024","c2":"256","c3":"16384","c4":"1024"}"#
        );
    }
}
