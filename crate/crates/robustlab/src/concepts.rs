// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Concept classes on `{0,1}^n`.
//!
//! Literals are signed 1-based indices: `+i` is `x_i`, `-i` is its negation.
//! Literal sets are kept sorted by the key `(|l|, l < 0)`, so `x_1` precedes
//! `!x_1` which precedes `x_2`. An empty term is the constant true.
//!
//! JSON descriptors carry a `kind` tag:
//!
//! ```json
//! {"kind":"mon_conj","n":8,"indices":[1,4,7]}
//! {"kind":"conj","n":3,"literals":[1,-3]}
//! {"kind":"decision_list","n":3,"k":1,"nodes":[{"term":[1],"value":false},{"term":[],"value":true}]}
//! {"kind":"decision_tree","n":2,"root":{"var":1,"zero":false,"one":{"var":2,"zero":false,"one":true}}}
//! {"kind":"ltf_bool","n":2,"weights":[1,1],"bias":-2,"budget":4}
//! ```

use std::cmp::Ordering;
use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};
use crate::exec::Exec;
use crate::hypercube::{binomial, bits, check_exact, BitVector, MAX_DIM};

/// Anything that labels points of the cube.
pub trait Hypothesis {
    fn dim(&self) -> usize;
    fn predict(&self, x: &BitVector) -> bool;

    /// JSON description for transcripts.
    fn describe(&self) -> serde_json::Value {
        serde_json::Value::Null
    }
}

/// Canonical literal order.
pub fn literal_cmp(a: &i32, b: &i32) -> Ordering {
    (a.unsigned_abs(), *a < 0).cmp(&(b.unsigned_abs(), *b < 0))
}

/// Sorts and deduplicates a literal set in canonical order.
pub fn canonical_literals(mut lits: Vec<i32>) -> Vec<i32> {
    lits.sort_by(literal_cmp);
    lits.dedup();
    lits
}

#[inline]
pub fn literal_holds(x: &BitVector, l: i32) -> bool {
    x.get(l.unsigned_abs() as usize) == (l > 0)
}

/// Whether `x` satisfies every literal of `term`.
#[inline]
pub fn term_holds(x: &BitVector, term: &[i32]) -> bool {
    term.iter().all(|&l| literal_holds(x, l))
}

fn check_literals(n: usize, lits: &[i32]) -> Result<()> {
    for &l in lits {
        let i = l.unsigned_abs() as usize;
        if l == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
    }
    let set: BTreeSet<i32> = lits.iter().copied().collect();
    if set.len() != lits.len() {
        return Err(invalid(format!("repeated literal in {lits:?}")));
    }
    if lits.iter().any(|l| set.contains(&-l)) {
        return Err(invalid(format!("complementary literals in {lits:?}")));
    }
    Ok(())
}

fn check_indices(n: usize, idx: &[usize]) -> Result<()> {
    for &i in idx {
        if i == 0 || i > n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
    }
    if idx.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid(format!(
            "index set {idx:?} must be strictly increasing"
        )));
    }
    Ok(())
}

/// One node of a decision list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DlNode {
    pub term: Vec<i32>,
    pub value: bool,
}

/// A binary decision tree; leaves are plain booleans in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Tree {
    Leaf(bool),
    Node {
        var: usize,
        zero: Box<Tree>,
        one: Box<Tree>,
    },
}

impl Tree {
    pub fn node(var: usize, zero: Tree, one: Tree) -> Tree {
        Tree::Node {
            var,
            zero: Box::new(zero),
            one: Box::new(one),
        }
    }

    /// Label and level (root leaf is level 1) of the leaf reached by `x`.
    pub fn route(&self, x: &BitVector) -> (bool, usize) {
        let mut t = self;
        let mut level = 1;
        loop {
            match t {
                Tree::Leaf(v) => return (*v, level),
                Tree::Node { var, zero, one } => {
                    t = if x.get(*var) { one } else { zero };
                    level += 1;
                }
            }
        }
    }

    fn validate(&self, n: usize, path: &mut Vec<usize>) -> Result<()> {
        match self {
            Tree::Leaf(_) => Ok(()),
            Tree::Node { var, zero, one } => {
                if *var == 0 || *var > n {
                    return Err(Error::IndexOutOfRange { index: *var, n });
                }
                if path.contains(var) {
                    return Err(invalid(format!("variable {var} tested twice on a path")));
                }
                path.push(*var);
                zero.validate(n, path)?;
                one.validate(n, path)?;
                path.pop();
                Ok(())
            }
        }
    }

    /// Number of internal nodes.
    pub fn internal_nodes(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node { zero, one, .. } => 1 + zero.internal_nodes() + one.internal_nodes(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Tree::Leaf(_) => 0,
            Tree::Node { zero, one, .. } => 1 + zero.depth().max(one.depth()),
        }
    }
}

/// A member of one of the implemented concept classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    remote = "Self",
    tag = "kind",
    rename_all = "snake_case",
    deny_unknown_fields
)]
pub enum Concept {
    /// Conjunction of the positive literals `x_i`, `i` in `indices`.
    #[serde(rename = "mon_conj")]
    MonotoneConjunction {
        n: usize,
        indices: Vec<usize>,
    },
    /// Conjunction of signed literals without complementary pairs.
    #[serde(rename = "conj")]
    Conjunction {
        n: usize,
        literals: Vec<i32>,
    },
    Parity {
        n: usize,
        indices: Vec<usize>,
    },
    /// Majority vote over an odd-sized index set.
    Majority {
        n: usize,
        indices: Vec<usize>,
    },
    /// First node whose term holds decides the label; the last term is empty.
    DecisionList {
        n: usize,
        k: usize,
        nodes: Vec<DlNode>,
    },
    DecisionTree {
        n: usize,
        root: Tree,
    },
    /// `1[w . x + bias >= 0]` with `sum |w_i| + |bias| <= budget`.
    LtfBool {
        n: usize,
        weights: Vec<i64>,
        bias: i64,
        budget: u64,
    },
    Singleton {
        point: BitVector,
    },
    /// `x_index` when `positive`, otherwise its negation.
    Dictator {
        n: usize,
        index: usize,
        positive: bool,
    },
    Constant {
        n: usize,
        value: bool,
    },
}

impl Serialize for Concept {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        Concept::serialize(self, s)
    }
}

impl<'de> Deserialize<'de> for Concept {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let c = Concept::deserialize(d)?;
        c.validate().map_err(serde::de::Error::custom)?;
        Ok(c)
    }
}

impl Concept {
    pub fn mon_conj(n: usize, indices: &[usize]) -> Result<Self> {
        let mut indices = indices.to_vec();
        indices.sort_unstable();
        indices.dedup();
        checked(Concept::MonotoneConjunction { n, indices })
    }

    /// A conjunction; literals are put in canonical order.
    pub fn conj(n: usize, literals: &[i32]) -> Result<Self> {
        checked(Concept::Conjunction {
            n,
            literals: canonical_literals(literals.to_vec()),
        })
    }

    pub fn parity(n: usize, indices: &[usize]) -> Result<Self> {
        let mut indices = indices.to_vec();
        indices.sort_unstable();
        indices.dedup();
        checked(Concept::Parity { n, indices })
    }

    pub fn majority(n: usize, indices: &[usize]) -> Result<Self> {
        let mut indices = indices.to_vec();
        indices.sort_unstable();
        indices.dedup();
        checked(Concept::Majority { n, indices })
    }

    /// A decision list from `(term, value)` pairs; terms are canonicalized
    /// and `k` is the longest term length.
    pub fn decision_list(n: usize, nodes: Vec<(Vec<i32>, bool)>) -> Result<Self> {
        let nodes: Vec<DlNode> = nodes
            .into_iter()
            .map(|(t, value)| DlNode {
                term: canonical_literals(t),
                value,
            })
            .collect();
        let k = nodes.iter().map(|d| d.term.len()).max().unwrap_or(0).max(1);
        checked(Concept::DecisionList { n, k, nodes })
    }

    pub fn decision_tree(n: usize, root: Tree) -> Result<Self> {
        checked(Concept::DecisionTree { n, root })
    }

    pub fn ltf_bool(weights: Vec<i64>, bias: i64, budget: u64) -> Result<Self> {
        checked(Concept::LtfBool {
            n: weights.len(),
            weights,
            bias,
            budget,
        })
    }

    pub fn dictator(n: usize, index: usize, positive: bool) -> Result<Self> {
        checked(Concept::Dictator { n, index, positive })
    }

    pub fn constant(n: usize, value: bool) -> Self {
        Concept::Constant { n, value }
    }

    pub fn singleton(point: BitVector) -> Self {
        Concept::Singleton { point }
    }

    pub fn n(&self) -> usize {
        match self {
            Concept::MonotoneConjunction { n, .. }
            | Concept::Conjunction { n, .. }
            | Concept::Parity { n, .. }
            | Concept::Majority { n, .. }
            | Concept::DecisionList { n, .. }
            | Concept::DecisionTree { n, .. }
            | Concept::LtfBool { n, .. }
            | Concept::Dictator { n, .. }
            | Concept::Constant { n, .. } => *n,
            Concept::Singleton { point } => point.n(),
        }
    }

    /// Checks the structural invariants of the variant.
    pub fn validate(&self) -> Result<()> {
        let n = self.n();
        if n == 0 || n > MAX_DIM {
            return Err(invalid(format!("dimension {n} unsupported")));
        }
        match self {
            Concept::MonotoneConjunction { indices, .. } | Concept::Parity { indices, .. } => {
                check_indices(n, indices)
            }
            Concept::Majority { indices, .. } => {
                check_indices(n, indices)?;
                if indices.len() % 2 == 0 {
                    return Err(invalid("majority needs an odd number of indices"));
                }
                Ok(())
            }
            Concept::Conjunction { literals, .. } => {
                check_literals(n, literals)?;
                if canonical_literals(literals.clone()) != *literals {
                    return Err(invalid("conjunction literals not in canonical order"));
                }
                Ok(())
            }
            Concept::DecisionList { k, nodes, .. } => {
                if nodes.is_empty() {
                    return Err(invalid("decision list has no nodes"));
                }
                for node in nodes {
                    check_literals(n, &node.term)?;
                    if node.term.len() > *k {
                        return Err(invalid(format!(
                            "term {:?} longer than width {k}",
                            node.term
                        )));
                    }
                }
                check_minimal(n, nodes)
            }
            Concept::DecisionTree { root, .. } => root.validate(n, &mut Vec::new()),
            Concept::LtfBool {
                weights,
                bias,
                budget,
                ..
            } => {
                let total: u64 =
                    weights.iter().map(|w| w.unsigned_abs()).sum::<u64>() + bias.unsigned_abs();
                if total > *budget {
                    return Err(invalid(format!(
                        "weight total {total} exceeds budget {budget}"
                    )));
                }
                Ok(())
            }
            Concept::Dictator { index, .. } => {
                if *index == 0 || *index > n {
                    return Err(Error::IndexOutOfRange { index: *index, n });
                }
                Ok(())
            }
            Concept::Singleton { .. } | Concept::Constant { .. } => Ok(()),
        }
    }

    /// Label of `x`, without a dimension check.
    pub fn eval(&self, x: &BitVector) -> bool {
        match self {
            Concept::MonotoneConjunction { indices, .. } => indices.iter().all(|&i| x.get(i)),
            Concept::Conjunction { literals, .. } => term_holds(x, literals),
            Concept::Parity { indices, .. } => {
                indices.iter().filter(|&&i| x.get(i)).count() % 2 == 1
            }
            Concept::Majority { indices, .. } => {
                2 * indices.iter().filter(|&&i| x.get(i)).count() > indices.len()
            }
            Concept::DecisionList { nodes, .. } => nodes
                .iter()
                .find(|d| term_holds(x, &d.term))
                .is_some_and(|d| d.value),
            Concept::DecisionTree { root, .. } => root.route(x).0,
            Concept::LtfBool { weights, bias, .. } => {
                let s: i64 = weights
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| x.get(k + 1))
                    .map(|(_, w)| w)
                    .sum();
                s + bias >= 0
            }
            Concept::Singleton { point } => x == point,
            Concept::Dictator {
                index, positive, ..
            } => x.get(*index) == *positive,
            Concept::Constant { value, .. } => *value,
        }
    }

    /// Label of `x`, rejecting a dimension mismatch.
    pub fn evaluate(&self, x: &BitVector) -> Result<bool> {
        if x.n() != self.n() {
            return Err(Error::DimensionMismatch {
                left: x.n(),
                right: self.n(),
            });
        }
        Ok(self.eval(x))
    }

    /// Representation size: literal count for conjunctions, index count for
    /// parities and majorities, nodes plus literals for decision lists,
    /// internal nodes for trees, nonzero weights for threshold functions.
    pub fn size(&self) -> usize {
        match self {
            Concept::MonotoneConjunction { indices, .. }
            | Concept::Parity { indices, .. }
            | Concept::Majority { indices, .. } => indices.len(),
            Concept::Conjunction { literals, .. } => literals.len(),
            Concept::DecisionList { nodes, .. } => {
                nodes.len() + nodes.iter().map(|d| d.term.len()).sum::<usize>()
            }
            Concept::DecisionTree { root, .. } => root.internal_nodes(),
            Concept::LtfBool { weights, .. } => weights.iter().filter(|&&w| w != 0).count(),
            Concept::Singleton { point } => point.n(),
            Concept::Dictator { .. } => 1,
            Concept::Constant { .. } => 0,
        }
    }

    /// The concept as a conjunction of literals, if it is one. The second
    /// component is `false` for the unsatisfiable conjunction.
    pub fn as_conjunction(&self) -> Option<(Vec<i32>, bool)> {
        match self {
            Concept::MonotoneConjunction { indices, .. } => {
                Some((indices.iter().map(|&i| i as i32).collect(), true))
            }
            Concept::Conjunction { literals, .. } => Some((literals.clone(), true)),
            Concept::Dictator {
                index, positive, ..
            } => {
                let l = *index as i32;
                Some((vec![if *positive { l } else { -l }], true))
            }
            Concept::Singleton { point } => Some((
                (1..=point.n())
                    .map(|i| if point.get(i) { i as i32 } else { -(i as i32) })
                    .collect(),
                true,
            )),
            Concept::Constant { value, .. } => Some((Vec::new(), *value)),
            _ => None,
        }
    }

    /// Labels of all `2^n` points as a bit set indexed by integer code.
    pub fn truth_table(&self) -> Result<Vec<u64>> {
        truth_table_of(self.n(), |x| self.eval(x))
    }

    /// Node (decision lists, 1-based) or leaf level (trees, root leaf = 1)
    /// activated by `x`.
    pub fn activation_depth(&self, x: &BitVector) -> Option<usize> {
        match self {
            Concept::DecisionList { nodes, .. } => nodes
                .iter()
                .position(|d| term_holds(x, &d.term))
                .map(|p| p + 1),
            Concept::DecisionTree { root, .. } => Some(root.route(x).1),
            _ => None,
        }
    }
}

fn checked(c: Concept) -> Result<Concept> {
    c.validate()?;
    Ok(c)
}

impl Hypothesis for Concept {
    fn dim(&self) -> usize {
        self.n()
    }

    fn predict(&self, x: &BitVector) -> bool {
        self.eval(x)
    }

    fn describe(&self) -> serde_json::Value {
        serde_json::to_value(self).unwrap_or_default()
    }
}

/// Truth table of an arbitrary labeling (`n <= 24`).
pub fn truth_table_of<F>(n: usize, f: F) -> Result<Vec<u64>>
where
    F: Fn(&BitVector) -> bool + Sync + Send,
{
    check_exact(n)?;
    let size = 1usize << n;
    let words = bits::words_for(size);
    Ok(Exec::default().map(words, |w| {
        let mut word = 0u64;
        for b in 0..64.min(size - 64 * w) {
            if f(&BitVector::from_index(n, (64 * w + b) as u64)) {
                word |= 1 << b;
            }
        }
        word
    }))
}

/// Every node must fire on some point and the last term must be empty.
/// Checked by brute force over the variables the list mentions.
fn check_minimal(n: usize, nodes: &[DlNode]) -> Result<()> {
    if !nodes.last().is_some_and(|d| d.term.is_empty()) {
        return Err(invalid("decision list must end with the empty term"));
    }
    let mut seen = BTreeSet::new();
    for d in nodes {
        if !seen.insert(d.term.clone()) {
            return Err(invalid(format!("term {:?} appears twice", d.term)));
        }
    }
    let vars: BTreeSet<usize> = nodes
        .iter()
        .flat_map(|d| d.term.iter().map(|l| l.unsigned_abs() as usize))
        .collect();
    let vars: Vec<usize> = vars.into_iter().collect();
    if vars.len() > 20 {
        return Err(Error::TooLarge {
            n: vars.len(),
            limit: 20,
        });
    }
    let mut fired = vec![false; nodes.len()];
    for code in 0u64..1 << vars.len() {
        let mut x = BitVector::zeros(n);
        for (j, &v) in vars.iter().enumerate() {
            if code >> j & 1 == 1 {
                x.set(v, true)?;
            }
        }
        if let Some(p) = nodes.iter().position(|d| term_holds(&x, &d.term)) {
            fired[p] = true;
        }
    }
    if let Some(p) = fired.iter().position(|f| !f) {
        return Err(invalid(format!(
            "decision list node {} is unreachable",
            p + 1
        )));
    }
    Ok(())
}

/// Exact influence `Pr_x[c(x) != c(x with bit i flipped)]` under uniform.
pub fn influence(c: &Concept, i: usize) -> Result<f64> {
    let n = c.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let t = c.truth_table()?;
    let mask = 1usize << (i - 1);
    let pivotal = (0..1usize << n)
        .filter(|&x| x & mask == 0 && bits::get(&t, x) != bits::get(&t, x | mask))
        .count();
    Ok(2.0 * pivotal as f64 / (1u64 << n) as f64)
}

/// Exact degree-one Fourier coefficient in the `b -> (-1)^b` encoding of
/// both inputs and labels.
pub fn fourier_singleton(c: &Concept, i: usize) -> Result<f64> {
    let n = c.n();
    if i == 0 || i > n {
        return Err(Error::IndexOutOfRange { index: i, n });
    }
    let t = c.truth_table()?;
    let mask = 1usize << (i - 1);
    let agree = (0..1usize << n)
        .filter(|&x| bits::get(&t, x) == (x & mask != 0))
        .count() as i64;
    let total = 1i64 << n;
    Ok((2 * agree - total) as f64 / total as f64)
}

/// Every conjunction of `1..=k` literals over `n` variables, ordered by
/// length and then lexicographically in canonical literal order.
pub fn dl_terms(n: usize, k: usize) -> Vec<Vec<i32>> {
    let lits: Vec<i32> = (1..=n as i32).flat_map(|i| [i, -i]).collect();
    let mut out = Vec::new();
    for len in 1..=k.min(n) {
        let mut cur = Vec::with_capacity(len);
        push_terms(&lits, 0, len, &mut cur, &mut out);
    }
    out
}

fn push_terms(lits: &[i32], from: usize, len: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
    if cur.len() == len {
        out.push(cur.clone());
        return;
    }
    for p in from..lits.len() {
        let l = lits[p];
        if cur.iter().any(|c| c.unsigned_abs() == l.unsigned_abs()) {
            continue;
        }
        cur.push(l);
        push_terms(lits, p + 1, len, cur, out);
        cur.pop();
    }
}

/// Number of coordinates of the width-`k` embedding.
pub fn dl_embed_dim(n: usize, k: usize) -> u128 {
    (1..=k.min(n)).map(|j| binomial(n, j) << j).sum()
}

fn check_embed(n: usize, k: usize) -> Result<()> {
    let d = dl_embed_dim(n, k);
    if d > MAX_DIM as u128 {
        return Err(Error::BudgetExceeded {
            what: format!("embedding of width {k} at n = {n}"),
            count: d,
            limit: MAX_DIM as u128,
        });
    }
    Ok(())
}

/// Truth values of every term of [`dl_terms`] at `x`.
pub fn dl_embed(x: &BitVector, k: usize) -> Result<BitVector> {
    check_embed(x.n(), k)?;
    let terms = dl_terms(x.n(), k);
    let bits: Vec<bool> = terms.iter().map(|t| term_holds(x, t)).collect();
    BitVector::from_bits(&bits)
}

/// The 1-decision list on the embedded coordinates that computes the same
/// function as the width-`k` list `c` through [`dl_embed`].
pub fn dl_to_one_dl(c: &Concept) -> Result<Concept> {
    let Concept::DecisionList { n, k, nodes } = c else {
        return Err(invalid("expected a decision list"));
    };
    check_embed(*n, *k)?;
    let terms = dl_terms(*n, *k);
    let dim = terms.len();
    let mut out = Vec::new();
    for d in nodes {
        let term = if d.term.is_empty() {
            Vec::new()
        } else {
            let p = terms
                .iter()
                .position(|t| *t == d.term)
                .expect("term enumerated");
            vec![p as i32 + 1]
        };
        out.push(DlNode {
            term,
            value: d.value,
        });
    }
    Ok(Concept::DecisionList {
        n: dim,
        k: 1,
        nodes: out,
    })
}

/// Whether `c` and `h` agree on every point whose activated node or leaf
/// has depth at most `d` in both.
pub fn consistent_to_depth(c: &Concept, h: &Concept, d: usize) -> Result<bool> {
    let same_kind = matches!(
        (c, h),
        (Concept::DecisionList { .. }, Concept::DecisionList { .. })
            | (Concept::DecisionTree { .. }, Concept::DecisionTree { .. })
    );
    if !same_kind {
        return Err(invalid("consistency to depth needs two lists or two trees"));
    }
    if c.n() != h.n() {
        return Err(Error::DimensionMismatch {
            left: c.n(),
            right: h.n(),
        });
    }
    crate::hypercube::check_limit(c.n(), 20)?;
    let n = c.n();
    Ok((0..1u64 << n).all(|i| {
        let x = BitVector::from_index(n, i);
        let dc = c.activation_depth(&x).unwrap_or(usize::MAX);
        let dh = h.activation_depth(&x).unwrap_or(usize::MAX);
        dc > d || dh > d || c.eval(&x) == h.eval(&x)
    }))
}

/// Finite concept classes that can be listed exhaustively.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum ClassSpec {
    MonConj,
    /// All satisfiable literal sets plus the constant-false conjunction.
    Conj,
    Parity,
    Majority,
    /// Minimal decision lists of width `k` with at most `max_len` nodes.
    DecisionList {
        k: usize,
        max_len: usize,
    },
    /// Trees of depth at most `max_depth`.
    DecisionTree {
        max_depth: usize,
    },
    /// Integer threshold functions with `sum |w_i| + |b| <= budget` and every
    /// `|w_i| <= max_weight`.
    LtfBool {
        budget: u64,
        max_weight: u64,
    },
    Singleton,
    Dictator {
        monotone: bool,
    },
    Constant,
}

/// Number of members of the class at dimension `n`, when it has a simple
/// closed form or counting recursion.
pub fn class_size(spec: &ClassSpec, n: usize) -> Option<u128> {
    let pow2 = |e: usize| if e < 128 { Some(1u128 << e) } else { None };
    match spec {
        ClassSpec::MonConj => pow2(n).map(|v| v - 1),
        ClassSpec::Conj => 3u128.checked_pow(n as u32).map(|v| v + 1),
        ClassSpec::Parity | ClassSpec::Singleton => pow2(n),
        ClassSpec::Majority => pow2(n - 1),
        ClassSpec::Dictator { monotone } => Some(if *monotone { n } else { 2 * n } as u128),
        ClassSpec::Constant => Some(2),
        ClassSpec::DecisionTree { max_depth } => {
            let d = (*max_depth).min(n);
            let mut t = 2u128;
            for j in 1..=d {
                let vars = (n - d + j) as u128;
                t = vars.checked_mul(t.checked_mul(t)?)?.checked_add(2)?;
            }
            Some(t)
        }
        ClassSpec::LtfBool { budget, max_weight } => Some(ltf_count(n, *budget, *max_weight)),
        ClassSpec::DecisionList { .. } => None,
    }
}

fn ltf_count(n: usize, budget: u64, max_weight: u64) -> u128 {
    // ways[s] = number of weight vectors so far with total |w| = s
    let b = budget as usize;
    let mut ways = vec![0u128; b + 1];
    ways[0] = 1;
    for _ in 0..n {
        let mut next = vec![0u128; b + 1];
        for (s, &w) in ways.iter().enumerate() {
            if w == 0 {
                continue;
            }
            for a in 0..=max_weight as usize {
                if s + a > b {
                    break;
                }
                let mult = if a == 0 { 1 } else { 2 };
                next[s + a] = next[s + a].saturating_add(w * mult);
            }
        }
        ways = next;
    }
    ways.iter()
        .enumerate()
        .map(|(s, &w)| w.saturating_mul(2 * (b - s) as u128 + 1))
        .fold(0u128, |a, v| a.saturating_add(v))
}

/// Lists every member of a finite class in a fixed order, rejecting classes
/// larger than `budget`.
pub fn enumerate_class(spec: &ClassSpec, n: usize, budget: u128) -> Result<Vec<Concept>> {
    if n == 0 || n > MAX_DIM {
        return Err(invalid(format!("dimension {n} unsupported")));
    }
    let over = |count: u128| Error::BudgetExceeded {
        what: format!("{spec:?} at n = {n}"),
        count,
        limit: budget,
    };
    if let Some(count) = class_size(spec, n) {
        if count > budget {
            return Err(over(count));
        }
    } else if !matches!(spec, ClassSpec::DecisionList { .. }) {
        return Err(over(u128::MAX));
    }
    let subsets = |n: usize| {
        (0u64..1 << n).map(move |m| {
            (1..=n)
                .filter(|i| m >> (i - 1) & 1 == 1)
                .collect::<Vec<usize>>()
        })
    };
    let out = match spec {
        ClassSpec::MonConj => subsets(n)
            .skip(1)
            .map(|s| Concept::MonotoneConjunction { n, indices: s })
            .collect(),
        ClassSpec::Conj => {
            let mut out = Vec::new();
            for code in 0..3u64.pow(n as u32) {
                let mut c = code;
                let mut lits = Vec::new();
                for i in 1..=n as i32 {
                    match c % 3 {
                        1 => lits.push(i),
                        2 => lits.push(-i),
                        _ => {}
                    }
                    c /= 3;
                }
                out.push(Concept::Conjunction { n, literals: lits });
            }
            out.push(Concept::Constant { n, value: false });
            out
        }
        ClassSpec::Parity => subsets(n)
            .map(|s| Concept::Parity { n, indices: s })
            .collect(),
        ClassSpec::Majority => subsets(n)
            .filter(|s| s.len() % 2 == 1)
            .map(|s| Concept::Majority { n, indices: s })
            .collect(),
        ClassSpec::Singleton => (0..1u64 << n)
            .map(|i| Concept::Singleton {
                point: BitVector::from_index(n, i),
            })
            .collect(),
        ClassSpec::Dictator { monotone } => {
            let mut out = Vec::new();
            for index in 1..=n {
                out.push(Concept::Dictator {
                    n,
                    index,
                    positive: true,
                });
                if !monotone {
                    out.push(Concept::Dictator {
                        n,
                        index,
                        positive: false,
                    });
                }
            }
            out
        }
        ClassSpec::Constant => vec![Concept::constant(n, false), Concept::constant(n, true)],
        ClassSpec::DecisionTree { max_depth } => {
            let vars: Vec<usize> = (1..=n).collect();
            all_trees(&vars, (*max_depth).min(n))
                .into_iter()
                .map(|root| Concept::DecisionTree { n, root })
                .collect()
        }
        ClassSpec::LtfBool {
            budget: w,
            max_weight,
        } => {
            let mut out = Vec::new();
            let mut weights = vec![0i64; n];
            ltf_rec(
                n,
                0,
                *w as i64,
                *max_weight as i64,
                *w,
                &mut weights,
                &mut out,
            );
            out
        }
        ClassSpec::DecisionList { k, max_len } => {
            let mut out = Vec::new();
            let terms = dl_terms(n, *k);
            let mut nodes = Vec::new();
            dl_rec(n, *k, *max_len, &terms, &mut nodes, &mut out, budget)?;
            out
        }
    };
    Ok(out)
}

fn all_trees(vars: &[usize], depth: usize) -> Vec<Tree> {
    let mut out = vec![Tree::Leaf(false), Tree::Leaf(true)];
    if depth == 0 {
        return out;
    }
    for (p, &v) in vars.iter().enumerate() {
        let mut rest = vars.to_vec();
        rest.remove(p);
        let subs = all_trees(&rest, depth - 1);
        for z in &subs {
            for o in &subs {
                out.push(Tree::node(v, z.clone(), o.clone()));
            }
        }
    }
    out
}

fn ltf_rec(
    n: usize,
    k: usize,
    left: i64,
    max_w: i64,
    budget: u64,
    weights: &mut Vec<i64>,
    out: &mut Vec<Concept>,
) {
    if k == n {
        for bias in -left..=left {
            out.push(Concept::LtfBool {
                n,
                weights: weights.clone(),
                bias,
                budget,
            });
        }
        return;
    }
    let cap = left.min(max_w);
    for w in -cap..=cap {
        weights[k] = w;
        ltf_rec(n, k + 1, left - w.abs(), max_w, budget, weights, out);
    }
    weights[k] = 0;
}

fn dl_rec(
    n: usize,
    k: usize,
    max_len: usize,
    terms: &[Vec<i32>],
    nodes: &mut Vec<DlNode>,
    out: &mut Vec<Concept>,
    budget: u128,
) -> Result<()> {
    for value in [false, true] {
        nodes.push(DlNode {
            term: Vec::new(),
            value,
        });
        if check_minimal(n, nodes).is_ok() {
            if out.len() as u128 >= budget {
                return Err(Error::BudgetExceeded {
                    what: format!("decision lists of width {k} at n = {n}"),
                    count: budget + 1,
                    limit: budget,
                });
            }
            out.push(Concept::DecisionList {
                n,
                k: k.max(1),
                nodes: nodes.clone(),
            });
        }
        nodes.pop();
    }
    if nodes.len() + 1 >= max_len {
        return Ok(());
    }
    for t in terms {
        if nodes.iter().any(|d| d.term == *t) {
            continue;
        }
        for value in [false, true] {
            nodes.push(DlNode {
                term: t.clone(),
                value,
            });
            let mut probe = nodes.clone();
            probe.push(DlNode {
                term: Vec::new(),
                value: false,
            });
            // A prefix that already blocks some node can never be completed.
            if check_minimal(n, &probe).is_ok() {
                dl_rec(n, k, max_len, terms, nodes, out, budget)?;
            }
            nodes.pop();
        }
    }
    Ok(())
}
