// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Points of `{0,1}^n`, the Hamming metric and Hamming balls.
//!
//! Bit indices are 1-based: `x.get(1)` is the leftmost character of the
//! textual form `b1b2...bn`. Internally bit `i` lives at position `i - 1` of
//! a two-word array, so dimensions up to [`MAX_DIM`] are supported. Sweeps
//! over the whole cube are restricted to `n <= EXACT_LIMIT`; in that regime a
//! point is identified with the integer whose bit `i - 1` is `x_i`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Largest supported dimension.
pub const MAX_DIM: usize = 128;

/// Largest dimension accepted by operations that sweep the whole cube.
pub const EXACT_LIMIT: usize = 24;

/// Rejects `n` above [`EXACT_LIMIT`].
pub fn check_exact(n: usize) -> Result<()> {
    check_limit(n, EXACT_LIMIT)
}

/// Rejects `n` above `limit`.
pub fn check_limit(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        Err(Error::TooLarge { n, limit })
    } else {
        Ok(())
    }
}

/// A point of the `n`-dimensional boolean hypercube.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    n: u8,
    words: [u64; 2],
}

fn low_mask(bits: usize) -> u64 {
    if bits >= 64 {
        u64::MAX
    } else {
        (1u64 << bits) - 1
    }
}

impl BitVector {
    fn check_dim(n: usize) -> Result<()> {
        if n == 0 || n > MAX_DIM {
            Err(Error::InvalidParameter(format!(
                "dimension {n} outside 1..={MAX_DIM}"
            )))
        } else {
            Ok(())
        }
    }

    /// The all-zero vector. Panics unless `1 <= n <= MAX_DIM`.
    pub fn zeros(n: usize) -> Self {
        Self::check_dim(n).expect("valid dimension");
        // Stored as n - 1 so that 128 fits in a byte.
        BitVector {
            n: (n - 1) as u8,
            words: [0, 0],
        }
    }

    /// The all-one vector.
    pub fn ones(n: usize) -> Self {
        let mut x = Self::zeros(n);
        x.words = [low_mask(n), low_mask(n.saturating_sub(64))];
        x
    }

    /// Builds a vector from booleans, `bits[0]` being `x_1`.
    pub fn from_bits(bits: &[bool]) -> Result<Self> {
        Self::check_dim(bits.len())?;
        let mut x = Self::zeros(bits.len());
        for (k, &b) in bits.iter().enumerate() {
            if b {
                x.words[k / 64] |= 1 << (k % 64);
            }
        }
        Ok(x)
    }

    /// The point with integer code `index` (bit `i - 1` of `index` is `x_i`).
    pub fn from_index(n: usize, index: u64) -> Self {
        debug_assert!(n <= 64 && (n == 64 || index >> n == 0));
        let mut x = Self::zeros(n);
        x.words[0] = index;
        x
    }

    /// The integer code of a point with `n <= 64`.
    pub fn index(&self) -> u64 {
        debug_assert!(self.n() <= 64);
        self.words[0]
    }

    /// Builds a vector with ones exactly at the given 1-based indices.
    pub fn from_ones(n: usize, ones: &[usize]) -> Result<Self> {
        let mut x = Self::zeros(n);
        for &i in ones {
            x.set(i, true)?;
        }
        Ok(x)
    }

    /// The unit vector `e_i`.
    pub fn unit(n: usize, i: usize) -> Result<Self> {
        Self::from_ones(n, &[i])
    }

    pub fn n(&self) -> usize {
        self.n as usize + 1
    }

    pub fn words(&self) -> [u64; 2] {
        self.words
    }

    pub fn from_words(n: usize, words: [u64; 2]) -> Self {
        let mut x = Self::zeros(n);
        x.words = [
            words[0] & low_mask(n),
            words[1] & low_mask(n.saturating_sub(64)),
        ];
        x
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.n() {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// `x_i` with a bounds check.
    pub fn bit(&self, i: usize) -> Result<bool> {
        self.check_index(i)?;
        Ok(self.get(i))
    }

    /// `x_i`; `i` must lie in `1..=n`.
    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i >= 1 && i <= self.n());
        let k = i - 1;
        (self.words[k / 64] >> (k % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, value: bool) -> Result<()> {
        self.check_index(i)?;
        let k = i - 1;
        if value {
            self.words[k / 64] |= 1 << (k % 64);
        } else {
            self.words[k / 64] &= !(1 << (k % 64));
        }
        Ok(())
    }

    /// `x` with bit `i` negated, without a bounds check.
    #[inline]
    pub fn flipped(&self, i: usize) -> Self {
        debug_assert!(i >= 1 && i <= self.n());
        let k = i - 1;
        let mut z = *self;
        z.words[k / 64] ^= 1 << (k % 64);
        z
    }

    /// Number of ones.
    pub fn weight(&self) -> usize {
        (self.words[0].count_ones() + self.words[1].count_ones()) as usize
    }

    pub fn xor(&self, other: &Self) -> Self {
        let mut z = *self;
        z.words[0] ^= other.words[0];
        z.words[1] ^= other.words[1];
        z
    }

    pub fn and(&self, other: &Self) -> Self {
        let mut z = *self;
        z.words[0] &= other.words[0];
        z.words[1] &= other.words[1];
        z
    }

    pub fn or(&self, other: &Self) -> Self {
        let mut z = *self;
        z.words[0] |= other.words[0];
        z.words[1] |= other.words[1];
        z
    }

    /// Bitwise complement within the dimension.
    pub fn complement(&self) -> Self {
        self.xor(&Self::ones(self.n()))
    }

    /// 1-based indices of the ones, ascending.
    pub fn ones_indices(&self) -> Vec<usize> {
        (1..=self.n()).filter(|&i| self.get(i)).collect()
    }

    /// Bits as booleans, `x_1` first.
    pub fn to_bools(&self) -> Vec<bool> {
        (1..=self.n()).map(|i| self.get(i)).collect()
    }

    /// Hamming distance between two vectors of equal dimension.
    #[inline]
    pub fn distance(&self, other: &Self) -> usize {
        debug_assert_eq!(self.n, other.n);
        self.xor(other).weight()
    }
}

/// Hamming distance, rejecting mismatched dimensions.
pub fn hamming_distance(x: &BitVector, y: &BitVector) -> Result<usize> {
    if x.n() != y.n() {
        return Err(Error::DimensionMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    Ok(x.distance(y))
}

/// `x` with bit `i` negated, `1 <= i <= n`.
pub fn flip(x: &BitVector, i: usize) -> Result<BitVector> {
    x.check_index(i)?;
    Ok(x.flipped(i))
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (1..=self.n())
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

impl FromStr for BitVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("bad bit {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<bool>>>()?;
        BitVector::from_bits(&bits)
    }
}

impl Serialize for BitVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for BitVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Binomial coefficient `C(n, k)`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
    }
    acc
}

/// `|B_rho(x)|` in dimension `n`, with `rho` clamped to `n`.
pub fn ball_size(n: usize, rho: usize) -> u128 {
    (0..=rho.min(n)).map(|i| binomial(n, i)).sum()
}

/// Lazy enumeration of a Hamming ball.
///
/// Points come in nondecreasing distance from the center; points at equal
/// distance are ordered by their flip sets compared lexicographically as
/// ascending index lists. A radius above `n` is clamped to `n`.
#[derive(Clone, Debug)]
pub struct Ball {
    center: BitVector,
    rho: usize,
    radius: usize,
    combo: Vec<usize>,
    done: bool,
}

/// Enumerates `B_rho(x)`.
pub fn ball(x: &BitVector, rho: usize) -> Ball {
    Ball {
        center: *x,
        rho: rho.min(x.n()),
        radius: 0,
        combo: Vec::new(),
        done: false,
    }
}

impl Ball {
    fn advance(&mut self) {
        let n = self.center.n();
        let r = self.radius;
        // Next r-combination of 1..=n in lexicographic order.
        let mut k = r;
        while k > 0 {
            let pos = k - 1;
            if self.combo[pos] < n - (r - 1 - pos) {
                self.combo[pos] += 1;
                for q in pos + 1..r {
                    self.combo[q] = self.combo[q - 1] + 1;
                }
                return;
            }
            k -= 1;
        }
        self.radius += 1;
        if self.radius > self.rho {
            self.done = true;
        } else {
            self.combo = (1..=self.radius).collect();
        }
    }
}

impl Iterator for Ball {
    type Item = BitVector;

    fn next(&mut self) -> Option<BitVector> {
        if self.done {
            return None;
        }
        let mut z = self.center;
        for &i in &self.combo {
            z = z.flipped(i);
        }
        self.advance();
        Some(z)
    }
}

/// Flip masks of `B_rho(0)` in ball order, as integer codes (`n <= 24`).
pub fn ball_masks(n: usize, rho: usize) -> Result<Vec<u32>> {
    check_exact(n)?;
    Ok(ball(&BitVector::zeros(n), rho)
        .map(|z| z.index() as u32)
        .collect())
}

/// All points of `{0,1}^n` in integer-code order (`n <= 24`).
pub fn all_points(n: usize) -> Result<impl Iterator<Item = BitVector>> {
    check_exact(n)?;
    Ok((0..1u64 << n).map(move |i| BitVector::from_index(n, i)))
}

/// Bit sets over `0..len`, stored as `u64` words.
pub mod bits {
    /// Number of words needed for `len` bits.
    pub fn words_for(len: usize) -> usize {
        len.div_ceil(64)
    }

    pub fn empty(len: usize) -> Vec<u64> {
        vec![0; words_for(len)]
    }

    pub fn full(len: usize) -> Vec<u64> {
        let mut v = vec![u64::MAX; words_for(len)];
        if !len.is_multiple_of(64) {
            if let Some(last) = v.last_mut() {
                *last = (1u64 << (len % 64)) - 1;
            }
        }
        v
    }

    #[inline]
    pub fn get(set: &[u64], i: usize) -> bool {
        (set[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(set: &mut [u64], i: usize) {
        set[i / 64] |= 1 << (i % 64);
    }

    pub fn count(set: &[u64]) -> usize {
        set.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(set: &[u64]) -> bool {
        set.iter().all(|&w| w == 0)
    }

    /// Indices of set bits, ascending.
    pub fn iter(set: &[u64]) -> impl Iterator<Item = usize> + '_ {
        set.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + t)
                }
            })
        })
    }

    /// Multi-source breadth-first distances on `{0,1}^n` from the set bits of
    /// `sources`, capped at `cap + 1` (`u8::MAX` marks unreachable within cap).
    pub fn distances(n: usize, sources: &[u64], cap: usize) -> Vec<u8> {
        let size = 1usize << n;
        let mut dist = vec![u8::MAX; size];
        let mut frontier: Vec<u32> = Vec::new();
        for i in iter(sources) {
            dist[i] = 0;
            frontier.push(i as u32);
        }
        let mut level = 0usize;
        while !frontier.is_empty() && level < cap {
            level += 1;
            let mut next = Vec::new();
            for &v in &frontier {
                for b in 0..n {
                    let u = (v ^ (1 << b)) as usize;
                    if dist[u] == u8::MAX {
                        dist[u] = level as u8;
                        next.push(u as u32);
                    }
                }
            }
            frontier = next;
        }
        dist
    }

    /// The `rho`-expansion of `set` on `{0,1}^n`: all points within Hamming
    /// distance `rho` of some member.
    pub fn dilate(n: usize, set: &[u64], rho: usize) -> Vec<u64> {
        let size = 1usize << n;
        let dist = distances(n, set, rho);
        let mut out = empty(size);
        for (i, &d) in dist.iter().enumerate() {
            if (d as usize) <= rho {
                super::bits::set(&mut out, i);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(hamming_distance(&bv("0000"), &bv("0000")).unwrap(), 0);
        assert_eq!(hamming_distance(&bv("101"), &bv("010")).unwrap(), 3);
        assert!(matches!(
            hamming_distance(&bv("10"), &bv("101")),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn flip_examples() {
        assert_eq!(flip(&bv("000"), 1).unwrap(), bv("100"));
        assert_eq!(flip(&bv("111"), 3).unwrap(), bv("110"));
        let x = bv("10110");
        assert_eq!(flip(&flip(&x, 4).unwrap(), 4).unwrap(), x);
        assert!(flip(&x, 0).is_err());
        assert!(flip(&x, 6).is_err());
    }

    #[test]
    fn ball_examples() {
        let b: Vec<String> = ball(&bv("000"), 0).map(|z| z.to_string()).collect();
        assert_eq!(b, ["000"]);
        let b: Vec<String> = ball(&bv("000"), 1).map(|z| z.to_string()).collect();
        assert_eq!(b, ["000", "100", "010", "001"]);
        assert_eq!(ball(&bv("10110"), 2).count(), 16);
        assert_eq!(ball(&bv("101"), 7).count(), 8);
    }

    #[test]
    fn ball_order_within_radius_two() {
        let b: Vec<String> = ball(&bv("0000"), 2)
            .skip(5)
            .map(|z| z.to_string())
            .collect();
        assert_eq!(b, ["1100", "1010", "1001", "0110", "0101", "0011"]);
    }

    #[test]
    fn textual_form_round_trip() {
        let x = bv("0110100");
        assert_eq!(x.to_string(), "0110100");
        assert!(x.get(2) && x.get(3) && x.get(5) && !x.get(1));
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "\"0110100\"");
        assert_eq!(serde_json::from_str::<BitVector>(&json).unwrap(), x);
        assert!("01a".parse::<BitVector>().is_err());
        assert!("".parse::<BitVector>().is_err());
    }

    #[test]
    fn wide_vectors() {
        let mut x = BitVector::zeros(128);
        x.set(128, true).unwrap();
        x.set(1, true).unwrap();
        assert_eq!(x.weight(), 2);
        assert_eq!(BitVector::ones(100).weight(), 100);
        assert_eq!(BitVector::ones(128).complement(), BitVector::zeros(128));
        assert_eq!(ball(&x, 1).count(), 129);
    }

    #[test]
    fn index_codes() {
        let x = BitVector::from_index(3, 0b001);
        assert_eq!(x.to_string(), "100");
        assert_eq!(bv("011").index(), 0b110);
        assert_eq!(all_points(3).unwrap().count(), 8);
        assert!(all_points(25).is_err());
    }

    #[test]
    fn dilation_matches_ball() {
        let n = 5;
        let mut set = bits::empty(32);
        bits::set(&mut set, 0b00101);
        bits::set(&mut set, 0b11000);
        let d = bits::dilate(n, &set, 2);
        for i in 0..32u64 {
            let x = BitVector::from_index(n, i);
            let near = [0b00101u64, 0b11000]
                .iter()
                .any(|&c| x.distance(&BitVector::from_index(n, c)) <= 2);
            assert_eq!(bits::get(&d, i as usize), near);
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(64, 32), 1_832_624_140_942_590_534);
        assert_eq!(ball_size(5, 2), 16);
        assert_eq!(ball_size(3, 9), 8);
    }
}
