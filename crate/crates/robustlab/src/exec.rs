// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Data-parallel execution with a sequential fallback.
//!
//! With the `parallel` feature (on by default) trial loops and sweeps run on
//! a rayon pool; without it, or with [`Exec::Sequential`], they run in order.
//! Results are always collected in index order so reductions are identical
//! under both modes.

use std::sync::OnceLock;

/// Environment variable that overrides the worker count.
pub const WORKERS_ENV: &str = "ROBUSTLAB_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

#[cfg(feature = "parallel")]
fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(k) = worker_override() {
            builder = builder.num_threads(k);
        }
        builder.build().expect("rayon pool")
    })
}

/// Worker count requested through [`WORKERS_ENV`], if any.
pub fn worker_override() -> Option<usize> {
    static VALUE: OnceLock<Option<usize>> = OnceLock::new();
    *VALUE.get_or_init(|| {
        std::env::var(WORKERS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&k| k > 0)
    })
}

impl Exec {
    /// Maps `f` over `0..len`, returning results in index order.
    pub fn map<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                pool().install(|| (0..len).into_par_iter().map(&f).collect())
            }
            _ => (0..len).map(f).collect(),
        }
    }

    /// Sums `f` over `0..len` in chunks of `chunk`, adding chunk totals in
    /// index order.
    pub fn sum_chunks<F>(self, len: usize, chunk: usize, f: F) -> f64
    where
        F: Fn(std::ops::Range<usize>) -> f64 + Sync + Send,
    {
        let chunk = chunk.max(1);
        let parts = len.div_ceil(chunk);
        self.map(parts, |p| f(p * chunk..((p + 1) * chunk).min(len)))
            .into_iter()
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let f = |i: usize| (i as f64).sqrt();
        assert_eq!(Exec::Sequential.map(1000, f), Exec::Parallel.map(1000, f));
        let s = Exec::Sequential.sum_chunks(1000, 37, |r| r.map(f).sum());
        let p = Exec::Parallel.sum_chunks(1000, 37, |r| r.map(f).sum());
        assert_eq!(s.to_bits(), p.to_bits());
    }
}
