// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

//! Exact-in-the-ball robust learning on the boolean hypercube.
//!
//! The crate bundles the combinatorial substrate (bit vectors, Hamming
//! balls, distributions, concept classes, CNF formulas), the query oracles
//! and learners, brute-force dimension calculators, and a scenario harness
//! that reruns lower-bound constructions and threshold experiments at desk
//! scale.

pub mod cnf;
pub mod concepts;
pub mod dimensions;
pub mod distributions;
pub mod error;
pub mod exec;
pub mod harness;
pub mod hypercube;
pub mod learners;
pub mod oracles;
pub mod rng;
pub mod robustrisk;

pub use error::{Error, Result};
pub use hypercube::BitVector;
