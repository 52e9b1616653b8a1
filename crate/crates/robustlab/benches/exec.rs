// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use robustlab::concepts::Concept;
use robustlab::distributions::Distribution;
use robustlab::exec::Exec;
use robustlab::hypercube::{ball, BitVector};
use robustlab::learners::learn_conjunction;
use robustlab::rng;
use robustlab::robustrisk::robust_risk_exact;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn trials(c: &mut Criterion) {
    let n = 16;
    let d = Distribution::uniform(n).unwrap();
    let target = Concept::mon_conj(n, &[1, 2, 3, 4]).unwrap();
    let mut g = c.benchmark_group("learn_and_score_trials");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |bench, &exec| {
            bench.iter(|| {
                exec.map(64, |t| {
                    let mut r = rng::for_trial(7, t as u64);
                    let sample: Vec<(BitVector, bool)> = (0..256)
                        .map(|_| {
                            let x = d.sample(&mut r);
                            (x, target.eval(&x))
                        })
                        .collect();
                    let h = learn_conjunction(&sample, true).unwrap();
                    robust_risk_exact(&target, &h, 2, &d).unwrap()
                })
            })
        });
    }
    g.finish();
}

fn ball_sweep(c: &mut Criterion) {
    let n = 20;
    let h = Concept::majority(n, &(1..=n).collect::<Vec<_>>()).unwrap();
    let mut g = c.benchmark_group("ball_disagreement_count");
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |bench, &exec| {
            bench.iter(|| {
                exec.sum_chunks(1 << 14, 1 << 10, |range| {
                    range
                        .map(|i| {
                            let x = BitVector::from_index(n, i as u64 * 61);
                            let fx = h.eval(&x);
                            f64::from(u8::from(ball(&x, 2).any(|z| h.eval(&z) != fx)))
                        })
                        .sum()
                })
            })
        });
    }
    g.finish();
}

criterion_group!(benches, trials, ball_sweep);
criterion_main!(benches);
