// Copyright 2026 The Robustlab Authors
// SPDX-License-Identifier: Apache-2.0

use proptest::prelude::*;
use robustlab::cnf::{matching_embed, CnfFormula, CLOSURE_CAP};
use robustlab::concepts::Concept;
use robustlab::dimensions::{
    littlestone_dimension, vc_dimension, FiniteClass, Points, Restriction,
};
use robustlab::distributions::Distribution;
use robustlab::hypercube::{ball, ball_size, BitVector};
use robustlab::robustrisk::{fast_loss, robust_risk_exact};

fn literal(n: usize) -> impl Strategy<Value = i32> {
    (1..=n as i32, any::<bool>()).prop_map(|(v, s)| if s { v } else { -v })
}

fn point(n: usize) -> impl Strategy<Value = BitVector> {
    (0..1u64 << n).prop_map(move |i| BitVector::from_index(n, i))
}

fn conjunction(n: usize) -> impl Strategy<Value = Concept> {
    proptest::collection::vec(literal(n), 0..=n)
        .prop_filter_map("contradictory", move |l| Concept::conj(n, &l).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn ball_matches_distance(x in point(10), r in 0usize..=4) {
        let pts: Vec<BitVector> = ball(&x, r).collect();
        prop_assert_eq!(pts.len() as u128, ball_size(10, r));
        prop_assert!(pts.iter().all(|z| z.distance(&x) <= r));
        prop_assert_eq!(pts[0], x);
    }

    #[test]
    fn bitvector_text_round_trip(x in point(12)) {
        let s = x.to_string();
        prop_assert_eq!(s.parse::<BitVector>().unwrap(), x);
    }

    #[test]
    fn risk_is_monotone_in_rho(c in conjunction(8), h in conjunction(8)) {
        let d = Distribution::product_alpha(8, 2.0).unwrap();
        let mut prev = 0.0;
        for rho in 0..=4 {
            let r = robust_risk_exact(&c, &h, rho, &d).unwrap();
            prop_assert!(r + 1e-12 >= prev);
            prop_assert!((0.0..=1.0 + 1e-12).contains(&r));
            prev = r;
        }
    }

    #[test]
    fn risk_is_symmetric_and_vanishes_on_equal(c in conjunction(7), h in conjunction(7), rho in 0usize..=3) {
        let d = Distribution::uniform(7).unwrap();
        let a = robust_risk_exact(&c, &h, rho, &d).unwrap();
        let b = robust_risk_exact(&h, &c, rho, &d).unwrap();
        prop_assert!((a - b).abs() < 1e-12);
        prop_assert_eq!(robust_risk_exact(&c, &c, rho, &d).unwrap(), 0.0);
    }

    #[test]
    fn pointwise_loss_matches_ball_scan(c in conjunction(9), h in conjunction(9), x in point(9), rho in 0usize..=3) {
        let want = ball(&x, rho).any(|z| c.eval(&z) != h.eval(&z));
        prop_assert_eq!(fast_loss(&c, &h, &x, rho).unwrap(), want);
    }

    #[test]
    fn sat_sets_grow_with_rho(clauses in proptest::collection::vec(proptest::collection::vec(literal(6), 1..=3), 1..=4)) {
        let f = CnfFormula::new(6, clauses).unwrap();
        for rho in 0..6 {
            let a = f.sat_mask(rho).unwrap();
            let b = f.sat_mask(rho + 1).unwrap();
            prop_assert!(a.iter().zip(&b).all(|(x, y)| x & !y == 0));
        }
    }

    #[test]
    fn two_cnf_closure_stays_two_wide(clauses in proptest::collection::vec(proptest::collection::vec(literal(6), 2), 1..=8)) {
        let f = CnfFormula::new(6, clauses).unwrap();
        let cl = f.resolution_closure(CLOSURE_CAP).unwrap();
        prop_assert!(cl.width() <= 2);
        for x in (0..64u64).map(|i| BitVector::from_index(6, i)) {
            prop_assert_eq!(f.satisfies(&x), cl.satisfies(&x));
        }
    }

    #[test]
    fn matching_embedding_is_one_lipschitz(x in point(9), flip in 1usize..=9, signs in proptest::collection::vec(any::<bool>(), 9)) {
        let m: Vec<Vec<i32>> = (0..3i32)
            .map(|j| (3 * j + 1..=3 * j + 3).map(|v| if signs[v as usize - 1] { v } else { -v }).collect())
            .collect();
        let y = x.flipped(flip);
        let a = matching_embed(&x, &m).unwrap();
        let b = matching_embed(&y, &m).unwrap();
        prop_assert!(a.distance(&b) <= 1);
    }

    #[test]
    fn restricted_dimensions_below_unrestricted(rows in proptest::collection::vec(proptest::collection::vec(any::<bool>(), 6), 1..=16), r in 0.0f64..4.0) {
        let f = FiniteClass::from_rows(Points::Line { points: (0..6).map(f64::from).collect() }, &rows).unwrap();
        let vc = vc_dimension(&f, None).unwrap().value;
        let lit = littlestone_dimension(&f, None, None).unwrap();
        prop_assert!(vc <= lit);
        prop_assert!(vc_dimension(&f, Some(Restriction::member(r))).unwrap().value <= vc);
        prop_assert!(littlestone_dimension(&f, Some(r), None).unwrap() <= lit);
        let mut prev = usize::MAX;
        for tau in [0.0, 0.5, 1.0, 2.0] {
            let v = littlestone_dimension(&f, None, Some(tau)).unwrap();
            prop_assert!(v <= prev);
            prev = v;
        }
        prop_assert_eq!(littlestone_dimension(&f, None, Some(0.0)).unwrap(), lit);
    }
}
