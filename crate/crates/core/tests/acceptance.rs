//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `--nocapture` to see them on success).

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;

use common::*;
use recip_core::decompose::{
    distinctify_z, euclid_decompose_traced, greedy_decompose_z, verify, Decomposition, Method,
};
use recip_core::extension::{is_integral, reciprocal_in_dx, verify_extension};
use recip_core::instances::{Fp, GaussianIntegers, Integers, PolyRing, Rationals};
use recip_core::recip::{
    bonaccian_split, classify, d_intersect_r_check, is_in_r, units_field_check, valuation,
    SplitSide,
};
use recip_core::search::{cross_check, exhaustive_search, SearchSpec};
use recip_core::{Branch, EuclideanDomain, Fraction};

const ROUNDS: usize = 1000;

fn f2() -> PolyRing<Fp> {
    PolyRing::new(Fp::new(2).unwrap())
}

fn f5() -> PolyRing<Fp> {
    PolyRing::new(Fp::new(5).unwrap())
}

fn round_trip_one<D: EuclideanDomain>(dom: &D, alpha: &Fraction<D::Elem>) {
    let (dec, trace) = euclid_decompose_traced(dom, alpha).expect("precondition holds");
    let report = verify(dom, &dec);
    assert!(report.valid, "round-trip failed for {}", alpha.format(dom));
    assert!(
        cross_multiply_check(dom, &dec),
        "independent oracle disagrees for {}",
        alpha.format(dom)
    );
    // termination measure: strictly decreasing numerator values
    for w in trace.windows(2) {
        assert!(
            w[1] < w[0],
            "measure did not decrease for {}",
            alpha.format(dom)
        );
    }
}

#[test]
fn criterion_01_decomposition_round_trip() {
    criterion(
        1,
        "decomposition round-trip, 1000 fractions x 5 instances",
        || {
            let started = Instant::now();
            let z = Integers;
            let zi = GaussianIntegers;
            let (f2, f5) = (f2(), f5());
            let qx = PolyRing::new(Rationals);

            let mut rng = Rng::new(0x01);
            for _ in 0..ROUNDS {
                round_trip_one(&z, &rand_frac_z_light(&mut rng, 1_000_000));
                round_trip_one(&zi, &rand_frac_zi(&mut rng, 1000, true));
                round_trip_one(&f2, &rand_frac_fp(&mut rng, &f2, 8, true));
                round_trip_one(&f5, &rand_frac_fp(&mut rng, &f5, 8, true));
                round_trip_one(&qx, &rand_frac_q(&mut rng, 3, true));
            }
            let elapsed = started.elapsed();
            assert!(
                elapsed < Duration::from_secs(10),
                "round-trip suite took {elapsed:?}, budget is 10s"
            );
        },
    );
}

#[test]
fn criterion_02_bonaccian_dichotomy() {
    criterion(2, "bonaccian split always certifies one side", || {
        let z = Integers;
        let zi = GaussianIntegers;
        let (f2, f5) = (f2(), f5());
        let qx = PolyRing::new(Rationals);

        fn check_split<D: EuclideanDomain>(dom: &D, alpha: &Fraction<D::Elem>) {
            let out = bonaccian_split(dom, alpha).expect("nonzero input");
            let report = verify(dom, &out.certificate);
            assert!(report.valid);
            assert!(cross_multiply_check(dom, &out.certificate));
            match out.side {
                SplitSide::Alpha => assert_eq!(&out.certificate.target, alpha),
                SplitSide::AlphaInverse => {
                    assert_eq!(out.certificate.target, alpha.inverse(dom).unwrap());
                }
            }
        }

        let mut rng = Rng::new(0x02);
        for _ in 0..ROUNDS {
            // expansion length grows like e^|value| on the integers, so the
            // sampler keeps the integer part small
            check_split(&z, &rand_frac_z_any(&mut rng, 10_000, 3));
            check_split(&zi, &rand_frac_zi(&mut rng, 1000, false));
            check_split(&f2, &rand_frac_fp(&mut rng, &f2, 8, false));
            check_split(&f5, &rand_frac_fp(&mut rng, &f5, 8, false));
            check_split(&qx, &rand_frac_q(&mut rng, 3, false));
        }
        // the integer route really does expand the heavy side in place
        let seven_thirds = Fraction::reduce(&z, BigInt::from(7), BigInt::from(3)).unwrap();
        let out = bonaccian_split(&z, &seven_thirds).unwrap();
        assert_eq!(out.side, SplitSide::Alpha);
    });
}

#[test]
fn criterion_03_termination_measure() {
    criterion(3, "euclidean measure strictly decreases", || {
        // same generator and seed as criterion 1; the strict-decrease
        // assertion lives inside round_trip_one and inside the decomposer
        let z = Integers;
        let zi = GaussianIntegers;
        let (f2, f5) = (f2(), f5());
        let qx = PolyRing::new(Rationals);
        let mut rng = Rng::new(0x01);
        for _ in 0..ROUNDS {
            round_trip_one(&z, &rand_frac_z_light(&mut rng, 1_000_000));
            round_trip_one(&zi, &rand_frac_zi(&mut rng, 1000, true));
            round_trip_one(&f2, &rand_frac_fp(&mut rng, &f2, 8, true));
            round_trip_one(&f5, &rand_frac_fp(&mut rng, &f5, 8, true));
            round_trip_one(&qx, &rand_frac_q(&mut rng, 3, true));
        }
    });
}

#[test]
fn criterion_04_valuation_homomorphism() {
    criterion(4, "valuation is a homomorphism to (Z, +)", || {
        let qx = PolyRing::new(Rationals);
        let f5 = f5();

        fn check_pair<D: EuclideanDomain>(dom: &D, a: &Fraction<D::Elem>, b: &Fraction<D::Elem>) {
            let va = valuation(dom, a).unwrap().value;
            let vb = valuation(dom, b).unwrap().value;
            let prod = a.mul(dom, b);
            assert_eq!(valuation(dom, &prod).unwrap().value, va + vb);
            let sum = a.add(dom, b);
            if !sum.is_zero(dom) {
                assert!(valuation(dom, &sum).unwrap().value >= va.min(vb));
            }
        }

        let mut rng = Rng::new(0x04);
        for _ in 0..ROUNDS {
            check_pair(
                &qx,
                &rand_frac_q(&mut rng, 5, false),
                &rand_frac_q(&mut rng, 5, false),
            );
            check_pair(
                &f5,
                &rand_frac_fp(&mut rng, &f5, 6, false),
                &rand_frac_fp(&mut rng, &f5, 6, false),
            );
        }
        // v(pi) = 1 for pi = 1/x, on both instances
        let pi_qx = Fraction::parse(&qx, "1/x").unwrap();
        assert_eq!(valuation(&qx, &pi_qx).unwrap().value, 1);
        let pi_f5 = Fraction::parse(&f5, "1/x").unwrap();
        assert_eq!(valuation(&f5, &pi_f5).unwrap().value, 1);
    });
}

#[test]
fn criterion_05_units_intersection_literal() {
    criterion(5, "R(D) meets D exactly in the units", || {
        let started = Instant::now();
        let report = d_intersect_r_check(&f2(), 3).unwrap();
        assert!(report.pass, "counterexample: {:?}", report.counterexample);
        assert_eq!(report.checked, 15);

        let report = d_intersect_r_check(&f5(), 2).unwrap();
        assert!(report.pass, "counterexample: {:?}", report.counterexample);
        assert_eq!(report.checked, 124); // 5^3 - 1 nonzero polynomials of degree <= 2

        let elapsed = started.elapsed();
        assert!(
            elapsed < Duration::from_secs(1),
            "intersection checks took {elapsed:?}, budget is 1s"
        );
    });
}

#[test]
fn criterion_06_main_dichotomy() {
    criterion(6, "classifier agrees with the units-field test", || {
        let z = Integers;
        let zi = GaussianIntegers;
        let (f2, f5) = (f2(), f5());
        let qx = PolyRing::new(Rationals);

        assert_eq!(classify(&z).branch, Branch::Egyptian);
        assert_eq!(classify(&zi).branch, Branch::Egyptian);

        for dom in [&f2 as &PolyRing<Fp>, &f5] {
            let c = classify(dom);
            assert_eq!(c.branch, Branch::Dvr);
            assert_eq!(c.uniformizer_den, Some(dom.minimal_nonunit()));
            assert_eq!(dom.elem_to_string(c.uniformizer_den.as_ref().unwrap()), "x");
        }
        let c = classify(&qx);
        assert_eq!(c.branch, Branch::Dvr);
        assert_eq!(c.uniformizer_den, Some(qx.parse_elem("x").unwrap()));

        // branch = DVR <=> units ∪ {0} is a field, across all five instances
        fn agree<D: EuclideanDomain>(dom: &D) {
            let c = classify(dom);
            let u = units_field_check(dom);
            assert_eq!(c.branch == Branch::Dvr, u.is_field);
            assert_eq!(c.units_field, u.is_field);
        }
        agree(&z);
        agree(&zi);
        agree(&f2);
        agree(&f5);
        agree(&qx);
    });
}

#[test]
fn criterion_07_bounded_nonmembership() {
    criterion(7, "no bounded expansion reaches x over F2[x]", || {
        let started = Instant::now();
        let f2 = f2();
        let spec = SearchSpec {
            target: Fraction::parse(&f2, "x").unwrap(),
            max_value: 3,
            max_terms: 4,
            multiset_allowed: true,
        };
        let outcome = exhaustive_search(&f2, &spec, None).unwrap();
        assert!(outcome.found.is_none());
        // 15 candidates of degree <= 3; multisets of 1..=4 of them:
        // C(15,1)+C(16,2)+C(17,3)+C(18,4) = 15+120+680+3060
        assert_eq!(outcome.states_explored, 3875);
        // determinism: an identical run explores the same states
        let again = exhaustive_search(&f2, &spec, None).unwrap();
        assert_eq!(again.states_explored, 3875);

        let elapsed = started.elapsed();
        assert!(
            elapsed < Duration::from_secs(60),
            "search took {elapsed:?}, budget is 60s"
        );
    });
}

#[test]
fn criterion_08_oracle_cross_check() {
    criterion(8, "analytic and search oracles agree at desk scale", || {
        let report = cross_check(&f2(), 2, 3, None).unwrap();
        assert!(
            report.hard_failures.is_empty(),
            "hard failures: {:?}",
            report.hard_failures
        );
        assert!(report.bounded_consistent > 0);

        let report = cross_check(&Integers, 3, 4, None).unwrap();
        assert!(
            report.hard_failures.is_empty(),
            "hard failures: {:?}",
            report.hard_failures
        );
        // the integers are Egyptian: every bounded fraction is certified
        assert_eq!(report.certified, report.fractions_checked);
    });
}

#[test]
fn criterion_09_distinctification() {
    criterion(
        9,
        "distinctify preserves sums and removes duplicates",
        || {
            let z = Integers;
            let mut rng = Rng::new(0x09);
            for round in 0..500 {
                let alpha = rand_frac_z_light(&mut rng, 2000);
                let alpha = if alpha.num() < &BigInt::from(0) {
                    alpha.neg(&z)
                } else {
                    alpha
                };
                if alpha.num() >= alpha.den() {
                    continue; // greedy wants (0,1); reductions keep it there
                }
                let base = greedy_decompose_z(&alpha).unwrap();

                // inject duplicates without changing the sum:
                // replace 1/d by 1/(2d) + 1/(2d), sometimes twice, and sometimes
                // add a zero-sum negative block 1/k - 1/(2k) - 1/(2k)
                let mut denoms = Vec::new();
                for (i, d) in base.denominators.iter().enumerate() {
                    if i == 0 || rng.below(2) == 0 {
                        let twice = d * BigInt::from(2);
                        denoms.push(twice.clone());
                        denoms.push(twice);
                    } else {
                        denoms.push(d.clone());
                    }
                }
                if rng.below(2) == 0 {
                    let k = BigInt::from(rng.int_in(2, 50));
                    denoms.push(k.clone());
                    denoms.push(-(&k * BigInt::from(2)));
                    denoms.push(-(&k * BigInt::from(2)));
                }
                let injected = Decomposition::new(&z, alpha.clone(), denoms, Method::Greedy);
                let before = verify(&z, &injected);
                assert!(before.valid, "injection must preserve the sum");

                let out = distinctify_z(&injected).unwrap();
                let after = verify(&z, &out);
                assert!(after.valid, "round {round}: sum changed");
                assert!(after.distinct, "round {round}: duplicates survived");
                assert_eq!(out.target, alpha);
                assert_eq!(
                    rational_sum(&out.denominators),
                    rational_sum(&injected.denominators)
                );
            }
        },
    );
}

#[test]
fn criterion_10_extension_certificates() {
    criterion(
        10,
        "reciprocals of Q[x] polynomials certify over Z[x]",
        || {
            let mut rng = Rng::new(0x0A);
            for round in 0..100 {
                // divisibility-ordered denominators keep the clearing element
                // at most 4: expanding d into distinct unit fractions takes
                // ~ e^d terms, which explodes past d = 5
                let g = rand_poly_q(&mut rng, 4, &[1, 2, 4]);
                let cert = reciprocal_in_dx(&g).unwrap();
                assert!(
                    cert.final_denominators.iter().all(is_integral),
                    "round {round}: denominator left Z[x]"
                );
                assert!(
                    verify_extension(&cert),
                    "round {round}: verification failed"
                );
                assert!(cert.clearing >= BigInt::one());
                assert!(cert.d_decomposition.distinct);
            }
        },
    );
}

#[test]
fn criterion_11_maximal_ideal_principality() {
    criterion(
        11,
        "positive-valuation elements divide by the uniformizer",
        || {
            let qx = PolyRing::new(Rationals);
            let x = qx.parse_elem("x").unwrap();
            let mut rng = Rng::new(0x0B);
            let mut done = 0;
            while done < 200 {
                let alpha = rand_frac_q(&mut rng, 4, true);
                let v = valuation(&qx, &alpha).unwrap();
                if v.value < 1 {
                    continue;
                }
                // alpha / pi = alpha * x
                let shifted = alpha.scale(&qx, &x);
                let m = is_in_r(&qx, &shifted);
                assert!(
                    m.member,
                    "alpha/pi fell outside R for {}",
                    alpha.format(&qx)
                );
                let cert = m.certificate.unwrap();
                assert!(verify(&qx, &cert).valid);
                assert_eq!(valuation(&qx, &shifted).unwrap().value, v.value - 1);
                done += 1;
            }
        },
    );
}
