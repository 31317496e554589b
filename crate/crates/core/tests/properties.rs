use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

use logcert::certify::LambdaBound;
use logcert::checks::{check, check_log_concave, check_log_convex, thm28_identity_check, Property, Window};
use logcert::exact::{
    format_rational, parse_rational, poly_nonneg_on_ray, pow_compare, ratio, rational_pow, DigitBudget,
    PolynomialQ, Rational,
};
use logcert::sequences::{convolve_dp, convolve_dp_squared, from_dirichlet, DirichletSpec, SequenceHandle, SequenceSource};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=20).prop_map(|(p, q)| ratio(p, q))
}

fn positive_rational() -> impl Strategy<Value = Rational> {
    (1i64..=60, 1i64..=20).prop_map(|(p, q)| ratio(p, q))
}

fn dirichlet() -> impl Strategy<Value = DirichletSpec> {
    prop::collection::vec(((0i64..=9, 1i64..=5), (1i64..=12, 1i64..=6)), 1..=4).prop_map(|pairs| {
        let mut pairs: Vec<_> = pairs.into_iter().map(|((a, b), (c, d))| (ratio(a, b), ratio(c, d))).collect();
        if pairs.iter().all(|(a, _)| a.is_zero()) {
            pairs[0].0 = ratio(1, 1);
        }
        DirichletSpec::new(pairs)
    })
}

fn terms(values: Vec<Rational>) -> SequenceHandle {
    SequenceHandle::from_source(&SequenceSource::Terms { values }).unwrap()
}

/// Positive sequences that are geometric about a quarter of the time.
fn positive_terms() -> impl Strategy<Value = Vec<Rational>> {
    prop_oneof![
        1 => (positive_rational(), positive_rational(), 4usize..12)
            .prop_map(|(z0, r, len)| (0..len as u64).map(|k| &z0 * rational_pow(&r, k)).collect()),
        3 => prop::collection::vec(positive_rational(), 4..12),
    ]
}

proptest! {
    #[test]
    fn field_laws(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(parse_rational(&format_rational(&a)).unwrap(), a);
    }

    #[test]
    fn pow_compare_matches_rational_powers(x in positive_rational(), p in 0u64..8, y in positive_rational(), q in 0u64..8) {
        let oracle = rational_pow(&x, p).cmp(&rational_pow(&y, q));
        prop_assert_eq!(pow_compare(&x, p, &y, q), oracle);
    }

    #[test]
    fn pow_compare_small_integers(x in 1u32..40, p in 0u32..6, y in 1u32..40, q in 0u32..6) {
        let oracle = (x as u128).pow(p).cmp(&(y as u128).pow(q));
        prop_assert_eq!(pow_compare(&ratio(x as i64, 1), p as u64, &ratio(y as i64, 1), q as u64), oracle);
    }

    #[test]
    fn shift_round_trip(coeffs in prop::collection::vec(-9i64..=9, 1..6), s in -7i64..=7, n in -20i64..=20) {
        let p = PolynomialQ::from_ints(&coeffs);
        prop_assert_eq!(p.shift_int(s).shift_int(-s), p.clone());
        prop_assert_eq!(p.shift_int(s).eval_int(n), p.eval_int(n + s));
    }

    #[test]
    fn nonnegativity_agrees_with_a_scan(coeffs in prop::collection::vec(-12i64..=12, 1..5), n0 in -3i64..6) {
        let p = PolynomialQ::from_ints(&coeffs);
        let cert = poly_nonneg_on_ray(&p, n0).unwrap();
        prop_assert!(cert.verify(&p, n0).is_ok());
        let first_negative = (n0..=n0 + 500).find(|&n| p.eval_int(n).is_negative());
        match cert.counterexample() {
            None => prop_assert_eq!(first_negative, None),
            Some(k) => prop_assert_eq!(first_negative, Some(k)),
        }
    }

    #[test]
    fn dirichlet_identity_residual_is_zero(spec in dirichlet(), n in 1u64..=10) {
        prop_assert!(thm28_identity_check(&spec, n).unwrap().is_zero());
    }

    #[test]
    fn convolutions_preserve_log_convexity(x in dirichlet(), y in dirichlet()) {
        let (x, y) = (from_dirichlet(&x).unwrap(), from_dirichlet(&y).unwrap());
        let w = Window::new(1, 12);
        prop_assert!(check_log_convex(&convolve_dp(&x, &y).unwrap(), w, false).unwrap().holds);
        prop_assert!(check_log_convex(&convolve_dp_squared(&x, &y).unwrap(), w, false).unwrap().holds);
    }

    #[test]
    fn lambda_sign(a in positive_rational(), b in positive_rational(), c in positive_rational(), nu in positive_rational()) {
        let bound = LambdaBound::new(&logcert::sequences::ThreeTermSpec {
            a: PolynomialQ::constant(a.clone()),
            b: PolynomialQ::constant(b.clone()),
            c: PolynomialQ::constant(c.clone()),
            start: 0,
            initial: (ratio(1, 1), ratio(1, 1)),
        });
        let below = bound.compare_with_lambda(1, &nu) != Ordering::Greater;
        let t = ratio(2, 1) * &a * &nu - &b;
        let oracle = !t.is_positive() || &t * &t <= &b * &b + ratio(4, 1) * &a * &c;
        prop_assert_eq!(below, oracle);
    }

    #[test]
    fn first_violation_is_minimal(values in positive_terms(), strict in any::<bool>()) {
        let len = values.len() as u64;
        let s = terms(values.clone());
        let w = Window::new(1, len - 2);
        let v = check_log_convex(&s, w, strict).unwrap();
        let fails = |n: usize| {
            let gap = &values[n - 1] * &values[n + 1] - &values[n] * &values[n];
            gap.is_negative() || (strict && gap.is_zero())
        };
        let oracle = (1..=len as usize - 2).find(|&n| fails(n));
        prop_assert_eq!(v.first_violation.map(|f| f.index as usize), oracle);
    }

    #[test]
    fn strict_root_monotonicity_is_exclusive(values in positive_terms()) {
        let s = terms(values.clone());
        let w = Window::new(1, values.len() as u64 - 2);
        let inc = check(&s, Property::RootIncreasing, w, true, DigitBudget::default()).unwrap();
        let dec = check(&s, Property::RootDecreasing, w, true, DigitBudget::default()).unwrap();
        prop_assert!(!(inc.holds && dec.holds));
    }

    #[test]
    fn convex_and_concave_means_constant_ratio(values in positive_terms()) {
        let s = terms(values.clone());
        let w = Window::new(1, values.len() as u64 - 2);
        let both = check_log_convex(&s, w, false).unwrap().holds && check_log_concave(&s, w, false).unwrap().holds;
        let r = &values[1] / &values[0];
        let geometric = values.windows(2).all(|p| &p[1] / &p[0] == r);
        prop_assert_eq!(both, geometric);
    }
}

#[test]
fn integer_pow_compare_oracle() {
    let big = |x: u32, e: u32| BigInt::from(x).pow(e);
    for (x, p, y, q) in [(19, 5, 51, 4), (2, 10, 1024, 1), (3, 40, 5, 27)] {
        assert_eq!(
            pow_compare(&ratio(x as i64, 1), p as u64, &ratio(y as i64, 1), q as u64),
            big(x, p).cmp(&big(y, q))
        );
    }
}
