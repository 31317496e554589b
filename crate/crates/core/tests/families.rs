use num_bigint::BigInt;
use num_traits::{One, Zero};

use logcert::certify::{certify_p23, certify_root_monotone_t21, replay, search_nu, Mode, NuWitness, Scope};
use logcert::checks::{check, check_log_convex, Property, Window};
use logcert::exact::{int, DigitBudget, PolynomialQ, Rational, RationalFunctionQ};
use logcert::sequences::{catalog, from_three_term, FamilyId, SequenceHandle, ThreeTermSpec};

fn ints(s: &SequenceHandle, from: u64, to: u64) -> Vec<BigInt> {
    s.terms(from, to).unwrap().into_iter().map(|q| q.to_integer()).collect()
}

#[test]
fn trinomial_matches_polynomial_expansion() {
    let t = catalog(FamilyId::TrinomialCentral);
    let mut power = vec![BigInt::one()];
    for n in 0..=12usize {
        assert_eq!(t.value_at(n as u64).unwrap(), Rational::from_integer(power[n].clone()), "T_{n}");
        let mut next = vec![BigInt::zero(); power.len() + 2];
        for (i, c) in power.iter().enumerate() {
            for j in 0..3 {
                next[i + j] += c;
            }
        }
        power = next;
    }
}

#[test]
fn tangent_two_paths() {
    // boustrophedon triangle: E(n, n) are the zigzag numbers, tangent numbers at odd n
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=41usize {
        let mut row = vec![BigInt::zero()];
        for k in 1..=n {
            let v = &row[k - 1] + &rows[n - 1][n - k];
            row.push(v);
        }
        rows.push(row);
    }
    let tangent = catalog(FamilyId::Tangent);
    let abs_b = catalog(FamilyId::AbsEvenBernoulli);
    for m in 1..=20u64 {
        let zigzag = rows[2 * m as usize - 1].last().unwrap().clone();
        let four = Rational::from_integer(BigInt::from(4).pow(m as u32));
        let via_bernoulli = abs_b.value_at(m).unwrap() * (&four - int(1)) * &four / int(2 * m as i64);
        assert_eq!(tangent.value_at(m).unwrap(), Rational::from_integer(zigzag), "T({m})");
        assert_eq!(tangent.value_at(m).unwrap(), via_bernoulli, "T({m}) via Bernoulli");
    }
}

#[test]
fn fibonacci_cassini() {
    let f = ints(&catalog(FamilyId::Fibonacci), 0, 201);
    for n in 2..=200 {
        let gap = &f[n - 1] * &f[n + 1] - &f[n] * &f[n];
        assert_eq!(gap, BigInt::from(if n % 2 == 0 { 1 } else { -1 }), "n = {n}");
    }
}

#[test]
fn root_monotonicity_follows_from_log_convexity() {
    let families = [
        FamilyId::Bell,
        FamilyId::Motzkin,
        FamilyId::Schroeder,
        FamilyId::Catalan,
        FamilyId::CentralBinomial,
        FamilyId::GSeq,
        FamilyId::Domb,
    ];
    for f in families {
        let s = catalog(f);
        let c = certify_root_monotone_t21(&s, 0, 60, Mode::ConvexInc).unwrap();
        let Scope::Window { from, to } = c.claim.scope else { panic!("window expected") };
        let v = check(&s, Property::RootIncreasing, Window::new(from, to), c.claim.strict, DigitBudget::default()).unwrap();
        assert!(v.holds, "{f}: {:?}", v.first_violation);
    }
}

fn motzkin_spec() -> ThreeTermSpec {
    FamilyId::Motzkin.three_term_spec().unwrap()
}

fn trinomial_from_4() -> ThreeTermSpec {
    ThreeTermSpec {
        start: 4,
        initial: (int(19), int(51)),
        ..FamilyId::TrinomialCentral.three_term_spec().unwrap()
    }
}

#[test]
fn recurrence_certificates_agree_with_scans() {
    let cases = [
        (trinomial_from_4(), "(12n+3)/(4n+3)", 2),
        (motzkin_spec(), "3(n + 5/4)^2/(n+2)^2", 2),
        (FamilyId::Derangement.three_term_spec().unwrap(), "n + 1/2", 2),
    ];
    for (spec, nu, n0) in cases {
        let nu: RationalFunctionQ = nu.parse().unwrap();
        let w = NuWitness { nu, valid_from: n0 - 1 };
        let c = certify_p23(&spec, &w, n0).unwrap();
        replay(&c).unwrap();
        let from = c.claim.scope.start();
        let s = from_three_term(&spec).unwrap();
        let v = check_log_convex(&s, Window::new(from, from + 500), false).unwrap();
        assert!(v.holds, "{}: {:?}", s.name(), v.first_violation);
    }
}

#[test]
fn motzkin_witness_search() {
    let spec = motzkin_spec();
    assert_eq!(search_nu(&spec, 2, 1).unwrap(), None);
    let w = search_nu(&spec, 2, 2).unwrap().expect("a degree-2 witness");
    let expected: RationalFunctionQ = "(3n^2 + 15/2 n + 75/16)/(n^2 + 4n + 4)".parse().unwrap();
    assert!(w.nu.identity_eq(&expected), "found {}", w.nu);
}

#[test]
fn trinomial_witness_search() {
    let w = search_nu(&trinomial_from_4(), 2, 1).unwrap().expect("a witness");
    assert!(w.nu.identity_eq(&"(12n+3)/(4n+3)".parse().unwrap()), "found {}", w.nu);
}

#[test]
fn log_concave_recurrence_has_no_witness() {
    let spec = ThreeTermSpec {
        a: PolynomialQ::from_ints(&[0, 1]),
        b: PolynomialQ::from_ints(&[0, 1]),
        c: PolynomialQ::from_ints(&[1]),
        start: 0,
        initial: (int(1), int(2)),
    };
    for degree in [1, 2] {
        assert_eq!(search_nu(&spec, 2, degree).unwrap(), None);
    }
}
