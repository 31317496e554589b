//! Log-convexity of `a(n) z_{n+1} = b(n) z_n + c(n) z_{n-1}` from a witness
//! `nu(n) <= lambda(n)` with `Delta_n(nu) >= 0`, where `lambda(n)` is the
//! positive root of `a(n) x^2 - b(n) x - c(n)`.
//!
//! With `nu = P/Q`, every condition becomes a polynomial inequality on an
//! integer ray once the denominators are cleared. Positivity of `Q` is
//! certified before anything is multiplied by it.
//!
//! | label | inequality                                              | for      |
//! |-------|---------------------------------------------------------|----------|
//! | (0)   | `a, b, c > 0`                                           | `n >= m+1` |
//! | (1)   | `Q > 0`, `P > 0`                                        | `n >= n0-1` |
//! | (2)   | `a P^2 - b P Q - c Q^2 <= 0`                            | `n >= n0-1` |
//! | (3)   | `a P(n-1) P(n+1) - b P(n-1) Q(n+1) - c Q(n-1) Q(n+1) >= 0` | `n >= n0` |
//! | (4)   | `z_m z_{m+2} >= z_{m+1}^2`, `z_{m+1} z_{m+3} >= z_{m+2}^2` |          |
//!
//! `m` is the recurrence's start index and `2 <= n0 <= m + 2`. The conclusion is
//! log-convexity at every index `n >= m + 1`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{
    positivity_hypothesis, pt, relation_hypothesis, Certificate, CertifyError, Claim, Derivation,
    Relation, Scope, Theorem, VERSION,
};
use crate::checks::Property;
use crate::exact::{strict_positivity_form, PolynomialQ, Rational, RationalFunctionQ};
use crate::sequences::{from_three_term, SequenceSource, ThreeTermSpec};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuWitness {
    pub nu: RationalFunctionQ,
    /// First index at which `nu` is claimed positive.
    pub valid_from: i64,
}

/// The quadratic `a(n) x^2 - b(n) x - c(n)` whose positive root is `lambda(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaBound {
    pub a: PolynomialQ,
    pub b: PolynomialQ,
    pub c: PolynomialQ,
}

impl LambdaBound {
    pub fn new(spec: &ThreeTermSpec) -> Self {
        LambdaBound {
            a: spec.a.clone(),
            b: spec.b.clone(),
            c: spec.c.clone(),
        }
    }

    pub fn quadratic_at(&self, n: i64, x: &Rational) -> Rational {
        self.a.eval_int(n) * x * x - self.b.eval_int(n) * x - self.c.eval_int(n)
    }

    /// Order of `x` against `lambda(n)`, valid for `x > 0` when
    /// `a(n), b(n), c(n) > 0`: the parabola opens upward with one positive root.
    pub fn compare_with_lambda(&self, n: i64, x: &Rational) -> Ordering {
        self.quadratic_at(n, x).cmp(&Rational::zero())
    }

    /// `a P^2 - b P Q - c Q^2`.
    pub fn cleared(&self, nu: &RationalFunctionQ) -> PolynomialQ {
        let (p, q) = (nu.numer(), nu.denom());
        &(&(&self.a * &(p * p)) - &(&self.b * &(p * q))) - &(&self.c * &(q * q))
    }

    /// `(e, L, exact)` with `lambda(n) ~ L n^e`. When `L` is irrational a
    /// lower approximation with denominator 64 is returned and `exact` is false.
    pub fn asymptote(&self) -> Option<(u32, Rational, bool)> {
        let (da, db, dc) = (self.a.degree()?, self.b.degree()?, self.c.degree()?);
        let (al, bl, cl) = (self.a.leading()?, self.b.leading()?, self.c.leading()?);
        let t1 = 2 * db as i64 - 2 * da as i64;
        let t2 = dc as i64 - da as i64;
        let twice_e = t1.max(t2);
        if twice_e < 0 || twice_e % 2 != 0 {
            return None;
        }
        let e = (twice_e / 2) as u32;
        let (l, exact) = match t1.cmp(&t2) {
            Ordering::Greater => (bl / al, true),
            Ordering::Less => rational_sqrt_floor(&(cl / al)),
            Ordering::Equal => {
                let (root, exact) = rational_sqrt_floor(&(bl * bl + Rational::from_integer(4.into()) * al * cl));
                ((bl + root) / (Rational::from_integer(2.into()) * al), exact)
            }
        };
        l.is_positive().then_some((e, l, exact))
    }
}

/// `sqrt(r)` when rational, else `floor(64 sqrt(r)) / 64`.
fn rational_sqrt_floor(r: &Rational) -> (Rational, bool) {
    let (p, q) = (r.numer(), r.denom());
    let pq: BigInt = p * q;
    let s = pq.sqrt();
    if &s * &s == pq {
        return (Rational::new(s, q.clone()), true);
    }
    let scaled: BigInt = (p * BigInt::from(4096)) / q;
    (Rational::new(scaled.sqrt(), BigInt::from(64)), false)
}

/// `a(n) nu(n-1) nu(n+1) - b(n) nu(n-1) - c(n)`, reduced.
pub fn delta_rational_function(spec: &ThreeTermSpec, nu: &RationalFunctionQ) -> RationalFunctionQ {
    let before = nu.shift_int(-1);
    let after = nu.shift_int(1);
    let a = RationalFunctionQ::from_poly(spec.a.clone());
    let b = RationalFunctionQ::from_poly(spec.b.clone());
    let c = RationalFunctionQ::from_poly(spec.c.clone());
    a.mul(&before).mul(&after).sub(&b.mul(&before)).sub(&c)
}

/// Numerator of `Delta_n(nu)` after multiplying by `Q(n-1) Q(n+1)`.
fn delta_cleared(spec: &ThreeTermSpec, nu: &RationalFunctionQ) -> PolynomialQ {
    let (p, q) = (nu.numer(), nu.denom());
    let (pm, pp) = (p.shift_int(-1), p.shift_int(1));
    let (qm, qp) = (q.shift_int(-1), q.shift_int(1));
    &(&(&spec.a * &(&pm * &pp)) - &(&spec.b * &(&pm * &qp))) - &(&spec.c * &(&qm * &qp))
}

pub fn certify_p23(
    spec: &ThreeTermSpec,
    witness: &NuWitness,
    n0: i64,
) -> Result<Certificate, CertifyError> {
    let m = spec.start as i64;
    if n0 < 2 || n0 > m + 2 {
        return Err(CertifyError::InvalidInput(format!(
            "n0 = {n0} must satisfy 2 <= n0 <= start + 2 = {}",
            m + 2
        )));
    }
    if witness.valid_from > n0 - 1 {
        return Err(CertifyError::InvalidInput(format!(
            "witness is positive only from {}, but is needed from {}",
            witness.valid_from,
            n0 - 1
        )));
    }
    let seq = from_three_term(spec)?;
    let nu = &witness.nu;
    let lambda = LambdaBound::new(spec);
    let mut hyps = Vec::new();

    for (name, p) in [("a", &spec.a), ("b", &spec.b), ("c", &spec.c)] {
        let label = format!("(0) {name}(n) > 0 for n >= {}", m + 1);
        hyps.push(positivity_hypothesis(&label, strict_positivity_form(p), m + 1)?);
    }
    let label = format!("(1) nu denominator > 0 for n >= {}", n0 - 1);
    hyps.push(positivity_hypothesis(&label, strict_positivity_form(nu.denom()), n0 - 1)?);
    let label = format!("(1) nu numerator > 0 for n >= {}", n0 - 1);
    hyps.push(positivity_hypothesis(&label, strict_positivity_form(nu.numer()), n0 - 1)?);
    let label = format!("(2) nu(n) <= lambda(n) for n >= {}", n0 - 1);
    hyps.push(positivity_hypothesis(&label, -lambda.cleared(nu), n0 - 1)?);
    let label = format!("(3) Delta_n(nu) >= 0 for n >= {n0}");
    hyps.push(positivity_hypothesis(&label, delta_cleared(spec, nu), n0)?);

    let m = spec.start;
    for k in [m, m + 1] {
        let label = format!("(4) z_{k} z_{} >= z_{}^2", k + 2, k + 1);
        hyps.push(relation_hypothesis(
            &seq,
            &label,
            vec![pt(k, 1), pt(k + 2, 1)],
            Relation::GreaterEq,
            vec![pt(k + 1, 2)],
        )?);
    }

    Ok(Certificate {
        theorem: Theorem::P23,
        claim: Claim::new(Property::LogConvex, Scope::Ray { from: m + 1 }, false, seq.name()),
        sequence: SequenceSource::ThreeTerm(spec.clone()),
        hypotheses: hyps,
        derivation: Derivation::P23 {
            witness: witness.clone(),
            n0,
        },
        version: VERSION.to_string(),
    })
}

/// Offsets `j/d` for `d` in `1, 2, 4, ..., 64` and `-d <= j <= 2d`, each
/// listed once at its reduced denominator, ordered by denominator then value.
pub fn nu_grid_offsets() -> Vec<Rational> {
    grid_levels().into_iter().flatten().collect()
}

fn grid_levels() -> Vec<Vec<Rational>> {
    let mut levels = Vec::new();
    for d in (0..=6).map(|k| 1i64 << k) {
        let level: Vec<Rational> = (-d..=2 * d)
            .map(|j| Rational::new(j.into(), d.into()))
            .filter(|q| q.denom() == &BigInt::from(d))
            .collect();
        levels.push(level);
    }
    levels
}

/// Every candidate `nu` for `spec` in search order. Empty when `lambda`
/// has no usable asymptote or `degree` is not 1 or 2.
pub fn nu_candidates(spec: &ThreeTermSpec, degree: u32) -> Vec<RationalFunctionQ> {
    let Some((e, l, _)) = LambdaBound::new(spec).asymptote() else {
        return Vec::new();
    };
    let lin = |s: &Rational| PolynomialQ::new(vec![s.clone(), Rational::one()]);
    let lc = PolynomialQ::constant(l);
    let n = PolynomialQ::var();
    type Form = Box<dyn Fn(&Rational, &Rational) -> (PolynomialQ, PolynomialQ)>;
    let mut two_param: Vec<Form> = Vec::new();
    let mut one_param: Vec<Form> = Vec::new();
    match (e, degree) {
        (0, 1 | 2) => {
            let lc1 = lc.clone();
            two_param.push(Box::new(move |s, t| (&lc1 * &lin(s), lin(t))));
            if degree == 2 {
                let lc2 = lc.clone();
                two_param.push(Box::new(move |s, t| (&lc2 * &lin(s).pow(2), lin(t).pow(2))));
            }
        }
        (1, 1 | 2) => {
            let lc1 = lc.clone();
            one_param.push(Box::new(move |s, _| (&lc1 * &lin(s), PolynomialQ::one())));
            if degree == 2 {
                let lc2 = lc.clone();
                two_param.push(Box::new(move |s, t| (&(&lc2 * &n) * &lin(s), lin(t))));
            }
        }
        (2, 2) => {
            let lc1 = lc.clone();
            one_param.push(Box::new(move |s, _| (&lc1 * &lin(s).pow(2), PolynomialQ::one())));
        }
        _ => return Vec::new(),
    }
    let levels = grid_levels();
    let mut out = Vec::new();
    let mut seen: Vec<Rational> = Vec::new();
    for level in &levels {
        let before = seen.clone();
        seen.extend(level.iter().cloned());
        seen.sort();
        for form in &one_param {
            for s in level {
                let (p, q) = form(s, s);
                out.extend(RationalFunctionQ::new(p, q).ok());
            }
        }
        for form in &two_param {
            for s in &seen {
                for t in &seen {
                    if before.contains(s) && before.contains(t) {
                        continue;
                    }
                    let (p, q) = form(s, t);
                    out.extend(RationalFunctionQ::new(p, q).ok());
                }
            }
        }
    }
    out
}

/// Looks for a witness in [`nu_candidates`] order, returning the first one
/// for which [`certify_p23`] succeeds.
pub fn search_nu(
    spec: &ThreeTermSpec,
    n0: i64,
    degree: u32,
) -> Result<Option<NuWitness>, CertifyError> {
    if !(1..=2).contains(&degree) {
        return Err(CertifyError::InvalidInput(format!(
            "ansatz degree must be 1 or 2, got {degree}"
        )));
    }
    let seq = from_three_term(spec)?;
    let m = spec.start;
    let z = seq.terms(m, m + 3)?;
    if &z[0] * &z[2] < &z[1] * &z[1] || &z[1] * &z[3] < &z[2] * &z[2] {
        return Ok(None);
    }
    let lambda = LambdaBound::new(spec);
    for nu in nu_candidates(spec, degree) {
        if !prefilter(spec, &lambda, &nu, n0) {
            continue;
        }
        let witness = NuWitness {
            nu,
            valid_from: n0 - 1,
        };
        match certify_p23(spec, &witness, n0) {
            Ok(_) => return Ok(Some(witness)),
            Err(CertifyError::HypothesisFailed { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

/// Cheap pointwise screen of conditions (1) to (3) on `[n0-1, n0+30]`.
fn prefilter(spec: &ThreeTermSpec, lambda: &LambdaBound, nu: &RationalFunctionQ, n0: i64) -> bool {
    let delta = |n: i64| -> Option<Rational> {
        let (before, after) = (nu.eval_int(n - 1)?, nu.eval_int(n + 1)?);
        Some(spec.a.eval_int(n) * &before * &after - spec.b.eval_int(n) * &before - spec.c.eval_int(n))
    };
    for n in n0 - 1..=n0 + 30 {
        let Some(v) = nu.eval_int(n) else { return false };
        if !v.is_positive() || lambda.quadratic_at(n, &v).is_positive() {
            return false;
        }
        if n >= n0 && delta(n).is_none_or(|d| d.is_negative()) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::replay;
    use crate::exact::{int, CertificateKind};
    use crate::sequences::FamilyId;

    fn trinomial_from_four() -> ThreeTermSpec {
        ThreeTermSpec {
            start: 4,
            initial: (int(19), int(51)),
            ..FamilyId::TrinomialCentral.three_term_spec().unwrap()
        }
    }

    fn trinomial_nu() -> RationalFunctionQ {
        "(12n+3)/(4n+3)".parse().unwrap()
    }

    #[test]
    fn trinomial_delta_closed_form() {
        let spec = trinomial_from_four();
        let delta = delta_rational_function(&spec, &trinomial_nu());
        let expected: RationalFunctionQ = "36(n-2)/((4n-1)(4n+7))".parse().unwrap();
        assert!(delta.identity_eq(&expected));
        let cleared = delta_cleared(&spec, &trinomial_nu());
        let cert = crate::exact::poly_nonneg_on_ray(&cleared, 2).unwrap();
        assert_eq!(cert.kind, CertificateKind::ShiftedCoefficientsNonnegative);
        assert_eq!(LambdaBound::new(&spec).cleared(&trinomial_nu()), PolynomialQ::from_ints(&[0, -12]).scale(&Rational::new(1.into(), 16.into())) );
    }

    #[test]
    fn trinomial_certificate() {
        let spec = trinomial_from_four();
        let w = NuWitness {
            nu: trinomial_nu(),
            valid_from: 1,
        };
        let c = certify_p23(&spec, &w, 2).unwrap();
        assert_eq!(c.claim.scope, Scope::Ray { from: 5 });
        replay(&c).unwrap();
        // seeds 1, 1, 3, 7 are not log-convex
        let from_zero = FamilyId::TrinomialCentral.three_term_spec().unwrap();
        let e = certify_p23(&from_zero, &w, 2).unwrap_err();
        assert!(e.failed_label().unwrap().starts_with("(4)"));
    }

    #[test]
    fn overshooting_witness_fails_condition_two() {
        let w = NuWitness {
            nu: "13n/(4n+3)".parse().unwrap(),
            valid_from: 1,
        };
        let e = certify_p23(&trinomial_from_four(), &w, 2).unwrap_err();
        assert!(e.failed_label().unwrap().starts_with("(2)"), "{e}");
    }

    #[test]
    fn constant_coefficients_fail_condition_three() {
        let spec = ThreeTermSpec {
            a: PolynomialQ::one(),
            b: PolynomialQ::one(),
            c: PolynomialQ::one(),
            start: 0,
            initial: (int(1), int(2)),
        };
        let w = NuWitness {
            nu: RationalFunctionQ::from_poly(PolynomialQ::one()),
            valid_from: 1,
        };
        let e = certify_p23(&spec, &w, 2).unwrap_err();
        assert!(e.failed_label().unwrap().starts_with("(3)"), "{e}");
        if let CertifyError::HypothesisFailed { counterexample, .. } = e {
            assert_eq!(counterexample, Some(2));
        }
    }

    #[test]
    fn grid_contains_the_hand_witness() {
        let spec = trinomial_from_four();
        assert_eq!(LambdaBound::new(&spec).asymptote(), Some((0, int(3), true)));
        let grid = nu_grid_offsets();
        assert!(grid.contains(&Rational::new(1.into(), 4.into())));
        assert!(grid.contains(&Rational::new(3.into(), 4.into())));
        assert!(nu_candidates(&spec, 1).contains(&trinomial_nu()));
    }

    #[test]
    fn search_finds_a_trinomial_witness() {
        let w = search_nu(&trinomial_from_four(), 2, 1).unwrap().unwrap();
        replay(&certify_p23(&trinomial_from_four(), &w, 2).unwrap()).unwrap();
    }

    #[test]
    fn lambda_order_matches_the_root() {
        let lb = LambdaBound::new(&trinomial_from_four());
        // lambda(1) = (3 + sqrt(33)) / 4, about 2.186
        assert_eq!(lb.compare_with_lambda(1, &Rational::new(2.into(), 1.into())), Ordering::Less);
        assert_eq!(lb.compare_with_lambda(1, &Rational::new(11.into(), 5.into())), Ordering::Greater);
    }
}
