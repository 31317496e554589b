//! Deciding `P(n) >= 0` for every integer `n >= n0`.
//!
//! Two routes, tried in order:
//!
//! 1. Substitute `n = m + n0`. If every coefficient of the shifted
//!    polynomial is nonnegative, `P(m + n0) >= 0` for all `m >= 0`.
//! 2. Otherwise take the Cauchy bound `B = ceil(1 + max |c_i / c_d|)`. No real
//!    root exceeds `B` in absolute value, so the leading coefficient fixes
//!    the sign of `P(n)` for `n >= B`, and `[n0, B]` is scanned exhaustively.
//!
//! Either way the result is a [`PositivityCertificate`] that
//! [`PositivityCertificate::verify`] rechecks from scratch.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::{ExactError, PolynomialQ, Rational};

/// Largest number of integer points a finite scan may visit.
pub const MAX_SCAN_POINTS: u64 = 5_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "n", rename_all = "snake_case")]
pub enum CertificateKind {
    ShiftedCoefficientsNonnegative,
    RootBoundPlusFiniteScan,
    CounterexampleAt(i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityCertificate {
    pub kind: CertificateKind,
    /// The substitution `n = m + shift` of route 1 (always `n0`).
    pub shift: i64,
    /// Cauchy bound of route 2; equals `shift` when route 1 succeeded.
    pub bound: i64,
    /// Inclusive range of integers evaluated; empty when `lo > hi`.
    pub scanned_range: (i64, i64),
}

impl PositivityCertificate {
    pub fn is_nonnegative(&self) -> bool {
        !matches!(self.kind, CertificateKind::CounterexampleAt(_))
    }

    pub fn counterexample(&self) -> Option<i64> {
        match self.kind {
            CertificateKind::CounterexampleAt(n) => Some(n),
            _ => None,
        }
    }

    /// Rechecks the certificate against `p` and `n0` using exact arithmetic
    /// only. Negative certificates are checked for minimality too.
    pub fn verify(&self, p: &PolynomialQ, n0: i64) -> Result<(), ExactError> {
        let fail = |msg: String| Err(ExactError::CertificateMismatch(msg));
        if self.shift != n0 {
            return fail(format!("shift {} does not match start {n0}", self.shift));
        }
        let eval = IntegerEvaluator::new(p);
        match self.kind {
            CertificateKind::ShiftedCoefficientsNonnegative => {
                if !p.shift_int(n0).has_nonnegative_coeffs() {
                    return fail(format!("P(m + {n0}) has a negative coefficient"));
                }
            }
            CertificateKind::RootBoundPlusFiniteScan => {
                let lead_positive = p.leading().is_some_and(Signed::is_positive);
                if !lead_positive {
                    return fail("leading coefficient is not positive".into());
                }
                if cauchy_bound(p)? != self.bound {
                    return fail(format!("bound {} is not the Cauchy bound", self.bound));
                }
                if self.scanned_range != (n0, self.bound) {
                    return fail("scanned range does not cover [n0, bound]".into());
                }
                for n in n0..=self.bound {
                    if eval.sign_at(n).is_negative() {
                        return fail(format!("P({n}) < 0"));
                    }
                }
            }
            CertificateKind::CounterexampleAt(at) => {
                if at < n0 || !eval.sign_at(at).is_negative() {
                    return fail(format!("P({at}) is not a negative value on the ray"));
                }
                if let Some(n) = (n0..at).find(|&n| eval.sign_at(n).is_negative()) {
                    return fail(format!("smaller counterexample at {n}"));
                }
            }
        }
        Ok(())
    }
}

/// Decides whether `p(n) >= 0` for all integers `n >= n0`. The zero
/// polynomial counts as nonnegative.
pub fn poly_nonneg_on_ray(p: &PolynomialQ, n0: i64) -> Result<PositivityCertificate, ExactError> {
    if p.shift_int(n0).has_nonnegative_coeffs() {
        return Ok(PositivityCertificate {
            kind: CertificateKind::ShiftedCoefficientsNonnegative,
            shift: n0,
            bound: n0,
            scanned_range: (n0, n0 - 1),
        });
    }
    let bound = cauchy_bound(p)?;
    let lead_positive = p.leading().is_some_and(Signed::is_positive);
    // With a negative leading coefficient P(bound + 1) < 0, so the scan
    // always terminates with a counterexample.
    let hi = if lead_positive {
        bound
    } else {
        bound.max(n0) + 1
    };
    let points = (hi as i128 - n0 as i128 + 1).max(0) as u128;
    if points > MAX_SCAN_POINTS as u128 {
        return Err(ExactError::ScanBudgetExceeded {
            points,
            limit: MAX_SCAN_POINTS,
        });
    }
    let eval = IntegerEvaluator::new(p);
    if let Some(n) = (n0..=hi).find(|&n| eval.sign_at(n).is_negative()) {
        return Ok(PositivityCertificate {
            kind: CertificateKind::CounterexampleAt(n),
            shift: n0,
            bound,
            scanned_range: (n0, n),
        });
    }
    debug_assert!(lead_positive);
    Ok(PositivityCertificate {
        kind: CertificateKind::RootBoundPlusFiniteScan,
        shift: n0,
        bound,
        scanned_range: (n0, bound),
    })
}

/// `D * p - 1` where `D` clears the denominators of `p`. On integers
/// `D * p(n)` is an integer, so `p(n) > 0` iff `D * p(n) - 1 >= 0`.
pub fn strict_positivity_form(p: &PolynomialQ) -> PolynomialQ {
    let d = Rational::from_integer(p.denominator_lcm());
    &p.scale(&d) - &PolynomialQ::one()
}

/// `ceil(1 + max_i |c_i / c_d|)`; 0 for constants.
fn cauchy_bound(p: &PolynomialQ) -> Result<i64, ExactError> {
    let Some(deg) = p.degree() else {
        return Ok(0);
    };
    if deg == 0 {
        return Ok(0);
    }
    let lead = p.coeffs()[deg].abs();
    let max = p.coeffs()[..deg]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    let b = (Rational::one() + max).ceil().to_integer();
    b.to_i64().ok_or(ExactError::ScanBudgetExceeded {
        points: u128::MAX,
        limit: MAX_SCAN_POINTS,
    })
}

/// Evaluates the integer-cleared polynomial; the sign equals the sign of `p`.
struct IntegerEvaluator {
    coeffs: Vec<BigInt>,
}

impl IntegerEvaluator {
    fn new(p: &PolynomialQ) -> Self {
        let mut coeffs = p.cleared_integer_coeffs();
        let g = coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_zero() && !g.is_one() {
            for c in &mut coeffs {
                *c /= &g;
            }
        }
        IntegerEvaluator { coeffs }
    }

    fn sign_at(&self, n: i64) -> BigInt {
        let x = BigInt::from(n);
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * &x + c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shifted_coefficients_route() {
        let p = PolynomialQ::from_ints(&[-72, 36]);
        let cert = poly_nonneg_on_ray(&p, 2).unwrap();
        assert_eq!(cert.kind, CertificateKind::ShiftedCoefficientsNonnegative);
        cert.verify(&p, 2).unwrap();
        let one = PolynomialQ::one();
        assert_eq!(
            poly_nonneg_on_ray(&one, 0).unwrap().kind,
            CertificateKind::ShiftedCoefficientsNonnegative
        );
        assert!(poly_nonneg_on_ray(&PolynomialQ::zero(), -5).unwrap().is_nonnegative());
    }

    #[test]
    fn least_counterexample() {
        let p = PolynomialQ::from_ints(&[1, -10, 1]);
        let cert = poly_nonneg_on_ray(&p, 0).unwrap();
        assert_eq!(cert.kind, CertificateKind::CounterexampleAt(1));
        cert.verify(&p, 0).unwrap();
    }

    #[test]
    fn root_bound_scan_route() {
        // (n - 3)^2 = n^2 - 6n + 9 touches zero at 3
        let p = PolynomialQ::from_ints(&[9, -6, 1]);
        let cert = poly_nonneg_on_ray(&p, 0).unwrap();
        assert_eq!(cert.kind, CertificateKind::RootBoundPlusFiniteScan);
        assert_eq!(cert.bound, 10);
        cert.verify(&p, 0).unwrap();
        let mut forged = cert.clone();
        forged.bound = 2;
        assert!(forged.verify(&p, 0).is_err());
    }

    #[test]
    fn negative_leading_coefficient_always_fails() {
        let p = PolynomialQ::from_ints(&[1000, 0, -1]);
        let cert = poly_nonneg_on_ray(&p, 0).unwrap();
        assert_eq!(cert.kind, CertificateKind::CounterexampleAt(32));
        let c = PolynomialQ::from_ints(&[-1]);
        assert_eq!(poly_nonneg_on_ray(&c, 7).unwrap().kind, CertificateKind::CounterexampleAt(7));
    }

    #[test]
    fn strict_form() {
        let p = PolynomialQ::from_ints(&[0, 3]);
        assert_eq!(
            poly_nonneg_on_ray(&strict_positivity_form(&p), 0).unwrap().kind,
            CertificateKind::CounterexampleAt(0)
        );
        assert!(poly_nonneg_on_ray(&strict_positivity_form(&p), 1).unwrap().is_nonnegative());
    }
}
