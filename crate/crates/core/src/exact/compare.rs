use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::One;

use super::Rational;

/// Upper limit on the decimal size of either side of a cross-power
/// comparison. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DigitBudget(pub Option<u64>);

impl DigitBudget {
    pub const DEFAULT_DIGITS: u64 = 10_000_000;

    pub fn unlimited() -> Self {
        DigitBudget(None)
    }

    pub fn digits(limit: u64) -> Self {
        DigitBudget(Some(limit))
    }
}

impl Default for DigitBudget {
    fn default() -> Self {
        DigitBudget(Some(Self::DEFAULT_DIGITS))
    }
}

/// Exact order of `x^p` against `y^q`.
///
/// Denominators are positive, so the comparison is done on the integers
/// `num(x)^p * den(y)^q` and `num(y)^q * den(x)^p`. No roots are taken.
pub fn pow_compare(x: &Rational, p: u64, y: &Rational, q: u64) -> Ordering {
    compare_power_products(&[(x, p)], &[(y, q)], DigitBudget::unlimited())
        .expect("unlimited budget")
}

/// Upper estimate of the decimal digits of `prod base^exp` after clearing
/// denominators, computed from bit lengths only.
pub fn digit_estimate(lhs: &[(&Rational, u64)], rhs: &[(&Rational, u64)]) -> u64 {
    let side = |own: &[(&Rational, u64)], other: &[(&Rational, u64)]| -> u128 {
        let nums: u128 = own
            .iter()
            .map(|(b, e)| b.numer().bits() as u128 * *e as u128)
            .sum();
        let dens: u128 = other
            .iter()
            .map(|(b, e)| b.denom().bits() as u128 * *e as u128)
            .sum();
        nums + dens
    };
    let bits = side(lhs, rhs).max(side(rhs, lhs));
    // log10(2) < 0.30103
    let digits = bits * 30103 / 100000 + 1;
    u64::try_from(digits).unwrap_or(u64::MAX)
}

/// Compares `prod lhs_i^e_i` against `prod rhs_j^f_j` exactly. The empty
/// product is 1. Returns the estimated digit count when the budget would be
/// exceeded; nothing is computed in that case.
pub fn compare_power_products(
    lhs: &[(&Rational, u64)],
    rhs: &[(&Rational, u64)],
    budget: DigitBudget,
) -> Result<Ordering, u64> {
    if let DigitBudget(Some(limit)) = budget {
        let est = digit_estimate(lhs, rhs);
        if est > limit {
            return Err(est);
        }
    }
    let mut left = BigInt::one();
    let mut right = BigInt::one();
    for (b, e) in lhs {
        left *= int_pow(b.numer(), *e);
        right *= int_pow(b.denom(), *e);
    }
    for (b, e) in rhs {
        right *= int_pow(b.numer(), *e);
        left *= int_pow(b.denom(), *e);
    }
    Ok(left.cmp(&right))
}

fn int_pow(b: &BigInt, e: u64) -> BigInt {
    num_traits::pow(b.clone(), usize::try_from(e).expect("exponent fits in usize"))
}
