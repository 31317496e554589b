//! Exact arithmetic: big integers and rationals, polynomials and rational
//! functions over Q, cross-power comparisons and the nonnegativity-on-a-ray
//! decision procedure.
//!
//! Everything here is exact. There is no floating point anywhere in the
//! crate's decision paths.

mod compare;
mod poly;
mod positivity;
mod ratfun;

pub use compare::{compare_power_products, digit_estimate, pow_compare, DigitBudget};
pub use poly::PolynomialQ;
pub use positivity::{
    poly_nonneg_on_ray, strict_positivity_form, CertificateKind, PositivityCertificate,
    MAX_SCAN_POINTS,
};
pub use ratfun::RationalFunctionQ;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Normalized arbitrary-precision fraction (`gcd(|num|, den) = 1`, `den >= 1`).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("cannot parse `{token}` as a rational number")]
    ParseRational { token: String },
    #[error("parse error at offset {offset} near `{token}`: {message}")]
    ParseExpression {
        offset: usize,
        token: String,
        message: String,
    },
    #[error("empty coefficient list")]
    EmptyCoefficients,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("finite scan of {points} points exceeds the limit of {limit}")]
    ScanBudgetExceeded { points: u128, limit: u64 },
    #[error("certificate does not replay: {0}")]
    CertificateMismatch(String),
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `p/q` form, always with an explicit denominator.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Integers plainly, everything else as `p/q`.
pub fn format_rational_compact(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format_rational(q)
    }
}

/// Parses `p`, `p/q` or a finite decimal such as `-1.25`. Surrounding
/// whitespace and a leading `+` are accepted.
pub fn parse_rational(token: &str) -> Result<Rational, ExactError> {
    let err = || ExactError::ParseRational {
        token: token.to_string(),
    };
    let s = token.trim();
    let s = s.strip_prefix('+').unwrap_or(s);
    if s.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = s.split_once('/') {
        let q = q.trim();
        if q.starts_with('-') {
            return Err(err());
        }
        let p = parse_decimal(p.trim()).ok_or_else(err)?;
        let q = parse_decimal(q).ok_or_else(err)?;
        if q.is_zero() {
            return Err(err());
        }
        return Ok(p / q);
    }
    parse_decimal(s).ok_or_else(err)
}

fn parse_decimal(s: &str) -> Option<Rational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let (whole, frac) = match body.split_once('.') {
        Some((w, f)) => (w, f),
        None => (body, ""),
    };
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits = format!("{whole}{frac}");
    let numer: BigInt = if digits.is_empty() {
        BigInt::zero()
    } else {
        digits.parse().ok()?
    };
    let denom = num_traits::pow(BigInt::from(10u32), frac.len());
    let q = Rational::new(numer, denom);
    Some(if neg { -q } else { q })
}

/// Exact integer `n` choose `k` (zero when `k > n`).
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Row `n` of Pascal's triangle, `C(n, 0..=n)`.
pub fn binomial_row(n: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(n as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for k in 0..n {
        c = c * (n - k) / (k + 1);
        row.push(c.clone());
    }
    row
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn rational_pow(q: &Rational, e: u64) -> Rational {
    let e = usize::try_from(e).expect("exponent fits in usize");
    Rational::new_raw(num_traits::pow(q.numer().clone(), e), num_traits::pow(q.denom().clone(), e))
}

pub fn is_positive(q: &Rational) -> bool {
    q.is_positive()
}

/// Serde adapters that carry rationals as `"p/q"` strings.
pub mod serde_q {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let raw = String::deserialize(d)?;
        parse_rational(&raw).map_err(serde::de::Error::custom)
    }

    pub mod vec {
        use super::*;
        use serde::ser::SerializeSeq;

        pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(v.len()))?;
            for q in v {
                seq.serialize_element(&format_rational(q))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
            let raw = Vec::<String>::deserialize(d)?;
            raw.iter()
                .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
                .collect()
        }
    }

    pub mod pair {
        use super::*;

        pub fn serialize<S: Serializer>(v: &(Rational, Rational), s: S) -> Result<S::Ok, S::Error> {
            super::vec::serialize(&[v.0.clone(), v.1.clone()], s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(
            d: D,
        ) -> Result<(Rational, Rational), D::Error> {
            let v = super::vec::deserialize(d)?;
            match <[Rational; 2]>::try_from(v) {
                Ok([a, b]) => Ok((a, b)),
                Err(v) => Err(serde::de::Error::invalid_length(v.len(), &"two initial values")),
            }
        }
    }
}
