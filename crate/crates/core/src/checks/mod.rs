//! Exact window checks.
//!
//! Every check compares two exact quantities per index, `lhs` and `rhs`, and
//! the property holds at `n` iff `lhs >= rhs` (`lhs > rhs` when strict):
//!
//! | property         | reads          | lhs                                   | rhs                     |
//! |------------------|----------------|---------------------------------------|-------------------------|
//! | `log-convex`     | `n-1, n, n+1`  | `z_{n-1} z_{n+1}`                     | `z_n^2`                 |
//! | `log-concave`    | `n-1, n, n+1`  | `z_n^2`                               | `z_{n-1} z_{n+1}`       |
//! | `root-inc`       | `n, n+1`       | `z_{n+1}^n`                           | `z_n^{n+1}`             |
//! | `root-dec`       | `n, n+1`       | `z_n^{n+1}`                           | `z_{n+1}^n`             |
//! | `root-ratio-inc` | `n, n+1, n+2`  | `z_{n+2}^{n(n+1)} z_n^{(n+1)(n+2)}`   | `z_{n+1}^{2n(n+2)}`     |
//! | `root-ratio-dec` | `n, n+1, n+2`  | `z_{n+1}^{2n(n+2)}`                   | `z_{n+2}^{n(n+1)} z_n^{(n+1)(n+2)}` |
//!
//! No roots are ever taken. Terms are fetched sequentially (the memo is
//! append-only) and the comparisons run in parallel; the reported violation
//! is always the least failing index.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exact::{
    compare_power_products, format_rational, pow_compare, rational_pow, serde_q, DigitBudget,
    Rational,
};
use crate::sequences::{DirichletSpec, SequenceError, SequenceHandle};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    pub from: u64,
    pub to: u64,
}

impl Window {
    pub fn new(from: u64, to: u64) -> Self {
        Window { from, to }
    }

    pub fn len(&self) -> u64 {
        (self.to + 1).saturating_sub(self.from)
    }

    pub fn is_empty(&self) -> bool {
        self.to < self.from
    }

    pub fn contains(&self, other: &Window) -> bool {
        self.from <= other.from && other.to <= self.to
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.from, self.to)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Property {
    #[serde(rename = "log-convex")]
    LogConvex,
    #[serde(rename = "log-concave")]
    LogConcave,
    #[serde(rename = "root-inc")]
    RootIncreasing,
    #[serde(rename = "root-dec")]
    RootDecreasing,
    #[serde(rename = "root-ratio-inc")]
    RootRatioIncreasing,
    #[serde(rename = "root-ratio-dec")]
    RootRatioDecreasing,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::LogConvex,
        Property::LogConcave,
        Property::RootIncreasing,
        Property::RootDecreasing,
        Property::RootRatioIncreasing,
        Property::RootRatioDecreasing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::LogConvex => "log-convex",
            Property::LogConcave => "log-concave",
            Property::RootIncreasing => "root-inc",
            Property::RootDecreasing => "root-dec",
            Property::RootRatioIncreasing => "root-ratio-inc",
            Property::RootRatioDecreasing => "root-ratio-dec",
        }
    }

    /// Offsets `(before, after)` of the terms read at index `n`.
    pub fn reach(self) -> (u64, u64) {
        match self {
            Property::LogConvex | Property::LogConcave => (1, 1),
            Property::RootIncreasing | Property::RootDecreasing => (0, 1),
            Property::RootRatioIncreasing | Property::RootRatioDecreasing => (0, 2),
        }
    }

    /// Smallest admissible window start for a sequence with this support.
    pub fn min_index(self, support: u64) -> u64 {
        match self {
            Property::LogConvex | Property::LogConcave => support + 1,
            _ => support.max(1),
        }
    }

    pub fn is_root_property(self) -> bool {
        !matches!(self, Property::LogConvex | Property::LogConcave)
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = Property::ALL.iter().map(|p| p.name()).collect();
                format!("unknown property `{s}` (expected one of {})", names.join(", "))
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Increasing,
    Decreasing,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub index: u64,
    #[serde(with = "serde_q")]
    pub lhs: Rational,
    #[serde(with = "serde_q")]
    pub rhs: Rational,
    /// `lhs - rhs`: negative, or zero for a strict check.
    #[serde(with = "serde_q")]
    pub difference: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: Property,
    pub window: Window,
    pub holds: bool,
    pub strict: bool,
    pub first_violation: Option<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("term z_{index} = {value} is not positive")]
    NonpositiveTerm { index: u64, value: String },
    #[error("comparison at index {index} needs about {digits} digits, over the budget of {budget}")]
    BudgetExceeded { index: u64, digits: u64, budget: u64 },
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
}

pub fn check_log_convex(s: &SequenceHandle, w: Window, strict: bool) -> Result<Verdict, CheckError> {
    check(s, Property::LogConvex, w, strict, DigitBudget::default())
}

pub fn check_log_concave(s: &SequenceHandle, w: Window, strict: bool) -> Result<Verdict, CheckError> {
    check(s, Property::LogConcave, w, strict, DigitBudget::default())
}

pub fn check_root_increasing(
    s: &SequenceHandle,
    w: Window,
    strict: bool,
) -> Result<Verdict, CheckError> {
    check(s, Property::RootIncreasing, w, strict, DigitBudget::default())
}

pub fn check_root_decreasing(
    s: &SequenceHandle,
    w: Window,
    strict: bool,
) -> Result<Verdict, CheckError> {
    check(s, Property::RootDecreasing, w, strict, DigitBudget::default())
}

pub fn check_root_ratio_monotone(
    s: &SequenceHandle,
    w: Window,
    direction: Direction,
    strict: bool,
    budget: DigitBudget,
) -> Result<Verdict, CheckError> {
    let p = match direction {
        Direction::Increasing => Property::RootRatioIncreasing,
        Direction::Decreasing => Property::RootRatioDecreasing,
    };
    check(s, p, w, strict, budget)
}

/// Validates `w` for `property` on `s`.
pub fn validate_window(s: &SequenceHandle, property: Property, w: Window) -> Result<(), CheckError> {
    if w.from > w.to {
        return Err(CheckError::InvalidWindow(format!("from {} > to {}", w.from, w.to)));
    }
    let min = property.min_index(s.support());
    if w.from < min {
        return Err(CheckError::InvalidWindow(format!(
            "{property} on {} starts at {}, but needs index >= {min} (support {})",
            s.name(),
            w.from,
            s.support()
        )));
    }
    Ok(())
}

/// Generic entry point behind the named checks.
pub fn check(
    s: &SequenceHandle,
    property: Property,
    w: Window,
    strict: bool,
    budget: DigitBudget,
) -> Result<Verdict, CheckError> {
    validate_window(s, property, w)?;
    let (before, after) = property.reach();
    let base = w.from - before;
    let terms = s.terms(base, w.to + after)?;
    if let Some((i, z)) = terms.iter().enumerate().find(|(_, z)| !z.is_positive()) {
        return Err(CheckError::NonpositiveTerm {
            index: base + i as u64,
            value: format_rational(z),
        });
    }
    let z = |k: u64| &terms[(k - base) as usize];
    let failing = (w.from..=w.to).into_par_iter().find_map_first(|n| {
        match compare_at(property, n, &z, budget) {
            Ok(ord) if passes(ord, strict) => None,
            Ok(_) => Some(Ok(n)),
            Err(e) => Some(Err(e)),
        }
    });
    let first_violation = match failing {
        None => None,
        Some(Err(e)) => return Err(e),
        Some(Ok(n)) => {
            let (lhs, rhs) = sides_at(property, n, &z);
            let difference = &lhs - &rhs;
            Some(Violation {
                index: n,
                lhs,
                rhs,
                difference,
            })
        }
    };
    Ok(Verdict {
        property,
        window: w,
        holds: first_violation.is_none(),
        strict,
        first_violation,
    })
}

fn passes(ord: Ordering, strict: bool) -> bool {
    match ord {
        Ordering::Greater => true,
        Ordering::Equal => !strict,
        Ordering::Less => false,
    }
}

fn compare_at<'a>(
    property: Property,
    n: u64,
    z: &impl Fn(u64) -> &'a Rational,
    budget: DigitBudget,
) -> Result<Ordering, CheckError> {
    Ok(match property {
        Property::LogConvex => (z(n - 1) * z(n + 1)).cmp(&(z(n) * z(n))),
        Property::LogConcave => (z(n) * z(n)).cmp(&(z(n - 1) * z(n + 1))),
        Property::RootIncreasing => pow_compare(z(n + 1), n, z(n), n + 1),
        Property::RootDecreasing => pow_compare(z(n), n + 1, z(n + 1), n),
        Property::RootRatioIncreasing | Property::RootRatioDecreasing => {
            let (outer, middle) = root_ratio_factors(n, z);
            let ord = compare_power_products(&outer, &middle, budget).map_err(|digits| {
                CheckError::BudgetExceeded {
                    index: n,
                    digits,
                    budget: budget.0.unwrap_or(u64::MAX),
                }
            })?;
            if property == Property::RootRatioIncreasing {
                ord
            } else {
                ord.reverse()
            }
        }
    })
}

type Factors<'a> = Vec<(&'a Rational, u64)>;

fn root_ratio_factors<'a>(n: u64, z: &impl Fn(u64) -> &'a Rational) -> (Factors<'a>, Factors<'a>) {
    (
        vec![(z(n + 2), n * (n + 1)), (z(n), (n + 1) * (n + 2))],
        vec![(z(n + 1), 2 * n * (n + 2))],
    )
}

fn sides_at<'a>(property: Property, n: u64, z: &impl Fn(u64) -> &'a Rational) -> (Rational, Rational) {
    let product = |fs: &[(&Rational, u64)]| -> Rational {
        fs.iter()
            .map(|(q, e)| rational_pow(q, *e))
            .fold(Rational::from_integer(1.into()), |a, b| a * b)
    };
    match property {
        Property::LogConvex => (z(n - 1) * z(n + 1), z(n) * z(n)),
        Property::LogConcave => (z(n) * z(n), z(n - 1) * z(n + 1)),
        Property::RootIncreasing => (rational_pow(z(n + 1), n), rational_pow(z(n), n + 1)),
        Property::RootDecreasing => (rational_pow(z(n), n + 1), rational_pow(z(n + 1), n)),
        Property::RootRatioIncreasing => {
            let (outer, middle) = root_ratio_factors(n, z);
            (product(&outer), product(&middle))
        }
        Property::RootRatioDecreasing => {
            let (outer, middle) = root_ratio_factors(n, z);
            (product(&middle), product(&outer))
        }
    }
}

/// Order of `z_i^(1/i)` against `z_j^(1/j)`, by comparing `z_i^j` with `z_j^i`.
pub fn compare_roots(s: &SequenceHandle, i: u64, j: u64) -> Result<Ordering, CheckError> {
    if i == 0 || j == 0 {
        return Err(CheckError::InvalidWindow("roots are indexed from 1".into()));
    }
    let (zi, zj) = (s.value_at(i)?, s.value_at(j)?);
    for (k, v) in [(i, &zi), (j, &zj)] {
        if !v.is_positive() {
            return Err(CheckError::NonpositiveTerm {
                index: k,
                value: format_rational(v),
            });
        }
    }
    Ok(pow_compare(&zi, j, &zj, i))
}

/// Both sides of the identity
/// `z_{n+1} z_{n-1} - z_n^2 = sum_{i<j} alpha_i alpha_j (lambda_i - lambda_j)^2 / (lambda_i lambda_j)^{n+1}`.
pub fn thm28_sides(spec: &DirichletSpec, n: u64) -> Result<(Rational, Rational), CheckError> {
    spec.validate()?;
    if n == 0 {
        return Err(CheckError::InvalidWindow("the identity needs n >= 1".into()));
    }
    let lhs = spec.value_at(n + 1) * spec.value_at(n - 1) - spec.value_at(n) * spec.value_at(n);
    let t = &spec.terms;
    let mut rhs = Rational::zero();
    for i in 0..t.len() {
        for j in i + 1..t.len() {
            let d = &t[i].lambda - &t[j].lambda;
            let num = &t[i].alpha * &t[j].alpha * &d * &d;
            rhs += num / rational_pow(&(&t[i].lambda * &t[j].lambda), n + 1);
        }
    }
    Ok((lhs, rhs))
}

/// Left side minus right side of the identity above; exactly zero.
pub fn thm28_identity_check(spec: &DirichletSpec, n: u64) -> Result<Rational, CheckError> {
    let (lhs, rhs) = thm28_sides(spec, n)?;
    Ok(lhs - rhs)
}
