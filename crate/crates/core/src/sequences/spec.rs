//! Structural sequence descriptions and the constructors behind them.
//!
//! A spec file is one JSON object tagged by `kind`:
//!
//! ```json
//! {"kind": "family", "family": "bell"}
//! {"kind": "three_term", "a": ["1", "1"], "b": ["1", "2"], "c": ["0", "3"],
//!  "start": 0, "initial": ["1/1", "1/1"]}
//! {"kind": "dirichlet", "terms": [{"alpha": "1", "lambda": "1"}, {"alpha": "1", "lambda": "2"}]}
//! {"kind": "elementary", "sequence": {"name": "geometric", "ratio": "2"}}
//! {"kind": "terms", "values": ["1", "2", "5/2"]}
//! {"kind": "convolution", "convolution": "squared", "x": {...}, "y": {...}}
//! ```
//!
//! Polynomial coefficients are listed from the constant term up.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{catalog_with, CatalogOptions, FamilyId, SequenceError, SequenceHandle};
use crate::exact::{
    binomial_row, factorial, format_rational, rational_pow, serde_q, PolynomialQ, Rational,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SequenceSource {
    Family {
        family: FamilyId,
        #[serde(default, skip_serializing_if = "CatalogOptions::is_default")]
        options: CatalogOptions,
    },
    ThreeTerm(ThreeTermSpec),
    Dirichlet(DirichletSpec),
    Elementary {
        sequence: ElementarySequence,
    },
    Terms {
        #[serde(with = "serde_q::vec")]
        values: Vec<Rational>,
    },
    Convolution {
        convolution: ConvolutionKind,
        x: Box<SequenceSource>,
        y: Box<SequenceSource>,
    },
}

impl SequenceSource {
    pub fn family(family: FamilyId) -> Self {
        SequenceSource::Family {
            family,
            options: CatalogOptions::default(),
        }
    }

    /// Resolves a bare name: a catalog family or one of the elementary
    /// sequences (`ones`, `delta`, `natural`, `factorial`).
    pub fn from_name(name: &str) -> Result<Self, SequenceError> {
        match name.parse::<ElementarySequence>() {
            Ok(sequence) => Ok(SequenceSource::Elementary { sequence }),
            Err(_) => Ok(Self::family(name.parse()?)),
        }
    }
}

/// `a(n) z_{n+1} = b(n) z_n + c(n) z_{n-1}` for `n >= start + 1`, seeded
/// with `z_start` and `z_{start+1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThreeTermSpec {
    pub a: PolynomialQ,
    pub b: PolynomialQ,
    pub c: PolynomialQ,
    #[serde(default)]
    pub start: u64,
    #[serde(with = "serde_q::pair")]
    pub initial: (Rational, Rational),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirichletTerm {
    #[serde(with = "serde_q")]
    pub alpha: Rational,
    #[serde(with = "serde_q")]
    pub lambda: Rational,
}

/// `z_n = sum_k alpha_k / lambda_k^n` over finitely many terms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DirichletSpec {
    pub terms: Vec<DirichletTerm>,
}

impl DirichletSpec {
    pub fn new(pairs: impl IntoIterator<Item = (Rational, Rational)>) -> Self {
        DirichletSpec {
            terms: pairs
                .into_iter()
                .map(|(alpha, lambda)| DirichletTerm { alpha, lambda })
                .collect(),
        }
    }

    pub fn validate(&self) -> Result<(), SequenceError> {
        if self.terms.is_empty() {
            return Err(SequenceError::EmptySpec);
        }
        for (k, t) in self.terms.iter().enumerate() {
            if t.alpha.is_negative() {
                return Err(SequenceError::InvalidDirichlet(format!(
                    "alpha[{k}] = {} is negative",
                    format_rational(&t.alpha)
                )));
            }
            if !t.lambda.is_positive() {
                return Err(SequenceError::InvalidDirichlet(format!(
                    "lambda[{k}] = {} is not positive",
                    format_rational(&t.lambda)
                )));
            }
        }
        Ok(())
    }

    /// At least two distinct `lambda_k` carrying positive weight.
    pub fn has_distinct_lambdas(&self) -> bool {
        let mut it = self.terms.iter().filter(|t| t.alpha.is_positive());
        match it.next() {
            Some(first) => it.any(|t| t.lambda != first.lambda),
            None => false,
        }
    }

    pub fn value_at(&self, n: u64) -> Rational {
        self.terms
            .iter()
            .map(|t| &t.alpha / rational_pow(&t.lambda, n))
            .sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "snake_case", deny_unknown_fields)]
pub enum ElementarySequence {
    /// `1, 1, 1, ...`
    Ones,
    /// `1, 0, 0, ...`
    Delta,
    /// `z_n = n`
    Natural,
    /// `z_n = n!`
    Factorial,
    /// `z_n = ratio^n`
    Geometric {
        #[serde(with = "serde_q")]
        ratio: Rational,
    },
    Constant {
        #[serde(with = "serde_q")]
        value: Rational,
    },
}

impl ElementarySequence {
    pub fn name(&self) -> String {
        match self {
            ElementarySequence::Ones => "ones".into(),
            ElementarySequence::Delta => "delta".into(),
            ElementarySequence::Natural => "natural".into(),
            ElementarySequence::Factorial => "factorial".into(),
            ElementarySequence::Geometric { ratio } => format!("geometric({})", format_rational(ratio)),
            ElementarySequence::Constant { value } => format!("constant({})", format_rational(value)),
        }
    }

    fn value_at(&self, n: u64) -> Rational {
        match self {
            ElementarySequence::Ones => Rational::one(),
            ElementarySequence::Delta if n == 0 => Rational::one(),
            ElementarySequence::Delta => Rational::zero(),
            ElementarySequence::Natural => Rational::from_integer(BigInt::from(n)),
            ElementarySequence::Factorial => Rational::from_integer(factorial(n)),
            ElementarySequence::Geometric { ratio } => rational_pow(ratio, n),
            ElementarySequence::Constant { value } => value.clone(),
        }
    }
}

impl FromStr for ElementarySequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ones" | "all_ones" | "all-ones" => Ok(ElementarySequence::Ones),
            "delta" => Ok(ElementarySequence::Delta),
            "natural" | "n" => Ok(ElementarySequence::Natural),
            "factorial" => Ok(ElementarySequence::Factorial),
            _ => Err(SequenceError::UnknownFamily(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConvolutionKind {
    /// `sum_k C(n,k) x_k y_{n-k}`
    Plain,
    /// `sum_k C(n,k)^2 x_k y_{n-k}`
    Squared,
}

impl FromStr for ConvolutionKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "plain" => Ok(ConvolutionKind::Plain),
            "squared" => Ok(ConvolutionKind::Squared),
            _ => Err(format!("unknown convolution kind `{s}` (plain|squared)")),
        }
    }
}

pub(super) fn build(source: &SequenceSource) -> Result<SequenceHandle, SequenceError> {
    match source {
        SequenceSource::Family { family, options } => Ok(catalog_with(*family, *options)),
        SequenceSource::ThreeTerm(spec) => from_three_term(spec),
        SequenceSource::Dirichlet(spec) => from_dirichlet(spec),
        SequenceSource::Elementary { sequence } => {
            let seq = sequence.clone();
            Ok(SequenceHandle::rational(
                source.clone(),
                sequence.name(),
                0,
                move |n, _| Ok(seq.value_at(n)),
            ))
        }
        SequenceSource::Terms { values } => Ok(SequenceHandle::finite(
            source.clone(),
            "terms",
            values.clone(),
        )),
        SequenceSource::Convolution { convolution, x, y } => {
            convolve(&build(x)?, &build(y)?, *convolution)
        }
    }
}

pub fn from_three_term(spec: &ThreeTermSpec) -> Result<SequenceHandle, SequenceError> {
    for (what, v) in [("z_start", &spec.initial.0), ("z_start+1", &spec.initial.1)] {
        if !v.is_positive() {
            return Err(SequenceError::NonpositiveInitialValue {
                what: what.to_string(),
                value: format_rational(v),
            });
        }
    }
    let m = spec.start;
    let s = spec.clone();
    let handle = SequenceHandle::rational(
        SequenceSource::ThreeTerm(spec.clone()),
        "three_term",
        m,
        move |n, z| {
            if n == m {
                return Ok(s.initial.0.clone());
            }
            if n == m + 1 {
                return Ok(s.initial.1.clone());
            }
            let k = n - 1;
            let at = |p: &PolynomialQ, which: char| {
                let v = p.eval_int(k as i64);
                if v.is_positive() {
                    Ok(v)
                } else {
                    Err(SequenceError::NonpositiveCoefficient {
                        which,
                        index: k,
                        value: format_rational(&v),
                    })
                }
            };
            let (a, b, c) = (at(&s.a, 'a')?, at(&s.b, 'b')?, at(&s.c, 'c')?);
            let i = (k - m) as usize;
            Ok((b * &z[i] + c * &z[i - 1]) / a)
        },
    );
    Ok(handle)
}

pub fn from_dirichlet(spec: &DirichletSpec) -> Result<SequenceHandle, SequenceError> {
    spec.validate()?;
    let s = spec.clone();
    Ok(SequenceHandle::rational(
        SequenceSource::Dirichlet(spec.clone()),
        "dirichlet",
        0,
        move |n, _| Ok(s.value_at(n)),
    ))
}

pub fn convolve_dp(x: &SequenceHandle, y: &SequenceHandle) -> Result<SequenceHandle, SequenceError> {
    convolve(x, y, ConvolutionKind::Plain)
}

pub fn convolve_dp_squared(
    x: &SequenceHandle,
    y: &SequenceHandle,
) -> Result<SequenceHandle, SequenceError> {
    convolve(x, y, ConvolutionKind::Squared)
}

fn convolve(
    x: &SequenceHandle,
    y: &SequenceHandle,
    kind: ConvolutionKind,
) -> Result<SequenceHandle, SequenceError> {
    if x.support() != 0 || y.support() != 0 {
        return Err(SequenceError::SupportMismatch {
            x: x.support(),
            y: y.support(),
        });
    }
    let source = SequenceSource::Convolution {
        convolution: kind,
        x: Box::new(x.source().clone()),
        y: Box::new(y.source().clone()),
    };
    let name = match kind {
        ConvolutionKind::Plain => format!("dp({}, {})", x.name(), y.name()),
        ConvolutionKind::Squared => format!("dp2({}, {})", x.name(), y.name()),
    };
    let (x, y) = (x.clone(), y.clone());
    Ok(SequenceHandle::rational(source, name, 0, move |n, _| {
        let xs = x.terms(0, n)?;
        let ys = y.terms(0, n)?;
        let row = binomial_row(n);
        Ok(row
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let w = match kind {
                    ConvolutionKind::Plain => c.clone(),
                    ConvolutionKind::Squared => c * c,
                };
                Rational::from_integer(w) * &xs[k] * &ys[n as usize - k]
            })
            .sum())
    }))
}
