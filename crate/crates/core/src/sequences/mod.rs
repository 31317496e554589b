//! Exact, lazily generated sequences.
//!
//! A [`SequenceHandle`] is a cheap-to-clone reference to an append-only
//! memo of terms plus the rule that extends it. Every handle remembers the
//! [`SequenceSource`] it was built from, so certificates can name a sequence
//! and a replay can rebuild it.

mod catalog;
mod spec;

pub use catalog::{catalog, catalog_with, BesselOrder, CatalogOptions, FamilyId, FamilyInfo};
pub use spec::{
    convolve_dp, convolve_dp_squared, from_dirichlet, from_three_term, ConvolutionKind,
    DirichletSpec, DirichletTerm, ElementarySequence, SequenceSource, ThreeTermSpec,
};

use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("{sequence}: index {index} is below the support start {support}")]
    IndexBelowSupport {
        sequence: String,
        index: u64,
        support: u64,
    },
    #[error("{sequence}: index {index} is past the last defined term {last}")]
    IndexPastEnd {
        sequence: String,
        index: u64,
        last: u64,
    },
    #[error("{sequence}: exact division failed at index {index} ({numerator} / {divisor})")]
    ExactDivisionFailure {
        sequence: String,
        index: u64,
        numerator: String,
        divisor: String,
    },
    #[error("three-term recurrence: coefficient {which}({index}) = {value} is not positive")]
    NonpositiveCoefficient {
        which: char,
        index: u64,
        value: String,
    },
    #[error("{what} must be positive, got {value}")]
    NonpositiveInitialValue { what: String, value: String },
    #[error("Dirichlet spec has no terms")]
    EmptySpec,
    #[error("Dirichlet spec: {0}")]
    InvalidDirichlet(String),
    #[error("convolution needs both sequences defined from index 0 (supports {x} and {y})")]
    SupportMismatch { x: u64, y: u64 },
    #[error("unknown sequence family `{0}`")]
    UnknownFamily(String),
}

type IntStep = Box<dyn FnMut(u64, &[BigInt]) -> Result<BigInt, SequenceError> + Send>;
type RatStep = Box<dyn FnMut(u64, &[Rational]) -> Result<Rational, SequenceError> + Send>;

/// Integer families keep integers internally and widen at the interface.
enum Memo {
    Int { terms: Vec<BigInt>, step: IntStep },
    Rat { terms: Vec<Rational>, step: RatStep },
}

impl Memo {
    fn len(&self) -> usize {
        match self {
            Memo::Int { terms, .. } => terms.len(),
            Memo::Rat { terms, .. } => terms.len(),
        }
    }

    fn get(&self, i: usize) -> Rational {
        match self {
            Memo::Int { terms, .. } => Rational::from_integer(terms[i].clone()),
            Memo::Rat { terms, .. } => terms[i].clone(),
        }
    }

    fn push_next(&mut self, n: u64) -> Result<(), SequenceError> {
        match self {
            Memo::Int { terms, step } => {
                let v = step(n, terms)?;
                terms.push(v);
            }
            Memo::Rat { terms, step } => {
                let v = step(n, terms)?;
                terms.push(v);
            }
        }
        Ok(())
    }
}

struct Inner {
    source: SequenceSource,
    name: String,
    support: u64,
    last: Option<u64>,
    integer: bool,
    memo: Mutex<Memo>,
}

/// Lazy, memoizing, exact generator. `value_at` is deterministic and the
/// memo only ever grows; concurrent callers are serialized on an internal
/// lock.
#[derive(Clone)]
pub struct SequenceHandle(Arc<Inner>);

impl fmt::Debug for SequenceHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SequenceHandle")
            .field("name", &self.0.name)
            .field("support", &self.0.support)
            .finish()
    }
}

impl SequenceHandle {
    fn new(source: SequenceSource, name: String, support: u64, memo: Memo) -> Self {
        let integer = matches!(memo, Memo::Int { .. });
        SequenceHandle(Arc::new(Inner {
            source,
            name,
            support,
            last: None,
            integer,
            memo: Mutex::new(memo),
        }))
    }

    fn integer(
        source: SequenceSource,
        name: impl Into<String>,
        support: u64,
        step: impl FnMut(u64, &[BigInt]) -> Result<BigInt, SequenceError> + Send + 'static,
    ) -> Self {
        let memo = Memo::Int {
            terms: Vec::new(),
            step: Box::new(step),
        };
        Self::new(source, name.into(), support, memo)
    }

    fn rational(
        source: SequenceSource,
        name: impl Into<String>,
        support: u64,
        step: impl FnMut(u64, &[Rational]) -> Result<Rational, SequenceError> + Send + 'static,
    ) -> Self {
        let memo = Memo::Rat {
            terms: Vec::new(),
            step: Box::new(step),
        };
        Self::new(source, name.into(), support, memo)
    }

    fn finite(source: SequenceSource, name: impl Into<String>, values: Vec<Rational>) -> Self {
        let last = (values.len() as u64).checked_sub(1);
        let mut seed = values.into_iter();
        let memo = Memo::Rat {
            terms: Vec::new(),
            step: Box::new(move |_, _| Ok(seed.next().expect("guarded by last"))),
        };
        let mut inner = Inner {
            source,
            name: name.into(),
            support: 0,
            last,
            integer: false,
            memo: Mutex::new(memo),
        };
        if inner.last.is_none() {
            // An empty list has no valid index at all.
            inner.support = 1;
            inner.last = Some(0);
        }
        SequenceHandle(Arc::new(inner))
    }

    /// Rebuilds a handle from its description.
    pub fn from_source(source: &SequenceSource) -> Result<Self, SequenceError> {
        spec::build(source)
    }

    pub fn source(&self) -> &SequenceSource {
        &self.0.source
    }

    /// Short human-readable identifier.
    pub fn name(&self) -> &str {
        &self.0.name
    }

    /// Minimal valid index.
    pub fn support(&self) -> u64 {
        self.0.support
    }

    pub fn is_integer_valued(&self) -> bool {
        self.0.integer
    }

    pub fn value_at(&self, n: u64) -> Result<Rational, SequenceError> {
        self.check_index(n)?;
        let mut memo = self.0.memo.lock().expect("sequence memo poisoned");
        let want = (n - self.0.support) as usize;
        while memo.len() <= want {
            let next = self.0.support + memo.len() as u64;
            memo.push_next(next)?;
        }
        Ok(memo.get(want))
    }

    /// Terms `from..=to`, computed in one pass under the lock.
    pub fn terms(&self, from: u64, to: u64) -> Result<Vec<Rational>, SequenceError> {
        if to < from {
            return Ok(Vec::new());
        }
        self.check_index(from)?;
        self.value_at(to)?;
        let memo = self.0.memo.lock().expect("sequence memo poisoned");
        let base = self.0.support;
        Ok((from..=to).map(|n| memo.get((n - base) as usize)).collect())
    }

    fn check_index(&self, n: u64) -> Result<(), SequenceError> {
        if n < self.0.support {
            return Err(SequenceError::IndexBelowSupport {
                sequence: self.0.name.clone(),
                index: n,
                support: self.0.support,
            });
        }
        if let Some(last) = self.0.last {
            if n > last {
                return Err(SequenceError::IndexPastEnd {
                    sequence: self.0.name.clone(),
                    index: n,
                    last,
                });
            }
        }
        Ok(())
    }
}

/// `num / den` for integers, failing loudly when the division is inexact.
fn exact_div(
    sequence: &str,
    index: u64,
    num: BigInt,
    den: &BigInt,
) -> Result<BigInt, SequenceError> {
    use num_integer::Integer;
    use num_traits::Zero;
    let (q, r) = num.div_rem(den);
    if !r.is_zero() || den.is_zero() {
        return Err(SequenceError::ExactDivisionFailure {
            sequence: sequence.to_string(),
            index,
            numerator: num.to_string(),
            divisor: den.to_string(),
        });
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn memo_is_stable_and_shared_between_clones() {
        let s = catalog(FamilyId::Bell);
        let t = s.clone();
        assert_eq!(s.value_at(10).unwrap(), int(115975));
        assert_eq!(t.value_at(10).unwrap(), int(115975));
        assert_eq!(s.terms(3, 5).unwrap(), vec![int(5), int(15), int(52)]);
    }

    #[test]
    fn concurrent_readers_agree() {
        let s = catalog(FamilyId::Partition);
        let out: Vec<_> = std::thread::scope(|scope| {
            let hs: Vec<_> = (0..4)
                .map(|k| {
                    let s = s.clone();
                    scope.spawn(move || s.value_at(150 + k).unwrap())
                })
                .collect();
            hs.into_iter().map(|h| h.join().unwrap()).collect()
        });
        let seq = catalog(FamilyId::Partition);
        for (k, v) in out.iter().enumerate() {
            assert_eq!(v, &seq.value_at(150 + k as u64).unwrap());
        }
    }

    #[test]
    fn below_support_is_an_error() {
        let s = catalog(FamilyId::Primes);
        assert!(matches!(s.value_at(0), Err(SequenceError::IndexBelowSupport { support: 1, .. })));
    }

    #[test]
    fn exact_division_reports_failure() {
        let r = exact_div("x", 3, BigInt::from(7), &BigInt::from(2));
        assert!(matches!(r, Err(SequenceError::ExactDivisionFailure { index: 3, .. })));
    }
}
