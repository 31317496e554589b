//! Certificates: claims about a sequence, the hypotheses they rest on and
//! enough data to rebuild and recheck every hypothesis.
//!
//! A certificate is produced by one of the engines below and is trusted
//! only through [`replay`], which
//!
//! 1. rebuilds the certificate from its [`Derivation`] and the stored
//!    sequence source, requiring an identical result, and
//! 2. rechecks every hypothesis on its own, recursing into nested
//!    certificates.

mod convolution;
mod p23;
mod t21;

pub use convolution::{certify_convolution, certify_dirichlet};
pub use p23::{
    certify_p23, delta_rational_function, nu_candidates, nu_grid_offsets, search_nu, LambdaBound, NuWitness,
};
pub use t21::{certify_root_monotone_t21, certify_root_monotone_t21_with, Mode, T21Options, Tail};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checks::{check, CheckError, Property, Verdict, Window};
use crate::exact::{
    compare_power_products, format_rational, serde_q, DigitBudget, ExactError, PolynomialQ,
    PositivityCertificate, Rational,
};
use crate::sequences::{
    ConvolutionKind, DirichletSpec, SequenceError, SequenceHandle, SequenceSource, ThreeTermSpec,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Theorem {
    T21i,
    T21ii,
    T21iii,
    T21iiiRemB,
    P23,
    P29,
    DP,
    T28,
    /// Finite exhaustive scan, no theorem involved.
    DirectScan,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Scope {
    /// Property indices `from..=to`.
    Window { from: u64, to: u64 },
    /// Every property index `n >= from`.
    Ray { from: u64 },
}

impl Scope {
    pub fn start(&self) -> u64 {
        match self {
            Scope::Window { from, .. } | Scope::Ray { from } => *from,
        }
    }

    pub fn end(&self) -> Option<u64> {
        match self {
            Scope::Window { to, .. } => Some(*to),
            Scope::Ray { .. } => None,
        }
    }

    /// Largest scope contained in both.
    pub fn intersect(&self, other: &Scope) -> Option<Scope> {
        let from = self.start().max(other.start());
        match (self.end(), other.end()) {
            (None, None) => Some(Scope::Ray { from }),
            (Some(to), None) | (None, Some(to)) => (from <= to).then_some(Scope::Window { from, to }),
            (Some(a), Some(b)) => {
                let to = a.min(b);
                (from <= to).then_some(Scope::Window { from, to })
            }
        }
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Window { from, to } => write!(f, "[{from}, {to}]"),
            Scope::Ray { from } => write!(f, "n >= {from}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub property: Property,
    pub scope: Scope,
    pub strict: bool,
    pub statement: String,
}

impl Claim {
    fn new(property: Property, scope: Scope, strict: bool, sequence: &str) -> Self {
        let kind = if strict { "strictly " } else { "" };
        let what = match property {
            Property::LogConvex => "log-convex".to_string(),
            Property::LogConcave => "log-concave".to_string(),
            Property::RootIncreasing => "n-th root increasing".to_string(),
            Property::RootDecreasing => "n-th root decreasing".to_string(),
            Property::RootRatioIncreasing => "n-th root ratio increasing".to_string(),
            Property::RootRatioDecreasing => "n-th root ratio decreasing".to_string(),
        };
        Claim {
            property,
            scope,
            strict,
            statement: format!("{sequence} is {kind}{what} at indices {scope}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    LessEq,
    #[serde(rename = "=")]
    Equal,
    #[serde(rename = ">=")]
    GreaterEq,
    #[serde(rename = ">")]
    Greater,
}

impl Relation {
    pub fn admits(self, ord: Ordering) -> bool {
        match self {
            Relation::Less => ord == Ordering::Less,
            Relation::LessEq => ord != Ordering::Greater,
            Relation::Equal => ord == Ordering::Equal,
            Relation::GreaterEq => ord != Ordering::Less,
            Relation::Greater => ord == Ordering::Greater,
        }
    }
}

/// `z_index ^ exponent`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PowerTerm {
    pub index: u64,
    pub exponent: u64,
}

pub(crate) fn pt(index: u64, exponent: u64) -> PowerTerm {
    PowerTerm { index, exponent }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermValue {
    pub index: u64,
    #[serde(with = "serde_q")]
    pub value: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Hypothesis {
    /// Exhaustive window check on the certificate's sequence.
    Scan {
        label: String,
        property: Property,
        window: Window,
        strict: bool,
    },
    /// `prod lhs  <relation>  prod rhs`; an empty product is 1.
    Relation {
        label: String,
        lhs: Vec<PowerTerm>,
        relation: Relation,
        rhs: Vec<PowerTerm>,
        values: Vec<TermValue>,
    },
    /// `polynomial(n) >= 0` for every integer `n >= from`.
    Positivity {
        label: String,
        polynomial: PolynomialQ,
        from: i64,
        certificate: PositivityCertificate,
    },
    /// The certificate's sequence obeys `spec` from `spec.start` on.
    SameRecurrence { label: String, spec: ThreeTermSpec },
    /// Exact evaluation of a closed-form identity at `n`.
    Identity {
        label: String,
        n: u64,
        #[serde(with = "serde_q")]
        lhs: Rational,
        #[serde(with = "serde_q")]
        rhs: Rational,
    },
    DirichletData {
        label: String,
        spec: DirichletSpec,
        distinct_lambdas: bool,
    },
    Nested {
        label: String,
        certificate: Box<Certificate>,
    },
}

impl Hypothesis {
    pub fn label(&self) -> &str {
        match self {
            Hypothesis::Scan { label, .. }
            | Hypothesis::Relation { label, .. }
            | Hypothesis::Positivity { label, .. }
            | Hypothesis::SameRecurrence { label, .. }
            | Hypothesis::Identity { label, .. }
            | Hypothesis::DirichletData { label, .. }
            | Hypothesis::Nested { label, .. } => label,
        }
    }
}

/// The engine call that produced a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "engine", rename_all = "snake_case")]
pub enum Derivation {
    T21 {
        #[serde(rename = "N")]
        n: u64,
        horizon: u64,
        mode: Mode,
        options: T21Options,
    },
    P23 {
        witness: NuWitness,
        n0: i64,
    },
    Convolution {
        kind: ConvolutionKind,
        x: Box<Certificate>,
        y: Box<Certificate>,
    },
    Dirichlet {
        strict: bool,
    },
    DirectScan {
        property: Property,
        window: Window,
        strict: bool,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem: Theorem,
    pub claim: Claim,
    pub sequence: SequenceSource,
    pub hypotheses: Vec<Hypothesis>,
    pub derivation: Derivation,
    pub version: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertifyError {
    #[error("hypothesis `{label}` failed: {detail}")]
    HypothesisFailed {
        label: String,
        detail: String,
        counterexample: Option<i64>,
        verdict: Option<Box<Verdict>>,
    },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("replay mismatch: {0}")]
    ReplayMismatch(String),
    #[error(transparent)]
    Check(#[from] CheckError),
    #[error(transparent)]
    Sequence(#[from] SequenceError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl CertifyError {
    fn failed(label: &str, detail: impl Into<String>) -> Self {
        CertifyError::HypothesisFailed {
            label: label.to_string(),
            detail: detail.into(),
            counterexample: None,
            verdict: None,
        }
    }

    /// Label of the failing hypothesis, if this is a hypothesis failure.
    pub fn failed_label(&self) -> Option<&str> {
        match self {
            CertifyError::HypothesisFailed { label, .. } => Some(label),
            _ => None,
        }
    }

    /// True for digit-budget refusals anywhere underneath.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            CertifyError::Check(CheckError::BudgetExceeded { .. })
                | CertifyError::Exact(ExactError::ScanBudgetExceeded { .. })
        )
    }
}

/// Runs a scan hypothesis and records it.
pub(crate) fn scan_hypothesis(
    s: &SequenceHandle,
    label: &str,
    property: Property,
    window: Window,
    strict: bool,
) -> Result<Hypothesis, CertifyError> {
    let v = check(s, property, window, strict, DigitBudget::default())?;
    if !v.holds {
        let bad = v.first_violation.as_ref().expect("failing verdict has a violation");
        return Err(CertifyError::HypothesisFailed {
            label: label.to_string(),
            detail: format!(
                "{property} fails at index {} (lhs - rhs = {})",
                bad.index,
                format_rational(&bad.difference)
            ),
            counterexample: Some(bad.index as i64),
            verdict: Some(Box::new(v)),
        });
    }
    Ok(Hypothesis::Scan {
        label: label.to_string(),
        property,
        window,
        strict,
    })
}

/// Evaluates a relation hypothesis and records the term values it read.
pub(crate) fn relation_hypothesis(
    s: &SequenceHandle,
    label: &str,
    lhs: Vec<PowerTerm>,
    relation: Relation,
    rhs: Vec<PowerTerm>,
) -> Result<Hypothesis, CertifyError> {
    let mut values = BTreeMap::new();
    for t in lhs.iter().chain(&rhs) {
        if let std::collections::btree_map::Entry::Vacant(e) = values.entry(t.index) {
            e.insert(s.value_at(t.index)?);
        }
    }
    let side = |ts: &[PowerTerm]| -> Vec<(&Rational, u64)> {
        ts.iter().map(|t| (&values[&t.index], t.exponent)).collect()
    };
    let ord = compare_power_products(&side(&lhs), &side(&rhs), DigitBudget::unlimited())
        .expect("unlimited budget");
    if !relation.admits(ord) {
        return Err(CertifyError::failed(
            label,
            format!("expected {relation:?}, found {ord:?}"),
        ));
    }
    let values = values
        .into_iter()
        .map(|(index, value)| TermValue { index, value })
        .collect();
    Ok(Hypothesis::Relation {
        label: label.to_string(),
        lhs,
        relation,
        rhs,
        values,
    })
}

pub(crate) fn positivity_hypothesis(
    label: &str,
    polynomial: PolynomialQ,
    from: i64,
) -> Result<Hypothesis, CertifyError> {
    let certificate = crate::exact::poly_nonneg_on_ray(&polynomial, from)?;
    if let Some(n) = certificate.counterexample() {
        return Err(CertifyError::HypothesisFailed {
            label: label.to_string(),
            detail: format!(
                "{polynomial} is negative at n = {n} ({})",
                format_rational(&polynomial.eval_int(n))
            ),
            counterexample: Some(n),
            verdict: None,
        });
    }
    Ok(Hypothesis::Positivity {
        label: label.to_string(),
        polynomial,
        from,
        certificate,
    })
}

/// A certificate backed by nothing but an exhaustive window scan.
pub fn certify_direct(
    s: &SequenceHandle,
    property: Property,
    window: Window,
    strict: bool,
) -> Result<Certificate, CertifyError> {
    let h = scan_hypothesis(s, "direct scan", property, window, strict)?;
    Ok(Certificate {
        theorem: Theorem::DirectScan,
        claim: Claim::new(
            property,
            Scope::Window {
                from: window.from,
                to: window.to,
            },
            strict,
            s.name(),
        ),
        sequence: s.source().clone(),
        hypotheses: vec![h],
        derivation: Derivation::DirectScan {
            property,
            window,
            strict,
        },
        version: VERSION.to_string(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReplayReport {
    pub theorem: Theorem,
    pub claim: Claim,
    pub hypotheses_checked: usize,
    pub replayed: bool,
}

/// Rebuilds the certificate from its derivation and rechecks every
/// hypothesis independently.
pub fn replay(cert: &Certificate) -> Result<ReplayReport, CertifyError> {
    let mut rebuilt = rebuild(cert)?;
    rebuilt.version.clone_from(&cert.version);
    if &rebuilt != cert {
        return Err(CertifyError::ReplayMismatch(first_difference(cert, &rebuilt)));
    }
    let s = SequenceHandle::from_source(&cert.sequence)?;
    let mut checked = 0;
    for h in &cert.hypotheses {
        checked += verify_hypothesis(&s, h)?;
    }
    Ok(ReplayReport {
        theorem: cert.theorem,
        claim: cert.claim.clone(),
        hypotheses_checked: checked,
        replayed: true,
    })
}

fn rebuild(cert: &Certificate) -> Result<Certificate, CertifyError> {
    let s = || SequenceHandle::from_source(&cert.sequence);
    match &cert.derivation {
        Derivation::T21 {
            n,
            horizon,
            mode,
            options,
        } => certify_root_monotone_t21_with(&s()?, *n, *horizon, *mode, options.clone()),
        Derivation::P23 { witness, n0 } => match &cert.sequence {
            SequenceSource::ThreeTerm(spec) => certify_p23(spec, witness, *n0),
            _ => Err(CertifyError::ReplayMismatch(
                "P23 certificate over a non three-term sequence".into(),
            )),
        },
        Derivation::Convolution { kind, x, y } => certify_convolution(x, y, *kind),
        Derivation::Dirichlet { strict } => match &cert.sequence {
            SequenceSource::Dirichlet(spec) => certify_dirichlet(spec, *strict),
            _ => Err(CertifyError::ReplayMismatch(
                "Dirichlet certificate over a non-Dirichlet sequence".into(),
            )),
        },
        Derivation::DirectScan {
            property,
            window,
            strict,
        } => certify_direct(&s()?, *property, *window, *strict),
    }
}

fn first_difference(stored: &Certificate, rebuilt: &Certificate) -> String {
    if stored.theorem != rebuilt.theorem {
        return format!("theorem {} vs rebuilt {}", stored.theorem, rebuilt.theorem);
    }
    if stored.claim != rebuilt.claim {
        return format!(
            "claim `{}` vs rebuilt `{}`",
            stored.claim.statement, rebuilt.claim.statement
        );
    }
    if stored.hypotheses.len() != rebuilt.hypotheses.len() {
        return format!(
            "{} hypotheses vs {} rebuilt",
            stored.hypotheses.len(),
            rebuilt.hypotheses.len()
        );
    }
    for (a, b) in stored.hypotheses.iter().zip(&rebuilt.hypotheses) {
        if a != b {
            return format!("hypothesis `{}` differs from the rebuilt one", a.label());
        }
    }
    "certificate differs from the rebuilt one".into()
}

/// Returns the number of hypotheses checked, nested ones included.
fn verify_hypothesis(s: &SequenceHandle, h: &Hypothesis) -> Result<usize, CertifyError> {
    match h {
        Hypothesis::Scan {
            label,
            property,
            window,
            strict,
        } => {
            scan_hypothesis(s, label, *property, *window, *strict)?;
        }
        Hypothesis::Relation {
            label,
            lhs,
            relation,
            rhs,
            values,
        } => {
            let again = relation_hypothesis(s, label, lhs.clone(), *relation, rhs.clone())?;
            if let Hypothesis::Relation { values: v, .. } = again {
                if &v != values {
                    return Err(CertifyError::ReplayMismatch(format!(
                        "recorded term values of `{label}` do not match the sequence"
                    )));
                }
            }
        }
        Hypothesis::Positivity {
            label,
            polynomial,
            from,
            certificate,
        } => {
            certificate.verify(polynomial, *from)?;
            if !certificate.is_nonnegative() {
                return Err(CertifyError::failed(label, "certificate records a counterexample"));
            }
        }
        Hypothesis::SameRecurrence { label, spec } => verify_same_recurrence(s, label, spec)?,
        Hypothesis::Identity { label, n, lhs, rhs } => {
            if lhs != rhs {
                return Err(CertifyError::failed(label, format!("sides differ at n = {n}")));
            }
            if let SequenceSource::Dirichlet(spec) = s.source() {
                let (l, r) = crate::checks::thm28_sides(spec, *n)?;
                if (&l, &r) != (lhs, rhs) {
                    return Err(CertifyError::ReplayMismatch(format!(
                        "`{label}` does not re-evaluate to the recorded sides"
                    )));
                }
            }
        }
        Hypothesis::DirichletData {
            label,
            spec,
            distinct_lambdas,
        } => {
            spec.validate()?;
            if *distinct_lambdas && !spec.has_distinct_lambdas() {
                return Err(CertifyError::failed(label, "lambda values are not distinct"));
            }
        }
        Hypothesis::Nested { certificate, .. } => {
            return Ok(1 + replay(certificate)?.hypotheses_checked);
        }
    }
    Ok(1)
}

/// The sequence is a catalog family generated by the same recurrence, and
/// its terms at `start`, `start + 1` are its initial values.
pub(crate) fn verify_same_recurrence(
    s: &SequenceHandle,
    label: &str,
    spec: &ThreeTermSpec,
) -> Result<(), CertifyError> {
    let SequenceSource::Family { family, .. } = s.source() else {
        return Err(CertifyError::failed(label, "sequence is not a catalog family"));
    };
    let Some(own) = family.three_term_spec() else {
        return Err(CertifyError::failed(
            label,
            format!("{family} is not generated by a three-term recurrence"),
        ));
    };
    if (own.a.clone(), own.b.clone(), own.c.clone()) != (spec.a.clone(), spec.b.clone(), spec.c.clone())
    {
        return Err(CertifyError::failed(label, "coefficients differ from the family's recurrence"));
    }
    if spec.start < own.start {
        return Err(CertifyError::failed(label, "spec starts before the family's recurrence"));
    }
    let z = s.terms(spec.start, spec.start + 1)?;
    if (z[0].clone(), z[1].clone()) != spec.initial {
        return Err(CertifyError::failed(
            label,
            format!("initial values differ from z_{} and z_{}", spec.start, spec.start + 1),
        ));
    }
    Ok(())
}
