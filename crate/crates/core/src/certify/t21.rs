//! Root monotonicity from log-convexity (log-concavity).
//!
//! With `N = 0` the hypotheses are `z_0 <= 1` (`>= 1`) and log-convexity
//! (log-concavity) from index 1. With `N >= 1` they are the boundary
//! comparison of `z_N^(1/N)` with `z_{N+1}^(1/(N+1))`, or `z_N^2` against
//! `z_{N+1}` in the weaker variant, together with log-convexity
//! (log-concavity) from `N + 1`.
//!
//! A scan on `[N+1, N+h]` supports a root claim on `[N, N+h-1]`. A
//! three-term tail certificate upgrades the claim to a ray.

use serde::{Deserialize, Serialize};

use super::{
    certify_p23, pt, relation_hypothesis, scan_hypothesis, verify_same_recurrence, Certificate,
    CertifyError, Claim, Derivation, Hypothesis, NuWitness, PowerTerm, Relation, Scope, Theorem,
    VERSION,
};
use crate::checks::{Property, Window};
use crate::sequences::{SequenceHandle, ThreeTermSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// Log-convex, root increasing.
    ConvexInc,
    /// Log-concave, root decreasing.
    ConcaveDec,
}

impl Mode {
    fn properties(self) -> (Property, Property) {
        match self {
            Mode::ConvexInc => (Property::LogConvex, Property::RootIncreasing),
            Mode::ConcaveDec => (Property::LogConcave, Property::RootDecreasing),
        }
    }
}

/// Three-term recurrence data proving log-convexity on a ray.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tail {
    pub spec: ThreeTermSpec,
    pub witness: NuWitness,
    pub n0: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct T21Options {
    /// Also scan the root property directly on `[direct_from, N-1]`.
    pub direct_from: Option<u64>,
    /// Use `z_N^2` vs `z_{N+1}` as the boundary condition.
    pub remark_b: bool,
    pub tail: Option<Tail>,
}

pub fn certify_root_monotone_t21(
    s: &SequenceHandle,
    n: u64,
    horizon: u64,
    mode: Mode,
) -> Result<Certificate, CertifyError> {
    certify_root_monotone_t21_with(s, n, horizon, mode, T21Options::default())
}

pub fn certify_root_monotone_t21_with(
    s: &SequenceHandle,
    n: u64,
    horizon: u64,
    mode: Mode,
    options: T21Options,
) -> Result<Certificate, CertifyError> {
    let (log_prop, root_prop) = mode.properties();
    if horizon < 2 {
        return Err(CertifyError::InvalidInput("horizon must be at least 2".into()));
    }
    let convex = mode == Mode::ConvexInc;
    let mut hyps = Vec::new();

    let claim_from = match options.direct_from {
        Some(d) if d >= n || d == 0 => {
            return Err(CertifyError::InvalidInput(format!(
                "direct scan start {d} must lie in [1, N-1] for N = {n}"
            )));
        }
        Some(d) => {
            let w = Window::new(d, n - 1);
            hyps.push(scan_hypothesis(s, &format!("direct {root_prop} on {w}"), root_prop, w, true)?);
            d
        }
        None => n.max(1),
    };

    let (theorem, strict) = if n == 0 {
        if options.remark_b {
            return Err(CertifyError::InvalidInput("the z_N^2 boundary needs N >= 1".into()));
        }
        if s.support() != 0 {
            return Err(CertifyError::InvalidInput(format!(
                "N = 0 needs z_0, but {} starts at {}",
                s.name(),
                s.support()
            )));
        }
        let (label, rel) = if convex { ("z_0 <= 1", Relation::LessEq) } else { ("z_0 >= 1", Relation::GreaterEq) };
        hyps.push(relation_hypothesis(s, label, vec![pt(0, 1)], rel, vec![])?);
        let strictness: [(&str, Vec<PowerTerm>, Relation, Vec<PowerTerm>); 2] = if convex {
            [
                ("z_1^2 < z_0 z_2", vec![pt(1, 2)], Relation::Less, vec![pt(0, 1), pt(2, 1)]),
                ("z_0 < 1", vec![pt(0, 1)], Relation::Less, vec![]),
            ]
        } else {
            [
                ("z_0 > 1", vec![pt(0, 1)], Relation::Greater, vec![]),
                ("z_1^2 > z_0 z_2", vec![pt(1, 2)], Relation::Greater, vec![pt(0, 1), pt(2, 1)]),
            ]
        };
        let mut strict = false;
        for (label, lhs, rel, rhs) in strictness {
            if let Ok(h) = relation_hypothesis(s, label, lhs, rel, rhs) {
                hyps.push(h);
                strict = true;
                break;
            }
        }
        (if convex { Theorem::T21i } else { Theorem::T21ii }, strict)
    } else {
        if n < s.support() {
            return Err(CertifyError::InvalidInput(format!(
                "N = {n} is below the support of {}",
                s.name()
            )));
        }
        let rel = if convex { Relation::Less } else { Relation::Greater };
        let sym = if convex { "<" } else { ">" };
        if options.remark_b {
            let label = format!("z_{n}^2 {sym} z_{}", n + 1);
            hyps.push(relation_hypothesis(s, &label, vec![pt(n, 2)], rel, vec![pt(n + 1, 1)])?);
            if n >= 2 {
                let (label, side) = if convex {
                    (format!("z_{n} >= 1"), Relation::GreaterEq)
                } else {
                    (format!("z_{n} <= 1"), Relation::LessEq)
                };
                hyps.push(relation_hypothesis(s, &label, vec![pt(n, 1)], side, vec![])?);
            }
            (Theorem::T21iiiRemB, true)
        } else {
            let label = format!("z_{n}^{} {sym} z_{}^{n}", n + 1, n + 1);
            hyps.push(relation_hypothesis(
                s,
                &label,
                vec![pt(n, n + 1)],
                rel,
                vec![pt(n + 1, n)],
            )?);
            (Theorem::T21iii, true)
        }
    };

    let scan = Window::new(n + 1, n + horizon);
    hyps.push(scan_hypothesis(s, &format!("{log_prop} on {scan}"), log_prop, scan, false)?);

    let mut scope = Scope::Window {
        from: claim_from,
        to: n + horizon - 1,
    };
    if let Some(tail) = &options.tail {
        if !convex {
            return Err(CertifyError::InvalidInput(
                "a three-term tail certifies log-convexity only".into(),
            ));
        }
        verify_same_recurrence(s, "same recurrence", &tail.spec)?;
        let nested = certify_p23(&tail.spec, &tail.witness, tail.n0)?;
        let tail_from = nested.claim.scope.start();
        if tail_from > n + 1 {
            return Err(CertifyError::InvalidInput(format!(
                "the tail is log-convex from {tail_from}, after N + 1 = {}",
                n + 1
            )));
        }
        hyps.push(Hypothesis::SameRecurrence {
            label: "same recurrence".into(),
            spec: tail.spec.clone(),
        });
        hyps.push(Hypothesis::Nested {
            label: format!("{log_prop} for n >= {tail_from}"),
            certificate: Box::new(nested),
        });
        scope = Scope::Ray { from: claim_from };
    }
    Ok(Certificate {
        theorem,
        claim: Claim::new(root_prop, scope, strict, s.name()),
        sequence: s.source().clone(),
        hypotheses: hyps,
        derivation: Derivation::T21 {
            n,
            horizon,
            mode,
            options,
        },
        version: VERSION.to_string(),
    })
}
