//! Log-convexity carried through binomial convolutions, and log-convexity
//! of finite Dirichlet-type sums.

use super::{
    replay, scan_hypothesis, Certificate, CertifyError, Claim, Derivation, Hypothesis, Scope,
    Theorem, VERSION,
};
use crate::checks::{thm28_sides, Property, Window};
use crate::sequences::{
    convolve_dp, convolve_dp_squared, from_dirichlet, ConvolutionKind, DirichletSpec,
    SequenceHandle,
};

/// Terms re-checked directly on the convolution: property indices `1..=SPOT`.
const SPOT: u64 = 30;

/// Largest `n` at which the Dirichlet identity is evaluated.
const IDENTITY_POINTS: u64 = 10;

pub fn certify_convolution(
    x_cert: &Certificate,
    y_cert: &Certificate,
    kind: ConvolutionKind,
) -> Result<Certificate, CertifyError> {
    for (name, c) in [("x", x_cert), ("y", y_cert)] {
        if c.claim.property != Property::LogConvex {
            return Err(CertifyError::failed(
                &format!("{name} is log-convex"),
                format!("the {name} certificate claims {}", c.claim.property),
            ));
        }
        if c.claim.scope.start() > 1 {
            return Err(CertifyError::failed(
                &format!("{name} is log-convex"),
                format!("the {name} certificate starts at index {}", c.claim.scope.start()),
            ));
        }
        replay(c)?;
    }
    let scope = x_cert
        .claim
        .scope
        .intersect(&y_cert.claim.scope)
        .expect("both scopes start at or before 1");
    let scope = match scope {
        Scope::Window { to, .. } => Scope::Window { from: 1, to },
        Scope::Ray { .. } => Scope::Ray { from: 1 },
    };
    let x = SequenceHandle::from_source(&x_cert.sequence)?;
    let y = SequenceHandle::from_source(&y_cert.sequence)?;
    let (z, theorem) = match kind {
        ConvolutionKind::Plain => (convolve_dp(&x, &y)?, Theorem::DP),
        ConvolutionKind::Squared => (convolve_dp_squared(&x, &y)?, Theorem::P29),
    };
    let spot = Window::new(1, SPOT);
    let hyps = vec![
        Hypothesis::Nested {
            label: "x is log-convex".into(),
            certificate: Box::new(x_cert.clone()),
        },
        Hypothesis::Nested {
            label: "y is log-convex".into(),
            certificate: Box::new(y_cert.clone()),
        },
        scan_hypothesis(&z, &format!("spot check on {spot}"), Property::LogConvex, spot, false)?,
    ];
    Ok(Certificate {
        theorem,
        claim: Claim::new(Property::LogConvex, scope, false, z.name()),
        sequence: z.source().clone(),
        hypotheses: hyps,
        derivation: Derivation::Convolution {
            kind,
            x: Box::new(x_cert.clone()),
            y: Box::new(y_cert.clone()),
        },
        version: VERSION.to_string(),
    })
}

pub fn certify_dirichlet(spec: &DirichletSpec, strict: bool) -> Result<Certificate, CertifyError> {
    let z = from_dirichlet(spec)?;
    if strict && !spec.has_distinct_lambdas() {
        return Err(CertifyError::failed(
            "distinct lambdas",
            "a strict claim needs two positive-weight terms with different lambda",
        ));
    }
    let mut hyps = vec![Hypothesis::DirichletData {
        label: "alpha >= 0, lambda > 0".into(),
        spec: spec.clone(),
        distinct_lambdas: strict,
    }];
    for n in 1..=IDENTITY_POINTS {
        let (lhs, rhs) = thm28_sides(spec, n)?;
        let label = format!("identity at n = {n}");
        if lhs != rhs {
            return Err(CertifyError::failed(&label, "sides differ"));
        }
        hyps.push(Hypothesis::Identity { label, n, lhs, rhs });
    }
    Ok(Certificate {
        theorem: Theorem::T28,
        claim: Claim::new(Property::LogConvex, Scope::Ray { from: 1 }, strict, z.name()),
        sequence: z.source().clone(),
        hypotheses: hyps,
        derivation: Derivation::Dirichlet { strict },
        version: VERSION.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certify::certify_direct;
    use crate::exact::int;
    use crate::sequences::{catalog, ElementarySequence, FamilyId, SequenceSource};

    fn ones() -> SequenceHandle {
        SequenceHandle::from_source(&SequenceSource::Elementary {
            sequence: ElementarySequence::Ones,
        })
        .unwrap()
    }

    fn window_cert(s: &SequenceHandle) -> Certificate {
        certify_direct(s, Property::LogConvex, Window::new(1, 120), false).unwrap()
    }

    #[test]
    fn g_and_domb() {
        let cb = window_cert(&catalog(FamilyId::CentralBinomial));
        let one = window_cert(&ones());
        let g = certify_convolution(&cb, &one, ConvolutionKind::Squared).unwrap();
        assert_eq!(g.theorem, Theorem::P29);
        assert_eq!(g.claim.scope, Scope::Window { from: 1, to: 120 });
        let gs = SequenceHandle::from_source(&g.sequence).unwrap();
        assert_eq!(gs.terms(0, 6).unwrap(), catalog(FamilyId::GSeq).terms(0, 6).unwrap());
        replay(&g).unwrap();
        let d = certify_convolution(&cb, &cb, ConvolutionKind::Squared).unwrap();
        let ds = SequenceHandle::from_source(&d.sequence).unwrap();
        assert_eq!(ds.terms(0, 5).unwrap(), catalog(FamilyId::Domb).terms(0, 5).unwrap());
    }

    #[test]
    fn powers_of_two() {
        let one = window_cert(&ones());
        let c = certify_convolution(&one, &one, ConvolutionKind::Plain).unwrap();
        assert_eq!(c.theorem, Theorem::DP);
        assert!(!c.claim.strict);
        let s = SequenceHandle::from_source(&c.sequence).unwrap();
        assert_eq!(s.value_at(10).unwrap(), int(1024));
    }

    #[test]
    fn rejects_non_convex_inputs() {
        let p = catalog(FamilyId::Partition);
        let concave = certify_direct(&p, Property::LogConcave, Window::new(26, 60), true).unwrap();
        let one = window_cert(&ones());
        assert!(certify_convolution(&concave, &one, ConvolutionKind::Plain).is_err());
    }

    #[test]
    fn dirichlet_certificates() {
        let spec = DirichletSpec::new([(int(1), int(1)), (int(2), int(3))]);
        let c = certify_dirichlet(&spec, true).unwrap();
        assert_eq!(c.claim.scope, Scope::Ray { from: 1 });
        replay(&c).unwrap();
        let single = DirichletSpec::new([(int(1), int(2))]);
        assert!(certify_dirichlet(&single, true).is_err());
        assert!(certify_dirichlet(&single, false).is_ok());
        let ray = certify_dirichlet(&spec, true).unwrap();
        let conv = certify_convolution(&ray, &c, ConvolutionKind::Plain).unwrap();
        assert_eq!(conv.claim.scope, Scope::Ray { from: 1 });
    }
}
