//! Exact certification of log-convexity, log-concavity and n-th root
//! monotonicity for integer and rational sequences.
//!
//! * [`exact`]: rationals, polynomials, power comparisons, positivity on a ray
//! * [`sequences`]: lazily generated catalog families and user specs
//! * [`checks`]: exhaustive window checks
//! * [`certify`]: theorem-backed certificates and their replay

pub mod certify;
pub mod checks;
pub mod exact;
pub mod sequences;

pub use certify::{replay, Certificate, CertifyError};
pub use checks::{Property, Verdict, Window};
pub use exact::{Integer, PolynomialQ, Rational, RationalFunctionQ};
pub use sequences::{catalog, FamilyId, SequenceHandle, SequenceSource};
