use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{format_rational, parse_rational, ExactError, Rational};

/// Univariate polynomial in `n` with rational coefficients, `coeffs[i]` is
/// the coefficient of `n^i`. Trailing zeros are always trimmed, so the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct PolynomialQ {
    coeffs: Vec<Rational>,
}

impl PolynomialQ {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolynomialQ { coeffs }
    }

    /// Like [`PolynomialQ::new`] but rejects an empty list, which is how
    /// external inputs must spell a polynomial (`["0"]` for zero).
    pub fn try_from_coeffs(coeffs: Vec<Rational>) -> Result<Self, ExactError> {
        if coeffs.is_empty() {
            return Err(ExactError::EmptyCoefficients);
        }
        Ok(Self::new(coeffs))
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        PolynomialQ { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `n`.
    pub fn var() -> Self {
        Self::from_ints(&[0, 1])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&Rational::from_integer(n.into()))
    }

    /// `Q(m) = P(m + s)`.
    pub fn shift(&self, s: &Rational) -> Self {
        let linear = PolynomialQ::new(vec![s.clone(), Rational::one()]);
        let mut acc = PolynomialQ::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &linear) + &PolynomialQ::constant(c.clone());
        }
        acc
    }

    pub fn shift_int(&self, s: i64) -> Self {
        self.shift(&Rational::from_integer(s.into()))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(PolynomialQ::one(), |acc, _| &acc * self)
    }

    /// Scaled to leading coefficient 1; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => self.clone(),
        }
    }

    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), ExactError> {
        let d_deg = divisor.degree().ok_or(ExactError::DivisionByZero)?;
        let d_lead = divisor.coeffs[d_deg].clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len().saturating_sub(d_deg)];
        while rem.len() > d_deg && !rem.is_empty() {
            let top = rem.len() - 1;
            let factor = &rem[top] / &d_lead;
            let shift = top - d_deg;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Least common multiple of the coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Integer coefficients of `lcm(denominators) * P`.
    pub fn cleared_integer_coeffs(&self) -> Vec<BigInt> {
        let d = Rational::from_integer(self.denominator_lcm());
        self.coeffs
            .iter()
            .map(|c| (c * &d).to_integer())
            .collect()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl fmt::Debug for PolynomialQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolynomialQ({self})")
    }
}

impl fmt::Display for PolynomialQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let coef = if mag.is_integer() {
                mag.numer().to_string()
            } else {
                format!("({})", format_rational(&mag))
            };
            match i {
                0 => f.write_str(&coef)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{coef}*")?;
                    }
                    f.write_str("n")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl From<PolynomialQ> for Vec<String> {
    fn from(p: PolynomialQ) -> Self {
        if p.coeffs.is_empty() {
            return vec!["0/1".to_string()];
        }
        p.coeffs.iter().map(format_rational).collect()
    }
}

impl TryFrom<Vec<String>> for PolynomialQ {
    type Error = ExactError;

    fn try_from(raw: Vec<String>) -> Result<Self, Self::Error> {
        let coeffs = raw
            .iter()
            .map(|t| parse_rational(t))
            .collect::<Result<Vec<_>, _>>()?;
        Self::try_from_coeffs(coeffs)
    }
}

impl Add for &PolynomialQ {
    type Output = PolynomialQ;

    fn add(self, rhs: &PolynomialQ) -> PolynomialQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolynomialQ::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &PolynomialQ {
    type Output = PolynomialQ;

    fn sub(self, rhs: &PolynomialQ) -> PolynomialQ {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        PolynomialQ::new((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &PolynomialQ {
    type Output = PolynomialQ;

    fn mul(self, rhs: &PolynomialQ) -> PolynomialQ {
        if self.is_zero() || rhs.is_zero() {
            return PolynomialQ::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolynomialQ::new(out)
    }
}

impl Neg for &PolynomialQ {
    type Output = PolynomialQ;

    fn neg(self) -> PolynomialQ {
        PolynomialQ::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for PolynomialQ {
            type Output = PolynomialQ;
            fn $m(self, rhs: PolynomialQ) -> PolynomialQ {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for PolynomialQ {
    type Output = PolynomialQ;

    fn neg(self) -> PolynomialQ {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    #[test]
    fn evaluation_examples() {
        let p = PolynomialQ::from_ints(&[-72, 36]);
        assert_eq!(p.eval_int(2), int(0));
        assert_eq!(PolynomialQ::zero().eval_int(17), int(0));
        assert_eq!(PolynomialQ::from_ints(&[1, 0, 1]).eval_int(3), int(10));
    }

    #[test]
    fn shift_examples() {
        let p = PolynomialQ::from_ints(&[-72, 36]);
        assert_eq!(p.shift_int(2), PolynomialQ::from_ints(&[0, 36]));
        assert_eq!(PolynomialQ::from_ints(&[7]).shift_int(-9), PolynomialQ::from_ints(&[7]));
        assert_eq!(
            PolynomialQ::from_ints(&[0, 0, 1]).shift_int(1),
            PolynomialQ::from_ints(&[1, 2, 1])
        );
    }

    #[test]
    fn trims_and_rejects_empty() {
        assert!(PolynomialQ::from_ints(&[0, 0]).is_zero());
        assert_eq!(
            PolynomialQ::try_from_coeffs(vec![]),
            Err(ExactError::EmptyCoefficients)
        );
    }

    #[test]
    fn division_and_gcd() {
        // (n - 1)(n + 2) and (n - 1)(n + 5)
        let a = PolynomialQ::from_ints(&[-2, 1, 1]);
        let b = PolynomialQ::from_ints(&[-5, 4, 1]);
        assert_eq!(a.gcd(&b), PolynomialQ::from_ints(&[-1, 1]));
        let (q, r) = a.div_rem(&PolynomialQ::from_ints(&[-1, 1])).unwrap();
        assert_eq!(q, PolynomialQ::from_ints(&[2, 1]));
        assert!(r.is_zero());
        assert!(a.div_rem(&PolynomialQ::zero()).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(PolynomialQ::from_ints(&[-72, 36]).to_string(), "36*n - 72");
        assert_eq!(PolynomialQ::from_ints(&[1, 0, -1]).to_string(), "-n^2 + 1");
        assert_eq!(PolynomialQ::zero().to_string(), "0");
    }
}
