use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{ExactError, PolynomialQ, Rational};

/// Quotient of two polynomials in `n`, kept reduced: no common factor and a
/// monic denominator.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRationalFunction", into = "RawRationalFunction")]
pub struct RationalFunctionQ {
    numer: PolynomialQ,
    denom: PolynomialQ,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRationalFunction {
    numer: PolynomialQ,
    denom: PolynomialQ,
}

impl From<RationalFunctionQ> for RawRationalFunction {
    fn from(f: RationalFunctionQ) -> Self {
        RawRationalFunction {
            numer: f.numer,
            denom: f.denom,
        }
    }
}

impl TryFrom<RawRationalFunction> for RationalFunctionQ {
    type Error = ExactError;

    fn try_from(raw: RawRationalFunction) -> Result<Self, Self::Error> {
        RationalFunctionQ::new(raw.numer, raw.denom)
    }
}

impl RationalFunctionQ {
    pub fn new(numer: PolynomialQ, denom: PolynomialQ) -> Result<Self, ExactError> {
        if denom.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if numer.is_zero() {
            return Ok(Self::from_poly(PolynomialQ::zero()));
        }
        let g = numer.gcd(&denom);
        let (numer, _) = numer.div_rem(&g)?;
        let (denom, _) = denom.div_rem(&g)?;
        let lead = denom.leading().expect("nonzero").recip();
        Ok(RationalFunctionQ {
            numer: numer.scale(&lead),
            denom: denom.scale(&lead),
        })
    }

    pub fn from_poly(p: PolynomialQ) -> Self {
        RationalFunctionQ {
            numer: p,
            denom: PolynomialQ::one(),
        }
    }

    pub fn numer(&self) -> &PolynomialQ {
        &self.numer
    }

    pub fn denom(&self) -> &PolynomialQ {
        &self.denom
    }

    /// `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.denom.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.numer.eval(x) / d)
        }
    }

    pub fn eval_int(&self, n: i64) -> Option<Rational> {
        self.eval(&Rational::from_integer(n.into()))
    }

    /// `g(n) = f(n + s)`.
    pub fn shift_int(&self, s: i64) -> Self {
        Self::new(self.numer.shift_int(s), self.denom.shift_int(s)).expect("nonzero denominator")
    }

    /// Cross-multiplied identity `p1 * q2 == p2 * q1`.
    pub fn identity_eq(&self, other: &Self) -> bool {
        &self.numer * &other.denom == &other.numer * &self.denom
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = &(&self.numer * &o.denom) + &(&o.numer * &self.denom);
        Self::new(n, &self.denom * &o.denom).expect("nonzero denominator")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(&self.numer * &o.numer, &self.denom * &o.denom).expect("nonzero denominator")
    }

    pub fn div(&self, o: &Self) -> Result<Self, ExactError> {
        Self::new(&self.numer * &o.denom, &self.denom * &o.numer)
    }

    pub fn neg(&self) -> Self {
        RationalFunctionQ {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::from_poly(PolynomialQ::one()), |acc, _| acc.mul(self))
    }
}

impl fmt::Debug for RationalFunctionQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunctionQ({self})")
    }
}

impl fmt::Display for RationalFunctionQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == PolynomialQ::one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({})/({})", self.numer, self.denom)
        }
    }
}

/// Grammar, over the single variable `n`:
///
/// ```text
/// expr   := term (('+' | '-') term)*
/// term   := factor (('*' | '/') factor | factor)*     juxtaposition multiplies: 12n
/// factor := ('+' | '-') factor | atom ('^' digits)?
/// atom   := digits | 'n' | '(' expr ')'
/// ```
///
/// `p/q` coefficients are just division, so `(12n+3)/(4n+3)`, `3/2*n` and
/// `n^2 - 1/4` are all accepted.
impl FromStr for RationalFunctionQ {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { src: s, pos: 0 };
        let f = p.expr()?;
        p.skip_ws();
        if p.pos < s.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(f)
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.peek_raw() {
            if c.is_whitespace() {
                self.pos += c.len_utf8();
            } else {
                break;
            }
        }
    }

    fn peek_raw(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.peek_raw()
    }

    fn error(&self, message: &str) -> ExactError {
        let token: String = self.src[self.pos..]
            .chars()
            .take_while(|c| !c.is_whitespace())
            .take(12)
            .collect();
        ExactError::ParseExpression {
            offset: self.pos,
            token: if token.is_empty() { "<end>".into() } else { token },
            message: message.to_string(),
        }
    }

    fn expr(&mut self) -> Result<RationalFunctionQ, ExactError> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some('-') => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<RationalFunctionQ, ExactError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some('*') => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                Some('/') => {
                    self.pos += 1;
                    let at = self.pos;
                    let d = self.factor()?;
                    acc = acc.div(&d).map_err(|_| {
                        let mut e = self.error("division by zero");
                        if let ExactError::ParseExpression { offset, .. } = &mut e {
                            *offset = at;
                        }
                        e
                    })?;
                }
                Some(c) if c == 'n' || c == '(' || c.is_ascii_digit() => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<RationalFunctionQ, ExactError> {
        match self.peek() {
            Some('-') => {
                self.pos += 1;
                Ok(self.factor()?.neg())
            }
            Some('+') => {
                self.pos += 1;
                self.factor()
            }
            _ => {
                let base = self.atom()?;
                if self.peek() == Some('^') {
                    self.pos += 1;
                    self.skip_ws();
                    let e = self.digits()?;
                    let e = u32::try_from(e).map_err(|_| self.error("exponent too large"))?;
                    Ok(base.pow(e))
                } else {
                    Ok(base)
                }
            }
        }
    }

    fn atom(&mut self) -> Result<RationalFunctionQ, ExactError> {
        match self.peek() {
            Some('n') => {
                self.pos += 1;
                Ok(RationalFunctionQ::from_poly(PolynomialQ::var()))
            }
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let v = self.digits()?;
                Ok(RationalFunctionQ::from_poly(PolynomialQ::constant(
                    Rational::from_integer(v),
                )))
            }
            _ => Err(self.error("expected a number, `n` or `(`")),
        }
    }

    fn digits(&mut self) -> Result<BigInt, ExactError> {
        let start = self.pos;
        while self.peek_raw().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected digits"));
        }
        Ok(self.src[start..self.pos].parse().expect("ascii digits"))
    }
}

impl From<PolynomialQ> for RationalFunctionQ {
    fn from(p: PolynomialQ) -> Self {
        Self::from_poly(p)
    }
}

impl Default for RationalFunctionQ {
    fn default() -> Self {
        Self::from_poly(PolynomialQ::zero())
    }
}
