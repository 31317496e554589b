//! Named families.
//!
//! Indexing conventions are per family (see [`FamilyInfo::indexing`]); the
//! handle's `support` is the first valid index.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{exact_div, SequenceError, SequenceHandle, SequenceSource, ThreeTermSpec};
use crate::exact::{binomial, binomial_row, factorial, int, PolynomialQ, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BesselOrder {
    Zero,
    One,
}

impl BesselOrder {
    pub fn mu(self) -> i64 {
        match self {
            BesselOrder::Zero => 0,
            BesselOrder::One => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum FamilyId {
    Bell,
    Partition,
    TrinomialCentral,
    Motzkin,
    Schroeder,
    Derangement,
    Fibonacci,
    Catalan,
    CentralBinomial,
    GSeq,
    Domb,
    Bernoulli,
    AbsEvenBernoulli,
    Tangent,
    LasalleA,
    AmvA,
    AmvB,
    ZetaEvenScaled,
    BesselZetaEven(BesselOrder),
    Primes,
}

impl FamilyId {
    pub const ALL: [FamilyId; 21] = [
        FamilyId::Bell,
        FamilyId::Partition,
        FamilyId::TrinomialCentral,
        FamilyId::Motzkin,
        FamilyId::Schroeder,
        FamilyId::Derangement,
        FamilyId::Fibonacci,
        FamilyId::Catalan,
        FamilyId::CentralBinomial,
        FamilyId::GSeq,
        FamilyId::Domb,
        FamilyId::Bernoulli,
        FamilyId::AbsEvenBernoulli,
        FamilyId::Tangent,
        FamilyId::LasalleA,
        FamilyId::AmvA,
        FamilyId::AmvB,
        FamilyId::ZetaEvenScaled,
        FamilyId::BesselZetaEven(BesselOrder::Zero),
        FamilyId::BesselZetaEven(BesselOrder::One),
        FamilyId::Primes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Bell => "bell",
            FamilyId::Partition => "partition",
            FamilyId::TrinomialCentral => "trinomial_central",
            FamilyId::Motzkin => "motzkin",
            FamilyId::Schroeder => "schroeder",
            FamilyId::Derangement => "derangement",
            FamilyId::Fibonacci => "fibonacci",
            FamilyId::Catalan => "catalan",
            FamilyId::CentralBinomial => "central_binomial",
            FamilyId::GSeq => "g_seq",
            FamilyId::Domb => "domb",
            FamilyId::Bernoulli => "bernoulli",
            FamilyId::AbsEvenBernoulli => "abs_even_bernoulli",
            FamilyId::Tangent => "tangent",
            FamilyId::LasalleA => "lasalle_A",
            FamilyId::AmvA => "amv_a",
            FamilyId::AmvB => "amv_b",
            FamilyId::ZetaEvenScaled => "zeta_even_scaled",
            FamilyId::BesselZetaEven(BesselOrder::Zero) => "bessel_zeta_even_0",
            FamilyId::BesselZetaEven(BesselOrder::One) => "bessel_zeta_even_1",
            FamilyId::Primes => "primes",
        }
    }

    pub fn info(self, options: CatalogOptions) -> FamilyInfo {
        use FamilyId::*;
        let (support, positive_from, integer, indexing): (u64, Option<u64>, bool, &str) =
            match self {
                Bell => (0, Some(0), true, "B(0)=1, B(n+1) = sum_k C(n,k) B(k)"),
                Partition => (0, Some(0), true, "p(0)=1, p(1)=1, p(25)=1958"),
                TrinomialCentral => (0, Some(0), true, "T_n = [x^n] (1+x+x^2)^n, T_0=1"),
                Motzkin => (0, Some(0), true, "M_0=1, M_1=1"),
                Schroeder => (0, Some(0), true, "large Schroeder, S_0=1, S_1=2"),
                Derangement => (0, Some(2), true, "d_0=1, d_1=0, d_2=1"),
                Fibonacci => (0, Some(1), true, "F_0=0, F_1=1"),
                Catalan => (0, Some(0), true, "C_0=1"),
                CentralBinomial => (0, Some(0), true, "C(2n,n), n >= 0"),
                GSeq => (0, Some(0), true, "g_n = sum_k C(n,k)^2 C(2k,k)"),
                Domb => (0, Some(0), true, "D(n) = sum_k C(n,k)^2 C(2k,k) C(2n-2k,n-k)"),
                Bernoulli => (0, None, false, "B_0=1, B_1=-1/2"),
                AbsEvenBernoulli => (1, Some(1), false, "(-1)^(n-1) B_{2n}, n >= 1"),
                Tangent if options.tangent_zero_based => {
                    (0, Some(0), true, "T(n+1) at index n: 1, 2, 16, 272, ...")
                }
                Tangent => (1, Some(1), true, "T(1)=1, T(2)=2, T(3)=16"),
                LasalleA => (1, Some(1), true, "A_1=1, A_2=1, A_3=5"),
                AmvA if options.verbatim => (1, Some(1), false, "quadratic recurrence with a_1=1"),
                AmvA => (1, Some(1), true, "2^(2n+1) (n+1)! (n-1)! zeta_1(2n), a_1=2"),
                AmvB if options.verbatim => (1, None, false, "printed recurrence with b_1=1"),
                AmvB => (1, Some(1), false, "2^(2n-1) (n-1)! n! zeta_0(2n)"),
                ZetaEvenScaled => (1, Some(1), false, "zeta(2n) / pi^(2n), n >= 1"),
                BesselZetaEven(_) => (1, Some(1), false, "zeta_mu(2n) = sum_k j_(mu,k)^(-2n), n >= 1"),
                Primes => (1, Some(1), true, "p_1=2"),
            };
        FamilyInfo {
            family: self,
            support,
            positive_from,
            integer,
            indexing,
        }
    }

    /// The defining three-term recurrence `a(n) z_{n+1} = b(n) z_n + c(n) z_{n-1}`
    /// with positive coefficients, for families generated by one.
    pub fn three_term_spec(self) -> Option<ThreeTermSpec> {
        let p = PolynomialQ::from_ints;
        match self {
            FamilyId::TrinomialCentral => Some(ThreeTermSpec {
                a: p(&[1, 1]),
                b: p(&[1, 2]),
                c: p(&[0, 3]),
                start: 0,
                initial: (int(1), int(1)),
            }),
            FamilyId::Motzkin => Some(ThreeTermSpec {
                a: p(&[3, 1]),
                b: p(&[3, 2]),
                c: p(&[0, 3]),
                start: 0,
                initial: (int(1), int(1)),
            }),
            FamilyId::Derangement => Some(ThreeTermSpec {
                a: p(&[1]),
                b: p(&[0, 1]),
                c: p(&[0, 1]),
                start: 2,
                initial: (int(1), int(2)),
            }),
            _ => None,
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        let alias = match key.as_str() {
            "trinomial" => Some(FamilyId::TrinomialCentral),
            "bessel_zeta_even(0)" | "bessel_zeta_even:0" => {
                Some(FamilyId::BesselZetaEven(BesselOrder::Zero))
            }
            "bessel_zeta_even(1)" | "bessel_zeta_even:1" => {
                Some(FamilyId::BesselZetaEven(BesselOrder::One))
            }
            "schröder" => Some(FamilyId::Schroeder),
            _ => None,
        };
        alias
            .or_else(|| {
                FamilyId::ALL
                    .into_iter()
                    .find(|f| f.name().to_ascii_lowercase() == key)
            })
            .ok_or_else(|| SequenceError::UnknownFamily(s.to_string()))
    }
}

impl From<FamilyId> for String {
    fn from(f: FamilyId) -> Self {
        f.name().to_string()
    }
}

impl TryFrom<String> for FamilyId {
    type Error = SequenceError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

/// Switches between the canonical definitions and the alternatives kept
/// for comparison.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CatalogOptions {
    /// `amv_a`: quadratic recurrence seeded with `a_1 = 1`; `amv_b`: the
    /// printed quadratic recurrence seeded with `b_1 = 1`.
    pub verbatim: bool,
    /// `tangent`: start the list at index 0 (`1, 2, 16, ...`).
    pub tangent_zero_based: bool,
}

impl CatalogOptions {
    pub fn is_default(&self) -> bool {
        *self == CatalogOptions::default()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyInfo {
    pub family: FamilyId,
    pub support: u64,
    /// First index from which every term is positive; `None` for signed
    /// or eventually-zero sequences.
    pub positive_from: Option<u64>,
    pub integer: bool,
    pub indexing: &'static str,
}

pub fn catalog(family: FamilyId) -> SequenceHandle {
    catalog_with(family, CatalogOptions::default())
}

pub fn catalog_with(family: FamilyId, options: CatalogOptions) -> SequenceHandle {
    let source = SequenceSource::Family { family, options };
    let info = family.info(options);
    let name = family.name();
    let support = info.support;
    use FamilyId::*;
    match family {
        Bell => {
            let mut row: Vec<BigInt> = Vec::new();
            SequenceHandle::integer(source, name, support, move |n, _| {
                if n == 0 {
                    row = vec![BigInt::one()];
                } else {
                    let mut next = Vec::with_capacity(row.len() + 1);
                    next.push(row.last().expect("row").clone());
                    for (j, r) in row.iter().enumerate() {
                        let v = &next[j] + r;
                        next.push(v);
                    }
                    row = next;
                }
                Ok(row[0].clone())
            })
        }
        Partition => SequenceHandle::integer(source, name, support, |n, p| {
            if n == 0 {
                return Ok(BigInt::one());
            }
            let n = n as i64;
            let mut sum = BigInt::zero();
            for k in 1i64.. {
                let g1 = k * (3 * k - 1) / 2;
                if g1 > n {
                    break;
                }
                let g2 = k * (3 * k + 1) / 2;
                let mut t = p[(n - g1) as usize].clone();
                if g2 <= n {
                    t += &p[(n - g2) as usize];
                }
                if k % 2 == 1 {
                    sum += t;
                } else {
                    sum -= t;
                }
            }
            Ok(sum)
        }),
        TrinomialCentral => SequenceHandle::integer(source, name, support, move |n, t| {
            if n < 2 {
                return Ok(BigInt::one());
            }
            let k = n - 1;
            let num = (2 * k + 1) * &t[k as usize] + 3 * k * &t[k as usize - 1];
            exact_div(name, n, num, &BigInt::from(k + 1))
        }),
        Motzkin => SequenceHandle::integer(source, name, support, move |n, m| {
            if n < 2 {
                return Ok(BigInt::one());
            }
            let k = n - 1;
            let num = (2 * k + 3) * &m[k as usize] + 3 * k * &m[k as usize - 1];
            exact_div(name, n, num, &BigInt::from(k + 3))
        }),
        Schroeder => SequenceHandle::integer(source, name, support, move |n, s| {
            match n {
                0 => return Ok(BigInt::one()),
                1 => return Ok(BigInt::from(2)),
                _ => {}
            }
            let k = n - 1;
            let num = 3 * (2 * k + 1) * &s[k as usize] - (k - 1) * &s[k as usize - 1];
            exact_div(name, n, num, &BigInt::from(k + 2))
        }),
        Derangement => SequenceHandle::integer(source, name, support, |n, d| {
            Ok(match n {
                0 => BigInt::one(),
                1 => BigInt::zero(),
                _ => {
                    let k = n - 1;
                    k * (&d[k as usize] + &d[k as usize - 1])
                }
            })
        }),
        Fibonacci => SequenceHandle::integer(source, name, support, |n, f| {
            Ok(match n {
                0 => BigInt::zero(),
                1 => BigInt::one(),
                _ => &f[n as usize - 1] + &f[n as usize - 2],
            })
        }),
        Catalan => SequenceHandle::integer(source, name, support, move |n, c| {
            if n == 0 {
                return Ok(BigInt::one());
            }
            let num = &c[n as usize - 1] * (2 * (2 * n - 1));
            exact_div(name, n, num, &BigInt::from(n + 1))
        }),
        CentralBinomial => SequenceHandle::integer(source, name, support, move |n, c| {
            if n == 0 {
                return Ok(BigInt::one());
            }
            let num = &c[n as usize - 1] * (2 * (2 * n - 1));
            exact_div(name, n, num, &BigInt::from(n))
        }),
        GSeq => {
            let mut central = CentralBinomials::default();
            SequenceHandle::integer(source, name, support, move |n, _| {
                let row = binomial_row(n);
                central.extend_to(n);
                Ok(row
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * c * &central.0[k])
                    .sum())
            })
        }
        Domb => {
            let mut central = CentralBinomials::default();
            SequenceHandle::integer(source, name, support, move |n, _| {
                let row = binomial_row(n);
                central.extend_to(n);
                let cb = &central.0;
                Ok(row
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * c * &cb[k] * &cb[n as usize - k])
                    .sum())
            })
        }
        Bernoulli => SequenceHandle::rational(source, name, support, |n, b| {
            if n == 0 {
                return Ok(Rational::one());
            }
            let row = binomial_row(n + 1);
            let s: Rational = b
                .iter()
                .zip(&row)
                .map(|(bk, c)| bk * Rational::from_integer(c.clone()))
                .sum();
            Ok(-s / int(n as i64 + 1))
        }),
        AbsEvenBernoulli => {
            let bern = catalog(Bernoulli);
            SequenceHandle::rational(source, name, support, move |n, _| {
                let b = bern.value_at(2 * n)?;
                Ok(if n % 2 == 1 { b } else { -b })
            })
        }
        Tangent => {
            let abs_b = catalog(AbsEvenBernoulli);
            let offset = u64::from(options.tangent_zero_based);
            SequenceHandle::integer(source, name, support, move |idx, _| {
                let n = idx + offset;
                let four_n = num_traits::pow(BigInt::from(4), n as usize);
                let factor = Rational::new((&four_n - 1u32) * &four_n, BigInt::from(2 * n));
                let t = abs_b.value_at(n)? * factor;
                rational_to_integer(name, idx, t)
            })
        }
        LasalleA => {
            let mut cat = Catalans::default();
            SequenceHandle::integer(source, name, support, move |n, a| {
                cat.extend_to(n);
                let c = &cat.0;
                let row = binomial_row(2 * n - 1);
                let mut rhs = c[n as usize].clone();
                for j in 1..n {
                    let t = &row[(2 * j - 1) as usize] * &a[j as usize - 1] * &c[(n - j) as usize];
                    if j % 2 == 1 {
                        rhs -= t;
                    } else {
                        rhs += t;
                    }
                }
                Ok(if n % 2 == 1 { rhs } else { -rhs })
            })
        }
        AmvA if options.verbatim => SequenceHandle::rational(source, name, support, |n, a| {
            if n == 1 {
                return Ok(Rational::one());
            }
            Ok(amv_a_quadratic_rhs(n, a) / int(2 * n as i64))
        }),
        AmvA => {
            let zeta1 = catalog(BesselZetaEven(BesselOrder::One));
            SequenceHandle::integer(source, name, support, move |n, _| {
                let scale = num_traits::pow(BigInt::from(2), 2 * n as usize + 1)
                    * factorial(n + 1)
                    * factorial(n - 1);
                let v = zeta1.value_at(n)? * Rational::from_integer(scale);
                rational_to_integer(name, n, v)
            })
        }
        AmvB if options.verbatim => SequenceHandle::rational(source, name, support, |n, b| {
            if n == 1 {
                return Ok(Rational::one());
            }
            let row = binomial_row(n - 1);
            let c = |i: u64| row.get(i as usize).cloned().unwrap_or_default();
            Ok((1..n)
                .map(|k| {
                    let w = Rational::from_integer(c(k - 1) * c(k + 1));
                    w * &b[k as usize - 1] * &b[(n - k) as usize - 1]
                })
                .sum())
        }),
        AmvB => {
            let zeta0 = catalog(BesselZetaEven(BesselOrder::Zero));
            SequenceHandle::rational(source, name, support, move |n, _| {
                let scale = num_traits::pow(BigInt::from(2), 2 * n as usize - 1)
                    * factorial(n - 1)
                    * factorial(n);
                Ok(zeta0.value_at(n)? * Rational::from_integer(scale))
            })
        }
        ZetaEvenScaled => {
            let abs_b = catalog(AbsEvenBernoulli);
            SequenceHandle::rational(source, name, support, move |n, _| {
                let two_pow = num_traits::pow(BigInt::from(2), 2 * n as usize - 1);
                Ok(abs_b.value_at(n)? * Rational::new(two_pow, factorial(2 * n)))
            })
        }
        BesselZetaEven(order) => {
            let mu = order.mu();
            SequenceHandle::rational(source, name, support, move |n, s| {
                if n == 1 {
                    return Ok(Rational::new(BigInt::one(), BigInt::from(4 * (mu + 1))));
                }
                let conv: Rational = (1..n)
                    .map(|k| &s[k as usize - 1] * &s[(n - k) as usize - 1])
                    .sum();
                Ok(conv / int(n as i64 + mu))
            })
        }
        Primes => {
            let mut sieve = PrimeSieve::default();
            SequenceHandle::integer(source, name, support, move |n, _| {
                Ok(BigInt::from(sieve.nth(n as usize)))
            })
        }
    }
}

/// `sum_{k=1}^{n-1} C(n,k-1) C(n,k+1) a_k a_{n-k}`, with `a[i]` holding
/// `a_{i+1}`.
pub(crate) fn amv_a_quadratic_rhs(n: u64, a: &[Rational]) -> Rational {
    (1..n)
        .map(|k| {
            let w = Rational::from_integer(binomial(n, k - 1) * binomial(n, k + 1));
            w * &a[k as usize - 1] * &a[(n - k) as usize - 1]
        })
        .sum()
}

fn rational_to_integer(name: &str, index: u64, q: Rational) -> Result<BigInt, SequenceError> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(SequenceError::ExactDivisionFailure {
            sequence: name.to_string(),
            index,
            numerator: q.numer().to_string(),
            divisor: q.denom().to_string(),
        })
    }
}

#[derive(Default)]
struct CentralBinomials(Vec<BigInt>);

impl CentralBinomials {
    fn extend_to(&mut self, n: u64) {
        while self.0.len() as u64 <= n {
            let k = self.0.len() as u64;
            let next = match self.0.last() {
                None => BigInt::one(),
                Some(prev) => prev * (2 * (2 * k - 1)) / k,
            };
            self.0.push(next);
        }
    }
}

#[derive(Default)]
struct Catalans(Vec<BigInt>);

impl Catalans {
    fn extend_to(&mut self, n: u64) {
        while self.0.len() as u64 <= n {
            let k = self.0.len() as u64;
            let next = match self.0.last() {
                None => BigInt::one(),
                Some(prev) => prev * (2 * (2 * k - 1)) / (k + 1),
            };
            self.0.push(next);
        }
    }
}

#[derive(Default)]
struct PrimeSieve {
    primes: Vec<u64>,
    limit: u64,
}

impl PrimeSieve {
    /// The `n`-th prime, 1-based.
    fn nth(&mut self, n: usize) -> u64 {
        while self.primes.len() < n {
            self.limit = (self.limit * 2).max(1024);
            self.sieve();
        }
        self.primes[n - 1]
    }

    fn sieve(&mut self) {
        let lim = self.limit as usize;
        let mut composite = vec![false; lim + 1];
        let mut primes = Vec::new();
        for i in 2..=lim {
            if !composite[i] {
                primes.push(i as u64);
                let mut j = i * i;
                while j <= lim {
                    composite[j] = true;
                    j += i;
                }
            }
        }
        self.primes = primes;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn ints(s: &SequenceHandle, from: u64, to: u64) -> Vec<i64> {
        s.terms(from, to)
            .unwrap()
            .into_iter()
            .map(|q| {
                assert!(q.is_integer());
                i64::try_from(q.to_integer()).unwrap()
            })
            .collect()
    }

    #[test]
    fn listed_prefixes() {
        assert_eq!(ints(&catalog(FamilyId::Bell), 0, 7), [1, 1, 2, 5, 15, 52, 203, 877]);
        assert_eq!(ints(&catalog(FamilyId::TrinomialCentral), 0, 7), [1, 1, 3, 7, 19, 51, 141, 393]);
        assert_eq!(ints(&catalog(FamilyId::Derangement), 0, 7), [1, 0, 1, 2, 9, 44, 265, 1854]);
        assert_eq!(ints(&catalog(FamilyId::Motzkin), 0, 7), [1, 1, 2, 4, 9, 21, 51, 127]);
        assert_eq!(ints(&catalog(FamilyId::Schroeder), 0, 6), [1, 2, 6, 22, 90, 394, 1806]);
        assert_eq!(ints(&catalog(FamilyId::GSeq), 0, 6), [1, 3, 15, 93, 639, 4653, 35169]);
        assert_eq!(ints(&catalog(FamilyId::Domb), 0, 5), [1, 4, 28, 256, 2716, 31504]);
        assert_eq!(ints(&catalog(FamilyId::Tangent), 1, 6), [1, 2, 16, 272, 7936, 353792]);
        assert_eq!(ints(&catalog(FamilyId::Partition), 1, 9), [1, 2, 3, 5, 7, 11, 15, 22, 30]);
        assert_eq!(ints(&catalog(FamilyId::Partition), 25, 26), [1958, 2436]);
        assert_eq!(ints(&catalog(FamilyId::Catalan), 0, 5), [1, 1, 2, 5, 14, 42]);
        assert_eq!(ints(&catalog(FamilyId::Primes), 1, 6), [2, 3, 5, 7, 11, 13]);
    }

    #[test]
    fn tangent_offset_flag_shifts_by_one() {
        let opts = CatalogOptions {
            tangent_zero_based: true,
            ..Default::default()
        };
        assert_eq!(ints(&catalog_with(FamilyId::Tangent, opts), 0, 3), [1, 2, 16, 272]);
    }

    #[test]
    fn bernoulli_values() {
        let b = catalog(FamilyId::Bernoulli);
        assert_eq!(b.value_at(1).unwrap(), ratio(-1, 2));
        assert_eq!(b.value_at(2).unwrap(), ratio(1, 6));
        assert_eq!(b.value_at(3).unwrap(), int(0));
        assert_eq!(b.value_at(4).unwrap(), ratio(-1, 30));
        assert_eq!(b.value_at(12).unwrap(), ratio(-691, 2730));
    }

    #[test]
    fn bessel_and_amv_values() {
        let z1 = catalog(FamilyId::BesselZetaEven(BesselOrder::One));
        assert_eq!(z1.value_at(1).unwrap(), ratio(1, 8));
        assert_eq!(z1.value_at(2).unwrap(), ratio(1, 192));
        let a = catalog(FamilyId::LasalleA);
        assert_eq!(ints(&a, 1, 3), [1, 1, 5]);
        assert_eq!(ints(&catalog(FamilyId::AmvA), 1, 3), [2, 1, 2]);
        let b = catalog(FamilyId::AmvB);
        assert_eq!(b.terms(1, 3).unwrap(), vec![ratio(1, 2), ratio(1, 2), int(2)]);
    }

    #[test]
    fn verbatim_variants() {
        let opts = CatalogOptions {
            verbatim: true,
            ..Default::default()
        };
        let a = catalog_with(FamilyId::AmvA, opts);
        assert_eq!(a.terms(1, 2).unwrap(), vec![int(1), ratio(1, 4)]);
        let b = catalog_with(FamilyId::AmvB, opts);
        assert_eq!(b.terms(1, 2).unwrap(), vec![int(1), int(0)]);
    }

    #[test]
    fn family_names_round_trip() {
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
        }
        assert_eq!("trinomial".parse::<FamilyId>().unwrap(), FamilyId::TrinomialCentral);
        assert_eq!("lasalle_a".parse::<FamilyId>().unwrap(), FamilyId::LasalleA);
        assert!("nope".parse::<FamilyId>().is_err());
    }

    #[test]
    fn zeta_two_is_one_sixth() {
        let z = catalog(FamilyId::ZetaEvenScaled);
        assert_eq!(z.value_at(1).unwrap(), ratio(1, 6));
        assert_eq!(z.value_at(2).unwrap(), ratio(1, 90));
    }
}
