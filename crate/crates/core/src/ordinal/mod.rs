//! Ordinals below epsilon-zero in Cantor normal form.
//!
//! An [`Ordinal`] is a finite sum `w^e1*c1 + ... + w^ek*ck` with strictly
//! decreasing exponents (themselves ordinals) and positive coefficients.
//! Zero is the empty sum.

mod json;
mod parse;
mod sample;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

pub use json::serde_str;
pub use parse::{parse_ordinal, ParseOrdinalError};
pub use sample::{sample_below, sample_below_with};

/// One `w^exp * coeff` summand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    exp: Ordinal,
    coeff: BigUint,
}

impl Term {
    /// Panics on a zero coefficient.
    pub fn new(exp: Ordinal, coeff: BigUint) -> Term {
        assert!(!coeff.is_zero(), "zero coefficient in CNF term");
        Term { exp, coeff }
    }

    pub fn exp(&self) -> &Ordinal {
        &self.exp
    }

    pub fn coeff(&self) -> &BigUint {
        &self.coeff
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Ordinal {
    terms: Vec<Term>,
}

impl Ordinal {
    pub fn zero() -> Ordinal {
        Ordinal { terms: Vec::new() }
    }

    pub fn one() -> Ordinal {
        Ordinal::from(1u64)
    }

    pub fn omega() -> Ordinal {
        Ordinal::monomial(Ordinal::one(), BigUint::one())
    }

    /// `w^exp * coeff`; zero when `coeff` is zero.
    pub fn monomial(exp: Ordinal, coeff: BigUint) -> Ordinal {
        if coeff.is_zero() {
            return Ordinal::zero();
        }
        Ordinal {
            terms: vec![Term { exp, coeff }],
        }
    }

    /// Builds an ordinal from terms, which must already be in canonical
    /// order (strictly decreasing exponents).
    pub fn from_terms(terms: Vec<Term>) -> Option<Ordinal> {
        if terms.windows(2).all(|w| w[0].exp > w[1].exp) {
            Some(Ordinal { terms })
        } else {
            None
        }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the naturals, i.e. ordinals below `w`.
    pub fn is_finite(&self) -> bool {
        match self.terms.as_slice() {
            [] => true,
            [t] => t.exp.is_zero(),
            _ => false,
        }
    }

    pub fn to_finite(&self) -> Option<BigUint> {
        match self.terms.as_slice() {
            [] => Some(BigUint::zero()),
            [t] if t.exp.is_zero() => Some(t.coeff.clone()),
            _ => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.to_finite().and_then(|n| u64::try_from(n).ok())
    }

    /// Coefficient of `w^exp`, zero if the term is absent.
    pub fn coefficient(&self, exp: &Ordinal) -> BigUint {
        self.terms
            .iter()
            .find(|t| &t.exp == exp)
            .map(|t| t.coeff.clone())
            .unwrap_or_default()
    }

    /// Number of CNF terms, counting nested exponents.
    pub fn cnf_size(&self) -> usize {
        self.terms.iter().map(|t| 1 + t.exp.cnf_size()).sum()
    }

    /// Coefficientwise XOR at matching exponents.
    pub fn nim_sum(&self, other: &Ordinal) -> Ordinal {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap().clone()),
                (Some(x), Some(y)) => match x.exp.cmp(&y.exp) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap().clone()),
                    Ordering::Equal => {
                        let coeff = &x.coeff ^ &y.coeff;
                        if !coeff.is_zero() {
                            out.push(Term {
                                exp: x.exp.clone(),
                                coeff,
                            });
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
        Ordinal { terms: out }
    }

    /// Writes `self = w*lambda + m` and returns `(lambda, m)`.
    pub fn omega_split(&self) -> (Ordinal, BigUint) {
        let mut finite = BigUint::zero();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.exp.is_zero() {
                finite = t.coeff.clone();
            } else {
                terms.push(Term {
                    exp: t.exp.one_minus_left(),
                    coeff: t.coeff.clone(),
                });
            }
        }
        (Ordinal { terms }, finite)
    }

    /// Inverse of [`Ordinal::omega_split`]: returns `w*lambda + m`.
    pub fn omega_unsplit(lambda: &Ordinal, m: &BigUint) -> Ordinal {
        let mut terms: Vec<Term> = lambda
            .terms
            .iter()
            .map(|t| Term {
                exp: t.exp.one_plus_left(),
                coeff: t.coeff.clone(),
            })
            .collect();
        if !m.is_zero() {
            terms.push(Term {
                exp: Ordinal::zero(),
                coeff: m.clone(),
            });
        }
        Ordinal { terms }
    }

    // The unique d with 1 + d = self, for self >= 1.
    fn one_minus_left(&self) -> Ordinal {
        match self.to_finite() {
            Some(n) => Ordinal::from(n - 1u32),
            None => self.clone(),
        }
    }

    // 1 + self.
    fn one_plus_left(&self) -> Ordinal {
        match self.to_finite() {
            Some(n) => Ordinal::from(n + 1u32),
            None => self.clone(),
        }
    }
}

/// Nim-sum of any number of ordinals; zero for an empty input.
pub fn nim_sum_ord<'a, I>(xs: I) -> Ordinal
where
    I: IntoIterator<Item = &'a Ordinal>,
{
    xs.into_iter()
        .fold(Ordinal::zero(), |acc, x| acc.nim_sum(x))
}

impl Ord for Ordinal {
    fn cmp(&self, other: &Self) -> Ordering {
        for (a, b) in self.terms.iter().zip(&other.terms) {
            let ord = a.exp.cmp(&b.exp).then_with(|| a.coeff.cmp(&b.coeff));
            if ord != Ordering::Equal {
                return ord;
            }
        }
        self.terms.len().cmp(&other.terms.len())
    }
}

impl PartialOrd for Ordinal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<BigUint> for Ordinal {
    fn from(n: BigUint) -> Self {
        Ordinal::monomial(Ordinal::zero(), n)
    }
}

impl From<u64> for Ordinal {
    fn from(n: u64) -> Self {
        Ordinal::from(BigUint::from(n))
    }
}

impl From<&BigUint> for Ordinal {
    fn from(n: &BigUint) -> Self {
        Ordinal::from(n.clone())
    }
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            if t.exp.is_zero() {
                write!(f, "{}", t.coeff)?;
                continue;
            }
            f.write_str("w")?;
            if t.exp.is_finite() {
                if t.exp != Ordinal::one() {
                    write!(f, "^{}", t.exp)?;
                }
            } else {
                write!(f, "^({})", t.exp)?;
            }
            if !t.coeff.is_one() {
                write!(f, "*{}", t.coeff)?;
            }
        }
        Ok(())
    }
}

impl FromStr for Ordinal {
    type Err = ParseOrdinalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_ordinal(s)
    }
}
