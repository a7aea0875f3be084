//! Structured serde encoding:
//! `{"terms":[{"exp":<ordinal>,"coeff":<integer>}]}`, with `{"terms":[]}`
//! for zero. Coefficients beyond `u64` are written as decimal strings.

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use super::{Ordinal, Term};

#[derive(Serialize)]
struct OrdinalRef<'a> {
    terms: Vec<TermRef<'a>>,
}

#[derive(Serialize)]
struct TermRef<'a> {
    exp: &'a Ordinal,
    #[serde(serialize_with = "serialize_coeff")]
    coeff: &'a BigUint,
}

#[derive(Deserialize)]
struct OrdinalOwned {
    terms: Vec<TermOwned>,
}

#[derive(Deserialize)]
struct TermOwned {
    exp: Ordinal,
    coeff: Coeff,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coeff {
    Int(u64),
    Text(String),
}

fn serialize_coeff<S: Serializer>(c: &&BigUint, s: S) -> Result<S::Ok, S::Error> {
    match c.to_u64() {
        Some(n) => s.serialize_u64(n),
        None => s.serialize_str(&c.to_string()),
    }
}

impl Serialize for Ordinal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        OrdinalRef {
            terms: self
                .terms
                .iter()
                .map(|t| TermRef {
                    exp: &t.exp,
                    coeff: &t.coeff,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Ordinal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = OrdinalOwned::deserialize(d)?;
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let coeff = match t.coeff {
                Coeff::Int(n) => BigUint::from(n),
                Coeff::Text(s) => s
                    .parse()
                    .map_err(|_| de::Error::custom(format!("bad coefficient {s:?}")))?,
            };
            if coeff.is_zero() {
                return Err(de::Error::custom("zero coefficient"));
            }
            terms.push(Term { exp: t.exp, coeff });
        }
        Ordinal::from_terms(terms)
            .ok_or_else(|| de::Error::custom("exponents must strictly decrease"))
    }
}

/// `#[serde(with = "serde_str")]` adapter encoding an ordinal as its
/// grammar string, e.g. `"w^2+w*4+30"`.
pub mod serde_str {
    use super::*;

    pub fn serialize<S: Serializer>(o: &Ordinal, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(o)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ordinal, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(de::Error::custom)
    }
}
