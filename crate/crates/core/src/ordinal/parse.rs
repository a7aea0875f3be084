//! Recursive-descent parser for the ordinal notation.
//!
//! ```text
//! ordinal := term ('+' term)* | '0'
//! term    := 'w' ('^' exp)? ('*' nat)? | nat
//! exp     := nat | '(' ordinal ')'
//! ```
//!
//! Whitespace is ignored. Terms must appear with strictly decreasing
//! exponents; sums are never normalized.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use super::{Ordinal, Term};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseOrdinalError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("non-canonical order at position {pos}: exponents must strictly decrease")]
    NonCanonical { pos: usize },

    #[error("zero coefficient at position {pos}")]
    ZeroCoefficient { pos: usize },
}

impl ParseOrdinalError {
    pub fn position(&self) -> usize {
        match self {
            ParseOrdinalError::Syntax { pos, .. }
            | ParseOrdinalError::NonCanonical { pos }
            | ParseOrdinalError::ZeroCoefficient { pos } => *pos,
        }
    }
}

pub fn parse_ordinal(text: &str) -> Result<Ordinal, ParseOrdinalError> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
    };
    let ordinal = p.ordinal()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.syntax("unexpected trailing input"));
    }
    Ok(ordinal)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax(&self, msg: &str) -> ParseOrdinalError {
        ParseOrdinalError::Syntax {
            pos: self.pos,
            msg: msg.to_owned(),
        }
    }

    fn ordinal(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        let mut terms: Vec<(usize, Ordinal, BigUint)> = vec![self.term()?];
        while self.eat(b'+') {
            terms.push(self.term()?);
        }

        if let [(_, exp, coeff)] = terms.as_slice() {
            if exp.is_zero() && coeff.is_zero() {
                return Ok(Ordinal::zero());
            }
        }
        for (pos, _, coeff) in &terms {
            if coeff.is_zero() {
                return Err(ParseOrdinalError::ZeroCoefficient { pos: *pos });
            }
        }
        for w in terms.windows(2) {
            if w[0].1 <= w[1].1 {
                return Err(ParseOrdinalError::NonCanonical { pos: w[1].0 });
            }
        }
        Ok(Ordinal {
            terms: terms
                .into_iter()
                .map(|(_, exp, coeff)| Term { exp, coeff })
                .collect(),
        })
    }

    fn term(&mut self) -> Result<(usize, Ordinal, BigUint), ParseOrdinalError> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(self.syntax("expected a term")),
        };
        if self.eat(b'w') {
            let exp = if self.eat(b'^') {
                self.exponent()?
            } else {
                Ordinal::one()
            };
            let coeff = if self.eat(b'*') {
                self.nat()?
            } else {
                BigUint::one()
            };
            Ok((start, exp, coeff))
        } else {
            Ok((start, Ordinal::zero(), self.nat()?))
        }
    }

    fn exponent(&mut self) -> Result<Ordinal, ParseOrdinalError> {
        if self.eat(b'(') {
            let inner = self.ordinal()?;
            if !self.eat(b')') {
                return Err(self.syntax("expected ')'"));
            }
            Ok(inner)
        } else {
            Ok(Ordinal::from(self.nat()?))
        }
    }

    fn nat(&mut self) -> Result<BigUint, ParseOrdinalError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("expected a natural number"));
        }
        // Digits are ASCII, so the slice is valid UTF-8.
        let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
        Ok(digits.parse().expect("ascii digits"))
    }
}
