use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Ordinal, Term};
use crate::error::{Error, Result};

// Longest tail appended below a lowered term.
const MAX_TAIL_TERMS: usize = 3;

/// Draws an ordinal strictly below `a`, deterministically for a seed.
///
/// Every sampled coefficient is below `budget` (or at most the one it
/// replaces), so the set of reachable samples is finite.
pub fn sample_below(a: &Ordinal, seed: u64, budget: u64) -> Result<Ordinal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_below_with(a, &mut rng, budget)
}

pub fn sample_below_with<R: Rng + ?Sized>(a: &Ordinal, rng: &mut R, budget: u64) -> Result<Ordinal> {
    if a.is_zero() {
        return Err(Error::NothingBelowZero);
    }
    Ok(below(a, rng, budget.max(1)))
}

// Keep a prefix of `a`, lower one coefficient, then append a random tail
// that fits under the lowered term's exponent.
fn below<R: Rng + ?Sized>(a: &Ordinal, rng: &mut R, budget: u64) -> Ordinal {
    let i = rng.gen_range(0..a.terms.len());
    let mut terms = a.terms[..i].to_vec();
    let Term { exp, coeff } = &a.terms[i];

    let cap = coeff.to_u64().map_or(budget, |c| c.min(budget));
    let lowered = rng.gen_range(0..cap);
    if lowered > 0 {
        terms.push(Term {
            exp: exp.clone(),
            coeff: BigUint::from(lowered),
        });
    }
    terms.extend(below_power(exp, rng, budget));
    Ordinal { terms }
}

// Terms of a random ordinal below w^exp.
fn below_power<R: Rng + ?Sized>(exp: &Ordinal, rng: &mut R, budget: u64) -> Vec<Term> {
    let mut tail = Vec::new();
    let mut bound = exp.clone();
    while !bound.is_zero() && tail.len() < MAX_TAIL_TERMS && rng.gen_bool(0.6) {
        let e = below(&bound, rng, budget);
        let c = rng.gen_range(1..budget.max(2));
        tail.push(Term {
            exp: e.clone(),
            coeff: BigUint::from(c),
        });
        bound = e;
    }
    tail
}
