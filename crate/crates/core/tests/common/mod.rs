#![allow(dead_code)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use welter_core::{BigUint, Ordinal, OrdinalHeaps, Term, TransfinitePosition};

pub fn ord(s: &str) -> Ordinal {
    s.parse().unwrap()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `w^2*a + w*b + c` with every coefficient below `cap`.
pub fn below_w3<R: Rng>(rng: &mut R, cap: u64) -> Ordinal {
    let [a, b, c] = [0; 3].map(|_| rng.gen_range(0..cap));
    let lambda = Ordinal::omega_unsplit(&Ordinal::from(a), &BigUint::from(b));
    Ordinal::omega_unsplit(&lambda, &BigUint::from(c))
}

/// Random Welter position below w^3: 1..=max_coins distinct coins,
/// coefficients below `cap`.
pub fn random_position<R: Rng>(rng: &mut R, max_coins: usize, cap: u64) -> TransfinitePosition {
    let n = rng.gen_range(1..=max_coins);
    let mut coins = std::collections::BTreeSet::new();
    while coins.len() < n {
        coins.insert(below_w3(rng, cap));
    }
    TransfinitePosition::new(coins).unwrap()
}

pub fn random_heaps<R: Rng>(rng: &mut R, max_heaps: usize, cap: u64) -> OrdinalHeaps {
    let n = rng.gen_range(1..=max_heaps);
    OrdinalHeaps::new((0..n).map(|_| below_w3(rng, cap)).collect())
}

/// Ordinals with nested exponents, up to depth 2 below the top level.
pub fn arb_ordinal() -> impl Strategy<Value = Ordinal> {
    let leaf = (0u64..6).prop_map(Ordinal::from);
    let exponent = leaf.prop_recursive(2, 12, 3, |inner| {
        prop::collection::vec((inner, 1u64..5), 0..3).prop_map(build)
    });
    prop::collection::vec((exponent, 1u64..1000), 0..4).prop_map(build)
}

/// Sorts and merges arbitrary (exp, coeff) pairs into canonical form.
fn build(mut raw: Vec<(Ordinal, u64)>) -> Ordinal {
    raw.sort_by(|a, b| b.0.cmp(&a.0));
    raw.dedup_by(|a, b| a.0 == b.0);
    let terms = raw
        .into_iter()
        .map(|(e, c)| Term::new(e, BigUint::from(c)))
        .collect();
    Ordinal::from_terms(terms).unwrap()
}
