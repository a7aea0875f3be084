//! Nim-sum, mex and the mating function on unbounded integers.
//!
//! Negative integers take part in nim-sums through their infinite
//! two's-complement bit patterns, which is exactly what `BigInt`'s bitwise
//! operators implement.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type SignedInt = BigInt;

pub fn nim_sum<'a, I>(xs: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigInt>,
{
    xs.into_iter().fold(BigInt::zero(), |acc, x| acc ^ x)
}

/// Least nonnegative integer absent from `values`.
pub fn mex<I>(values: I) -> u64
where
    I: IntoIterator<Item = u64>,
{
    let seen: HashSet<u64> = values.into_iter().collect();
    (0..).find(|n| !seen.contains(n)).unwrap()
}

/// `(x | y)`: `2^(n+1) - 1` where `2^n` exactly divides `x - y`, and `-1`
/// when `x == y`.
pub fn mating(x: &BigInt, y: &BigInt) -> BigInt {
    let diff = x - y;
    match diff.trailing_zeros() {
        None => -BigInt::one(),
        Some(n) => (BigInt::one() << (n + 1)) - 1,
    }
}
