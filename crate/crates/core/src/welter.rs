//! Finite Welter's Game.
//!
//! Coins sit on distinct nonnegative squares and move left onto empty
//! squares. The Grundy value of a position is its Welter function
//! `[a1|...|an]`, the nim-sum of all coins and of all pairwise mating
//! values.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, IllegalMove, Result};
use crate::game::Move;
use crate::nimber::mating;

/// Welter function of arbitrary integers.
pub fn welter_fn(xs: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (i, x) in xs.iter().enumerate() {
        acc ^= x;
        for y in &xs[i + 1..] {
            acc ^= mating(x, y);
        }
    }
    acc
}

// [x | frozen] given `frozen_value = [frozen]`.
fn welter_with(frozen_value: &BigInt, frozen: &[BigInt], x: &BigInt) -> BigInt {
    frozen
        .iter()
        .fold(frozen_value ^ x, |acc, a| acc ^ mating(x, a))
}

fn to_signed(n: &BigUint) -> BigInt {
    BigInt::from_biguint(Sign::Plus, n.clone())
}

fn to_unsigned(n: BigInt) -> BigUint {
    n.to_biguint()
        .expect("Welter value of nonnegative coins is nonnegative")
}

/// Set of occupied squares.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FinitePosition {
    coins: BTreeSet<BigUint>,
}

impl FinitePosition {
    pub fn new<I, T>(coins: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: Into<BigUint>,
    {
        let mut set = BTreeSet::new();
        for c in coins {
            let c = c.into();
            if set.contains(&c) {
                return Err(Error::DuplicateCoin(c.to_string()));
            }
            set.insert(c);
        }
        Ok(FinitePosition { coins: set })
    }

    pub fn from_set(coins: BTreeSet<BigUint>) -> Self {
        FinitePosition { coins }
    }

    pub fn coins(&self) -> impl ExactSizeIterator<Item = &BigUint> + DoubleEndedIterator {
        self.coins.iter()
    }

    pub fn as_set(&self) -> &BTreeSet<BigUint> {
        &self.coins
    }

    pub fn len(&self) -> usize {
        self.coins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coins.is_empty()
    }

    pub fn contains(&self, square: &BigUint) -> bool {
        self.coins.contains(square)
    }

    pub fn with(&self, square: BigUint) -> FinitePosition {
        let mut coins = self.coins.clone();
        coins.insert(square);
        FinitePosition { coins }
    }

    pub fn without(&self, square: &BigUint) -> FinitePosition {
        let mut coins = self.coins.clone();
        coins.remove(square);
        FinitePosition { coins }
    }

    fn signed(&self) -> Vec<BigInt> {
        self.coins.iter().map(to_signed).collect()
    }

    /// Welter function from its pairwise definition.
    pub fn value(&self) -> BigUint {
        to_unsigned(welter_fn(&self.signed()))
    }

    /// Welter function by the Mating Method.
    pub fn value_mating(&self) -> BigUint {
        let (pairs, single) = self.mating_pairs();
        let mut acc = single.unwrap_or_default();
        for (a, b) in pairs {
            // [a|b] = a xor b - 1, and a != b so a xor b >= 1.
            acc ^= (a ^ b) - 1u32;
        }
        acc
    }

    /// Pairs produced by repeatedly mating the two coins with the largest
    /// mating value, plus the unpaired coin when the count is odd.
    pub fn mating_pairs(&self) -> (Vec<(BigUint, BigUint)>, Option<BigUint>) {
        let mut rest: Vec<BigInt> = self.signed();
        let mut pairs = Vec::with_capacity(rest.len() / 2);
        while rest.len() >= 2 {
            let mut best = (0, 1);
            let mut best_val = mating(&rest[0], &rest[1]);
            for i in 0..rest.len() {
                for j in i + 1..rest.len() {
                    let v = mating(&rest[i], &rest[j]);
                    if v > best_val {
                        best_val = v;
                        best = (i, j);
                    }
                }
            }
            let b = rest.swap_remove(best.1);
            let a = rest.swap_remove(best.0);
            let (a, b) = (to_unsigned(a), to_unsigned(b));
            pairs.push(if a < b { (a, b) } else { (b, a) });
        }
        (pairs, rest.pop().map(to_unsigned))
    }

    pub fn check_move(&self, from: &BigUint, to: &BigUint) -> Result<usize, IllegalMove> {
        let index = self
            .coins
            .iter()
            .position(|c| c == from)
            .ok_or(IllegalMove::NoSuchCoin)?;
        if to >= from {
            return Err(IllegalMove::NotSmaller);
        }
        if self.coins.contains(to) {
            return Err(IllegalMove::Occupied);
        }
        Ok(index)
    }

    pub fn apply_move(&self, from: &BigUint, to: &BigUint) -> Result<FinitePosition, IllegalMove> {
        self.check_move(from, to)?;
        Ok(self.without(from).with(to.clone()))
    }

    /// All moves to a position of value zero. Each coin has at most one:
    /// the Welter function is a bijection in each argument.
    pub fn winning_moves(&self) -> Vec<Move<BigUint>> {
        self.moves_reaching(&BigUint::zero())
    }

    /// A move to a position of value `beta < self.value()`.
    pub fn move_to_value(&self, beta: &BigUint) -> Result<Move<BigUint>> {
        let current = self.value();
        if beta >= &current {
            return Err(Error::TargetNotBelowValue {
                target: beta.to_string(),
                current: current.to_string(),
            });
        }
        self.moves_reaching(beta).into_iter().next().ok_or_else(|| {
            Error::Invariant(format!(
                "no move from {:?} reaches value {beta}",
                self.coins
            ))
        })
    }

    fn moves_reaching(&self, beta: &BigUint) -> Vec<Move<BigUint>> {
        self.coins
            .iter()
            .enumerate()
            .filter_map(|(index, coin)| {
                let target = solve_welter(&self.without(coin), beta);
                (&target < coin)
                    .then(|| Move::new(index, coin.clone(), target).with_value(beta.clone()))
            })
            .collect()
    }
}

/// The unique `x` with `[x | frozen] = s`.
///
/// Bit `j` of `[x | a1 | ... | an]` is `x_j ^ F_j ^ (#{k : x = a_k mod 2^j} mod 2)`
/// where `F = [a1|...|an]`, because `(x|a)` has bit `j` set exactly when
/// `2^j` divides `x - a`. Each bit of `x` therefore follows from the
/// lower ones.
pub fn solve_welter(frozen: &FinitePosition, s: &BigUint) -> BigUint {
    let frozen_value = frozen.value();
    let top = frozen
        .coins()
        .map(BigUint::bits)
        .chain([s.bits(), frozen_value.bits()])
        .max()
        .unwrap_or(0);

    let mut x = BigUint::zero();
    // Coins still congruent to x modulo 2^j.
    let mut congruent: Vec<&BigUint> = frozen.coins().collect();
    let mut j = 0u64;
    while j < top || !congruent.is_empty() {
        let bit = s.bit(j) ^ frozen_value.bit(j) ^ (congruent.len() % 2 == 1);
        if bit {
            x.set_bit(j, true);
        }
        congruent.retain(|a| a.bit(j) == bit);
        j += 1;
    }

    let check = welter_with(&to_signed(&frozen_value), &frozen.signed(), &to_signed(&x));
    assert!(
        !frozen.contains(&x) && check == to_signed(s),
        "Welter equation [x|{:?}] = {s} solved to {x}, which fails",
        frozen.coins
    );
    x
}

/// Solves `[x | frozen] = s` by scanning `x` over `[0, 2^(B+2))`, where `B`
/// is the bit length of the largest of `s` and the frozen coins, doubling
/// the window while it holds no solution. Fails if a window holds more
/// than one.
pub fn solve_welter_scan(frozen: &FinitePosition, s: &BigUint) -> Result<BigUint> {
    let bits = frozen
        .coins()
        .map(BigUint::bits)
        .chain([s.bits()])
        .max()
        .unwrap_or(0);
    let mut window = BigUint::from(1u32) << (bits + 2);
    let frozen_signed = frozen.signed();
    let frozen_value = welter_fn(&frozen_signed);
    let target = to_signed(s);

    for _ in 0..8 {
        let limit = window
            .to_u64()
            .ok_or_else(|| Error::Invariant("scan window exceeds u64".into()))?;
        let hits: Vec<u64> = (0..limit)
            .filter(|&x| welter_with(&frozen_value, &frozen_signed, &BigInt::from(x)) == target)
            .collect();
        match hits.as_slice() {
            [] => window <<= 1,
            [x] => return Ok(BigUint::from(*x)),
            _ => return Err(Error::NotUnique { hits: hits.len() }),
        }
    }
    Err(Error::Invariant(format!(
        "no solution of [x|{:?}] = {s} below {window}",
        frozen.coins
    )))
}

/// One step of an animating function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Step {
    Xor(BigInt),
    Add(BigInt),
}

/// Composition of XOR-by-constant and add-by-constant steps, applied left
/// to right. These maps form a group of bijections on the integers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct AnimatingFn {
    steps: Vec<Step>,
}

impl AnimatingFn {
    pub fn identity() -> Self {
        AnimatingFn::default()
    }

    pub fn new(steps: Vec<Step>) -> Self {
        AnimatingFn { steps }
    }

    pub fn xor(c: impl Into<BigInt>) -> Self {
        AnimatingFn::new(vec![Step::Xor(c.into())])
    }

    pub fn add(c: impl Into<BigInt>) -> Self {
        AnimatingFn::new(vec![Step::Add(c.into())])
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.steps.iter().fold(x.clone(), |acc, step| match step {
            Step::Xor(c) => acc ^ c,
            Step::Add(c) => acc + c,
        })
    }

    /// `self ∘ inner`: applies `inner` first.
    pub fn compose(&self, inner: &AnimatingFn) -> AnimatingFn {
        let mut steps = inner.steps.clone();
        steps.extend(self.steps.iter().cloned());
        AnimatingFn { steps }
    }

    pub fn invert(&self) -> AnimatingFn {
        AnimatingFn {
            steps: self
                .steps
                .iter()
                .rev()
                .map(|s| match s {
                    Step::Xor(c) => Step::Xor(c.clone()),
                    Step::Add(c) => Step::Add(-c),
                })
                .collect(),
        }
    }
}
