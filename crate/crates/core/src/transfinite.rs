//! Welter's Game on an ordinal-indexed belt.
//!
//! Writing each coin as `w*lambda + m`, coins sharing a quotient `lambda`
//! form a block `S_lambda` of finite parts. The Grundy value is
//! `w*(nim-sum of all lambdas) + (xor of the finite Welter values [S_lambda])`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::Zero;
use rand::Rng;

use crate::error::{Error, IllegalMove, Result};
use crate::game::{Game, Move};
use crate::nim::OrdinalHeaps;
use crate::ordinal::{nim_sum_ord, sample_below_with, Ordinal};
use crate::welter::{solve_welter, FinitePosition};

// Draws before falling back to the least free square below a coin.
const SAMPLE_ATTEMPTS: usize = 16;

/// Finite parts grouped by their `w`-quotient.
pub type BlockTable = BTreeMap<Ordinal, FinitePosition>;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TransfinitePosition {
    coins: BTreeSet<Ordinal>,
}

impl TransfinitePosition {
    /// Rejects two coins on the same square.
    pub fn new<I>(coins: I) -> Result<Self>
    where
        I: IntoIterator<Item = Ordinal>,
    {
        let mut set = BTreeSet::new();
        for c in coins {
            if set.contains(&c) {
                return Err(Error::DuplicateCoin(c.to_string()));
            }
            set.insert(c);
        }
        Ok(TransfinitePosition { coins: set })
    }

    pub fn parse<S: AsRef<str>>(coins: &[S]) -> Result<Self> {
        let parsed = coins
            .iter()
            .map(|s| s.as_ref().parse::<Ordinal>())
            .collect::<Result<Vec<_>, _>>()?;
        TransfinitePosition::new(parsed)
    }

    pub fn from_finite(p: &FinitePosition) -> Self {
        TransfinitePosition {
            coins: p.coins().map(Ordinal::from).collect(),
        }
    }

    pub fn coins(&self) -> impl ExactSizeIterator<Item = &Ordinal> + DoubleEndedIterator {
        self.coins.iter()
    }

    pub fn len(&self) -> usize {
        self.coins.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coins.is_empty()
    }

    pub fn contains(&self, square: &Ordinal) -> bool {
        self.coins.contains(square)
    }

    pub fn blocks(&self) -> BlockTable {
        let mut raw: BTreeMap<Ordinal, BTreeSet<BigUint>> = BTreeMap::new();
        for c in &self.coins {
            let (lambda, m) = c.omega_split();
            raw.entry(lambda).or_default().insert(m);
        }
        raw.into_iter()
            .map(|(lambda, set)| (lambda, FinitePosition::from_set(set)))
            .collect()
    }

    /// Per-coin quotients as Nim heaps, in coin order.
    fn quotient_heaps(&self) -> OrdinalHeaps {
        OrdinalHeaps::new(self.coins.iter().map(|c| c.omega_split().0).collect())
    }

    pub fn grundy(&self) -> Ordinal {
        let blocks = self.blocks();
        let (lambda, finite) = summarize(&self.coins, &blocks);
        Ordinal::omega_unsplit(&lambda, &finite)
    }

    /// Both conditions of the P-position test: the quotients nim-sum to
    /// zero and the block values XOR to zero.
    pub fn is_p_position(&self) -> bool {
        let blocks = self.blocks();
        let (lambda, finite) = summarize(&self.coins, &blocks);
        lambda.is_zero() && finite.is_zero()
    }

    pub fn check_move(&self, from: &Ordinal, to: &Ordinal) -> Result<usize, IllegalMove> {
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

    pub fn is_legal_move(&self, from: &Ordinal, to: &Ordinal) -> bool {
        self.check_move(from, to).is_ok()
    }

    pub fn apply_move(&self, from: &Ordinal, to: &Ordinal) -> Result<Self, IllegalMove> {
        self.check_move(from, to)?;
        let mut coins = self.coins.clone();
        coins.remove(from);
        coins.insert(to.clone());
        Ok(TransfinitePosition { coins })
    }

    /// The complete set of moves to value zero.
    ///
    /// If the quotients nim-sum to `L != 0`, a winning move must send some
    /// coin from block `l` to block `l ^ L < l`, and its finite part is
    /// then forced. Otherwise it must stay inside its block, where finite
    /// Welter analysis gives at most one target per coin.
    pub fn winning_moves(&self) -> Vec<Move> {
        let blocks = self.blocks();
        let (lambda_sum, finite_sum) = summarize(&self.coins, &blocks);
        let zero = BigUint::zero();
        let mut moves = Vec::new();

        for (index, coin) in self.coins.iter().enumerate() {
            let (lambda, m) = coin.omega_split();
            let target = if lambda_sum.is_zero() {
                let block = &blocks[&lambda];
                let rest = block.without(&m);
                let wanted = &finite_sum ^ block.value();
                let x = solve_welter(&rest, &wanted);
                (x < m).then(|| Ordinal::omega_unsplit(&lambda, &x))
            } else {
                let dest = lambda.nim_sum(&lambda_sum);
                (dest < lambda).then(|| self.block_change_target(&blocks, &finite_sum, &lambda, &m, &dest, &zero))
            };
            if let Some(to) = target {
                moves.push(Move::new(index, coin.clone(), to).with_value(Ordinal::zero()));
            }
        }
        moves
    }

    // Target square for moving `w*lambda + m` into block `dest` so that the
    // finite part of the value becomes `finite_target`.
    fn block_change_target(
        &self,
        blocks: &BlockTable,
        finite_sum: &BigUint,
        lambda: &Ordinal,
        m: &BigUint,
        dest: &Ordinal,
        finite_target: &BigUint,
    ) -> Ordinal {
        let source = &blocks[lambda];
        let empty = FinitePosition::default();
        let dest_block = blocks.get(dest).unwrap_or(&empty);
        // Finite part once the coin has left its block, ignoring `dest`.
        let rest = finite_sum ^ source.value() ^ source.without(m).value() ^ dest_block.value();
        let x = solve_welter(dest_block, &(finite_target ^ rest));
        Ordinal::omega_unsplit(dest, &x)
    }

    /// A move to a position of value `beta`, for `beta` below the current
    /// value.
    ///
    /// With `value = w*L + a` and `beta = w*L' + b`: if `L' == L` some block
    /// can drop its Welter value to `c = a ^ [S] ^ b`, and a finite move
    /// inside it does so. If `L' < L`, a transfinite Nim move on the
    /// quotients picks the coin and its destination block, and the finite
    /// part there is solved for.
    pub fn move_to_value(&self, beta: &Ordinal) -> Result<Move> {
        let blocks = self.blocks();
        let (lambda_sum, finite_sum) = summarize(&self.coins, &blocks);
        let alpha = Ordinal::omega_unsplit(&lambda_sum, &finite_sum);
        if beta >= &alpha {
            return Err(Error::TargetNotBelowValue {
                target: beta.to_string(),
                current: alpha.to_string(),
            });
        }
        let (beta_lambda, beta_finite) = beta.omega_split();

        let (from, to) = if beta_lambda == lambda_sum {
            let (lambda, block, c) = blocks
                .iter()
                .find_map(|(lambda, block)| {
                    let value = block.value();
                    let c = &finite_sum ^ &value ^ &beta_finite;
                    (c < value).then_some((lambda, block, c))
                })
                .ok_or_else(|| Error::Invariant(format!("no block can lower the finite part to {beta_finite}")))?;
            let inner = block.move_to_value(&c)?;
            (
                Ordinal::omega_unsplit(lambda, &inner.from),
                Ordinal::omega_unsplit(lambda, &inner.to),
            )
        } else {
            let nim_move = self.quotient_heaps().move_to_value(&beta_lambda)?;
            let coin = self.coins.iter().nth(nim_move.index).expect("heap index is a coin index");
            let (lambda, m) = coin.omega_split();
            let to = self.block_change_target(&blocks, &finite_sum, &lambda, &m, &nim_move.to, &beta_finite);
            (coin.clone(), to)
        };

        let index = self.check_move(&from, &to).map_err(|e| {
            Error::Invariant(format!("constructed move {from} -> {to} is illegal: {e}"))
        })?;
        Ok(Move::new(index, from, to).with_value(beta.clone()))
    }

    // Least square below `coin` that is free, if any. Only finite squares
    // need checking: below an infinite coin some natural is always free.
    fn least_free_below(&self, coin: &Ordinal) -> Option<Ordinal> {
        (0..=self.coins.len() as u64)
            .map(Ordinal::from)
            .find(|sq| sq < coin && !self.coins.contains(sq))
    }
}

// (nim-sum of quotients, xor of block values)
fn summarize(coins: &BTreeSet<Ordinal>, blocks: &BlockTable) -> (Ordinal, BigUint) {
    let quotients: Vec<Ordinal> = coins.iter().map(|c| c.omega_split().0).collect();
    let lambda = nim_sum_ord(&quotients);
    let finite = blocks
        .values()
        .fold(BigUint::zero(), |acc, b| acc ^ b.value());
    (lambda, finite)
}

impl Game for TransfinitePosition {
    fn value(&self) -> Ordinal {
        self.grundy()
    }

    fn size(&self) -> usize {
        self.coins.len()
    }

    fn cnf_terms(&self) -> usize {
        self.coins.iter().map(Ordinal::cnf_size).sum()
    }

    fn has_moves(&self) -> bool {
        self.coins.iter().any(|c| self.least_free_below(c).is_some())
    }

    fn winning_moves(&self) -> Vec<Move> {
        TransfinitePosition::winning_moves(self)
    }

    fn move_to_value(&self, beta: &Ordinal) -> Result<Move> {
        TransfinitePosition::move_to_value(self, beta)
    }

    fn random_move<R: Rng + ?Sized>(&self, rng: &mut R, budget: u64) -> Option<Move> {
        let movable: Vec<(usize, &Ordinal)> = self
            .coins
            .iter()
            .enumerate()
            .filter(|(_, c)| self.least_free_below(c).is_some())
            .collect();
        if movable.is_empty() {
            return None;
        }
        let (index, from) = movable[rng.gen_range(0..movable.len())];
        let to = (0..SAMPLE_ATTEMPTS)
            .filter_map(|_| sample_below_with(from, rng, budget).ok())
            .find(|t| !self.coins.contains(t))
            .or_else(|| self.least_free_below(from))?;
        Some(Move::new(index, from.clone(), to))
    }

    fn check_move(&self, from: &Ordinal, to: &Ordinal) -> Result<usize, IllegalMove> {
        TransfinitePosition::check_move(self, from, to)
    }

    fn apply(&self, mv: &Move) -> Self {
        let mut coins = self.coins.clone();
        let removed = coins.remove(&mv.from);
        debug_assert!(removed && !coins.contains(&mv.to));
        coins.insert(mv.to.clone());
        TransfinitePosition { coins }
    }
}
