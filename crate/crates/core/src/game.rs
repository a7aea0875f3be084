use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{IllegalMove, Result};
use crate::ordinal::Ordinal;

/// One coin (or heap) relocated from `from` to `to`.
///
/// `index` is the coin's position in the position's canonical order
/// (ascending squares for Welter, list order for Nim). `value` carries the
/// Grundy value of the resulting position when the move came out of
/// analysis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move<T = Ordinal> {
    pub index: usize,
    pub from: T,
    pub to: T,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<T>,
}

impl<T> Move<T> {
    pub fn new(index: usize, from: T, to: T) -> Self {
        Move {
            index,
            from,
            to,
            value: None,
        }
    }

    pub fn with_value(mut self, value: T) -> Self {
        self.value = Some(value);
        self
    }
}

impl<T: fmt::Display> fmt::Display for Move<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.from, self.to)
    }
}

/// Common surface of the transfinite games, used by the playout harness
/// and the front ends.
pub trait Game: Clone {
    /// Grundy value.
    fn value(&self) -> Ordinal;

    /// Number of coins or heaps.
    fn size(&self) -> usize;

    /// Total CNF terms across all coins, nested exponents included.
    fn cnf_terms(&self) -> usize;

    fn has_moves(&self) -> bool;

    /// Every move to a position of value zero, in ascending source order.
    fn winning_moves(&self) -> Vec<Move>;

    /// A move to a position whose value is `beta`, for any `beta` below
    /// the current value.
    fn move_to_value(&self, beta: &Ordinal) -> Result<Move>;

    /// A legal move drawn with [`crate::ordinal::sample_below_with`], or
    /// `None` at a terminal position.
    fn random_move<R: Rng + ?Sized>(&self, rng: &mut R, budget: u64) -> Option<Move>;

    /// Index of the coin that `from -> to` relocates, if the move is legal.
    fn check_move(&self, from: &Ordinal, to: &Ordinal) -> Result<usize, IllegalMove>;

    /// Applies a move previously validated by [`Game::check_move`].
    fn apply(&self, mv: &Move) -> Self;

    fn play(&self, from: &Ordinal, to: &Ordinal) -> Result<(Self, Move), IllegalMove> {
        let index = self.check_move(from, to)?;
        let mv = Move::new(index, from.clone(), to.clone());
        Ok((self.apply(&mv), mv))
    }

    fn is_p_position(&self) -> bool {
        self.value().is_zero()
    }
}
