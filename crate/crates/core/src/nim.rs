//! Nim with ordinal heap sizes.

use rand::Rng;

use crate::error::{Error, IllegalMove, Result};
use crate::game::{Game, Move};
use crate::ordinal::{nim_sum_ord, sample_below_with, Ordinal};

/// Heap sizes; zeros and repeated sizes are allowed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct OrdinalHeaps {
    heaps: Vec<Ordinal>,
}

impl OrdinalHeaps {
    pub fn new(heaps: Vec<Ordinal>) -> Self {
        OrdinalHeaps { heaps }
    }

    pub fn heaps(&self) -> &[Ordinal] {
        &self.heaps
    }

    pub fn grundy(&self) -> Ordinal {
        nim_sum_ord(&self.heaps)
    }

    /// Moves replacing heap `i` by `heaps[i] ^ s`, where `s` is the current
    /// value, whenever that is smaller.
    pub fn winning_moves(&self) -> Vec<Move> {
        let s = self.grundy();
        if s.is_zero() {
            return Vec::new();
        }
        self.heaps
            .iter()
            .enumerate()
            .filter_map(|(i, h)| {
                let target = h.nim_sum(&s);
                (&target < h).then(|| Move::new(i, h.clone(), target).with_value(Ordinal::zero()))
            })
            .collect()
    }

    /// Takes the highest exponent where the value and `beta` differ, picks
    /// the first heap whose coefficient there has the top differing bit
    /// set, and flips every coefficient of that heap at and below the
    /// exponent by the corresponding difference.
    pub fn move_to_value(&self, beta: &Ordinal) -> Result<Move> {
        let alpha = self.grundy();
        if beta >= &alpha {
            return Err(Error::TargetNotBelowValue {
                target: beta.to_string(),
                current: alpha.to_string(),
            });
        }
        let diff = alpha.nim_sum(beta);
        let top = &diff.terms()[0];
        let bit = top.coeff().bits() - 1;

        let index = self
            .heaps
            .iter()
            .position(|h| h.coefficient(top.exp()).bit(bit))
            .ok_or_else(|| Error::Invariant(format!("no heap carries bit {bit} at w^{}", top.exp())))?;
        let source = &self.heaps[index];
        let target = source.nim_sum(&diff);
        if &target >= source {
            return Err(Error::Invariant(format!("{source} -> {target} is not a decrease")));
        }
        Ok(Move::new(index, source.clone(), target).with_value(beta.clone()))
    }
}

impl Game for OrdinalHeaps {
    fn value(&self) -> Ordinal {
        self.grundy()
    }

    fn size(&self) -> usize {
        self.heaps.len()
    }

    fn cnf_terms(&self) -> usize {
        self.heaps.iter().map(Ordinal::cnf_size).sum()
    }

    fn has_moves(&self) -> bool {
        self.heaps.iter().any(|h| !h.is_zero())
    }

    fn winning_moves(&self) -> Vec<Move> {
        OrdinalHeaps::winning_moves(self)
    }

    fn move_to_value(&self, beta: &Ordinal) -> Result<Move> {
        OrdinalHeaps::move_to_value(self, beta)
    }

    fn random_move<R: Rng + ?Sized>(&self, rng: &mut R, budget: u64) -> Option<Move> {
        let live: Vec<usize> = (0..self.heaps.len()).filter(|&i| !self.heaps[i].is_zero()).collect();
        if live.is_empty() {
            return None;
        }
        let index = live[rng.gen_range(0..live.len())];
        let from = &self.heaps[index];
        let to = sample_below_with(from, rng, budget).ok()?;
        Some(Move::new(index, from.clone(), to))
    }

    fn check_move(&self, from: &Ordinal, to: &Ordinal) -> Result<usize, IllegalMove> {
        let index = self
            .heaps
            .iter()
            .position(|h| h == from)
            .ok_or(IllegalMove::NoSuchCoin)?;
        if to >= from {
            return Err(IllegalMove::NotSmaller);
        }
        Ok(index)
    }

    fn apply(&self, mv: &Move) -> Self {
        let mut heaps = self.heaps.clone();
        debug_assert_eq!(heaps[mv.index], mv.from);
        heaps[mv.index] = mv.to.clone();
        OrdinalHeaps { heaps }
    }
}
