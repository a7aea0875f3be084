//! Engine-versus-adversary playouts under normal play: whoever cannot move
//! loses.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Game, Move};
use crate::nim::OrdinalHeaps;
use crate::ordinal::Ordinal;
use crate::transfinite::TransfinitePosition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Engine,
    Adversary,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::Engine => Side::Adversary,
            Side::Adversary => Side::Engine,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EngineSide {
    First,
    Second,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PlayoutStart {
    Welter(TransfinitePosition),
    Nim(OrdinalHeaps),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Playout {
    pub transcript: Vec<(Side, Move)>,
    pub winner: Side,
}

/// Move ceiling for a start position: `10 * n * (budget + CNF terms)`.
pub fn move_ceiling<G: Game>(start: &G, budget: u64) -> usize {
    10 * start.size() * (budget as usize + start.cnf_terms())
}

/// The engine's policy: a move to value zero when one exists, otherwise a
/// sampled legal move.
pub fn engine_move<G: Game, R: rand::Rng + ?Sized>(position: &G, rng: &mut R, budget: u64) -> Result<Option<Move>> {
    if position.value() != Ordinal::zero() {
        return position.move_to_value(&Ordinal::zero()).map(Some);
    }
    Ok(position.random_move(rng, budget))
}

pub fn run_playout(start: &PlayoutStart, engine_side: EngineSide, seed: u64, budget: u64) -> Result<Playout> {
    match start {
        PlayoutStart::Welter(p) => play(p, engine_side, seed, budget),
        PlayoutStart::Nim(h) => play(h, engine_side, seed, budget),
    }
}

fn play<G: Game>(start: &G, engine_side: EngineSide, seed: u64, budget: u64) -> Result<Playout> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ceiling = move_ceiling(start, budget);
    let mut position = start.clone();
    let mut to_move = match engine_side {
        EngineSide::First => Side::Engine,
        EngineSide::Second => Side::Adversary,
    };
    let mut transcript = Vec::new();

    loop {
        let mv = match to_move {
            Side::Engine => engine_move(&position, &mut rng, budget)?,
            Side::Adversary => position.random_move(&mut rng, budget),
        };
        let Some(mv) = mv else {
            return Ok(Playout {
                transcript,
                winner: to_move.other(),
            });
        };
        if transcript.len() >= ceiling {
            return Err(Error::CeilingExceeded(ceiling));
        }
        debug_assert!(position.check_move(&mv.from, &mv.to).is_ok());
        position = position.apply(&mv);
        transcript.push((to_move, mv));
        to_move = to_move.other();
    }
}
