use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use welter_core::ordinal::serde_str;
use welter_core::playout::engine_move;
use welter_core::{Game, GameKind, IllegalMove, Move, Ordinal, OrdinalHeaps, TransfinitePosition};

pub const DEFAULT_BUDGET: u64 = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Board {
    Welter(TransfinitePosition),
    Nim(OrdinalHeaps),
}

impl Board {
    pub fn parse<S: AsRef<str>>(kind: GameKind, coins: &[S]) -> welter_core::Result<Board> {
        match kind {
            GameKind::Welter => TransfinitePosition::parse(coins).map(Board::Welter),
            GameKind::Nim => {
                let heaps = coins
                    .iter()
                    .map(|s| s.as_ref().parse::<Ordinal>())
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(Board::Nim(OrdinalHeaps::new(heaps)))
            }
        }
    }

    pub fn kind(&self) -> GameKind {
        match self {
            Board::Welter(_) => GameKind::Welter,
            Board::Nim(_) => GameKind::Nim,
        }
    }

    pub fn squares(&self) -> Vec<Ordinal> {
        match self {
            Board::Welter(p) => p.coins().cloned().collect(),
            Board::Nim(h) => h.heaps().to_vec(),
        }
    }

    pub fn value(&self) -> Ordinal {
        match self {
            Board::Welter(p) => p.value(),
            Board::Nim(h) => h.value(),
        }
    }

    pub fn has_moves(&self) -> bool {
        match self {
            Board::Welter(p) => p.has_moves(),
            Board::Nim(h) => h.has_moves(),
        }
    }

    pub fn winning_moves(&self) -> Vec<Move> {
        match self {
            Board::Welter(p) => p.winning_moves(),
            Board::Nim(h) => h.winning_moves(),
        }
    }

    pub fn play(&self, from: &Ordinal, to: &Ordinal) -> Result<(Board, Move), IllegalMove> {
        match self {
            Board::Welter(p) => p.play(from, to).map(|(p, m)| (Board::Welter(p), m)),
            Board::Nim(h) => h.play(from, to).map(|(h, m)| (Board::Nim(h), m)),
        }
    }

    pub fn engine_move(&self, seed: u64, budget: u64) -> welter_core::Result<Option<Move>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        match self {
            Board::Welter(p) => engine_move(p, &mut rng, budget),
            Board::Nim(h) => engine_move(h, &mut rng, budget),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Player {
    Human,
    Engine,
}

impl Player {
    fn other(self) -> Player {
        match self {
            Player::Human => Player::Engine,
            Player::Engine => Player::Human,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ongoing,
    HumanWon,
    EngineWon,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HistoryEntry {
    pub mover: Player,
    #[serde(with = "serde_str")]
    pub from: Ordinal,
    #[serde(with = "serde_str")]
    pub to: Ordinal,
}

#[derive(Debug, Clone)]
pub struct GameSession {
    pub id: String,
    pub initial: Board,
    pub position: Board,
    pub to_move: Player,
    pub history: Vec<HistoryEntry>,
    pub status: Status,
    pub seed: u64,
    pub budget: u64,
}

impl GameSession {
    pub fn new(id: String, initial: Board, human_moves_first: bool, seed: u64, budget: u64) -> Self {
        let to_move = if human_moves_first { Player::Human } else { Player::Engine };
        let mut s = GameSession {
            id,
            position: initial.clone(),
            initial,
            to_move,
            history: Vec::new(),
            status: Status::Ongoing,
            seed,
            budget,
        };
        s.refresh_status();
        s
    }

    pub fn human_moved_first(&self) -> bool {
        // The first mover alternates with every recorded move.
        (self.to_move == Player::Human) == (self.history.len() % 2 == 0)
    }

    fn refresh_status(&mut self) {
        self.status = if self.position.has_moves() {
            Status::Ongoing
        } else {
            match self.to_move {
                Player::Human => Status::EngineWon,
                Player::Engine => Status::HumanWon,
            }
        };
    }

    /// Records a validated move by `mover`.
    pub fn record(&mut self, mover: Player, next: Board, mv: &Move) {
        self.position = next;
        self.history.push(HistoryEntry {
            mover,
            from: mv.from.clone(),
            to: mv.to.clone(),
        });
        self.to_move = mover.other();
        self.refresh_status();
    }

    /// Seed for the engine's sampled moves at the current ply.
    pub fn ply_seed(&self) -> u64 {
        self.seed
            .wrapping_mul(0x9E37_79B9_7F4A_7C15)
            .wrapping_add(self.history.len() as u64)
    }

    /// Position obtained by replaying the history from the initial one.
    pub fn replay(&self) -> Result<Board, IllegalMove> {
        self.history
            .iter()
            .try_fold(self.initial.clone(), |board, e| board.play(&e.from, &e.to).map(|(b, _)| b))
    }

    pub fn view(&self) -> SessionView {
        SessionView {
            id: self.id.clone(),
            game: self.initial.kind(),
            initial: strings(&self.initial.squares()),
            position: strings(&self.position.squares()),
            value: self.position.value().to_string(),
            to_move: self.to_move,
            status: self.status,
            human_moves_first: self.human_moved_first(),
            seed: self.seed,
            budget: self.budget,
            history: self.history.clone(),
            last_move: self.history.last().cloned(),
        }
    }

    /// Rebuilds a session from its view by replaying the recorded moves.
    pub fn from_view(view: &SessionView) -> Result<GameSession, String> {
        let initial = Board::parse(view.game, &view.initial).map_err(|e| e.to_string())?;
        let mut s = GameSession::new(view.id.clone(), initial, view.human_moves_first, view.seed, view.budget);
        for e in &view.history {
            if s.to_move != e.mover {
                return Err(format!("{} moved out of turn", serde_json::to_string(&e.mover).unwrap()));
            }
            let (next, mv) = s.position.play(&e.from, &e.to).map_err(|m| m.to_string())?;
            s.record(e.mover, next, &mv);
        }
        Ok(s)
    }
}

fn strings(xs: &[Ordinal]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

/// Wire form of a session; also the snapshot record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionView {
    pub id: String,
    pub game: GameKind,
    pub initial: Vec<String>,
    pub position: Vec<String>,
    pub value: String,
    pub to_move: Player,
    pub status: Status,
    pub human_moves_first: bool,
    pub seed: u64,
    pub budget: u64,
    pub history: Vec<HistoryEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub last_move: Option<HistoryEntry>,
}
