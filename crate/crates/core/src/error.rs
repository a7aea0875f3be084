use std::fmt;

use thiserror::Error;

use crate::ordinal::ParseOrdinalError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Why a requested move was rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IllegalMove {
    NoSuchCoin,
    Occupied,
    NotSmaller,
}

impl IllegalMove {
    pub fn reason(self) -> &'static str {
        match self {
            IllegalMove::NoSuchCoin => "no such coin",
            IllegalMove::Occupied => "occupied",
            IllegalMove::NotSmaller => "not smaller",
        }
    }
}

impl fmt::Display for IllegalMove {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.reason())
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseOrdinalError),

    #[error("duplicate coin on square {0}")]
    DuplicateCoin(String),

    #[error("no ordinal lies below zero")]
    NothingBelowZero,

    #[error("target value {target} is not below the current value {current}")]
    TargetNotBelowValue { target: String, current: String },

    #[error("illegal move: {0}")]
    IllegalMove(IllegalMove),

    #[error("oracle node budget of {0} expansions exceeded")]
    BudgetExceeded(u64),

    #[error("playout exceeded the ceiling of {0} moves")]
    CeilingExceeded(usize),

    #[error("solution window scan found {hits} solutions, expected exactly one")]
    NotUnique { hits: usize },

    /// A closed form disagreed with the theorem it implements.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl From<IllegalMove> for Error {
    fn from(m: IllegalMove) -> Self {
        Error::IllegalMove(m)
    }
}
