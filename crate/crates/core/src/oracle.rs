//! Brute-force Grundy values by memoized mex recursion over every option.
//! Only meaningful for finite positions; it is the ground truth the closed
//! forms are tested against.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::nimber::mex;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GameKind {
    Nim,
    Welter,
}

impl fmt::Display for GameKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GameKind::Nim => "nim",
            GameKind::Welter => "welter",
        })
    }
}

impl FromStr for GameKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "nim" => Ok(GameKind::Nim),
            "welter" => Ok(GameKind::Welter),
            other => Err(format!("unknown game {other:?} (expected nim or welter)")),
        }
    }
}

/// Memo table for one game kind. Keys are sorted coin or heap tuples
/// (zero heaps dropped for Nim).
pub struct GrundyOracle {
    kind: GameKind,
    budget: u64,
    expansions: u64,
    memo: HashMap<Vec<u64>, u64>,
}

impl GrundyOracle {
    pub fn new(kind: GameKind) -> Self {
        GrundyOracle::with_budget(kind, DEFAULT_NODE_BUDGET)
    }

    pub fn with_budget(kind: GameKind, budget: u64) -> Self {
        GrundyOracle {
            kind,
            budget,
            expansions: 0,
            memo: HashMap::new(),
        }
    }

    pub fn kind(&self) -> GameKind {
        self.kind
    }

    pub fn expansions(&self) -> u64 {
        self.expansions
    }

    pub fn memo(&self) -> &HashMap<Vec<u64>, u64> {
        &self.memo
    }

    pub fn canonical(&self, position: &[u64]) -> Result<Vec<u64>> {
        let mut key = position.to_vec();
        key.sort_unstable();
        match self.kind {
            GameKind::Nim => key.retain(|&h| h != 0),
            GameKind::Welter => {
                if let Some(w) = key.windows(2).find(|w| w[0] == w[1]) {
                    return Err(Error::DuplicateCoin(w[0].to_string()));
                }
            }
        }
        Ok(key)
    }

    /// Every position reachable in one move, canonicalized.
    pub fn options(&self, key: &[u64]) -> Vec<Vec<u64>> {
        let mut out = Vec::new();
        for (i, &c) in key.iter().enumerate() {
            for t in 0..c {
                if self.kind == GameKind::Welter && key.contains(&t) {
                    continue;
                }
                let mut next = key.to_vec();
                next[i] = t;
                next.sort_unstable();
                if self.kind == GameKind::Nim {
                    next.retain(|&h| h != 0);
                }
                out.push(next);
            }
        }
        out
    }

    pub fn grundy(&mut self, position: &[u64]) -> Result<u64> {
        let key = self.canonical(position)?;
        self.eval(key)
    }

    fn eval(&mut self, key: Vec<u64>) -> Result<u64> {
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.expansions += 1;
        if self.expansions > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        let mut child_values = Vec::new();
        for child in self.options(&key) {
            child_values.push(self.eval(child)?);
        }
        let v = mex(child_values);
        self.memo.insert(key, v);
        Ok(v)
    }
}

/// One-shot oracle evaluation with the default node budget.
pub fn grundy_oracle(kind: GameKind, position: &[u64]) -> Result<u64> {
    GrundyOracle::new(kind).grundy(position)
}
