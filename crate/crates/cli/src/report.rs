//! JSON shapes printed by `--format json`.

use serde::{Deserialize, Serialize};
use welter_core::GameKind;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvalReport {
    pub game: GameKind,
    pub position: Vec<String>,
    pub value: String,
    pub p_position: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub blocks: Vec<BlockReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockReport {
    pub lambda: String,
    pub squares: Vec<String>,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BestReport {
    pub game: GameKind,
    pub value: String,
    pub moves: Vec<MoveReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveReport {
    pub from: String,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PcheckReport {
    pub game: GameKind,
    pub value: String,
    pub p_position: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub game: GameKind,
    pub max_coins: usize,
    pub bound: u64,
    pub rows: Vec<OracleRow>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRow {
    pub coins: usize,
    pub positions: u64,
    pub mismatches: u64,
}
