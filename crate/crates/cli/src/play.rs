//! Terminal play loop. Reads human moves as `from -> to` lines.

use std::io::{self, BufRead, Write};

use welter_core::Ordinal;
use welter_service::Board;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    HumanWon,
    EngineWon,
    Quit,
}

pub struct PlayConfig {
    pub human_first: bool,
    pub seed: u64,
    pub budget: u64,
}

fn parse_move(line: &str) -> Result<(Ordinal, Ordinal), String> {
    let (from, to) = line
        .split_once("->")
        .ok_or_else(|| "expected `from -> to`".to_owned())?;
    let from = from.parse::<Ordinal>().map_err(|e| format!("from: {e}"))?;
    let to = to.parse::<Ordinal>().map_err(|e| format!("to: {e}"))?;
    Ok((from, to))
}

fn show(board: &Board) -> String {
    let squares: Vec<String> = board.squares().iter().map(ToString::to_string).collect();
    format!("[{}]  value {}", squares.join(", "), board.value())
}

/// Runs a session to completion. Hitting end of input while the human is
/// to move is an error.
pub fn play<R: BufRead, W: Write>(start: Board, cfg: &PlayConfig, input: &mut R, out: &mut W) -> io::Result<Outcome> {
    let mut board = start;
    let mut human_turn = cfg.human_first;
    let mut ply = 0u64;
    let mut line = String::new();

    loop {
        writeln!(out, "position {}", show(&board))?;
        if !board.has_moves() {
            let outcome = if human_turn { Outcome::EngineWon } else { Outcome::HumanWon };
            writeln!(
                out,
                "{}",
                match outcome {
                    Outcome::EngineWon => "no moves left for you: engine wins",
                    _ => "no moves left for the engine: you win",
                }
            )?;
            return Ok(outcome);
        }

        if human_turn {
            loop {
                write!(out, "your move (from -> to): ")?;
                out.flush()?;
                line.clear();
                if input.read_line(&mut line)? == 0 {
                    return Err(io::Error::new(io::ErrorKind::UnexpectedEof, "input ended mid-game"));
                }
                let text = line.trim();
                if text == "quit" {
                    writeln!(out, "bye")?;
                    return Ok(Outcome::Quit);
                }
                match parse_move(text).and_then(|(f, t)| board.play(&f, &t).map_err(|m| format!("illegal move: {m}"))) {
                    Ok((next, _)) => {
                        board = next;
                        break;
                    }
                    Err(why) => writeln!(out, "{why}")?,
                }
            }
        } else {
            let seed = cfg.seed.wrapping_add(ply);
            let mv = board
                .engine_move(seed, cfg.budget)
                .map_err(io::Error::other)?
                .ok_or_else(|| io::Error::other("engine found no move"))?;
            let (next, mv) = board
                .play(&mv.from, &mv.to)
                .map_err(|m| io::Error::other(format!("engine move rejected: {m}")))?;
            writeln!(out, "engine plays {mv}")?;
            board = next;
        }
        human_turn = !human_turn;
        ply += 1;
    }
}
