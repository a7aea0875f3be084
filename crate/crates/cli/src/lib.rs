//! Command-line front end: evaluate positions, list winning moves, run the
//! brute-force cross-check, play against the engine or start the HTTP API.

pub mod play;
pub mod report;

use std::io::{self, BufRead, Write};
use std::net::SocketAddr;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use welter_core::{BigUint, FinitePosition, GameKind, GrundyOracle, Move, Ordinal, TransfinitePosition};
use welter_service::{Board, DEFAULT_BUDGET, DEFAULT_BIND};

use report::{BestReport, BlockReport, EvalReport, MoveReport, OracleReport, OracleRow, PcheckReport};

pub const EXIT_OK: u8 = 0;
/// `pcheck` on an N-position, or an oracle mismatch.
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "welter", version, about = "Exact solver for Nim and Welter's game on ordinal squares")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the value of a position.
    Eval(PositionArgs),
    /// List every winning move.
    Best(PositionArgs),
    /// Exit 0 for a P-position, 1 otherwise.
    Pcheck(PositionArgs),
    /// Compare the closed-form value with exhaustive search on small positions.
    OracleCheck(OracleArgs),
    /// Play against the engine on the terminal.
    Play(PlayArgs),
    /// Run the HTTP JSON API.
    Serve(ServeArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GameArg {
    Nim,
    Welter,
}

impl From<GameArg> for GameKind {
    fn from(g: GameArg) -> Self {
        match g {
            GameArg::Nim => GameKind::Nim,
            GameArg::Welter => GameKind::Welter,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct PositionArgs {
    #[arg(long, value_enum, default_value = "welter")]
    pub game: GameArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Occupied squares (Welter) or heap sizes (Nim), e.g. `w^2+w*5+25`.
    pub position: Vec<String>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long, value_enum, default_value = "welter")]
    pub game: GameArg,
    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
    /// Largest number of coins or heaps.
    #[arg(long, default_value_t = 3)]
    pub coins: usize,
    /// Squares range over `0..bound`.
    #[arg(long, default_value_t = 16)]
    pub bound: u64,
}

#[derive(Debug, Args)]
pub struct PlayArgs {
    #[arg(long, value_enum, default_value = "welter")]
    pub game: GameArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Cap on coefficients the engine picks when it has no winning move.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long)]
    pub human_first: bool,
    pub position: Vec<String>,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, env = "WELTER_BIND", default_value = DEFAULT_BIND)]
    pub bind: SocketAddr,
    /// Append session records here and restore them on startup.
    #[arg(long)]
    pub snapshot: Option<PathBuf>,
}

/// Runs one command and returns the process exit code.
pub fn run<R: BufRead, W: Write, E: Write>(cli: Cli, input: &mut R, out: &mut W, err: &mut E) -> u8 {
    let result = match cli.command {
        Command::Eval(a) => eval(&a, out),
        Command::Best(a) => best(&a, out),
        Command::Pcheck(a) => pcheck(&a, out),
        Command::OracleCheck(a) => oracle_check(&a, out),
        Command::Play(a) => play_cmd(&a, input, out),
        Command::Serve(a) => serve(a),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

type CliResult = Result<u8, CliError>;

fn board(game: GameArg, position: &[String]) -> Result<Board, CliError> {
    Board::parse(game.into(), position).map_err(|e| CliError::Usage(e.to_string()))
}

fn strings<'a>(xs: impl IntoIterator<Item = &'a Ordinal>) -> Vec<String> {
    xs.into_iter().map(ToString::to_string).collect()
}

fn print_json<T: serde::Serialize, W: Write>(out: &mut W, value: &T) -> io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)
}

fn verdict(p: bool) -> &'static str {
    if p {
        "P-position (second player wins)"
    } else {
        "N-position (first player wins)"
    }
}

fn block_reports(p: &TransfinitePosition) -> Vec<BlockReport> {
    p.blocks()
        .into_iter()
        .map(|(lambda, set)| BlockReport {
            lambda: lambda.to_string(),
            squares: set.coins().map(ToString::to_string).collect(),
            value: set.value().to_string(),
        })
        .collect()
}

fn eval<W: Write>(a: &PositionArgs, out: &mut W) -> CliResult {
    let b = board(a.game, &a.position)?;
    let value = b.value();
    let report = EvalReport {
        game: b.kind(),
        position: strings(&b.squares()),
        value: value.to_string(),
        p_position: value.is_zero(),
        blocks: match &b {
            Board::Welter(p) => block_reports(p),
            Board::Nim(_) => Vec::new(),
        },
    };
    match a.format {
        Format::Json => print_json(out, &report)?,
        Format::Text => {
            writeln!(out, "value: {}", report.value)?;
            writeln!(out, "{}", verdict(report.p_position))?;
            if !report.blocks.is_empty() {
                writeln!(out, "blocks (quotient: finite parts -> value):")?;
                for blk in &report.blocks {
                    writeln!(out, "  {}: {{{}}} -> {}", blk.lambda, blk.squares.join(", "), blk.value)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

/// For a Welter move that changes quotient, the equation that fixed the
/// landing square's finite part.
fn block_note(p: &TransfinitePosition, mv: &Move) -> Option<String> {
    let (from_q, _) = mv.from.omega_split();
    let (to_q, x) = mv.to.omega_split();
    if from_q == to_q {
        return None;
    }
    let after = p.apply_move(&mv.from, &mv.to).ok()?;
    let block = after.blocks().remove(&to_q)?;
    let frozen: FinitePosition = block.without(&x);
    let mut args = vec!["x".to_owned()];
    args.extend(frozen.coins().map(BigUint::to_string));
    Some(format!(
        "finite part solves [{}] = {} in block {}: x = {}",
        args.join("|"),
        block.value(),
        to_q,
        x
    ))
}

fn best<W: Write>(a: &PositionArgs, out: &mut W) -> CliResult {
    let b = board(a.game, &a.position)?;
    let moves = b
        .winning_moves()
        .iter()
        .map(|m| MoveReport {
            from: m.from.to_string(),
            to: m.to.to_string(),
            note: match &b {
                Board::Welter(p) => block_note(p, m),
                Board::Nim(_) => None,
            },
        })
        .collect::<Vec<_>>();
    let report = BestReport {
        game: b.kind(),
        value: b.value().to_string(),
        moves,
    };
    match a.format {
        Format::Json => print_json(out, &report)?,
        Format::Text => {
            if report.moves.is_empty() {
                writeln!(out, "no winning move: value {}", report.value)?;
            }
            for m in &report.moves {
                writeln!(out, "{} -> {}", m.from, m.to)?;
                if let Some(note) = &m.note {
                    writeln!(out, "  {note}")?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}

fn pcheck<W: Write>(a: &PositionArgs, out: &mut W) -> CliResult {
    let b = board(a.game, &a.position)?;
    let value = b.value();
    let report = PcheckReport {
        game: b.kind(),
        value: value.to_string(),
        p_position: value.is_zero(),
    };
    match a.format {
        Format::Json => print_json(out, &report)?,
        Format::Text => writeln!(out, "{}", verdict(report.p_position))?,
    }
    Ok(if report.p_position { EXIT_OK } else { EXIT_NEGATIVE })
}

/// Calls `f` on every position with at most `max` coins below `bound`.
/// Welter squares are distinct; Nim heaps may repeat.
fn for_each_position(kind: GameKind, max: usize, bound: u64, f: &mut dyn FnMut(&[u64])) {
    fn go(kind: GameKind, cur: &mut Vec<u64>, start: u64, max: usize, bound: u64, f: &mut dyn FnMut(&[u64])) {
        f(cur);
        if cur.len() == max {
            return;
        }
        for v in start..bound {
            cur.push(v);
            let next = if kind == GameKind::Welter { v + 1 } else { v };
            go(kind, cur, next, max, bound, f);
            cur.pop();
        }
    }
    go(kind, &mut Vec::new(), 0, max, bound, f);
}

fn closed_form(kind: GameKind, position: &[u64]) -> u64 {
    match kind {
        GameKind::Nim => position.iter().fold(0, |acc, h| acc ^ h),
        GameKind::Welter => {
            let v = FinitePosition::new(position.iter().copied()).expect("distinct squares").value();
            u64::try_from(v).expect("value fits")
        }
    }
}

fn oracle_check<W: Write>(a: &OracleArgs, out: &mut W) -> CliResult {
    let kind: GameKind = a.game.into();
    let mut oracle = GrundyOracle::new(kind);
    let mut rows: Vec<OracleRow> = (0..=a.coins)
        .map(|coins| OracleRow {
            coins,
            positions: 0,
            mismatches: 0,
        })
        .collect();
    let mut failure = None;
    for_each_position(kind, a.coins, a.bound, &mut |pos| {
        if failure.is_some() {
            return;
        }
        match oracle.grundy(pos) {
            Ok(g) => {
                let row = &mut rows[pos.len()];
                row.positions += 1;
                if g != closed_form(kind, pos) {
                    row.mismatches += 1;
                }
            }
            Err(e) => failure = Some(e.to_string()),
        }
    });
    if let Some(msg) = failure {
        return Err(CliError::Usage(msg));
    }
    let report = OracleReport {
        game: kind,
        max_coins: a.coins,
        bound: a.bound,
        passed: rows.iter().all(|r| r.mismatches == 0),
        rows,
    };
    match a.format {
        Format::Json => print_json(out, &report)?,
        Format::Text => {
            for r in &report.rows {
                writeln!(out, "{} coins: {} positions, {} mismatches", r.coins, r.positions, r.mismatches)?;
            }
            writeln!(out, "{}", if report.passed { "ok" } else { "MISMATCH" })?;
        }
    }
    Ok(if report.passed { EXIT_OK } else { EXIT_NEGATIVE })
}

fn play_cmd<R: BufRead, W: Write>(a: &PlayArgs, input: &mut R, out: &mut W) -> CliResult {
    let b = board(a.game, &a.position)?;
    let cfg = play::PlayConfig {
        human_first: a.human_first,
        seed: a.seed,
        budget: a.budget,
    };
    play::play(b, &cfg, input, out)?;
    Ok(EXIT_OK)
}

fn serve(a: ServeArgs) -> CliResult {
    let rt = tokio::runtime::Builder::new_multi_thread().enable_all().build()?;
    rt.block_on(welter_service::serve(a.bind, a.snapshot))?;
    Ok(EXIT_OK)
}
