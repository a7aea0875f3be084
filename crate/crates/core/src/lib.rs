//! Exact solver for Nim and Welter's Game, including their transfinite
//! versions played on ordinals below epsilon-zero.
//!
//! Grundy values are computed from closed forms (nim-sums and the Welter
//! function) and winning moves are synthesized constructively. The
//! [`oracle`] module holds a brute-force mex recursion used to check the
//! closed forms on finite instances.

pub mod error;
pub mod game;
pub mod nim;
pub mod nimber;
pub mod oracle;
pub mod ordinal;
pub mod playout;
pub mod transfinite;
pub mod welter;

pub use error::{Error, IllegalMove, Result};
pub use game::{Game, Move};
pub use nim::OrdinalHeaps;
pub use nimber::{mating, mex, nim_sum, SignedInt};
pub use oracle::{grundy_oracle, GameKind, GrundyOracle};
pub use ordinal::{nim_sum_ord, Ordinal, ParseOrdinalError, Term};
pub use playout::{run_playout, EngineSide, Playout, PlayoutStart, Side};
pub use transfinite::{BlockTable, TransfinitePosition};
pub use welter::{solve_welter, AnimatingFn, FinitePosition, Step};

pub use num_bigint::{BigInt, BigUint};
