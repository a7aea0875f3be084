//! Fixtures shared by the benchmarks.

use welter_core::{FinitePosition, Ordinal, OrdinalHeaps, TransfinitePosition};

pub fn welter_example() -> TransfinitePosition {
    TransfinitePosition::parse(&["1", "w*2+4", "w*2+9", "w^2+w*4+16", "w^2+w*5+25"]).unwrap()
}

pub fn nim_example() -> OrdinalHeaps {
    OrdinalHeaps::new(
        ["1", "w*2+4", "w^2*3+9", "w^2*2+w*4+16", "w^2+w*5+25"]
            .iter()
            .map(|s| s.parse::<Ordinal>().unwrap())
            .collect(),
    )
}

/// `n` coins spread over squares below `4n`.
pub fn spread_position(n: u64) -> FinitePosition {
    FinitePosition::new((0..n).map(|i| (i * 37 + 11) % (4 * n) + 4 * n * (i % 2))).unwrap()
}
