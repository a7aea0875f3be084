mod common;

use common::{random_heaps, random_position, seeded};
use proptest::prelude::*;
use welter_core::ordinal::sample_below;
use welter_core::{
    grundy_oracle, run_playout, BigUint, EngineSide, FinitePosition, Game, GameKind, Ordinal,
    PlayoutStart, Side, TransfinitePosition,
};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn witness_soundness(seed: u64, k: u64) {
        let mut rng = seeded(seed);
        let p = random_position(&mut rng, 5, 8);
        let value = p.grundy();
        prop_assume!(!value.is_zero());
        let beta = sample_below(&value, k, 8).unwrap();
        let m = p.move_to_value(&beta).unwrap();
        prop_assert!(p.is_legal_move(&m.from, &m.to));
        prop_assert_eq!(p.apply_move(&m.from, &m.to).unwrap().grundy(), beta);
    }

    #[test]
    fn nim_witness_soundness(seed: u64, k: u64) {
        let mut rng = seeded(seed);
        let h = random_heaps(&mut rng, 5, 8);
        let value = h.grundy();
        prop_assume!(!value.is_zero());
        let beta = sample_below(&value, k, 8).unwrap();
        let m = h.move_to_value(&beta).unwrap();
        prop_assert!(m.to < m.from);
        prop_assert_eq!(h.apply(&m).grundy(), beta);
    }

    #[test]
    fn sampled_moves_change_the_value(seed: u64) {
        let mut rng = seeded(seed);
        let p = random_position(&mut rng, 5, 6);
        let h = random_heaps(&mut rng, 5, 6);
        for _ in 0..10 {
            if let Some(m) = p.random_move(&mut rng, 6) {
                prop_assert!(p.is_legal_move(&m.from, &m.to));
                prop_assert_ne!(p.apply(&m).grundy(), p.grundy());
            }
            if let Some(m) = h.random_move(&mut rng, 6) {
                prop_assert_ne!(h.apply(&m).grundy(), h.grundy());
            }
        }
    }

    /// Every listed winning move reaches zero, and no other candidate
    /// does: within-block moves are scanned exhaustively, block-changing
    /// moves over every destination quotient below the source that is
    /// expressible with small coefficients, and finite parts up to 64.
    #[test]
    fn winning_moves_are_complete(seed: u64) {
        let mut rng = seeded(seed);
        let p = random_position(&mut rng, 4, 4);
        let listed: Vec<(Ordinal, Ordinal)> =
            p.winning_moves().into_iter().map(|m| (m.from, m.to)).collect();
        for (from, to) in &listed {
            prop_assert!(p.apply_move(from, to).unwrap().is_p_position());
        }
        prop_assert_eq!(listed.is_empty(), p.is_p_position());

        let quotients: Vec<Ordinal> = (0..6u64)
            .flat_map(|a| (0..6u64).map(move |b| Ordinal::omega_unsplit(&Ordinal::from(a), &b.into())))
            .collect();
        for from in p.coins() {
            let (lambda, _) = from.omega_split();
            for dest in quotients.iter().filter(|q| **q <= lambda) {
                for x in 0..64u64 {
                    let to = Ordinal::omega_unsplit(dest, &BigUint::from(x));
                    if let Ok(q) = p.apply_move(from, &to) {
                        if q.is_p_position() {
                            prop_assert!(listed.contains(&(from.clone(), to.clone())), "missing {} -> {}", from, to);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn all_finite_positions_agree_with_finite_welter() {
    for mask in 0u32..1 << 16 {
        if mask.count_ones() > 4 {
            continue;
        }
        let coins: Vec<u64> = (0..16).filter(|i| mask >> i & 1 == 1).collect();
        let finite = FinitePosition::new(coins.iter().copied()).unwrap();
        let p = TransfinitePosition::from_finite(&finite);
        assert_eq!(p.grundy(), Ordinal::from(finite.value()), "{coins:?}");
    }
}

#[test]
fn finite_positions_agree_with_oracle() {
    for a in 0u64..16 {
        for b in a + 1..16 {
            for c in b + 1..16 {
                let p = TransfinitePosition::new([a, b, c].map(Ordinal::from)).unwrap();
                let oracle = grundy_oracle(GameKind::Welter, &[a, b, c]).unwrap();
                assert_eq!(p.grundy(), Ordinal::from(oracle));
            }
        }
    }
}

#[test]
fn p_position_playouts_are_won_by_second_player_engine() {
    let mut rng = seeded(99);
    let mut played = 0;
    while played < 40 {
        let p = random_position(&mut rng, 5, 5);
        let Some(m) = p.winning_moves().into_iter().next() else { continue };
        let p = p.apply(&m);
        if !p.has_moves() {
            continue;
        }
        let out = run_playout(&PlayoutStart::Welter(p), EngineSide::Second, played, 6).unwrap();
        assert_eq!(out.winner, Side::Engine);
        played += 1;
    }
}
