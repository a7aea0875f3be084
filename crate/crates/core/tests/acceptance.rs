//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{ord, random_heaps, random_position, seeded};
use rand::Rng;
use welter_core::ordinal::sample_below;
use welter_core::playout::move_ceiling;
use welter_core::welter::{solve_welter_scan, welter_fn};
use welter_core::{
    mating, nim_sum, run_playout, solve_welter, BigInt, BigUint, EngineSide, FinitePosition, Game,
    GameKind, GrundyOracle, Ordinal, OrdinalHeaps, PlayoutStart, Side, TransfinitePosition,
};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration) -> Outcome {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(format!("{took:.2?}"))
}

fn n(x: u64) -> BigUint {
    BigUint::from(x)
}

fn fin(xs: &[u64]) -> FinitePosition {
    FinitePosition::new(xs.iter().copied()).unwrap()
}

fn nim_example() -> Outcome {
    let start = Instant::now();
    let heaps = OrdinalHeaps::new(
        ["1", "w*2+4", "w^2*3+9", "w^2*2+w*4+16", "w^2+w*5+25"].map(ord).to_vec(),
    );
    let value = heaps.grundy();
    ensure!(value == ord("w*3+5"), "value {value}");
    let moves: Vec<String> = heaps.winning_moves().iter().map(ToString::to_string).collect();
    ensure!(moves == ["w*2+4 -> w+1"], "winning moves {moves:?}");
    within(start, Duration::from_secs(1))
}

fn welter_example() -> Outcome {
    let start = Instant::now();
    let coins = ["1", "w*2+4", "w*2+9", "w^2+w*4+16", "w^2+w*5+25"].map(ord);
    let p = TransfinitePosition::new(coins.clone()).unwrap();
    ensure!(p.grundy() == ord("w+4"), "value {}", p.grundy());
    ensure!(!p.is_p_position(), "reported as a P-position");

    let xor_at = |e: u64| {
        coins
            .iter()
            .fold(n(0), |acc, c| acc ^ c.coefficient(&Ordinal::from(e)))
    };
    ensure!(xor_at(2) == n(0), "w^2 coefficients xor to {}", xor_at(2));
    ensure!(xor_at(1) == n(1), "w coefficients xor to {}", xor_at(1));
    let finite = n(1) ^ fin(&[4, 9]).value() ^ fin(&[16]).value() ^ fin(&[25]).value();
    ensure!(finite == n(4), "finite parts give {finite}");

    let moves = p.winning_moves();
    ensure!(moves.len() == 1, "{} winning moves", moves.len());
    let m = &moves[0];
    let (lambda, x) = m.to.omega_split();
    ensure!(m.from == ord("w^2+w*5+25"), "moves coin {}", m.from);
    ensure!(lambda == ord("w+4") && x == n(30), "lands on {}", m.to);

    // The worked example's stated finite part 6 does not satisfy its own
    // equation 1 ^ [4|9] ^ [x|16] = 0; 30 does.
    let with = |x: u64| n(1) ^ fin(&[4, 9]).value() ^ fin(&[x, 16]).value();
    ensure!(with(6) == n(24), "1^[4|9]^[6|16] = {}", with(6));
    ensure!(with(30) == n(0), "1^[4|9]^[30|16] = {}", with(30));
    ensure!(solve_welter(&fin(&[16]), &n(13)) == n(30), "solve_welter([x|16] = 13)");
    within(start, Duration::from_secs(1))
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut welter = GrundyOracle::new(GameKind::Welter);
    let mut checked = 0usize;
    let mut check = |coins: &[u64]| -> Result<(), String> {
        let closed = fin(coins).value();
        let truth = welter.grundy(coins).map_err(|e| e.to_string())?;
        ensure!(closed == n(truth), "welter {coins:?}: {closed} vs oracle {truth}");
        checked += 1;
        Ok(())
    };
    check(&[])?;
    for a in 0..16 {
        check(&[a])?;
        for b in a + 1..16 {
            check(&[a, b])?;
            for c in b + 1..16 {
                check(&[a, b, c])?;
            }
        }
    }
    for a in 0..64 {
        for b in a + 1..64 {
            check(&[a, b])?;
        }
    }

    let mut nim = GrundyOracle::new(GameKind::Nim);
    let mut nim_checked = 0usize;
    for len in 0..=4usize {
        let mut heaps = vec![0u64; len];
        loop {
            let closed = heaps.iter().fold(0, |acc, h| acc ^ h);
            let truth = nim.grundy(&heaps).map_err(|e| e.to_string())?;
            ensure!(closed == truth, "nim {heaps:?}: {closed} vs oracle {truth}");
            nim_checked += 1;
            // Next nondecreasing tuple.
            let Some(i) = (0..len).rev().find(|&i| heaps[i] < 15) else { break };
            let v = heaps[i] + 1;
            heaps[i..].iter_mut().for_each(|h| *h = v);
        }
    }
    let took = within(start, Duration::from_secs(120))?;
    Ok(format!("{checked} welter + {nim_checked} nim positions, {took}"))
}

fn identity_suites() -> Outcome {
    let start = Instant::now();
    let b = BigInt::from;
    let minus_one = b(-1);
    for x in -512i64..=512 {
        ensure!(nim_sum(&[b(x), minus_one.clone()]) == b(-1 - x), "n^-1 at {x}");
    }
    for x in -256i64..=256 {
        let bx = b(x);
        ensure!(&bx ^ mating(&bx, &b(0)) == b(x - 1), "x^(x|0) at {x}");
        ensure!(&bx ^ mating(&bx, &minus_one) == b(x + 1), "y^(y|-1) at {x}");
        for y in -256i64..=256 {
            let lhs = b(x ^ y) ^ mating(&bx, &b(y));
            ensure!(lhs == b((x ^ y) - 1), "x^y^(x|y) at ({x},{y})");
        }
    }
    for x in 0i64..64 {
        for y in x + 1..64 {
            for z in y + 1..64 {
                let mut v = [mating(&b(x), &b(y)), mating(&b(x), &b(z)), mating(&b(y), &b(z))];
                v.sort();
                ensure!(v[0] == v[1] && v[2] > v[1], "triangle at ({x},{y},{z}): {v:?}");
            }
        }
    }
    let mut rng = seeded(0x1de7);
    for _ in 0..10_000 {
        let [x, y, a] = [0; 3].map(|_| rng.gen_range(-100_000i64..100_000));
        if x != y {
            ensure!(mating(&b(x), &b(y)) == b((x - y) ^ (x - y - 1)), "difference xor at ({x},{y})");
        }
        let m = mating(&b(x), &b(y));
        ensure!(m == mating(&b(x + a), &b(y + a)), "translation at ({x},{y},{a})");
        ensure!(m == mating(&b(x ^ a), &b(y ^ a)), "xor shift at ({x},{y},{a})");
    }
    for x in 0u64..256 {
        for y in 0u64..256 {
            if x != y {
                let v = fin(&[x, y]).value();
                ensure!(v == n((x ^ y) - 1), "two-coin law at ({x},{y}): {v}");
            }
        }
    }
    within(start, Duration::from_secs(120))
}

fn path_equivalence() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for mask in 0u32..1 << 16 {
        if mask.count_ones() > 4 {
            continue;
        }
        let coins: Vec<u64> = (0..16).filter(|i| mask >> i & 1 == 1).collect();
        let p = fin(&coins);
        ensure!(p.value() == p.value_mating(), "{coins:?}");
        count += 1;
    }
    let mut rng = seeded(6);
    for _ in 0..1000 {
        let mut coins = BTreeSet::new();
        while coins.len() < 6 {
            coins.insert(rng.gen_range(0..256u64));
        }
        let p = FinitePosition::new(coins.iter().copied()).unwrap();
        ensure!(p.value() == p.value_mating(), "{coins:?}");
        count += 1;
    }
    let took = within(start, Duration::from_secs(120))?;
    Ok(format!("{count} positions, {took}"))
}

fn witness_soundness() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded(500);
    let mut positions = 0;
    let mut witnesses = 0;
    while positions < 500 {
        let p = random_position(&mut rng, 5, 8);
        let value = p.grundy();
        if value.is_zero() {
            continue;
        }
        positions += 1;
        for k in 0..5 {
            let beta = sample_below(&value, rng.gen(), 8).unwrap();
            let m = p
                .move_to_value(&beta)
                .map_err(|e| format!("position {positions}, target {beta}: {e}"))?;
            ensure!(p.is_legal_move(&m.from, &m.to), "illegal witness {m}");
            let after = p.apply_move(&m.from, &m.to).unwrap().grundy();
            ensure!(after == beta, "witness {m} reaches {after}, wanted {beta} (k={k})");
            witnesses += 1;
        }
    }
    let took = within(start, Duration::from_secs(120))?;
    Ok(format!("{witnesses} witnesses, {took}"))
}

const PLAYOUT_BUDGET: u64 = 8;

fn playout_batch<G, F>(name: &str, make: F, wrap: fn(G) -> PlayoutStart) -> Result<usize, String>
where
    G: Game,
    F: Fn(&mut rand_chacha::ChaCha8Rng) -> G,
{
    let mut rng = seeded(name.len() as u64 * 7919);
    let mut moves = 0;
    for (side, want_p) in [(EngineSide::First, false), (EngineSide::Second, true)] {
        let mut done = 0u64;
        while done < 200 {
            let mut g = make(&mut rng);
            if want_p {
                if let Some(m) = g.winning_moves().into_iter().next() {
                    g = g.apply(&m);
                }
                if !g.has_moves() {
                    continue;
                }
            }
            if g.is_p_position() != want_p {
                continue;
            }
            let ceiling = move_ceiling(&g, PLAYOUT_BUDGET);
            let out = run_playout(&wrap(g), side, done, PLAYOUT_BUDGET)
                .map_err(|e| format!("{name} playout {done}: {e}"))?;
            ensure!(out.winner == Side::Engine, "{name} playout {done} lost by the engine");
            ensure!(out.transcript.len() <= ceiling, "{name} playout {done} over ceiling");
            moves += out.transcript.len();
            done += 1;
        }
    }
    Ok(moves)
}

fn playout_soundness() -> Outcome {
    let start = Instant::now();
    let welter = playout_batch("welter", |r| random_position(r, 5, 8), PlayoutStart::Welter)?;
    let nim = playout_batch("nim", |r| random_heaps(r, 5, 8), PlayoutStart::Nim)?;
    let took = within(start, Duration::from_secs(60))?;
    Ok(format!("800 playouts, {} moves, {took}", welter + nim))
}

fn solve_uniqueness() -> Outcome {
    let start = Instant::now();
    let mut rng = seeded(1000);
    for i in 0..1000 {
        let k = rng.gen_range(0..=5);
        let mut frozen = BTreeSet::new();
        while frozen.len() < k {
            frozen.insert(rng.gen_range(0..256u64));
        }
        let frozen = FinitePosition::new(frozen.iter().copied()).unwrap();
        let s = n(rng.gen_range(0..256));
        let scanned = solve_welter_scan(&frozen, &s).map_err(|e| format!("instance {i}: {e}"))?;
        ensure!(!frozen.contains(&scanned), "instance {i}: solution {scanned} is a frozen coin");
        let mut all: Vec<BigInt> = frozen.coins().map(|c| BigInt::from(c.clone())).collect();
        all.push(BigInt::from(scanned.clone()));
        ensure!(welter_fn(&all) == BigInt::from(s.clone()), "instance {i}: does not reproduce s");
        ensure!(solve_welter(&frozen, &s) == scanned, "instance {i}: bitwise solver disagrees");
    }
    within(start, Duration::from_secs(120))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("transfinite nim worked example", nim_example),
        ("transfinite welter worked example", welter_example),
        ("oracle equivalence", oracle_equivalence),
        ("algebraic identity suites", identity_suites),
        ("pairwise vs mating-method path equivalence", path_equivalence),
        ("witness soundness", witness_soundness),
        ("playout soundness", playout_soundness),
        ("solve_welter uniqueness", solve_uniqueness),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("[PASS] {}. {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
