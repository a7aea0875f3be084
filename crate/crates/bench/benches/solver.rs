use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use welter_bench::{nim_example, spread_position, welter_example};
use welter_core::welter::solve_welter_scan;
use welter_core::{grundy_oracle, solve_welter, BigUint, GameKind, Ordinal};

fn welter_value(c: &mut Criterion) {
    let mut group = c.benchmark_group("welter_value");
    for n in [4u64, 16, 64] {
        let p = spread_position(n);
        group.bench_with_input(BenchmarkId::new("pairwise", n), &p, |b, p| b.iter(|| black_box(p).value()));
        group.bench_with_input(BenchmarkId::new("mating", n), &p, |b, p| b.iter(|| black_box(p).value_mating()));
    }
    group.finish();
}

fn solve(c: &mut Criterion) {
    let frozen = spread_position(5);
    let s = BigUint::from(77u32);
    c.bench_function("solve_welter/bitwise", |b| b.iter(|| solve_welter(black_box(&frozen), &s)));
    c.bench_function("solve_welter/scan", |b| b.iter(|| solve_welter_scan(black_box(&frozen), &s)));
}

fn transfinite(c: &mut Criterion) {
    let welter = welter_example();
    let nim = nim_example();
    c.bench_function("transfinite/welter_grundy", |b| b.iter(|| black_box(&welter).grundy()));
    c.bench_function("transfinite/welter_winning_moves", |b| b.iter(|| black_box(&welter).winning_moves()));
    c.bench_function("transfinite/welter_move_to_omega", |b| {
        b.iter(|| black_box(&welter).move_to_value(&Ordinal::omega()))
    });
    c.bench_function("transfinite/nim_winning_moves", |b| b.iter(|| black_box(&nim).winning_moves()));
}

fn oracle(c: &mut Criterion) {
    c.bench_function("oracle/welter_3_coins_below_16", |b| {
        b.iter(|| grundy_oracle(GameKind::Welter, black_box(&[9, 12, 15])))
    });
}

criterion_group!(benches, welter_value, solve, transfinite, oracle);
criterion_main!(benches);
