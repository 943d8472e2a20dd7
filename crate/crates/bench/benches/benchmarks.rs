use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use latpath_bench::{equations, kinds, regimes};
use latpath_core::dimers::brute_gf;
use latpath_core::paths::{enum_paths, path_stats, Family};
use latpath_core::recurrences::compute_g;
use latpath_core::series::{path_sum, solve, EquationId};

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enum_paths");
    group.bench_function("dyck_n8_k2", |b| {
        b.iter(|| enum_paths(Family::Dyck, black_box(8), 2).unwrap().len())
    });
    group.bench_function("schroeder_b_n5_k2", |b| {
        b.iter(|| enum_paths(Family::SchroederB, black_box(5), 2).unwrap().len())
    });
    group.bench_function("stats_dyck_n6_k2", |b| {
        let paths = enum_paths(Family::Dyck, 6, 2).unwrap();
        b.iter(|| {
            paths
                .iter()
                .map(|p| path_stats(black_box(p)).area2)
                .sum::<u64>()
        })
    });
    group.finish();
}

fn bench_dimers(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_gf_n8");
    for (label, regime) in regimes() {
        group.bench_function(label, |b| b.iter(|| brute_gf(black_box(8), regime).unwrap()));
    }
    group.finish();
}

fn bench_recurrences(c: &mut Criterion) {
    let mut group = c.benchmark_group("compute_g_n10");
    for (label, kind) in kinds() {
        group.bench_function(label, |b| b.iter(|| compute_g(kind, black_box(10)).unwrap()));
    }
    group.finish();
}

fn bench_series(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_order8");
    for (label, id) in equations() {
        group.bench_function(label, |b| b.iter(|| solve(id, black_box(8)).unwrap()));
    }
    group.finish();

    c.bench_function("path_sum_chi_star_k2_n5", |b| {
        b.iter(|| path_sum(EquationId::ChiStarK(2), black_box(5)).unwrap())
    });
}

criterion_group!(
    benches,
    bench_enumeration,
    bench_dimers,
    bench_recurrences,
    bench_series
);
criterion_main!(benches);
