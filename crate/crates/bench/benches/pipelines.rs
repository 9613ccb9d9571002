use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use immersion::{build_gomory_hu, decompose_directed, decompose_undirected, reduce_to_terminals};
use immersion_bench::{dense_simple, eulerian, multigraph, spread_terminals};

fn gomory_hu(c: &mut Criterion) {
    let mut group = c.benchmark_group("gomory_hu");
    for n in [20, 50, 100] {
        let g = multigraph(n, 4 * n, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| build_gomory_hu(black_box(g)).unwrap())
        });
    }
    group.finish();
}

fn undirected(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose_undirected");
    for t in [3, 5] {
        let g = multigraph(60, 300, 2);
        group.bench_with_input(BenchmarkId::new("n60", t), &g, |b, g| {
            b.iter(|| decompose_undirected(black_box(g), t).unwrap())
        });
    }
    group.finish();
}

fn splitting(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce_to_terminals");
    for n in [10, 20, 40] {
        let d = eulerian(n, 6 * n, 3);
        let terminals = spread_terminals(n, 4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &d, |b, d| {
            b.iter(|| reduce_to_terminals(black_box(d), &terminals).unwrap())
        });
    }
    group.finish();
}

fn directed(c: &mut Criterion) {
    let mut group = c.benchmark_group("decompose_directed");
    group.sample_size(20);
    for n in [8, 12] {
        let d = dense_simple(n, 6, 4);
        group.bench_with_input(BenchmarkId::new("certify_t3", n), &d, |b, d| {
            b.iter(|| decompose_directed(black_box(d), 3).unwrap())
        });
    }
    let sparse = eulerian(30, 60, 5);
    group.bench_function("sparse_t3_n30", |b| {
        b.iter(|| decompose_directed(black_box(&sparse), 3).unwrap())
    });
    group.finish();
}

criterion_group!(benches, gomory_hu, undirected, splitting, directed);
criterion_main!(benches);
