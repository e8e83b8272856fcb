use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hyperkirchhoff_bench::{graph, matrix};
use hyperkirchhoff_core::{
    determinant_exact, laplacian, permanent_exact, spanning_tree_count_oracle,
};

fn determinant(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinant_exact");
    for n in [4, 8, 16, 32] {
        let m = matrix(n, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| determinant_exact(black_box(m)))
        });
    }
    group.finish();
}

fn permanent(c: &mut Criterion) {
    let mut group = c.benchmark_group("permanent_exact");
    for n in [4, 8, 12, 16] {
        let m = matrix(n, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| {
            b.iter(|| permanent_exact(black_box(m)))
        });
    }
    group.finish();
}

fn laplacians(c: &mut Criterion) {
    let mut group = c.benchmark_group("laplacian");
    for n in [8, 32, 128] {
        let g = graph(n, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| laplacian(black_box(g)))
        });
    }
    group.finish();
}

fn trees(c: &mut Criterion) {
    let mut group = c.benchmark_group("spanning_tree_count_oracle");
    for n in [4, 6, 8] {
        let g = graph(n, n as u64);
        if !g.is_connected() {
            continue;
        }
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| spanning_tree_count_oracle(black_box(g)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, determinant, permanent, laplacians, trees);
criterion_main!(benches);
