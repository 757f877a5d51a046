use std::hint::black_box;

use codlab_core::{alt_codegree_set, enumerate_partitions, verify_min_codegree_monotone};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn hook_products(c: &mut Criterion) {
    let mut g = c.benchmark_group("hook_products");
    for n in [15usize, 25, 35] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| {
                enumerate_partitions(n).for_each(|l| {
                    std::hint::black_box(l.hook_product());
                })
            })
        });
    }
    g.finish();
}

fn codegree_sets(c: &mut Criterion) {
    let mut g = c.benchmark_group("alt_codegree_set");
    g.sample_size(20);
    for n in [8usize, 20, 30] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| alt_codegree_set(black_box(n)).unwrap())
        });
    }
    g.finish();
}

fn monotone(c: &mut Criterion) {
    let mut g = c.benchmark_group("monotone");
    g.sample_size(10);
    g.bench_function("5..=30", |b| {
        b.iter(|| verify_min_codegree_monotone(5, 30).unwrap())
    });
    g.finish();
}

criterion_group!(benches, hook_products, codegree_sets, monotone);
criterion_main!(benches);
