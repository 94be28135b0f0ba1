use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use wfrec_bench::{ordinal_pairs, random_lists};
use wfrec_core::ordinal::{compare, to_nested, unit_nested_relation};
use wfrec_core::power::pow_relation;
use wfrec_core::programs::{ackermann, fib_cov, quicksort};
use wfrec_core::{NatLess, WellFounded};

/// Quicksort through the recursion operator against the standard sort.
fn sorting(c: &mut Criterion) {
    let mut group = c.benchmark_group("quicksort");
    for len in [10, 100, 1000] {
        let lists = random_lists(1, 8, len);
        group.bench_with_input(BenchmarkId::new("wfrec", len), &lists, |b, lists| {
            b.iter(|| lists.iter().map(|l| quicksort(|x: &i64, y: &i64| x <= y, l).len()).sum::<usize>())
        });
        group.bench_with_input(BenchmarkId::new("std", len), &lists, |b, lists| {
            b.iter(|| {
                lists
                    .iter()
                    .map(|l| {
                        let mut v = l.clone();
                        v.sort();
                        v.len()
                    })
                    .sum::<usize>()
            })
        });
    }
    group.finish();
}

fn arithmetic(c: &mut Criterion) {
    c.bench_function("fib_cov(20)", |b| b.iter(|| fib_cov(black_box(20))));
    c.bench_function("ackermann(2, 20)", |b| b.iter(|| ackermann(black_box(2), black_box(20))));
}

fn power_order(c: &mut Criterion) {
    let rel = pow_relation(NatLess);
    let a = rel.list(vec![40, 30, 20, 10, 5, 1]).unwrap();
    let b = rel.list(vec![40, 30, 20, 10, 6]).unwrap();
    c.bench_function("pow decide", |bench| bench.iter(|| rel.decide(black_box(&a), black_box(&b)).is_some()));
}

/// Comparison on normal forms against the nested-multiset ordering.
fn ordinals(c: &mut Criterion) {
    let pairs = ordinal_pairs(2, 64, 2);
    let nested: Vec<_> = pairs.iter().map(|(a, b)| (to_nested(a), to_nested(b))).collect();
    let rel = unit_nested_relation();
    c.bench_function("ordinal compare (normal form)", |b| {
        b.iter(|| pairs.iter().filter(|(x, y)| compare(x, y).is_lt()).count())
    });
    c.bench_function("ordinal compare (nested multisets)", |b| {
        b.iter(|| nested.iter().filter(|(x, y)| rel.decide(x, y).is_some()).count())
    });
}

criterion_group!(benches, sorting, arithmetic, power_order, ordinals);
criterion_main!(benches);
