use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use curvecount_core::{DegreeCoeff, MemoTable, Pipelines, Ring, RingSpec};

fn recursion(c: &mut Criterion) {
    c.bench_function("nd 20, fresh table", |b| {
        b.iter(|| MemoTable::new().nd(black_box(20)).unwrap())
    });
    c.bench_function("nd_unsym 20, fresh table", |b| {
        b.iter(|| MemoTable::new().nd_unsym(black_box(20)).unwrap())
    });
}

fn pipelines(c: &mut Criterion) {
    c.bench_function("all pipelines, symbolic d", |b| {
        b.iter(|| Pipelines::new(black_box(DegreeCoeff::var())).unwrap())
    });
    c.bench_function("all pipelines, d = 4", |b| {
        b.iter(|| Pipelines::new(black_box(DegreeCoeff::constant(4))).unwrap())
    });
}

fn ring_product(c: &mut Criterion) {
    let base = Ring::new(RingSpec::new().projective("y", 3).projective("a", 2)).unwrap();
    let a = base.gen("a").unwrap();
    let three = DegreeCoeff::constant(3);
    let ring = base
        .extend_proj_bundle("l", vec![a.scale(&three), a.pow(2).scale(&three)])
        .unwrap();
    let one = ring.one();
    let x = &(&one + &ring.gen("y").unwrap()) + &ring.gen("a").unwrap().scale(&DegreeCoeff::var());
    let x = &x + &ring.gen("l").unwrap();
    c.bench_function("(1 + y + d*a + l)^6 in P^3 x P(TP^2)", |b| {
        b.iter(|| black_box(&x).pow(6))
    });
}

criterion_group!(benches, recursion, pipelines, ring_product);
criterion_main!(benches);
