use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use tabweb::{enumerate_standard, resolve, Shape};
use tabweb_bench::{diagrams, rectangles, webs};

fn pipeline(c: &mut Criterion) {
    let tableaux = rectangles(4);
    let ds = diagrams(&tableaux);
    let ws = webs(&tableaux);

    c.bench_function("enumerate 3x4", |b| {
        b.iter(|| enumerate_standard(black_box(&Shape::three_by(4))).count())
    });
    c.bench_function("resolve 3x4", |b| {
        b.iter(|| ds.iter().map(|d| resolve(black_box(d)).unwrap()).collect::<Vec<_>>())
    });
    c.bench_function("canonical form 3x4", |b| {
        b.iter(|| ws.iter().map(|w| black_box(w).canonical_form().len()).sum::<usize>())
    });
    c.bench_function("depth map 3x4", |b| {
        b.iter(|| ws.iter().map(|w| black_box(w).depth_map().unwrap()).collect::<Vec<_>>())
    });
    c.bench_function("promote 3x4", |b| {
        b.iter(|| tableaux.iter().map(|t| black_box(t).promote().unwrap()).collect::<Vec<_>>())
    });
}

criterion_group!(benches, pipeline);
criterion_main!(benches);
