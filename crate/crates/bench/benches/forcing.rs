use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use forcing_bench::{connected, fixtures};
use forcing_core::verifier::{verify_stream, VerifyOptions};
use forcing_core::{closure, encode_graph6, enumerate_connected, solve, VertexSet};

fn bench_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    for g in fixtures() {
        let name = g.name().unwrap_or("graph").to_string();
        let seed = VertexSet::singleton(0).with(1);
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| closure(black_box(&g), 1, seed))
        });
    }
    group.finish();
}

fn bench_solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    group.sample_size(20);
    for g in fixtures() {
        let name = g.name().unwrap_or("graph").to_string();
        for k in [1, 2] {
            group.bench_function(BenchmarkId::new(name.clone(), k), |b| {
                b.iter(|| solve(black_box(&g), k).expect("fixture solves within budget"))
            });
        }
    }
    group.finish();
}

fn bench_enumerate(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_connected");
    group.sample_size(10);
    for n in [5, 6] {
        group.bench_function(BenchmarkId::from_parameter(n), |b| {
            b.iter(|| enumerate_connected(black_box(n)).expect("small order"))
        });
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let lines: Vec<String> = connected(6)
        .iter()
        .map(|g| encode_graph6(g).expect("small graph"))
        .collect();
    let opts = VerifyOptions::default();
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("connected_n6", |b| {
        b.iter(|| {
            verify_stream(lines.iter().cloned().map(Ok), &opts, |_| Ok(()))
                .expect("in-memory stream")
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_closure,
    bench_solve,
    bench_enumerate,
    bench_verify
);
criterion_main!(benches);
