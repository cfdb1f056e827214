use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use cospectra::{
    appendix_catalog, construct_odd, spectrum, strongly_cospectral_to_zero, wht_spectrum,
};
use cospectra_bench::dense_cubelike;

fn walsh_hadamard(c: &mut Criterion) {
    let mut group = c.benchmark_group("wht_spectrum");
    group.sample_size(10);
    for d in [12, 16, 20] {
        let x = dense_cubelike(d);
        group.bench_with_input(BenchmarkId::from_parameter(d), &x, |b, x| {
            b.iter(|| wht_spectrum(black_box(x)).unwrap())
        });
    }
    group.finish();
}

fn character_spectrum(c: &mut Criterion) {
    let catalog = appendix_catalog();
    c.bench_function("spectrum/appendix", |b| {
        b.iter(|| {
            for x in &catalog {
                black_box(spectrum(x).unwrap());
            }
        })
    });
    let x = dense_cubelike(12);
    c.bench_function("spectrum/cube12", |b| {
        b.iter(|| spectrum(black_box(&x)).unwrap())
    });
}

fn detector(c: &mut Criterion) {
    let mut group = c.benchmark_group("detector");
    group.sample_size(10);
    for d in [5, 7, 9, 11] {
        let x = construct_odd(d).unwrap().graph;
        group.bench_with_input(BenchmarkId::new("construct_odd", d), &x, |b, x| {
            b.iter(|| strongly_cospectral_to_zero(black_box(x)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, walsh_hadamard, character_spectrum, detector);
criterion_main!(benches);
