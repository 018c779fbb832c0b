use std::hint::black_box;

use ado_bench::{heisenberg_plus_abelian, jordan_mix};
use ado_core::envelope::{build_module, low_ideal, DEFAULT_MAX_AMBIENT};
use ado_core::jordan::jc_decompose;
use ado_core::{ado_representation, catalog, Options};
use criterion::{criterion_group, criterion_main, Criterion};

fn jordan_chevalley(c: &mut Criterion) {
    let m = jordan_mix();
    c.bench_function("jc_decompose 6x6", |b| b.iter(|| jc_decompose(black_box(&m)).unwrap()));
}

fn envelope(c: &mut Criterion) {
    let h = catalog::heisenberg();
    c.bench_function("low_ideal heisenberg M=5", |b| {
        b.iter(|| low_ideal(black_box(&h), 5, DEFAULT_MAX_AMBIENT).unwrap())
    });
    let h5 = catalog::heisenberg5();
    c.bench_function("build_module heisenberg5 M=5", |b| {
        b.iter(|| build_module(black_box(&h5), &[], 5, DEFAULT_MAX_AMBIENT).unwrap())
    });
    let n = heisenberg_plus_abelian();
    let mut group = c.benchmark_group("slow");
    group.sample_size(10);
    group.bench_function("build_module heisenberg+ab3 M=5", |b| {
        b.iter(|| build_module(black_box(&n), &[], 5, DEFAULT_MAX_AMBIENT).unwrap())
    });
    group.finish();
}

fn end_to_end(c: &mut Criterion) {
    for name in ["solv2", "jordan3", "rot3", "gl2"] {
        let g = catalog::lookup(name).unwrap();
        c.bench_function(&format!("ado_representation {name}"), |b| {
            b.iter(|| ado_representation(black_box(&g), &Options::default()).unwrap())
        });
    }
}

criterion_group!(benches, jordan_chevalley, envelope, end_to_end);
criterion_main!(benches);
