//! Benchmarks for the three differential constructions and for Smith
//! normal form on the differentials themselves.
//!
//! The constructions are compared at n = 6 (32 x 64), large enough that
//! the asymptotic gap between the curtain sum and the word-set sums is
//! visible. SNF is measured on d_5 and d_6; the diagonal stabilizes to
//! the same torsion factors seen in low degrees, so these runs are
//! dominated by elimination arithmetic, not by structure discovery.

use criterion::{criterion_group, criterion_main, Criterion};
use ybh_core::differential::{d_curtain, d_psi, d_skein, differential};
use ybh_core::SmithNormalForm;

fn bench_constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("construct_d6");
    group.sample_size(20);
    group.bench_function("curtain", |b| b.iter(|| d_curtain(6)));
    group.bench_function("skein", |b| b.iter(|| d_skein(6)));
    group.bench_function("psi", |b| b.iter(|| d_psi(6)));
    group.finish();
}

fn bench_snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("snf");
    group.sample_size(10);
    for n in [5usize, 6] {
        let d = differential(n);
        group.bench_function(format!("d{n}"), |b| b.iter(|| SmithNormalForm::compute(&d)));
    }
    group.finish();
}

criterion_group!(benches, bench_constructions, bench_snf);
criterion_main!(benches);
