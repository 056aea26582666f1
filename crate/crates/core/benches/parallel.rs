// Rayon pool of 1 thread vs the default pool on the heavier scans. Build with
// `--no-default-features` to measure the sequential fallback itself.
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use superlie::derivations::{derivation_space, tensor_der};
use superlie::hopf::{verify_hopf, AbelianHopfAlgebra};
use superlie::lie::make_gl;

fn pools() -> Vec<(&'static str, rayon::ThreadPool)> {
    vec![
        ("single", ThreadPoolBuilder::new().num_threads(1).build().unwrap()),
        ("parallel", ThreadPoolBuilder::new().build().unwrap()),
    ]
}

fn hopf_axioms(c: &mut Criterion) {
    let mut group = c.benchmark_group("hopf axioms");
    group.sample_size(10);
    let h = AbelianHopfAlgebra::new(1, 2, 3);
    for (name, pool) in pools() {
        for d in [3, 4] {
            group.bench_with_input(BenchmarkId::new(name, d), &d, |b, &d| {
                b.iter(|| pool.install(|| black_box(verify_hopf(&h, d))))
            });
        }
    }
    group.finish();
}

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    let l = make_gl(2, 2);
    for (name, pool) in pools() {
        group.bench_function(name, |b| b.iter(|| pool.install(|| black_box(l.validate()))));
    }
    group.finish();
}

fn derivations(c: &mut Criterion) {
    let mut group = c.benchmark_group("derivations");
    group.sample_size(10);
    let t = tensor_der(&[(superlie::lie::make_sl2(), 2)]).unwrap();
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::new(name, "sl2 x Λ(2)"), |b| {
            b.iter(|| pool.install(|| black_box(derivation_space(t.u()))))
        });
    }
    group.finish();
}

criterion_group!(benches, hopf_axioms, jacobi, derivations);
criterion_main!(benches);
