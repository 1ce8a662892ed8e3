//! Benchmarks comparing the sequential core against rayon-parallel
//! expansion for the data-parallel workloads: class enumeration, the
//! exhaustive verification sweep, and atlas generation.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use rauzy::atlas::atlas_jsonl;
use rauzy::class::enumerate_class_mode;
use rauzy::perm::Permutation;
use rauzy::verify::{run_suite, Bounds};

fn class_enumeration(c: &mut Criterion) {
    // a 5209-vertex class; expansion work per vertex is small, so this
    // measures how much the canonical merge costs under parallelism
    let seed = Permutation::parse("8 3 2 5 4 7 6 1").unwrap();
    let mut group = c.benchmark_group("enumerate-class-d8");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| enumerate_class_mode(&seed, 10_000_000, false).unwrap().len())
    });
    group.bench_function("parallel", |b| {
        b.iter(|| enumerate_class_mode(&seed, 10_000_000, true).unwrap().len())
    });
    group.finish();
}

fn verification_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify-class-invariance-d7");
    group.sample_size(10);
    for (name, parallel) in [("sequential", false), ("parallel", true)] {
        let bounds = Bounds {
            d: 7,
            parallel,
            ..Bounds::default()
        };
        group.bench_function(name, |b| {
            b.iter_batched(
                || bounds.clone(),
                |bounds| {
                    let report = run_suite("class-invariance", &bounds).unwrap();
                    assert!(report.passed());
                },
                BatchSize::PerIteration,
            )
        });
    }
    group.finish();
}

fn atlas_generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("atlas-d7");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| atlas_jsonl(7, 10_000_000, false).unwrap().len())
    });
    group.bench_function("parallel", |b| {
        b.iter(|| atlas_jsonl(7, 10_000_000, true).unwrap().len())
    });
    group.finish();
}

criterion_group!(benches, class_enumeration, verification_sweep, atlas_generation);
criterion_main!(benches);
