//! Criterion benchmarks comparing the rayon-backed inner loops against the
//! sequential fallback on the heavier desk-scale workloads.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tdorbit::par::{with_mode, ExecMode};
use tdorbit::Budget;

fn modes() -> [(&'static str, ExecMode); 2] {
    [
        ("sequential", ExecMode::Sequential),
        ("parallel", ExecMode::Parallel),
    ]
}

fn bench_brute_orbits(c: &mut Criterion) {
    let mut group = c.benchmark_group("brute_coadjoint_orbits_n4_q3");
    let budget = Budget::default();
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                with_mode(mode, || {
                    tdorbit::oracle::brute_coadjoint_orbits(4, 3, &budget)
                        .unwrap()
                        .block_count()
                })
            })
        });
    }
    group.finish();
}

fn bench_character_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("character_table_n3_q3");
    let budget = Budget::default();
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                with_mode(mode, || {
                    tdorbit::reps::character_table(3, 3, &budget)
                        .unwrap()
                        .irreps
                        .len()
                })
            })
        });
    }
    group.finish();
}

fn bench_class_strings(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_classes_by_strings_n18_q5");
    let budget = Budget::default();
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                with_mode(mode, || {
                    tdorbit::classes::count_classes_by_strings(18, 5, &budget)
                        .unwrap()
                        .grand_total()
                })
            })
        });
    }
    group.finish();
}

fn bench_model(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_model_n3_q2");
    group.sample_size(20);
    let budget = Budget::default();
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| {
                with_mode(mode, || {
                    tdorbit::model::verify_model(3, 2, &budget)
                        .unwrap()
                        .is_model()
                })
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_brute_orbits,
    bench_character_table,
    bench_class_strings,
    bench_model
);
criterion_main!(benches);
