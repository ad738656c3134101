//! Compares the rayon-backed batch entry points against their sequential
//! twins on the three workloads that actually fan out in practice: relation
//! solves over many Poincare polynomials, profile classification grids, and
//! symmetric-power sweeps.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use motivic_core::batch;
use motivic_core::classify::{ClassifyOptions, FamilyType, VarietyProfile};
use motivic_core::motivic::MotivicClass;
use motivic_core::poly::{rat, UniPoly};

fn poincare_inputs(count: usize) -> Vec<(UniPoly, u32)> {
    (0..count)
        .map(|i| {
            let m = 4 + (i % 5) as u32;
            let mut p = UniPoly::one();
            for k in 1..m {
                p.add_term(2 * k, rat((i as i64 * 7 + k as i64) % 5));
            }
            p.add_term(2 * m, rat(1));
            (p, m)
        })
        .collect()
}

fn profile_grid() -> Vec<(VarietyProfile, ClassifyOptions)> {
    let mut out = Vec::new();
    for d in 1..=10i64 {
        for m in 7..=12i64 {
            for extra in 0..4i64 {
                out.push((
                    VarietyProfile {
                        ambient_n: m + 1 + extra,
                        dim_m: m,
                        degree_d: Some(d),
                        ci_degrees: None,
                        equation_count: Some(1 + extra),
                        smooth: true,
                        nondegenerate: true,
                        fano_connected: Some(true),
                        family_type: FamilyType::None,
                        b2: None,
                    },
                    ClassifyOptions::default(),
                ));
            }
        }
    }
    out
}

fn class_sweep(count: usize) -> Vec<MotivicClass> {
    (0..count)
        .map(|i| {
            MotivicClass::parse(&format!("1 + {}L + {}L^2 + L^3", i % 9, (i * 3) % 7)).unwrap()
        })
        .collect()
}

fn bench_fano_reports(c: &mut Criterion) {
    let mut group = c.benchmark_group("fano_reports");
    for size in [64usize, 512] {
        let inputs = poincare_inputs(size);
        group.bench_with_input(BenchmarkId::new("parallel", size), &inputs, |b, inputs| {
            b.iter(|| batch::fano_reports(inputs))
        });
        group.bench_with_input(
            BenchmarkId::new("sequential", size),
            &inputs,
            |b, inputs| b.iter(|| batch::fano_reports_seq(inputs)),
        );
    }
    group.finish();
}

fn bench_classify(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_profiles");
    let grid = profile_grid();
    group.bench_function("parallel", |b| b.iter(|| batch::classify_profiles(&grid)));
    group.bench_function("sequential", |b| {
        b.iter(|| batch::classify_profiles_seq(&grid))
    });
    group.finish();
}

fn bench_symmetric_powers(c: &mut Criterion) {
    let mut group = c.benchmark_group("symmetric_powers_order8");
    for size in [32usize, 256] {
        let classes = class_sweep(size);
        group.bench_with_input(
            BenchmarkId::new("parallel", size),
            &classes,
            |b, classes| b.iter(|| batch::symmetric_power_batch(classes, 8)),
        );
        group.bench_with_input(
            BenchmarkId::new("sequential", size),
            &classes,
            |b, classes| b.iter(|| batch::symmetric_power_batch_seq(classes, 8)),
        );
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_fano_reports,
    bench_classify,
    bench_symmetric_powers
);
criterion_main!(benches);
