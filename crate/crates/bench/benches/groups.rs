use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hypquat::groups::examples::fuchsian_amalgam;
use hypquat::{bend, fixed_points, limit_set_sample, marker_invariant, unit_rotation, ImaginaryDirection};

fn bending(c: &mut Criterion) {
    let g = fuchsian_amalgam(0.5).unwrap();
    c.bench_function("bend_and_marker", |b| {
        b.iter(|| {
            let bent = bend(&g, unit_rotation(ImaginaryDirection::I, black_box(0.2))).unwrap();
            marker_invariant(&bent).unwrap().value()
        })
    });
    c.bench_function("fixed_points", |b| b.iter(|| fixed_points(black_box(&g.gamma1[0].g)).unwrap().multiplier));
}

fn limit_sets(c: &mut Criterion) {
    let g = fuchsian_amalgam(0.5).unwrap();
    let mut group = c.benchmark_group("limit_set_sample");
    for len in [4, 8, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(len), &len, |b, &len| {
            b.iter(|| limit_set_sample(&g, len, 100, 7).unwrap().points.len())
        });
    }
    group.finish();
}

criterion_group!(benches, bending, limit_sets);
criterion_main!(benches);
