use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use hypquat::{cartan_angular, dist_to_spine, toledo, triple_isometry, Triple};
use hypquat_bench::{quaternionic_isometries, quaternionic_triples};

fn angular(c: &mut Criterion) {
    let triples = quaternionic_triples(64, 1);
    c.bench_function("cartan_angular", |b| {
        b.iter(|| triples.iter().map(|x| cartan_angular(black_box(x)).unwrap().value()).sum::<f64>())
    });
    c.bench_function("toledo", |b| b.iter(|| triples.iter().map(|x| toledo(black_box(x)).unwrap()).sum::<f64>()));
    c.bench_function("dist_to_spine", |b| {
        b.iter(|| triples.iter().map(|x| dist_to_spine(black_box(x)).unwrap()).sum::<f64>())
    });
}

fn matching(c: &mut Criterion) {
    let triples = quaternionic_triples(16, 2);
    let gs = quaternionic_isometries(16, 3);
    let pairs: Vec<(Triple, Triple)> = triples
        .into_iter()
        .zip(&gs)
        .map(|(x, g)| {
            let [a, b, d] = x.points().map(|p| g.apply(p).unwrap());
            let y = Triple::new(a, b, d).unwrap();
            (x, y)
        })
        .collect();
    c.bench_function("triple_isometry", |b| {
        b.iter_batched(
            || pairs.clone(),
            |pairs| pairs.iter().filter(|(x, y)| triple_isometry(x, y).unwrap().is_some()).count(),
            BatchSize::SmallInput,
        )
    });
}

criterion_group!(benches, angular, matching);
criterion_main!(benches);
