use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sklyanin_core::ncalg::{sklyanin_presentation, twisted_sklyanin_presentation, GradedAlgebra};
use sklyanin_core::pointscheme::{known_points, multilinearize};
use sklyanin_core::{Params, TowerScalar};

fn hilbert(c: &mut Criterion) {
    let p = Params::defaults();
    let mut group = c.benchmark_group("graded_quotient");
    group.sample_size(10);
    for (name, pres) in [
        ("A", sklyanin_presentation(&p).unwrap()),
        ("twist", twisted_sklyanin_presentation(&p).unwrap()),
    ] {
        for bound in [4, 6] {
            group.bench_with_input(BenchmarkId::new(name, bound), &bound, |b, &n| {
                b.iter(|| GradedAlgebra::new(black_box(&pres), n).unwrap())
            });
        }
    }
    group.finish();
}

fn tower_inverse(c: &mut Criterion) {
    let r = Params::defaults().radicals().unwrap();
    // a dense element of the 16-dimensional tower, so the linear-solve path runs
    let x =
        [&r.sa, &r.sb, &r.sc, &TowerScalar::i()]
            .iter()
            .fold(TowerScalar::from_int(2), |acc, s| {
                acc.try_add(s)
                    .unwrap()
                    .try_mul(&s.try_add(&TowerScalar::one()).unwrap())
                    .unwrap()
            });
    c.bench_function("tower_inverse", |b| {
        b.iter(|| black_box(&x).invert().unwrap())
    });
}

fn successor(c: &mut Criterion) {
    let p = Params::defaults();
    let s = multilinearize(&twisted_sklyanin_presentation(&p).unwrap()).unwrap();
    let (_, pts) = known_points(&p).unwrap();
    c.bench_function("successor_20_points", |b| {
        b.iter(|| {
            for q in &pts {
                black_box(s.successor(q).unwrap());
            }
        })
    });
}

criterion_group!(benches, hilbert, tower_inverse, successor);
criterion_main!(benches);
