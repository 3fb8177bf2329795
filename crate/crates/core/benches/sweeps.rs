use std::hint::black_box;

use binomconv::exactnum::int;
use binomconv::identities::{closed_form, convolution_sum, ConvolutionSpec};
use binomconv::series::{Family, GeneratingFunctions};
use binomconv::sweep::bijection_sweep;
use binomconv::Execution;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const STRATEGIES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bijection(c: &mut Criterion) {
    let mut group = c.benchmark_group("bijection_sweep");
    group.sample_size(10);
    for n in [6, 7] {
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| assert!(bijection_sweep(black_box(n), exec).passed()))
            });
        }
    }
    group.finish();
}

fn central_grid(c: &mut Criterion) {
    let cases: Vec<(usize, usize)> = (1..=8)
        .flat_map(|t| (0..=32).map(move |n| (t, n)))
        .collect();
    let mut group = c.benchmark_group("central_grid");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| {
                let ok = exec.map(cases.clone(), |(t, n)| {
                    let spec = ConvolutionSpec::central(t, n).unwrap();
                    convolution_sum(&spec) == closed_form(n, &int(t as i64))
                });
                assert!(ok.into_iter().all(|x| x));
            })
        });
    }
    group.finish();
}

fn series(c: &mut Criterion) {
    let gf = GeneratingFunctions::new(32);
    let params: Vec<i64> = vec![-3, -1, 1, 2, 3];
    let mut group = c.benchmark_group("coefficient_identities");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |b| {
            b.iter(|| {
                let ok = exec.map(params.clone(), |p| {
                    gf.coefficient_identity(Family::GTimesCatalanPower, &int(p))
                });
                assert!(ok.into_iter().all(|x| x));
            })
        });
    }
    group.finish();
}

criterion_group!(benches, bijection, central_grid, series);
criterion_main!(benches);
