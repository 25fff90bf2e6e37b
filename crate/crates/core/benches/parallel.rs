use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use csl_core::links::census;
use csl_core::perm::{affine_group, group_closure, Permutation};
use csl_core::{biggs_map, Exec, FieldSpec};

const STRATEGIES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn literal_transitivity(c: &mut Criterion) {
    let mut group = c.benchmark_group("literal_k_transitivity");
    let s6 = group_closure(vec![
        Permutation::transposition(6, 0, 1),
        Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]]).unwrap(),
    ])
    .unwrap();
    let a16 = affine_group(&FieldSpec::of_order(16).unwrap());
    for (name, exec) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(name, "S6_k3"), &exec, |b, &exec| {
            b.iter(|| s6.is_k_transitive_literal(3, exec).unwrap())
        });
        group.bench_with_input(BenchmarkId::new(name, "A16_k2"), &exec, |b, &exec| {
            b.iter(|| a16.is_k_transitive_literal(2, exec).unwrap())
        });
    }
    group.finish();
}

fn automorphism_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("affine_automorphism_sweep");
    for n in [8u32, 13] {
        let spec = FieldSpec::of_order(n).unwrap();
        let map = biggs_map(&spec).unwrap();
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, n), &exec, |b, &exec| {
                b.iter(|| map.all_affine_automorphisms_hold(&spec, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn census_rows(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for (name, exec) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(name, "4..=32"), &exec, |b, &exec| {
            b.iter(|| census(4, 32, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    literal_transitivity,
    automorphism_sweep,
    census_rows
);
criterion_main!(benches);
