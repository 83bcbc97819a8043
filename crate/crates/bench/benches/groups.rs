use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use schreier_bench::group;
use schreier_core::catalog::catalog_generators;
use schreier_core::permcore::{intermediate_subgroups, FiniteGroup, DEFAULT_ORDER_CAP};

fn closure(c: &mut Criterion) {
    for name in ["sym:6", "heisenberg:5", "alt:7"] {
        let gens = catalog_generators(name).unwrap();
        c.bench_function(&format!("closure {name}"), |b| {
            b.iter(|| FiniteGroup::generate(black_box(gens.clone()), DEFAULT_ORDER_CAP).unwrap())
        });
    }
}

fn interval(c: &mut Criterion) {
    for name in ["sym:4", "dihedral:16", "heisenberg:3"] {
        let g = group(name);
        let y = FiniteGroup::trivial(g.degree());
        c.bench_function(&format!("intermediate_subgroups {name}"), |b| {
            b.iter(|| intermediate_subgroups(black_box(&g), &y, 10_000).unwrap())
        });
    }
}

criterion_group!(benches, closure, interval);
criterion_main!(benches);
