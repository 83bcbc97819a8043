use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use schreier_bench::{group, random_set};
use schreier_core::permcore::Transversal;
use schreier_core::schreier::rs_induce;

fn induce(c: &mut Criterion) {
    for (name, sub, draws) in [("sym:5", "alt:5", 4), ("sym:6", "alt:6", 8)] {
        let g = group(name);
        let h = g.subgroup_generated_by(group(sub).generators()).unwrap();
        let t = Transversal::new(&g, &h).unwrap();
        let s = random_set(&g, draws);
        c.bench_function(&format!("rs_induce {name} > {sub}"), |b| b.iter(|| rs_induce(black_box(&t), black_box(&s)).unwrap()));
    }
}

criterion_group!(benches, induce);
criterion_main!(benches);
