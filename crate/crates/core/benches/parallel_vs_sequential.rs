use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use hyplab::constructions::{double_coset_hypergroup, group_as_hypergroup, FiniteGroup};
use hyplab::continuous::IntervalHypergroup;
use hyplab::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn axioms(c: &mut Criterion) {
    let s4 = group_as_hypergroup(&FiniteGroup::symmetric(4));
    let g = FiniteGroup::symmetric(5);
    let h = g.subgroup_closure(&[g.index_of("(12)").unwrap()]);
    let s5_mod = double_coset_hypergroup(&g, &h).unwrap().0;
    let mut group = c.benchmark_group("verify_axioms");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("S4", name), &exec, |b, &e| {
            b.iter(|| black_box(s4.verify_axioms_with(e)))
        });
        group.bench_with_input(BenchmarkId::new(format!("S5//Z2 ({})", s5_mod.len()), name), &exec, |b, &e| {
            b.iter(|| black_box(s5_mod.verify_axioms_with(e)))
        });
    }
    group.finish();
}

fn interval(c: &mut Criterion) {
    let k = IntervalHypergroup::default();
    let mut group = c.benchmark_group("interval");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::new("character_check", name), &exec, |b, &e| {
            b.iter(|| black_box(k.character_check_with(e, 8).unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("haar_lebesgue", name), &exec, |b, &e| {
            b.iter(|| black_box(k.verify_haar_lebesgue_with(e)))
        });
    }
    group.finish();
}

criterion_group!(benches, axioms, interval);
criterion_main!(benches);
