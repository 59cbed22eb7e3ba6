//! Parallel against sequential elimination on prolongation systems.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use prolab::probes::cone_aut;
use prolab::prolong::{prolong, ProlongOptions};
use prolab::{linalg, par, zoo};

fn prolongation(c: &mut Criterion) {
    let mut group = c.benchmark_group("prolongation");
    group.sample_size(10);
    for (id, k) in [("segre(3,3)", 2), ("plucker_gr2(6)", 2), ("cayley_op2", 1)] {
        let g = cone_aut(&zoo::build(id).unwrap().ideal);
        for (mode, sequential) in [("parallel", false), ("sequential", true)] {
            let name = format!("{id} k={k} exact");
            group.bench_with_input(BenchmarkId::new(mode, &name), &g, |b, g| {
                par::set_sequential(sequential);
                b.iter(|| prolong(g, k, &ProlongOptions::exact()).unwrap().dim);
            });
            let name = format!("{id} k={k} modp");
            group.bench_with_input(BenchmarkId::new(mode, &name), &g, |b, g| {
                par::set_sequential(sequential);
                b.iter(|| prolong(g, k, &ProlongOptions::mod_p(linalg::MERSENNE_61)).unwrap().dim);
            });
        }
    }
    par::set_sequential(false);
    group.finish();
}

fn cone_automorphisms(c: &mut Criterion) {
    let mut group = c.benchmark_group("cone_aut");
    group.sample_size(10);
    for id in ["spinor_s5", "cayley_op2"] {
        let v = zoo::build(id).unwrap();
        for (mode, sequential) in [("parallel", false), ("sequential", true)] {
            group.bench_with_input(BenchmarkId::new(mode, id), &v, |b, v| {
                par::set_sequential(sequential);
                b.iter(|| cone_aut(&v.ideal).dim());
            });
        }
    }
    par::set_sequential(false);
    group.finish();
}

criterion_group!(benches, prolongation, cone_automorphisms);
criterion_main!(benches);
