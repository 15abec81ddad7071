//! Parallel against sequential execution of the heaviest exact kernels.
//!
//! Each kernel runs on a one-thread rayon pool and on the default pool.
//! Building with `--no-default-features` removes rayon entirely.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qaffine::affine_hecke::{regular_module, universal_module};
use qaffine::affinization::functor_f;
use qaffine::scalars::{RatFunc, ScalarContext};
use qaffine::uqrep::jimbo_j;

#[cfg(feature = "parallel")]
fn pools() -> Vec<(String, rayon::ThreadPool)> {
    let mut sizes = vec![1];
    if rayon::current_num_threads() > 1 {
        sizes.push(rayon::current_num_threads());
    }
    sizes
        .into_iter()
        .map(|k| (format!("threads-{k}"), rayon::ThreadPoolBuilder::new().num_threads(k).build().unwrap()))
        .collect()
}

#[cfg(feature = "parallel")]
fn on_pools(c: &mut Criterion, group: &str, param: &str, f: impl Fn() + Sync) {
    let mut g = c.benchmark_group(group);
    g.sample_size(10);
    for (name, pool) in pools() {
        g.bench_function(BenchmarkId::new(name, param), |b| b.iter(|| pool.install(&f)));
    }
    g.finish();
}

#[cfg(not(feature = "parallel"))]
fn on_pools(c: &mut Criterion, group: &str, param: &str, f: impl Fn() + Sync) {
    let mut g = c.benchmark_group(group);
    g.sample_size(10);
    g.bench_function(BenchmarkId::new("sequential", param), |b| b.iter(&f));
    g.finish();
}

fn j_of_regular(c: &mut Criterion) {
    let ctx = ScalarContext::symbolic(3);
    let m = regular_module(&ctx, 3).unwrap();
    on_pools(c, "jimbo_j", "regular n=3 l=3", || {
        std::hint::black_box(jimbo_j(&ctx, &m, 3).unwrap());
    });
}

fn affine_relations(c: &mut Criterion) {
    let ctx = ScalarContext::<RatFunc>::symbolic(2);
    let a = [ctx.int(2), ctx.int(-3), ctx.q_pow(1)];
    let w = functor_f(&ctx, &universal_module(&ctx, &a).unwrap(), 2).unwrap().module;
    on_pools(c, "affine_relations", "F(M_a) n=2 l=3", || {
        std::hint::black_box(w.verify_affine_relations(&ctx).unwrap());
    });
}

fn functor(c: &mut Criterion) {
    let ctx = ScalarContext::<RatFunc>::symbolic(2);
    let a = [ctx.int(2), ctx.int(-3), ctx.q_pow(1)];
    let m = universal_module(&ctx, &a).unwrap();
    on_pools(c, "functor_f", "M_a n=2 l=3", || {
        std::hint::black_box(functor_f(&ctx, &m, 2).unwrap());
    });
}

criterion_group!(benches, j_of_regular, functor, affine_relations);
criterion_main!(benches);
