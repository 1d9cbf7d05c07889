use criterion::{criterion_group, criterion_main, Criterion};
use fanopoly_bench::so4;
use fanopoly_core::classify;
use fanopoly_core::rational::rat;

fn so4_classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_so4");
    group.sample_size(10);
    for p_max in [1, 2, 3] {
        group.bench_function(format!("rho_max={p_max}"), |b| b.iter(|| classify(so4(), &rat(p_max)).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, so4_classification);
criterion_main!(benches);
