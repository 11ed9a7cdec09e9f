use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use listsort::fuzz::{self, FuzzConfig};
use listsort::Algorithm;

fn fuzz_paths(c: &mut Criterion) {
    #[cfg(feature = "parallel")]
    if let Some(threads) = std::env::var("BENCH_THREADS").ok().and_then(|v| v.parse().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    let mut group = c.benchmark_group("fuzz");
    group.sample_size(10);
    for cases in [256usize, 1024] {
        let mut cfg = FuzzConfig::new(cases, 42);
        cfg.algorithms = vec![Algorithm::ListSort, Algorithm::MergeArray, Algorithm::Quick];
        group.bench_with_input(BenchmarkId::new("sequential", cases), &cfg, |b, cfg| {
            b.iter(|| fuzz::run_sequential(cfg).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", cases), &cfg, |b, cfg| {
            b.iter(|| fuzz::run_parallel(cfg).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, fuzz_paths);
criterion_main!(benches);
