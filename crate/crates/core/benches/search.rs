use std::path::Path;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use kn_embed::exec::Exec;
use kn_embed::fixtures::FixtureStore;
use kn_embed::properties;
use kn_embed::recipes::construct::construct_batch;
use kn_embed::search::classify::classify_complete;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn k5(c: &mut Criterion) {
    let mut g = c.benchmark_group("k5_enumeration");
    g.sample_size(20);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| classify_complete(5, exec).unwrap()));
    }
    g.finish();
}

fn property_batch(c: &mut Criterion) {
    let mut g = c.benchmark_group("property_batch_1000");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| assert!(properties::run(0..1000, exec).passed()))
        });
    }
    g.finish();
}

fn batch_construct(c: &mut Criterion) {
    let store = FixtureStore::open(Path::new(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")).unwrap();
    let jobs: Vec<(usize, Vec<usize>)> = vec![
        (10, vec![6]),
        (10, vec![5, 4]),
        (10, vec![4, 4, 4]),
        (12, vec![]),
        (20, vec![5]),
        (20, vec![4, 4]),
        (23, vec![5]),
        (23, vec![4, 4]),
        (30, vec![6]),
        (30, vec![5, 4]),
    ];
    let mut g = c.benchmark_group("batch_construct");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| assert!(construct_batch(&jobs, &store, exec).iter().all(|r| r.is_ok())))
        });
    }
    g.finish();
}

criterion_group!(benches, k5, property_batch, batch_construct);
criterion_main!(benches);
