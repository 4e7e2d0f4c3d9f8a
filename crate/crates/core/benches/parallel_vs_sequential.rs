use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sdcodes::circulant::{search_circulant, DEFAULT_CIRCULANT_BUDGET};
use sdcodes::{classify_up_to, graph_code, min_distance, weight_enumerator, ClassifyOptions, Exec, WeightedGraph};

const POLICIES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_m3_n6");
    group.sample_size(10);
    for (name, exec) in POLICIES {
        let opts = ClassifyOptions { exec, ..Default::default() };
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| classify_up_to(3, 6, &opts).unwrap()));
    }
    group.finish();
}

fn distances(c: &mut Criterion) {
    let g = WeightedGraph::circulant(5, &[0, 0, 1, 2, 2, 2, 1, 0, 0]).unwrap();
    let code = graph_code(&g);
    let mut group = c.benchmark_group("distance_10_5");
    group.sample_size(10);
    for (name, exec) in POLICIES {
        group.bench_function(BenchmarkId::new("min_distance", name), |b| b.iter(|| min_distance(&g, exec)));
        group.bench_function(BenchmarkId::new("weight_enumerator", name), |b| {
            b.iter(|| weight_enumerator(&code, u128::MAX, exec).unwrap())
        });
    }
    group.finish();
}

fn circulants(c: &mut Criterion) {
    let mut group = c.benchmark_group("circulant_m4_n12");
    group.sample_size(10);
    for (name, exec) in POLICIES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| search_circulant(4, 12, None, DEFAULT_CIRCULANT_BUDGET, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, classification, distances, circulants);
criterion_main!(benches);
