use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qcrystal::braiding::braiding_suite;
use qcrystal::hrgraph::{ColourSet, HigherRankGraph};
use qcrystal::soibelman::Soibelman;
use qcrystal::Atlas;
use rayon::ThreadPoolBuilder;

// Every iteration starts from a fresh atlas so caches do not hide the work.

fn graph_paths(label: &str, bound: &[u32]) {
    let atlas = Atlas::parse(label).unwrap();
    let g = HigherRankGraph::build(atlas.clone(), ColourSet::fundamental(atlas.datum())).unwrap();
    for d in g.degrees_up_to(bound) {
        g.paths(&d).unwrap();
    }
}

fn braiding(label: &str) {
    let atlas = Atlas::parse(label).unwrap();
    assert!(braiding_suite(&atlas).unwrap().passed());
}

fn kp(label: &str) {
    let atlas = Atlas::parse(label).unwrap();
    let g = HigherRankGraph::build(atlas.clone(), ColourSet::fundamental(atlas.datum())).unwrap();
    let s = Soibelman::new(atlas.clone()).unwrap();
    assert!(s.verify_suite(&g, &vec![1; atlas.rank()]).unwrap().passed());
}

fn compare(c: &mut Criterion) {
    let single = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let workloads: [(&str, Box<dyn Fn() + Sync>); 4] = [
        (
            "graph paths C2 (2,2)",
            Box::new(|| graph_paths("C2", &[2, 2])),
        ),
        (
            "graph paths G2 (1,1)",
            Box::new(|| graph_paths("G2", &[1, 1])),
        ),
        ("braiding suite C2", Box::new(|| braiding("C2"))),
        ("verify kp C2", Box::new(|| kp("C2"))),
    ];
    let mut group = c.benchmark_group("parallel_vs_sequential");
    group.sample_size(10);
    for (name, work) in &workloads {
        group.bench_function(BenchmarkId::new("rayon default", name), |b| {
            b.iter(|| work())
        });
        group.bench_function(BenchmarkId::new("one thread", name), |b| {
            b.iter(|| single.install(|| work()))
        });
    }
    group.finish();
}

criterion_group!(benches, compare);
criterion_main!(benches);
