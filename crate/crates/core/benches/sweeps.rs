use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use symvertex::tableaux::{bounded_height_pairs, CountMethod};
use symvertex::verify::{suite, Bounds};
use symvertex::Exec;

const MODES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn suites(c: &mut Criterion) {
    let bounds = Bounds::default().with_max_degree(4);
    let mut group = c.benchmark_group("suite");
    group.sample_size(10);
    for name in ["ring", "actions"] {
        let s = suite(name).expect("known suite");
        for (label, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, label), &exec, |b, &exec| {
                b.iter(|| s.run(&bounds, exec))
            });
        }
    }
    group.finish();
}

fn counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("count");
    group.sample_size(10);
    for method in [CountMethod::Closed, CountMethod::Det] {
        group.bench_function(format!("{method:?} n=8 k=3"), |b| {
            b.iter(|| bounded_height_pairs(8, 3, method))
        });
    }
    group.finish();
}

criterion_group!(benches, suites, counts);
criterion_main!(benches);
