use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use gridforge_core::grid::{connected_components, enclosed_cells};
use gridforge_core::{canonical_digest, DifficultyBounds, Symbol, Task, TracedRng};

fn generate_and_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate_verify");
    group.throughput(Throughput::Elements(1));
    for task in Task::ALL {
        group.bench_with_input(BenchmarkId::from_parameter(task.id()), &task, |b, &task| {
            let mut seed = 0u64;
            b.iter(|| {
                seed += 1;
                let mut rng = TracedRng::new(seed);
                let attempt = task.generate(&mut rng, &DifficultyBounds::FULL);
                attempt.outcome.map(|e| task.accepts(&e))
            })
        });
    }
    group.finish();
}

fn primitives(c: &mut Criterion) {
    let mut rng = TracedRng::new(1);
    let attempt = Task::Gravity.generate(&mut rng, &DifficultyBounds::new(1.0, 1.0).unwrap());
    let example = attempt.outcome.expect("gravity never fails");
    let grid = example.input.clone();
    c.bench_function("connected_components_30x30", |b| {
        b.iter(|| connected_components(&grid, gridforge_core::Connectivity::Four).len())
    });
    c.bench_function("enclosed_cells_30x30", |b| {
        b.iter(|| enclosed_cells(&grid, Symbol::ZERO).len())
    });
    c.bench_function("canonical_digest_30x30", |b| b.iter(|| canonical_digest(&example)));
}

criterion_group!(benches, generate_and_verify, primitives);
criterion_main!(benches);
