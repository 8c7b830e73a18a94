use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use djc::{
    evaluate, invariants_batch, random_state, verify, Axis, Execution, Family, FourQubitState,
    ModelParams, SweepSpec,
};

fn spec(steps: usize) -> SweepSpec {
    SweepSpec {
        family: Family::Phi,
        params: ModelParams::detuned(1.0, 1.0, 0.5, 1.0, 1.0, 0.7).unwrap(),
        t: Axis::new(0.0, 6.0, steps),
        alpha: Axis::new(0.0, std::f64::consts::FRAC_PI_2, steps),
        beta: 0.0,
        nmax: 3,
    }
}

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bench_invariants(c: &mut Criterion) {
    let states: Vec<FourQubitState> = (0..4096).map(random_state).collect();
    let mut group = c.benchmark_group("invariants_batch");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| invariants_batch(&states, exec)));
    }
    group.finish();
}

fn bench_surface(c: &mut Criterion) {
    let mut group = c.benchmark_group("surface");
    for steps in [32, 96] {
        let s = spec(steps);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, steps), &s, |b, s| {
                b.iter(|| evaluate(s, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(20);
    let s = spec(24);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| verify(&s, &[Family::Phi, Family::Psi], exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, bench_invariants, bench_surface, bench_verify);
criterion_main!(benches);
