use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use kenmotsu_bench::fixtures;
use kenmotsu_core::{classify, full_verification, is_kenmotsu, solve_soliton_constants, Geometry, Variant};

fn geometry(c: &mut Criterion) {
    let mut group = c.benchmark_group("geometry");
    group.sample_size(10);
    for (name, spec) in fixtures() {
        group.bench_with_input(BenchmarkId::from_parameter(&name), &spec, |b, spec| {
            b.iter(|| Geometry::compute(spec).unwrap())
        });
    }
    group.finish();
}

fn analysis(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify+solve+classify");
    group.sample_size(10);
    for (name, spec) in fixtures() {
        let geo = Geometry::compute(&spec).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(&name), &spec, |b, spec| {
            b.iter(|| {
                let report = full_verification(spec, &geo, false).unwrap();
                let outcome = solve_soliton_constants(
                    spec,
                    &geo.curvature,
                    &geo.derivatives.lie_xi_g,
                    spec.p(),
                    Variant::ConformalEtaEinstein,
                )
                .unwrap();
                let k = is_kenmotsu(spec, &geo.connection);
                (report, classify(spec, &geo, outcome.solution(), k).unwrap())
            })
        });
    }
    group.finish();
}

criterion_group!(benches, geometry, analysis);
criterion_main!(benches);
