use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use theta_core::enumerate::{canonical_form, enumerate_hereditary};
use theta_core::families::{gen_g, gen_h, HFamilySpec};
use theta_core::forbidden::{find_forbidden, ForbiddenSpec};
use theta_core::hamilton::hamilton_cycle;
use theta_core::theta::spanning_theta;

fn theta_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("spanning_theta");
    for family in [7u8, 6, 1, 4] {
        let g = gen_h(&HFamilySpec::default_for(family).unwrap()).unwrap().graph;
        group.bench_with_input(BenchmarkId::new("H", family), &g, |b, g| b.iter(|| spanning_theta(black_box(g))));
    }
    let g9 = gen_g(9, 9).unwrap().graph;
    group.bench_function("G9(9)", |b| b.iter(|| spanning_theta(black_box(&g9))));
    group.finish();
}

fn hamilton(c: &mut Criterion) {
    let g = gen_h(&HFamilySpec::default_for(4).unwrap()).unwrap().graph;
    c.bench_function("hamilton_cycle/H4", |b| b.iter(|| hamilton_cycle(black_box(&g))));
}

fn induced(c: &mut Criterion) {
    let g = gen_h(&HFamilySpec::default_for(4).unwrap()).unwrap().graph;
    c.bench_function("find_forbidden/N1,2,3 in H4", |b| {
        b.iter(|| find_forbidden(black_box(&g), ForbiddenSpec::N(1, 2, 3)))
    });
}

fn enumeration(c: &mut Criterion) {
    let graphs: Vec<_> = enumerate_hereditary(8, |_| true).unwrap().pop().unwrap().into_iter().take(500).collect();
    c.bench_function("canonical_form/500 graphs n=8", |b| {
        b.iter(|| graphs.iter().map(|g| canonical_form(g).unwrap()).collect::<Vec<_>>())
    });
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("all graphs n<=7", |b| b.iter(|| enumerate_hereditary(7, |_| true).unwrap()));
    group.finish();
}

criterion_group!(benches, theta_search, hamilton, induced, enumeration);
criterion_main!(benches);
