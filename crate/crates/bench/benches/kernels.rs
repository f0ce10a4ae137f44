use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use youngs_bench::{circular, complex, cycle};
use youngs_core::coloring::{chromatic_number, circular_chromatic, find_homomorphism, HomOptions, DEFAULT_HOM_BUDGET};
use youngs_core::complex::{build_x_k, ComplexFamily, DEFAULT_CELL_BUDGET};
use youngs_core::homology::{boundary_matrices, smith_normal_form, CellularChains};
use youngs_core::Ring;

fn snf(c: &mut Criterion) {
    let mut group = c.benchmark_group("snf");
    for family in [ComplexFamily::CubicalRp { d: 2 }, ComplexFamily::KleinGrid { m: 4, n: 5 }] {
        let x = complex(family);
        let (_, d2) = boundary_matrices(&x, Ring::Integers).unwrap();
        group.bench_with_input(BenchmarkId::new("d2", family), &d2, |b, m| b.iter(|| smith_normal_form(black_box(m))));
        group.bench_with_input(BenchmarkId::new("h1", family), &x, |b, x| {
            b.iter(|| CellularChains::new(black_box(x)).unwrap().h1(Ring::Integers))
        });
    }
    group.finish();
}

fn x_k(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_x_k");
    for (n, m, k) in [(5, 2, 6), (7, 3, 8)] {
        let g = circular(n, m);
        group.bench_function(BenchmarkId::from_parameter(format!("K{n}/{m} k={k}")), |b| {
            b.iter(|| build_x_k(black_box(&g), k, DEFAULT_CELL_BUDGET).unwrap())
        });
    }
    group.finish();
}

fn chromatic(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic");
    for family in [ComplexFamily::ProjectiveGrid { m: 3, n: 4 }, ComplexFamily::ProjectiveGrid { m: 2, n: 7 }] {
        let x = complex(family);
        group.bench_function(BenchmarkId::from_parameter(family), |b| {
            b.iter(|| chromatic_number(black_box(x.skeleton()), None).unwrap())
        });
    }
    group.finish();
}

fn hom_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("hom");
    let g = cycle(9);
    let opts = HomOptions { node_budget: DEFAULT_HOM_BUDGET, target_vertex_transitive: true };
    for (p, q) in [(9, 4), (7, 3)] {
        let h = circular(p, q);
        group.bench_function(BenchmarkId::from_parameter(format!("C9 to K{p}/{q}")), |b| {
            b.iter(|| find_homomorphism(black_box(&g), &h, opts))
        });
    }
    group.bench_function("circular_chromatic C9", |b| {
        b.iter(|| circular_chromatic(black_box(&g), 4, DEFAULT_HOM_BUDGET).unwrap())
    });
    group.finish();
}

criterion_group!(benches, snf, x_k, chromatic, hom_search);
criterion_main!(benches);
