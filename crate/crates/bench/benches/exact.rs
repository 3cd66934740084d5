use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use goldentiles::angles::{exact_cos, identify_angle, AngleExpr};
use goldentiles::inflation::{
    covering_brute_force, integrality_spectrum, reconstruct_matrix, reference_m_gt, InvariantSystem,
};
use goldentiles::mosseri_sadoc::{m_2f, t2f_checks};
use goldentiles::polyhedra::build_catalog;
use goldentiles::{GoldenNumber, NumCtx, TowerElement};

fn arithmetic(c: &mut Criterion) {
    let x = GoldenNumber::new(goldentiles::Rational::new(7, 3), goldentiles::Rational::new(-5, 2));
    let y = GoldenNumber::int(11, 4);
    c.bench_function("golden_mul_div", |b| b.iter(|| &(black_box(&x) * black_box(&y)) / &y));

    let t = TowerElement::from_ints([1, -2, 3, 1, 0, 5, -1, 2]);
    c.bench_function("tower_inverse", |b| b.iter(|| black_box(&t).inverse()));
}

fn angles(c: &mut Criterion) {
    let e = AngleExpr::new(goldentiles::Rational::new(1, 2), 2, -3);
    c.bench_function("exact_cos", |b| b.iter(|| exact_cos(black_box(&e))));
    let cos = exact_cos(&AngleExpr::beta()).unwrap();
    let mut ctx = NumCtx::new(128);
    c.bench_function("identify_angle", |b| b.iter(|| identify_angle(black_box(&cos), &mut ctx)));
}

fn catalog_and_matrices(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    let mut ctx = NumCtx::new(128);
    group.bench_function("build_catalog", |b| b.iter(|| build_catalog(&mut ctx)));
    let cat = build_catalog(&mut ctx).unwrap();
    let sys = InvariantSystem::golden_tetrahedra(&cat);
    group.bench_function("reconstruct_gt", |b| b.iter(|| reconstruct_matrix(black_box(&sys))));
    let m = reference_m_gt();
    group.bench_function("integrality_spectrum_30", |b| b.iter(|| integrality_spectrum(black_box(&m), 30)));
    let m2f = m_2f();
    group.bench_function("t2f_checks", |b| b.iter(|| t2f_checks(black_box(&m2f), &m)));
    group.bench_function("covering_brute_force_6", |b| b.iter(|| covering_brute_force(black_box(6))));
    group.finish();
}

criterion_group!(benches, arithmetic, angles, catalog_and_matrices);
criterion_main!(benches);
