use criterion::{black_box, criterion_group, criterion_main, Criterion};
use kummer_bench::{diagonal_on_f7_squared, negation_on_z9_z3, TOWERS};
use kummer_core::core_alg::eigen_decompose_all;
use kummer_core::cyclic_cohomology::{h_i, to_gmodule, CyclicGroupAction};
use kummer_core::field_tower::{build_tower, descent_iso_check};
use kummer_core::group_oracle::{
    by_name, enumerate_cohomology, linear_cohomology, sweep_character_subgroups,
};

fn cohomology(c: &mut Criterion) {
    let a = negation_on_z9_z3();
    let act = CyclicGroupAction::new(a.clone());
    let gm = to_gmodule(&a, 2, &a.action).unwrap();
    let mut g = c.benchmark_group("h2");
    g.bench_function("cyclic_formula", |b| {
        b.iter(|| h_i(black_box(&act), 2).unwrap())
    });
    g.bench_function("linear_cochains", |b| {
        b.iter(|| linear_cohomology(black_box(&gm), 2))
    });
    g.bench_function("enumerated_cochains", |b| {
        b.iter(|| enumerate_cohomology(black_box(&gm), 2))
    });
    g.finish();
}

fn eigen(c: &mut Criterion) {
    let a = diagonal_on_f7_squared();
    c.bench_function("eigen_decompose_all", |b| {
        b.iter(|| eigen_decompose_all(black_box(&a)).unwrap())
    });
}

fn towers(c: &mut Criterion) {
    c.bench_function("tower_and_descent", |b| {
        b.iter(|| {
            for &(q, p, n) in &TOWERS {
                let t = build_tower(q, p, n).unwrap();
                black_box(descent_iso_check(&t));
            }
        })
    });
}

fn character_subgroups(c: &mut Criterion) {
    let g = by_name("S3").unwrap();
    c.bench_function("character_subgroups_s3", |b| {
        b.iter(|| sweep_character_subgroups(black_box(&g), &[2, 3, 4, 5]))
    });
}

criterion_group!(benches, cohomology, eigen, towers, character_subgroups);
criterion_main!(benches);
