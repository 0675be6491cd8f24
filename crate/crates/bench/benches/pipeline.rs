use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use repred::algebra::{from_matrix_span, radical, radical_bruteforce, DEFAULT_ENUMERATION_BOUND};
use repred::dual::{compare, CharacterSet};
use repred::lattice::{algebra_closure, oracle_saturation, saturate, DEFAULT_MAX_STEPS};
use repred::lifting::lift_idempotent;
use repred::{run_analysis, AnalysisInput, MatFp, MatRat, PRational, Prime};

fn saturation(c: &mut Criterion) {
    let p = Prime::new(2).unwrap();
    let gens = [
        MatRat::from_i64_rows(&[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]]),
        MatRat::from_i64_rows(&[&[1, 0, 0], &[2, 1, 0], &[0, 4, 1]]),
    ];
    let l0 = algebra_closure(p, 3, &gens).unwrap();
    c.bench_function("algebra_closure 3x3", |b| b.iter(|| algebra_closure(p, 3, black_box(&gens))));
    c.bench_function("saturate 3x3", |b| b.iter(|| saturate(black_box(&l0), DEFAULT_MAX_STEPS)));
    c.bench_function("oracle_saturation 3x3", |b| b.iter(|| oracle_saturation(black_box(&l0))));
}

fn radicals(c: &mut Criterion) {
    let p = Prime::new(2).unwrap();
    // upper triangular 3x3 over F_2, dim 6
    let basis: Vec<MatFp> = (0..3)
        .flat_map(|i| (i..3).map(move |j| (i, j)))
        .map(|(i, j)| MatFp::unit(p, 3, i, j))
        .collect();
    let a = from_matrix_span(p, &basis).unwrap();
    c.bench_function("radical upper triangular", |b| b.iter(|| radical(black_box(&a))));
    c.bench_function("radical_bruteforce upper triangular", |b| {
        b.iter(|| radical_bruteforce(black_box(&a), DEFAULT_ENUMERATION_BOUND))
    });
}

fn lifting(c: &mut Criterion) {
    let p = Prime::new(3).unwrap();
    let p0 = MatRat::from_i64_rows(&[&[1, 1], &[3, 0]]);
    c.bench_function("lift_idempotent p=3 N=64", |b| b.iter(|| lift_idempotent(black_box(&p0), p, 64)));
}

fn clusters(c: &mut Criterion) {
    let p = Prime::new(2).unwrap();
    let cs = CharacterSet::new(p, [1, 3, 5, 7, 9].into_iter().map(PRational::from_int).collect()).unwrap();
    c.bench_function("compare five characters", |b| b.iter(|| compare(black_box(&cs), 6)));
}

fn end_to_end(c: &mut Criterion) {
    let input = AnalysisInput::from_json(
        r#"{"p": 2, "n": 2, "mode": "representation", "generators": [[[1,1],[0,1]], [[1,0],[2,1]]]}"#,
    )
    .unwrap();
    c.bench_function("run_analysis two generators", |b| b.iter(|| run_analysis(black_box(&input))));
}

criterion_group!(benches, saturation, radicals, lifting, clusters, end_to_end);
criterion_main!(benches);
