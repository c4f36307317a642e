use criterion::{criterion_group, criterion_main, Criterion};
use num_complex::Complex64;
use std::hint::black_box;
use weylzeta::algebra::rational::int;
use weylzeta::bernoulli_gen::expand_p;
use weylzeta::lattice_zeta::zeta_r;
use weylzeta::poincare::relative_poly;
use weylzeta::weyl::{enumerate_weyl, min_coset_reps};
use weylzeta::{parse_system, BernoulliContext, Precision};

fn weyl(c: &mut Criterion) {
    let b4 = parse_system("B4").unwrap();
    c.bench_function("enumerate W(B4)", |b| b.iter(|| enumerate_weyl(black_box(&b4)).unwrap()));
    let g = enumerate_weyl(&b4).unwrap();
    c.bench_function("coset representatives B4 / B3", |b| b.iter(|| min_coset_reps(black_box(&g), &[1, 2, 3])));
    let e8 = parse_system("E8").unwrap();
    c.bench_function("relative Poincare E8 / E7", |b| b.iter(|| relative_poly(black_box(&e8), &[0, 1, 2, 3, 4, 5, 6]).unwrap()));
}

fn bernoulli(c: &mut Criterion) {
    let a2 = parse_system("A2").unwrap();
    let ctx = BernoulliContext::new(&a2, &[1], None).unwrap();
    c.bench_function("expand P A2 I={2} k=(2,2)", |b| b.iter(|| expand_p(&ctx, &[0, 1], &[int(0), int(0)], black_box(&[2, 2])).unwrap()));
    let c3 = parse_system("C3").unwrap();
    let ctx = BernoulliContext::new(&c3, &[1, 2], None).unwrap();
    c.bench_function("expand P C3 I={2,3} k=(2,1,1,1,1)", |b| b.iter(|| expand_p(&ctx, &[0, 1, 1], &[int(0), int(0), int(0)], black_box(&[2, 1, 1, 1, 1])).unwrap()));
}

fn sums(c: &mut Criterion) {
    let a2 = parse_system("A2").unwrap();
    let s = vec![Complex64::new(2.0, 0.0); 3];
    let y = vec![int(0), int(0)];
    let mut group = c.benchmark_group("lattice sums");
    group.sample_size(10);
    for prec in [Precision::Double, Precision::Extended] {
        group.bench_function(format!("zeta_2 A2 N=500 {prec:?}"), |b| b.iter(|| zeta_r(&a2, black_box(&s), &y, 500, prec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, weyl, bernoulli, sums);
criterion_main!(benches);
