use cm2_core::{
    char_poly_product, enumerate_jacobian, validate_field, verify_lemma2, FrobeniusElement,
    GenusTwoCurve, DEFAULT_BUDGET,
};
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn lemma2(c: &mut Criterion) {
    c.bench_function("verify_lemma2", |b| b.iter(verify_lemma2));
}

fn char_poly(c: &mut Criterion) {
    let field = validate_field(2, 2, 1).unwrap();
    let w = FrobeniusElement::from_i64(&field, [1, 1, 2, -1]);
    c.bench_function("char_poly_product", |b| {
        b.iter(|| char_poly_product(black_box(&w)).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_jacobian");
    group.sample_size(10);
    for (p, coeffs) in [(5u64, vec![0, 1, 0, 0, 0, 1]), (7, vec![1, 0, 0, 0, 0, 1])] {
        let curve = GenusTwoCurve::new(p, &coeffs).unwrap();
        group.bench_function(format!("p={p}"), |b| {
            b.iter(|| enumerate_jacobian(black_box(&curve), DEFAULT_BUDGET).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, lemma2, char_poly, oracle);
criterion_main!(benches);
