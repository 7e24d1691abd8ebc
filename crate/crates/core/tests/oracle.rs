//! The brute-force Jacobian against itself: group axioms, Weil bounds and
//! the order/point-count equality on small fields.

use cm2_core::jacobian::{jacobian_elements, scalar_mul};
use cm2_core::{
    cantor_add, enumerate_jacobian, weil_validate, GenusTwoCurve, MumfordDivisor, DEFAULT_BUDGET,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sample_curves(p: u64, n: usize, seed: u64) -> Vec<GenusTwoCurve> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n)
        .map(|_| GenusTwoCurve::random_quintic(p, &mut rng).unwrap())
        .collect()
}

#[test]
fn x5_plus_x_over_f5() {
    let c = GenusTwoCurve::new(5, &[0, 1, 0, 0, 0, 1]).unwrap();
    let g = enumerate_jacobian(&c, DEFAULT_BUDGET).unwrap();
    let poly = c.frobenius_poly().unwrap();
    assert_eq!(BigInt::from(g.order), poly.group_order());
}

#[test]
fn order_matches_counts_on_samples() {
    for p in [5u64, 7, 11] {
        for c in sample_curves(p, 6, p) {
            let g = enumerate_jacobian(&c, DEFAULT_BUDGET).unwrap();
            let poly = c.frobenius_poly().unwrap();
            assert_eq!(BigInt::from(g.order), poly.group_order(), "{c:?}");
            assert!(weil_validate(&poly).functional_equation);
            // Weil interval: (√p - 1)⁴ ≤ N ≤ (√p + 1)⁴
            let sp = (p as f64).sqrt();
            let n = g.order as f64;
            assert!((sp - 1.0).powi(4) <= n + 1e-9 && n <= (sp + 1.0).powi(4) + 1e-9);
            assert_eq!(g.invariant_factors.iter().product::<u64>(), g.order);
        }
    }
}

#[test]
fn element_orders_divide_group_order() {
    for c in sample_curves(7, 3, 99) {
        let els = jacobian_elements(&c).unwrap();
        let n = els.len() as u64;
        for d in &els {
            assert!(scalar_mul(d, n, &c).unwrap().is_identity());
        }
    }
}

#[test]
fn structure_exponent_is_attained() {
    // The largest invariant factor is the exponent of the group.
    for c in sample_curves(5, 8, 7) {
        let g = enumerate_jacobian(&c, DEFAULT_BUDGET).unwrap();
        let exponent = *g.invariant_factors.last().unwrap_or(&1);
        let els = jacobian_elements(&c).unwrap();
        assert!(els
            .iter()
            .all(|d| scalar_mul(d, exponent, &c).unwrap().is_identity()));
        assert!(els.iter().any(|d| {
            (1..exponent)
                .filter(|k| exponent.is_multiple_of(*k))
                .all(|k| !scalar_mul(d, k, &c).unwrap().is_identity())
        }));
    }
}

fn curve_and_triple() -> impl Strategy<
    Value = (
        GenusTwoCurve,
        MumfordDivisor,
        MumfordDivisor,
        MumfordDivisor,
    ),
> {
    (
        prop::sample::select(vec![5u64, 7]),
        any::<u64>(),
        any::<u64>(),
        any::<u64>(),
        any::<u64>(),
    )
        .prop_map(|(p, seed, i, j, k)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = GenusTwoCurve::random_quintic(p, &mut rng).unwrap();
            let els = jacobian_elements(&c).unwrap();
            let pick = |x: u64| els[(x % els.len() as u64) as usize].clone();
            let (a, b, d) = (pick(i), pick(j), pick(k));
            (c, a, b, d)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cantor_is_commutative_and_associative((c, a, b, d) in curve_and_triple()) {
        let ab = cantor_add(&a, &b, &c).unwrap();
        prop_assert_eq!(&ab, &cantor_add(&b, &a, &c).unwrap());
        let left = cantor_add(&ab, &d, &c).unwrap();
        let right = cantor_add(&a, &cantor_add(&b, &d, &c).unwrap(), &c).unwrap();
        prop_assert_eq!(left, right);
        prop_assert!(cantor_add(&a, &a.negate(&c), &c).unwrap().is_identity());
    }
}
