//! Galois classification checked against a general-purpose quartic oracle:
//! integer factorisation, the cubic resolvent and the Kappe–Warren test for
//! C4 versus D4. None of it uses the biquadratic-trinomial shortcut.

use cm2_core::{validate_field, Error, GaloisType};
use num_traits::ToPrimitive;

#[derive(Debug, PartialEq, Eq)]
enum QuarticGroup {
    V4,
    C4,
    D4,
    A4OrS4,
    Reducible,
}

fn is_square(n: i128) -> bool {
    if n < 0 {
        return false;
    }
    let r = (n as f64).sqrt() as i128;
    (r.saturating_sub(2)..=r + 2).any(|k| k >= 0 && k * k == n)
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut k = 1;
    while k * k <= n {
        if n % k == 0 {
            out.extend([k, -k, n / k, -(n / k)]);
        }
        k += 1;
    }
    out
}

/// Integer roots of a monic cubic `y³ + b2·y² + b1·y + b0`.
fn integer_roots_cubic(b2: i128, b1: i128, b0: i128) -> Vec<i128> {
    let eval = |y: i128| ((y + b2) * y + b1) * y + b0;
    // with b0 = 0 the remaining roots divide b1 (or b2 when b1 = 0 too)
    let mut cands = match (b0, b1) {
        (0, 0) => [vec![0], divisors(b2)].concat(),
        (0, _) => [vec![0], divisors(b1)].concat(),
        _ => divisors(b0),
    };
    cands.sort();
    cands.dedup();
    cands.into_iter().filter(|&y| eval(y) == 0).collect()
}

/// Monic `x⁴ + a3x³ + a2x² + a1x + a0` factors over Z (hence over Q).
fn is_reducible(a3: i128, a2: i128, a1: i128, a0: i128) -> bool {
    let eval = |x: i128| (((x + a3) * x + a2) * x + a1) * x + a0;
    if a0 == 0 {
        return true;
    }
    if divisors(a0).into_iter().any(|x| eval(x) == 0) {
        return true;
    }
    // (x² + p x + q)(x² + r x + s)
    for q in divisors(a0) {
        let s = a0 / q;
        if s != q {
            let num = a1 - q * a3;
            let den = s - q;
            if num % den == 0 {
                let p = num / den;
                let r = a3 - p;
                if q + s + p * r == a2 {
                    return true;
                }
            }
        } else {
            // p + r = a3, p·r = a2 - 2q, and then q(p + r) = a1 must hold
            let disc = a3 * a3 - 4 * (a2 - 2 * q);
            if q * a3 == a1 && is_square(disc) && (a3 + isqrt(disc)) % 2 == 0 {
                return true;
            }
        }
    }
    false
}

fn isqrt(n: i128) -> i128 {
    let r = (n as f64).sqrt() as i128;
    (r.saturating_sub(2)..=r + 2)
        .filter(|k| k * k <= n)
        .max()
        .unwrap()
}

fn classify(a3: i128, a2: i128, a1: i128, a0: i128) -> QuarticGroup {
    if is_reducible(a3, a2, a1, a0) {
        return QuarticGroup::Reducible;
    }
    // Resolvent with roots x1x2 + x3x4 etc.
    let (b2, b1, b0) = (
        -a2,
        a3 * a1 - 4 * a0,
        -(a3 * a3 * a0 - 4 * a2 * a0 + a1 * a1),
    );
    let disc =
        b2 * b2 * b1 * b1 - 4 * b1.pow(3) - 4 * b2.pow(3) * b0 - 27 * b0 * b0 + 18 * b2 * b1 * b0;
    let roots = integer_roots_cubic(b2, b1, b0);
    match roots.len() {
        0 => QuarticGroup::A4OrS4,
        1 => {
            let r = roots[0];
            let splits = |u: i128, v: i128| {
                let d = u * u - 4 * v;
                d == 0 || is_square(d) || is_square(d * disc)
            };
            if splits(-r, a0) && splits(a3, a2 - r) {
                QuarticGroup::C4
            } else {
                QuarticGroup::D4
            }
        }
        _ => QuarticGroup::V4,
    }
}

fn oracle_type(d: i64, a: i64, b: i64) -> GaloisType {
    if b == 0 {
        // K = Q(√D, i√a) is a compositum of two quadratic fields.
        return GaloisType::Biquadratic;
    }
    let k = validate_field(d, a, b).unwrap();
    let (p, q) = k.min_poly();
    let (p, q) = (p.to_i128().unwrap(), q.to_i128().unwrap());
    match classify(0, p, 0, q) {
        QuarticGroup::V4 => GaloisType::Biquadratic,
        QuarticGroup::C4 => GaloisType::Cyclic,
        QuarticGroup::D4 | QuarticGroup::A4OrS4 => GaloisType::NonGalois,
        QuarticGroup::Reducible => panic!("({d},{a},{b}) gave a reducible minimal polynomial"),
    }
}

#[test]
fn oracle_sanity_on_known_quartics() {
    assert_eq!(classify(0, 0, 0, 1), QuarticGroup::V4); // x⁴ + 1, Q(ζ8)
    assert_eq!(classify(0, 4, 0, 2), QuarticGroup::C4); // i·sqrt(2 + √2)
    assert_eq!(classify(0, 0, 0, -2), QuarticGroup::D4); // x⁴ - 2
    assert_eq!(classify(0, 0, 1, 1), QuarticGroup::A4OrS4); // x⁴ + x + 1, S4
    assert_eq!(classify(0, -10, 0, 1), QuarticGroup::V4); // min poly of √2 + √3
    assert_eq!(classify(0, 5, 0, 5), QuarticGroup::C4); // generates Q(ζ5)
    assert_eq!(classify(0, 2, 0, 1), QuarticGroup::Reducible); // (x² + 1)²
    assert_eq!(classify(0, 0, 0, 4), QuarticGroup::Reducible); // Sophie Germain
}

#[test]
fn spec_examples_match_oracle() {
    assert_eq!(oracle_type(2, 2, 1), GaloisType::Cyclic);
    assert_eq!(oracle_type(2, 1, 0), GaloisType::Biquadratic);
    assert_eq!(oracle_type(2, 3, 1), GaloisType::NonGalois);
}

#[test]
fn classification_matches_oracle_on_grid() {
    let mut counts = [0usize; 3];
    let mut rejected = 0usize;
    for d in 2..=20i64 {
        for a in -10..=10i64 {
            for b in -10..=10i64 {
                match validate_field(d, a, b) {
                    Ok(k) => {
                        let want = oracle_type(d, a, b);
                        assert_eq!(k.galois_type(), want, "D={d} a={a} b={b}");
                        counts[match want {
                            GaloisType::Biquadratic => 0,
                            GaloisType::Cyclic => 1,
                            GaloisType::NonGalois => 2,
                        }] += 1;
                    }
                    Err(Error::InvalidDiscriminant(_)) | Err(Error::NotTotallyImaginary { .. }) => {
                        rejected += 1
                    }
                    Err(e) => panic!("D={d} a={a} b={b}: unexpected {e}"),
                }
            }
        }
    }
    // every type is exercised
    assert!(counts.iter().all(|&c| c > 0), "{counts:?}");
    assert!(rejected > 0);
}
