//! The real quadratic order `O_K0 = Z + ξZ` and quartic CM fields
//! `K = K0(η)` with `η = i·sqrt(a + bξ)`.
//!
//! `ξ` is `sqrt(D)` when `D ≡ 2, 3 (mod 4)` and `(1 + sqrt(D))/2` when
//! `D ≡ 1 (mod 4)`. Elements of `O_K0` are stored as exact integer pairs in
//! the basis `{1, ξ}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::arith::{is_perfect_square, is_squarefree};
use crate::{Error, Result};

/// Which of the two shapes `ξ` takes, decided by `D mod 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum XiBranch {
    /// `D ≡ 2, 3 (mod 4)`, `ξ = sqrt(D)`.
    Sqrt,
    /// `D ≡ 1 (mod 4)`, `ξ = (1 + sqrt(D))/2`.
    HalfInteger,
}

impl XiBranch {
    pub fn label(self) -> &'static str {
        match self {
            XiBranch::Sqrt => "2,3 mod 4",
            XiBranch::HalfInteger => "1 mod 4",
        }
    }
}

impl fmt::Display for XiBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A squarefree integer `D > 1`, so that `K0 = Q(sqrt(D))` is a real
/// quadratic field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Discriminant(u64);

impl Discriminant {
    pub fn new(d: i64) -> Result<Self> {
        if d <= 1 || !is_squarefree(d as u64) {
            return Err(Error::InvalidDiscriminant(d));
        }
        Ok(Discriminant(d as u64))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn branch(self) -> XiBranch {
        if self.0 % 4 == 1 {
            XiBranch::HalfInteger
        } else {
            XiBranch::Sqrt
        }
    }

    /// `ξ² = s0 + s1·ξ`.
    pub fn xi_square(self) -> (i64, i64) {
        let d = self.0 as i64;
        match self.branch() {
            XiBranch::Sqrt => (d, 0),
            XiBranch::HalfInteger => ((d - 1) / 4, 1),
        }
    }

    /// The two real values of `ξ`: identity embedding first, then `ξ'`.
    pub fn xi_values(self) -> (f64, f64) {
        let r = (self.0 as f64).sqrt();
        match self.branch() {
            XiBranch::Sqrt => (r, -r),
            XiBranch::HalfInteger => ((1.0 + r) / 2.0, (1.0 - r) / 2.0),
        }
    }
}

impl fmt::Display for Discriminant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Coefficients `(s0, s1)` with `ξ² = s0 + s1·ξ`.
pub fn xi_square_rule(d: i64) -> Result<(i64, i64)> {
    Ok(Discriminant::new(d)?.xi_square())
}

/// An element `x + y·ξ` of `O_K0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealQuadElem {
    pub x: BigInt,
    pub y: BigInt,
    pub d: Discriminant,
}

impl RealQuadElem {
    pub fn new(x: impl Into<BigInt>, y: impl Into<BigInt>, d: Discriminant) -> Self {
        RealQuadElem {
            x: x.into(),
            y: y.into(),
            d,
        }
    }

    pub fn from_integer(x: impl Into<BigInt>, d: Discriminant) -> Self {
        Self::new(x, 0, d)
    }

    pub fn zero(d: Discriminant) -> Self {
        Self::from_integer(0, d)
    }

    pub fn is_rational(&self) -> bool {
        self.y.is_zero()
    }

    /// The rational integer this element equals, if its ξ-coordinate vanishes.
    pub fn as_integer(&self) -> Option<&BigInt> {
        self.is_rational().then_some(&self.x)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.d != other.d {
            return Err(Error::DomainMismatch {
                left: self.d.get(),
                right: other.d.get(),
            });
        }
        let (s0, s1) = self.d.xi_square();
        let yy = &self.y * &other.y;
        let x = &self.x * &other.x + &yy * s0;
        let y = &self.x * &other.y + &self.y * &other.x + &yy * s1;
        Ok(RealQuadElem { x, y, d: self.d })
    }

    /// Image under the non-trivial automorphism `ξ ↦ ξ'`.
    pub fn conjugate(&self) -> Self {
        match self.d.branch() {
            XiBranch::Sqrt => RealQuadElem {
                x: self.x.clone(),
                y: -&self.y,
                d: self.d,
            },
            // ξ' = 1 - ξ
            XiBranch::HalfInteger => RealQuadElem {
                x: &self.x + &self.y,
                y: -&self.y,
                d: self.d,
            },
        }
    }

    /// `Tr_{K0/Q}`.
    pub fn trace(&self) -> BigInt {
        match self.d.branch() {
            XiBranch::Sqrt => &self.x * 2,
            XiBranch::HalfInteger => &self.x * 2 + &self.y,
        }
    }

    /// `N_{K0/Q}`.
    pub fn norm(&self) -> BigInt {
        let d = self.d.get();
        match self.d.branch() {
            XiBranch::Sqrt => &self.x * &self.x - &self.y * &self.y * d,
            XiBranch::HalfInteger => {
                &self.x * &self.x + &self.x * &self.y - &self.y * &self.y * ((d - 1) / 4)
            }
        }
    }

    /// Positive under both real embeddings, decided exactly: a real quadratic
    /// element is totally positive iff its trace and norm are both positive.
    pub fn is_totally_positive(&self) -> bool {
        self.trace().is_positive() && self.norm().is_positive()
    }

    /// Values under the identity embedding and under `ξ ↦ ξ'`.
    pub fn real_embeddings(&self) -> (f64, f64) {
        let (xi, xi_conj) = self.d.xi_values();
        let x = self.x.to_f64().unwrap_or(f64::NAN);
        let y = self.y.to_f64().unwrap_or(f64::NAN);
        (x + y * xi, x + y * xi_conj)
    }

    fn assert_same_ring(&self, other: &Self) {
        assert_eq!(
            self.d, other.d,
            "arithmetic between elements of different real quadratic rings"
        );
    }
}

impl fmt::Display for RealQuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.y.is_negative() {
            write!(f, "{} - {}ξ", self.x, -&self.y)
        } else {
            write!(f, "{} + {}ξ", self.x, self.y)
        }
    }
}

// The operator impls panic on mismatched rings; `try_mul` / `rq_mul` report it
// as an error instead.
impl<'a> Add<&'a RealQuadElem> for &'a RealQuadElem {
    type Output = RealQuadElem;
    fn add(self, rhs: &'a RealQuadElem) -> RealQuadElem {
        self.assert_same_ring(rhs);
        RealQuadElem {
            x: &self.x + &rhs.x,
            y: &self.y + &rhs.y,
            d: self.d,
        }
    }
}

impl<'a> Sub<&'a RealQuadElem> for &'a RealQuadElem {
    type Output = RealQuadElem;
    fn sub(self, rhs: &'a RealQuadElem) -> RealQuadElem {
        self.assert_same_ring(rhs);
        RealQuadElem {
            x: &self.x - &rhs.x,
            y: &self.y - &rhs.y,
            d: self.d,
        }
    }
}

impl<'a> Mul<&'a RealQuadElem> for &'a RealQuadElem {
    type Output = RealQuadElem;
    fn mul(self, rhs: &'a RealQuadElem) -> RealQuadElem {
        self.assert_same_ring(rhs);
        self.try_mul(rhs).expect("rings checked above")
    }
}

impl Neg for &RealQuadElem {
    type Output = RealQuadElem;
    fn neg(self) -> RealQuadElem {
        RealQuadElem {
            x: -&self.x,
            y: -&self.y,
            d: self.d,
        }
    }
}

pub fn rq_mul(u: &RealQuadElem, v: &RealQuadElem) -> Result<RealQuadElem> {
    u.try_mul(v)
}

pub fn rq_conjugate(u: &RealQuadElem) -> RealQuadElem {
    u.conjugate()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaloisType {
    /// Galois with group `Z/2 × Z/2`; not primitive.
    Biquadratic,
    /// Galois with group `Z/4`.
    Cyclic,
    NonGalois,
}

impl GaloisType {
    pub fn name(self) -> &'static str {
        match self {
            GaloisType::Biquadratic => "Biquadratic",
            GaloisType::Cyclic => "Cyclic",
            GaloisType::NonGalois => "NonGalois",
        }
    }
}

impl fmt::Display for GaloisType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A validated quartic CM field `K = K0(η)`, `η² = -(a + bξ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CMFieldParams {
    d: Discriminant,
    a: BigInt,
    b: BigInt,
    eta_sq_neg: RealQuadElem,
    p_coeff: BigInt,
    q_coeff: BigInt,
    galois_type: GaloisType,
}

/// Reducibility of `X⁴ + P·X² + Q` over Q: it factors either as a product of
/// two quadratics in `X²` (`P² - 4Q` a square) or as
/// `(X² + c)² - (2c - P)·X²` with `c² = Q` and `2c - P` a square.
pub(crate) fn trinomial_is_reducible(p: &BigInt, q: &BigInt) -> bool {
    let disc = p * p - q * 4;
    if is_perfect_square(&disc) {
        return true;
    }
    if is_perfect_square(q) {
        let c = num_integer::Roots::sqrt(q);
        for c in [c.clone(), -c] {
            if is_perfect_square(&(&c * 2 - p)) {
                return true;
            }
        }
    }
    false
}

pub fn validate_field(d: i64, a: i64, b: i64) -> Result<CMFieldParams> {
    CMFieldParams::new(d, a, b)
}

impl CMFieldParams {
    pub fn new(d: i64, a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let d = Discriminant::new(d)?;
        let (a, b) = (a.into(), b.into());
        let t = RealQuadElem::new(a.clone(), b.clone(), d);
        if !t.is_totally_positive() {
            return Err(Error::NotTotallyImaginary {
                a: a.to_string(),
                b: b.to_string(),
            });
        }
        // η is a root of (X² + t)(X² + t') = X⁴ + Tr(t)·X² + N(t).
        let p_coeff = t.trace();
        let q_coeff = t.norm();
        // For b = 0 the trinomial is (X² + a)², yet K0(η) = Q(sqrt(D), i·sqrt(a))
        // is still quartic (biquadratic). A totally positive t with b ≠ 0 never
        // trips this guard.
        if !b.is_zero() && trinomial_is_reducible(&p_coeff, &q_coeff) {
            return Err(Error::ReducibleQuartic);
        }
        let galois_type = if is_perfect_square(&q_coeff) {
            GaloisType::Biquadratic
        } else {
            let disc = &p_coeff * &p_coeff - &q_coeff * 4;
            let w: BigInt = &q_coeff * disc;
            if !w.is_zero() && is_perfect_square(&w) {
                GaloisType::Cyclic
            } else {
                GaloisType::NonGalois
            }
        };
        Ok(CMFieldParams {
            d,
            a,
            b,
            eta_sq_neg: t,
            p_coeff,
            q_coeff,
            galois_type,
        })
    }

    pub fn discriminant(&self) -> Discriminant {
        self.d
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    /// `a + bξ`, i.e. `-η²`.
    pub fn eta_square_neg(&self) -> &RealQuadElem {
        &self.eta_sq_neg
    }

    /// `(P, Q)` in the minimal polynomial `X⁴ + P·X² + Q` of η.
    pub fn min_poly(&self) -> (&BigInt, &BigInt) {
        (&self.p_coeff, &self.q_coeff)
    }

    pub fn galois_type(&self) -> GaloisType {
        self.galois_type
    }

    pub fn is_primitive(&self) -> bool {
        self.galois_type != GaloisType::Biquadratic
    }
}

/// Approximate complex values of the four conjugates of ω.
#[derive(Clone, Debug, PartialEq)]
pub struct Embeddings {
    /// `[ω1, conj(ω1), ω3, conj(ω3)]`.
    pub values: [Complex64; 4],
    /// Absolute error bound on each component of each value.
    pub error_bound: f64,
}

impl Embeddings {
    pub fn moduli(&self) -> [f64; 4] {
        self.values.map(|z| z.norm())
    }
}

/// `ω = (c1 + c2ξ) + (c3 + c4ξ)η` in a fixed CM field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusElement<'a> {
    coeffs: [BigInt; 4],
    field: &'a CMFieldParams,
}

impl<'a> FrobeniusElement<'a> {
    pub fn new(field: &'a CMFieldParams, coeffs: [BigInt; 4]) -> Self {
        FrobeniusElement { coeffs, field }
    }

    pub fn from_i64(field: &'a CMFieldParams, c: [i64; 4]) -> Self {
        Self::new(field, c.map(BigInt::from))
    }

    pub fn field(&self) -> &'a CMFieldParams {
        self.field
    }

    pub fn coeffs(&self) -> &[BigInt; 4] {
        &self.coeffs
    }

    pub fn c2(&self) -> &BigInt {
        &self.coeffs[1]
    }

    /// The `O_K0` part `c1 + c2ξ`.
    pub fn alpha(&self) -> RealQuadElem {
        RealQuadElem::new(self.coeffs[0].clone(), self.coeffs[1].clone(), self.field.d)
    }

    /// The η-coefficient `c3 + c4ξ`.
    pub fn beta(&self) -> RealQuadElem {
        RealQuadElem::new(self.coeffs[2].clone(), self.coeffs[3].clone(), self.field.d)
    }

    /// `ω·conj(ω) = α² + β²(a + bξ)`, exactly.
    pub fn relative_norm(&self) -> RealQuadElem {
        let alpha = self.alpha();
        let beta = self.beta();
        let beta_sq = &beta * &beta;
        &(&alpha * &alpha) + &(&beta_sq * &self.field.eta_sq_neg)
    }

    pub fn embeddings(&self) -> Embeddings {
        let (a1, a3) = self.alpha().real_embeddings();
        let (b1, b3) = self.beta().real_embeddings();
        let (t1, t3) = self.field.eta_sq_neg.real_embeddings();
        let eta1 = t1.sqrt();
        let eta3 = t3.sqrt();
        let w1 = Complex64::new(a1, b1 * eta1);
        let w3 = Complex64::new(a3, b3 * eta3);
        // A handful of roundings per component, each relative to the largest
        // magnitude entering it.
        let scale = [
            a1.abs(),
            a3.abs(),
            (b1 * eta1).abs(),
            (b3 * eta3).abs(),
            1.0,
        ]
        .into_iter()
        .fold(0.0f64, f64::max);
        Embeddings {
            values: [w1, w1.conj(), w3, w3.conj()],
            error_bound: 16.0 * f64::EPSILON * scale,
        }
    }
}

pub fn relative_norm(w: &FrobeniusElement<'_>) -> RealQuadElem {
    w.relative_norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn disc(d: i64) -> Discriminant {
        Discriminant::new(d).unwrap()
    }

    fn elem(x: i64, y: i64, d: i64) -> RealQuadElem {
        RealQuadElem::new(x, y, disc(d))
    }

    #[test]
    fn xi_square_examples() {
        assert_eq!(xi_square_rule(2), Ok((2, 0)));
        assert_eq!(xi_square_rule(5), Ok((1, 1)));
        assert_eq!(xi_square_rule(3), Ok((3, 0)));
        assert_eq!(xi_square_rule(13), Ok((3, 1)));
        assert_eq!(xi_square_rule(4), Err(Error::InvalidDiscriminant(4)));
        assert_eq!(xi_square_rule(1), Err(Error::InvalidDiscriminant(1)));
        assert_eq!(xi_square_rule(-3), Err(Error::InvalidDiscriminant(-3)));
        assert_eq!(xi_square_rule(18), Err(Error::InvalidDiscriminant(18)));
    }

    #[test]
    fn xi_square_matches_numeric_value() {
        for d in [2, 3, 5, 6, 7, 13, 17, 21] {
            let dd = disc(d);
            let (s0, s1) = dd.xi_square();
            for xi in [dd.xi_values().0, dd.xi_values().1] {
                assert!((xi * xi - (s0 as f64 + s1 as f64 * xi)).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn mul_examples() {
        assert_eq!(rq_mul(&elem(0, 1, 2), &elem(0, 1, 2)), Ok(elem(2, 0, 2)));
        assert_eq!(rq_mul(&elem(0, 1, 5), &elem(0, 1, 5)), Ok(elem(1, 1, 5)));
        assert_eq!(rq_mul(&elem(1, 1, 2), &elem(1, -1, 2)), Ok(elem(-1, 0, 2)));
        assert_eq!(
            rq_mul(&elem(1, 1, 2), &elem(1, 1, 3)),
            Err(Error::DomainMismatch { left: 2, right: 3 })
        );
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(rq_conjugate(&elem(3, 1, 2)), elem(3, -1, 2));
        assert_eq!(rq_conjugate(&elem(0, 1, 5)), elem(1, -1, 5));
        for d in [2, 5, 7, 13] {
            assert_eq!(rq_conjugate(&elem(7, 0, d)), elem(7, 0, d));
        }
    }

    #[test]
    fn conjugate_matches_second_embedding() {
        for d in [2, 3, 5, 13, 17] {
            let u = elem(4, -3, d);
            let (e1, e2) = u.real_embeddings();
            let (c1, c2) = u.conjugate().real_embeddings();
            assert!((e1 - c2).abs() < 1e-9 && (e2 - c1).abs() < 1e-9);
        }
    }

    #[test]
    fn total_positivity() {
        assert!(elem(2, 1, 2).is_totally_positive());
        assert!(!elem(1, 1, 2).is_totally_positive());
        assert!(!elem(-1, 0, 2).is_totally_positive());
        // 1 + ξ with ξ = (1 + √5)/2: conjugate 1 + (1 - √5)/2 ≈ 0.38 > 0.
        assert!(elem(1, 1, 5).is_totally_positive());
        assert!(!elem(0, 1, 5).is_totally_positive());
    }

    #[test]
    fn field_examples() {
        let cyc = validate_field(2, 2, 1).unwrap();
        assert_eq!(cyc.galois_type(), GaloisType::Cyclic);
        assert!(cyc.is_primitive());
        assert_eq!(cyc.min_poly(), (&BigInt::from(4), &BigInt::from(2)));

        let biq = validate_field(2, 1, 0).unwrap();
        assert_eq!(biq.galois_type(), GaloisType::Biquadratic);
        assert!(!biq.is_primitive());

        let ng = validate_field(2, 3, 1).unwrap();
        assert_eq!(ng.galois_type(), GaloisType::NonGalois);
        assert_eq!(ng.min_poly(), (&BigInt::from(6), &BigInt::from(7)));

        assert!(matches!(
            validate_field(2, 1, 1),
            Err(Error::NotTotallyImaginary { .. })
        ));
        assert_eq!(
            validate_field(4, 1, 1).unwrap_err(),
            Error::InvalidDiscriminant(4)
        );
    }

    #[test]
    fn b_zero_is_never_primitive() {
        for d in [2, 3, 5, 6, 7, 10, 13] {
            for a in 1..=10 {
                let k = validate_field(d, a, 0).unwrap();
                assert_eq!(k.galois_type(), GaloisType::Biquadratic);
            }
        }
    }

    #[test]
    fn trinomial_reducibility() {
        let r = |p: i64, q: i64| trinomial_is_reducible(&BigInt::from(p), &BigInt::from(q));
        assert!(r(5, 4)); // (X² + 1)(X² + 4)
        assert!(r(0, 4)); // (X² + 2X + 2)(X² - 2X + 2)
        assert!(r(2, 1)); // (X² + 1)²
        assert!(!r(4, 2));
        assert!(!r(6, 7));
        assert!(!r(6, 1)); // X⁴ + 6X² + 1, minimal polynomial of i(1 + √2)
    }

    #[test]
    fn min_poly_annihilates_eta_numerically() {
        for (d, a, b) in [(2, 2, 1), (5, 3, -1), (13, 5, 2), (3, 4, -2)] {
            let k = validate_field(d, a, b).unwrap();
            let (p, q) = k.min_poly();
            let (t1, t3) = k.eta_square_neg().real_embeddings();
            for t in [t1, t3] {
                // X = i·sqrt(t) gives X² = -t, X⁴ = t².
                let val = t * t - p.to_f64().unwrap() * t + q.to_f64().unwrap();
                assert!(val.abs() < 1e-9, "({d},{a},{b}) residual {val}");
            }
        }
    }

    #[test]
    fn relative_norm_examples() {
        let k = validate_field(2, 2, 1).unwrap();
        let w = FrobeniusElement::from_i64(&k, [1, 1, 2, -1]);
        assert_eq!(relative_norm(&w), elem(7, 0, 2));
        assert_eq!(
            relative_norm(&FrobeniusElement::from_i64(&k, [1, 0, 0, 0])),
            elem(1, 0, 2)
        );
        assert_eq!(
            relative_norm(&FrobeniusElement::from_i64(&k, [0, 0, 1, 0])),
            elem(2, 1, 2)
        );
        let k5 = validate_field(13, 5, 2).unwrap();
        assert_eq!(
            relative_norm(&FrobeniusElement::from_i64(&k5, [1, 0, 0, 0])).as_integer(),
            Some(&BigInt::one())
        );
    }

    #[test]
    fn embedding_examples() {
        let k = validate_field(2, 2, 1).unwrap();
        let e = FrobeniusElement::from_i64(&k, [1, 1, 2, -1]).embeddings();
        for m in e.moduli() {
            assert!((m - 7f64.sqrt()).abs() < 1e-12);
        }
        assert!(e.error_bound < 1e-12);

        let one = FrobeniusElement::from_i64(&k, [1, 0, 0, 0]).embeddings();
        for z in one.values {
            assert!((z - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        }

        let xi = FrobeniusElement::from_i64(&k, [0, 1, 0, 0]).embeddings();
        let r2 = 2f64.sqrt();
        let expect = [r2, r2, -r2, -r2];
        for (z, want) in xi.values.iter().zip(expect) {
            assert!((z - Complex64::new(want, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn norm_of_relative_norm_is_product_of_moduli() {
        let k = validate_field(13, 5, 2).unwrap();
        let w = FrobeniusElement::from_i64(&k, [2, -1, 1, 1]);
        let n = w.relative_norm();
        let prod: f64 = w.embeddings().moduli().iter().product();
        let exact = n.norm().to_f64().unwrap();
        assert!((prod - exact).abs() / exact < 1e-12);
    }

    fn squarefree_upto_50() -> Vec<i64> {
        (2..=50).filter(|&d| is_squarefree(d as u64)).collect()
    }

    fn elem_strategy() -> impl Strategy<Value = (i64, i64, i64, i64, i64, i64, usize)> {
        (
            -100i64..=100,
            -100i64..=100,
            -100i64..=100,
            -100i64..=100,
            -100i64..=100,
            -100i64..=100,
            0usize..squarefree_upto_50().len(),
        )
    }

    proptest! {
        #[test]
        fn ring_axioms((x1, y1, x2, y2, x3, y3, di) in elem_strategy()) {
            let d = squarefree_upto_50()[di];
            let (u, v, w) = (elem(x1, y1, d), elem(x2, y2, d), elem(x3, y3, d));
            prop_assert_eq!(&u * &v, &v * &u);
            prop_assert_eq!(&(&u * &v) * &w, &u * &(&v * &w));
            prop_assert_eq!(&u * &(&v + &w), &(&u * &v) + &(&u * &w));
        }

        #[test]
        fn conjugation_is_involutive_homomorphism((x1, y1, x2, y2, _x3, _y3, di) in elem_strategy()) {
            let d = squarefree_upto_50()[di];
            let (u, v) = (elem(x1, y1, d), elem(x2, y2, d));
            prop_assert_eq!(u.conjugate().conjugate(), u.clone());
            prop_assert_eq!((&u * &v).conjugate(), &u.conjugate() * &v.conjugate());
            prop_assert_eq!((&u + &v).conjugate(), &u.conjugate() + &v.conjugate());
            // u·u' is rational and equals the norm.
            let prod = &u * &u.conjugate();
            prop_assert_eq!(prod.as_integer(), Some(&u.norm()));
        }
    }
}
