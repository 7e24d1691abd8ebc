//! Characteristic polynomial of Frobenius for `ω = c1 + c2ξ + (c3 + c4ξ)η`.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::is_prime;
use crate::cm_field::{Discriminant, FrobeniusElement, RealQuadElem, XiBranch};
use crate::{Error, Result};

/// A monic quartic `X⁴ + a3·X³ + a2·X² + a1·X + a0` attached to a prime `p`.
///
/// Coefficients are stored low-degree first. The Weil-polynomial invariants
/// (`a0 = p²`, `a1 = p·a3`, roots of modulus `sqrt(p)`) are not enforced on
/// construction; [`weil_validate`] reports on them.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusPoly {
    coeffs: [BigInt; 5],
    p: BigInt,
}

impl FrobeniusPoly {
    pub fn new(coeffs: [BigInt; 5], p: BigInt) -> Result<Self> {
        if !coeffs[4].is_one() {
            return Err(Error::InvalidArgument(format!(
                "leading coefficient must be 1, got {}",
                coeffs[4]
            )));
        }
        Ok(FrobeniusPoly { coeffs, p })
    }

    /// `X⁴ - s1·X³ + s2·X² - p·s1·X + p²`.
    pub fn from_symmetric(p: BigInt, s1: BigInt, s2: BigInt) -> Self {
        let coeffs = [&p * &p, -(&p * &s1), s2, -s1, BigInt::one()];
        FrobeniusPoly { coeffs, p }
    }

    pub fn coeffs(&self) -> &[BigInt; 5] {
        &self.coeffs
    }

    /// Coefficient of `X^i`.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// `P(1)`, the order of `Jac(C)(F_p)`.
    pub fn group_order(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Numerical roots. Uses the reduction `Y = X + p/X` when the functional
    /// equation holds (which keeps repeated roots accurate), Durand-Kerner
    /// otherwise.
    pub fn roots(&self) -> [Complex64; 4] {
        let p2 = &self.p * &self.p;
        if self.coeffs[0] == p2 && self.coeffs[1] == &self.p * &self.coeffs[3] {
            let a3 = &self.coeffs[3];
            let disc = a3 * a3 - (&self.coeffs[2] - &self.p * 2) * 4;
            let sqrt_disc = complex_sqrt_of_int(&disc);
            let a3f = Complex64::new(a3.to_f64().unwrap_or(f64::NAN), 0.0);
            let pf = Complex64::new(self.p.to_f64().unwrap_or(f64::NAN), 0.0);
            let mut out = [Complex64::new(0.0, 0.0); 4];
            for (k, y) in [(-a3f + sqrt_disc) / 2.0, (-a3f - sqrt_disc) / 2.0]
                .into_iter()
                .enumerate()
            {
                let s = (y * y - pf * 4.0).sqrt();
                out[2 * k] = (y + s) / 2.0;
                out[2 * k + 1] = (y - s) / 2.0;
            }
            out
        } else {
            durand_kerner(&self.coeffs.clone().map(|c| c.to_f64().unwrap_or(f64::NAN)))
        }
    }
}

fn complex_sqrt_of_int(n: &BigInt) -> Complex64 {
    let f = n.to_f64().unwrap_or(f64::NAN);
    if n.is_negative() {
        Complex64::new(0.0, (-f).sqrt())
    } else {
        Complex64::new(f.sqrt(), 0.0)
    }
}

/// Simultaneous iteration for the roots of a monic quartic.
fn durand_kerner(c: &[f64; 5]) -> [Complex64; 4] {
    let eval = |z: Complex64| {
        c.iter()
            .rev()
            .fold(Complex64::new(0.0, 0.0), |acc, &k| acc * z + k)
    };
    let bound = 1.0 + c[..4].iter().fold(0.0f64, |m, k| m.max(k.abs()));
    let seed = Complex64::new(0.4, 0.9);
    let mut roots = [0, 1, 2, 3].map(|k| seed.powu(k) * bound);
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..4 {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..4 {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-15 * bound {
            break;
        }
    }
    roots
}

impl fmt::Display for FrobeniusPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("X^4")?;
        for i in (0..4).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            let mag = c.abs();
            let mono = match i {
                0 => String::new(),
                1 => "X".to_string(),
                _ => format!("X^{i}"),
            };
            if mag.is_one() && i > 0 {
                write!(f, " {sign} {mono}")?;
            } else {
                write!(f, " {sign} {mag}{mono}")?;
            }
        }
        Ok(())
    }
}

/// Closed-form `P(X)` in terms of `(p, c1, c2, D)`.
pub fn char_poly_closed(
    p: &BigInt,
    c1: &BigInt,
    c2: &BigInt,
    d: Discriminant,
) -> Result<FrobeniusPoly> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let dd = BigInt::from(d.get());
    let c2_sq_d = c2 * c2 * &dd;
    let (s1, s2) = match d.branch() {
        XiBranch::Sqrt => (c1 * 4, p * 2 + (c1 * c1 - &c2_sq_d) * 4),
        XiBranch::HalfInteger => {
            let c = c1 * 2 + c2;
            let s2 = p * 2 + &c * &c - &c2_sq_d;
            (c * 2, s2)
        }
    };
    Ok(FrobeniusPoly::from_symmetric(p.clone(), s1, s2))
}

/// `P(X) = (X² - (ω + ω̄)X + ωω̄)·(X² - (ω₃ + ω̄₃)X + ω₃ω̄₃)`, expanded exactly
/// in `O_K0` and projected to Z.
pub fn char_poly_product(w: &FrobeniusElement<'_>) -> Result<FrobeniusPoly> {
    let norm = w.relative_norm();
    let p = match norm.as_integer() {
        Some(p) if is_prime(p) => p.clone(),
        _ => return Err(Error::NormNotPrime(norm.to_string())),
    };
    let d = w.field().discriminant();
    let one = RealQuadElem::from_integer(1, d);
    // ω + ω̄ = 2α since η̄ = -η.
    let alpha = w.alpha();
    let trace = &alpha + &alpha;
    let first = [norm.clone(), -&trace, one.clone()];
    let second = [norm.conjugate(), -&trace.conjugate(), one];

    let mut product: Vec<RealQuadElem> = vec![RealQuadElem::zero(d); 5];
    for (i, x) in first.iter().enumerate() {
        for (j, y) in second.iter().enumerate() {
            product[i + j] = &product[i + j] + &(x * y);
        }
    }
    let mut coeffs: [BigInt; 5] = Default::default();
    for (slot, c) in coeffs.iter_mut().zip(product) {
        *slot = match c.as_integer() {
            Some(v) => v.clone(),
            None => {
                return Err(Error::InvariantViolation(format!(
                    "characteristic polynomial coefficient {c} is not rational"
                )))
            }
        };
    }
    FrobeniusPoly::new(coeffs, p)
}

pub fn group_order(poly: &FrobeniusPoly) -> BigInt {
    poly.group_order()
}

/// Outcome of the Weil-polynomial checks.
#[derive(Clone, Debug, PartialEq)]
pub struct WeilReport {
    /// `a0 = p²`.
    pub constant_term: bool,
    /// `a1 = p·a3`, i.e. `X⁴·P(p/X) = p²·P(X)`.
    pub functional_equation: bool,
    /// Every root has modulus `sqrt(p)` within relative tolerance.
    pub root_moduli: bool,
    pub max_relative_deviation: f64,
}

impl WeilReport {
    pub const TOLERANCE: f64 = 1e-9;

    pub fn passed(&self) -> bool {
        self.constant_term && self.functional_equation && self.root_moduli
    }
}

pub fn weil_validate(poly: &FrobeniusPoly) -> WeilReport {
    let p = poly.p();
    let constant_term = *poly.coeff(0) == p * p;
    let functional_equation = *poly.coeff(1) == p * poly.coeff(3);
    let sqrt_p = p.to_f64().unwrap_or(f64::NAN).sqrt();
    let max_relative_deviation = poly
        .roots()
        .iter()
        .map(|z| (z.norm() - sqrt_p).abs() / sqrt_p)
        .fold(0.0f64, f64::max);
    WeilReport {
        constant_term,
        functional_equation,
        root_moduli: max_relative_deviation <= WeilReport::TOLERANCE,
        max_relative_deviation,
    }
}
