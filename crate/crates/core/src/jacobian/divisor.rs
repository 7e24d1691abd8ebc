//! Mumford representation and Cantor's algorithm on odd-degree models.

use super::curve::GenusTwoCurve;
use super::poly::Poly;
use crate::{Error, Result};

/// Reduced divisor class `(u, v)`: `u` monic, `deg v < deg u ≤ 2`,
/// `u | f - v²`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MumfordDivisor {
    pub u: Poly,
    pub v: Poly,
}

impl MumfordDivisor {
    pub fn identity() -> Self {
        MumfordDivisor {
            u: Poly::one(),
            v: Poly::zero(),
        }
    }

    pub fn new(u: Poly, v: Poly) -> Self {
        MumfordDivisor { u, v }
    }

    /// Class of `P - ∞` for an affine point `P = (x, y)`.
    pub fn from_point(x: u64, y: u64, curve: &GenusTwoCurve) -> Self {
        MumfordDivisor {
            u: Poly::x_minus(x, curve.field()),
            v: Poly::constant(y),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.u == Poly::one()
    }

    pub fn is_valid(&self, curve: &GenusTwoCurve) -> bool {
        let fp = curve.field();
        let Some(du) = self.u.degree() else {
            return false;
        };
        if !self.u.is_monic() || du > 2 || self.v.degree().is_some_and(|dv| dv >= du) {
            return false;
        }
        curve
            .f()
            .sub(&self.v.mul(&self.v, fp), fp)
            .rem(&self.u, fp)
            .is_zero()
    }

    pub fn negate(&self, curve: &GenusTwoCurve) -> Self {
        MumfordDivisor {
            u: self.u.clone(),
            v: self.v.neg(curve.field()),
        }
    }
}

fn check_model(curve: &GenusTwoCurve) -> Result<()> {
    if curve.is_odd_degree() {
        Ok(())
    } else {
        Err(Error::EvenDegreeModel)
    }
}

fn exact(num: &Poly, den: &Poly, curve: &GenusTwoCurve, what: &str) -> Result<Poly> {
    num.div_exact(den, curve.field())
        .ok_or_else(|| Error::InvariantViolation(format!("{what} is not an exact division")))
}

/// Composition followed by reduction.
pub fn cantor_add(
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    curve: &GenusTwoCurve,
) -> Result<MumfordDivisor> {
    check_model(curve)?;
    if !d1.is_valid(curve) || !d2.is_valid(curve) {
        return Err(Error::DivisorNotOnCurve);
    }
    add_unchecked(d1, d2, curve)
}

pub(crate) fn add_unchecked(
    d1: &MumfordDivisor,
    d2: &MumfordDivisor,
    curve: &GenusTwoCurve,
) -> Result<MumfordDivisor> {
    let fp = curve.field();
    let f = curve.f();
    let (u1, v1, u2, v2) = (&d1.u, &d1.v, &d2.u, &d2.v);

    // composition
    let (e, e1, e2) = u1.ext_gcd(u2, fp);
    let (d, c1, c2) = e.ext_gcd(&v1.add(v2, fp), fp);
    let s1 = c1.mul(&e1, fp);
    let s2 = c1.mul(&e2, fp);
    let s3 = c2;
    let mut u = exact(&u1.mul(u2, fp), &d.mul(&d, fp), curve, "u1·u2 / d²")?;
    let numer = s1
        .mul(u1, fp)
        .mul(v2, fp)
        .add(&s2.mul(u2, fp).mul(v1, fp), fp)
        .add(&s3.mul(&v1.mul(v2, fp).add(f, fp), fp), fp);
    let mut v = exact(&numer, &d, curve, "composition numerator")?.rem(&u, fp);

    // reduction
    while u.degree().unwrap_or(0) > 2 {
        let next_u = exact(&f.sub(&v.mul(&v, fp), fp), &u, curve, "(f - v²) / u")?;
        v = v.neg(fp).rem(&next_u, fp);
        u = next_u;
    }
    let u = u.monic(fp);
    let v = v.rem(&u, fp);
    let out = MumfordDivisor { u, v };
    debug_assert!(out.is_valid(curve));
    Ok(out)
}

/// `n·d` by double-and-add.
pub fn scalar_mul(d: &MumfordDivisor, mut n: u64, curve: &GenusTwoCurve) -> Result<MumfordDivisor> {
    check_model(curve)?;
    let mut acc = MumfordDivisor::identity();
    let mut base = d.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = add_unchecked(&acc, &base, curve)?;
        }
        base = add_unchecked(&base, &base, curve)?;
        n >>= 1;
    }
    Ok(acc)
}
