//! Dense univariate polynomials over a word-sized prime field.

use super::field::PrimeField;

/// Coefficients low-degree first with no trailing zeros; the zero polynomial
/// is empty.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<u64>,
}

impl Poly {
    /// Coefficients must already be reduced mod p.
    pub fn new(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn constant(c: u64) -> Self {
        Self::new(vec![c])
    }

    /// `x - a`.
    pub fn x_minus(a: u64, fp: PrimeField) -> Self {
        Poly {
            coeffs: vec![fp.neg(a), 1],
        }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    pub fn add(&self, other: &Poly, fp: PrimeField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| fp.add(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly, fp: PrimeField) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| fp.sub(self.coeff(i), other.coeff(i)))
                .collect(),
        )
    }

    pub fn neg(&self, fp: PrimeField) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| fp.neg(c)).collect())
    }

    pub fn scale(&self, k: u64, fp: PrimeField) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| fp.mul(c, k)).collect())
    }

    pub fn mul(&self, other: &Poly, fp: PrimeField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = fp.add(out[i + j], fp.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Panics when dividing by zero.
    pub fn div_rem(&self, divisor: &Poly, fp: PrimeField) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv_lead = fp.inv(divisor.lead());
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = fp.mul(rem[k + dd], inv_lead);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = fp.sub(rem[k + j], fp.mul(c, b));
            }
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn rem(&self, divisor: &Poly, fp: PrimeField) -> Poly {
        self.div_rem(divisor, fp).1
    }

    /// Quotient if the division is exact.
    pub fn div_exact(&self, divisor: &Poly, fp: PrimeField) -> Option<Poly> {
        let (q, r) = self.div_rem(divisor, fp);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self, fp: PrimeField) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        self.scale(fp.inv(self.lead()), fp)
    }

    pub fn derivative(&self, fp: PrimeField) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| fp.mul(c, i as u64 % fp.p()))
                .collect(),
        )
    }

    pub fn eval(&self, x: u64, fp: PrimeField) -> u64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| fp.add(fp.mul(acc, x), c))
    }

    pub fn gcd(&self, other: &Poly, fp: PrimeField) -> Poly {
        self.ext_gcd(other, fp).0
    }

    /// `(g, s, t)` with `s·self + t·other = g` and `g` monic (or zero when
    /// both inputs are zero).
    pub fn ext_gcd(&self, other: &Poly, fp: PrimeField) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1, fp);
            let s = s0.sub(&q.mul(&s1, fp), fp);
            let t = t0.sub(&q.mul(&t1, fp), fp);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let k = fp.inv(r0.lead());
        (r0.scale(k, fp), s0.scale(k, fp), t0.scale(k, fp))
    }
}
