//! Prime fields `F_p` (word-sized `p`) and the quadratic extension
//! `F_{p²} = F_p[t]/(t² - n)`.

use crate::arith::is_prime_u64;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Odd primes only; characteristic 2 is out of scope for `y² = f(x)`.
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::NotPrime(p.to_string()));
        }
        if p == 2 || p > u32::MAX as u64 {
            return Err(Error::PrimeOutOfRange(p, "3 <= p < 2^32"));
        }
        Ok(PrimeField { p })
    }

    pub fn p(self) -> u64 {
        self.p
    }

    pub fn reduce(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Panics on zero.
    pub fn inv(self, a: u64) -> u64 {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        self.pow(a, self.p - 2)
    }

    /// Euler's criterion; zero counts as a square.
    pub fn is_square(self, a: u64) -> bool {
        a == 0 || self.pow(a, (self.p - 1) / 2) == 1
    }

    /// Number of `y` with `y² = a`.
    pub fn sqrt_count(self, a: u64) -> u64 {
        if a == 0 {
            1
        } else if self.is_square(a) {
            2
        } else {
            0
        }
    }

    pub fn smallest_non_residue(self) -> u64 {
        (2..self.p)
            .find(|&n| !self.is_square(n))
            .expect("every odd prime field has a non-residue")
    }
}

/// `a0 + a1·t` with `t² = n`.
pub type Fp2Elem = (u64, u64);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticExtension {
    base: PrimeField,
    non_residue: u64,
}

impl QuadraticExtension {
    pub fn new(base: PrimeField) -> Self {
        QuadraticExtension {
            base,
            non_residue: base.smallest_non_residue(),
        }
    }

    pub fn non_residue(&self) -> u64 {
        self.non_residue
    }

    pub fn elements(&self) -> impl Iterator<Item = Fp2Elem> {
        let p = self.base.p();
        (0..p).flat_map(move |a| (0..p).map(move |b| (a, b)))
    }

    pub fn add(&self, x: Fp2Elem, y: Fp2Elem) -> Fp2Elem {
        (self.base.add(x.0, y.0), self.base.add(x.1, y.1))
    }

    pub fn mul(&self, x: Fp2Elem, y: Fp2Elem) -> Fp2Elem {
        let f = self.base;
        let re = f.add(f.mul(x.0, y.0), f.mul(self.non_residue, f.mul(x.1, y.1)));
        let im = f.add(f.mul(x.0, y.1), f.mul(x.1, y.0));
        (re, im)
    }

    pub fn pow(&self, mut base: Fp2Elem, mut exp: u64) -> Fp2Elem {
        let mut acc = (1, 0);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn sqrt_count(&self, a: Fp2Elem) -> u64 {
        if a == (0, 0) {
            return 1;
        }
        let p = self.base.p();
        if self.pow(a, (p * p - 1) / 2) == (1, 0) {
            2
        } else {
            0
        }
    }
}
