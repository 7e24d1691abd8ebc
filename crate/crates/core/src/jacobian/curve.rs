use rand::Rng;

use super::field::{PrimeField, QuadraticExtension};
use super::poly::Poly;
use crate::{Error, Result};

/// `y² = f(x)` over `F_p`, `p` odd, `f` squarefree of degree 5 or 6.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenusTwoCurve {
    field: PrimeField,
    f: Poly,
}

impl GenusTwoCurve {
    /// Coefficients are given low-degree first and reduced mod `p`.
    pub fn new(p: u64, coeffs: &[i64]) -> Result<Self> {
        let field = PrimeField::new(p)?;
        let f = Poly::new(coeffs.iter().map(|&c| field.reduce(c)).collect());
        Self::from_poly(field, f)
    }

    pub fn from_poly(field: PrimeField, f: Poly) -> Result<Self> {
        let deg = f.degree().unwrap_or(0);
        if deg != 5 && deg != 6 {
            return Err(Error::InvalidDegree(deg));
        }
        if f.gcd(&f.derivative(field), field).degree() != Some(0) {
            return Err(Error::NotSquarefree(field.p()));
        }
        Ok(GenusTwoCurve { field, f })
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn p(&self) -> u64 {
        self.field.p()
    }

    pub fn f(&self) -> &Poly {
        &self.f
    }

    pub fn degree(&self) -> usize {
        self.f.degree().expect("validated on construction")
    }

    pub fn is_odd_degree(&self) -> bool {
        self.degree() == 5
    }

    /// `#C(F_{p^k})` for `k ∈ {1, 2}` on the smooth projective model.
    pub fn count_points(&self, k: u32) -> Result<u64> {
        let fp = self.field;
        let infinity = |k: u32| -> u64 {
            if self.is_odd_degree() {
                1
            } else if k == 2 || fp.is_square(self.f.lead()) {
                // every element of F_p is a square in F_{p²}
                2
            } else {
                0
            }
        };
        match k {
            1 => {
                let affine: u64 = (0..fp.p()).map(|x| fp.sqrt_count(self.f.eval(x, fp))).sum();
                Ok(affine + infinity(1))
            }
            2 => {
                let ext = QuadraticExtension::new(fp);
                let coeffs = self.f.coeffs();
                let affine: u64 = ext
                    .elements()
                    .map(|x| {
                        let y2 = coeffs
                            .iter()
                            .rev()
                            .fold((0, 0), |acc, &c| ext.add(ext.mul(acc, x), (c, 0)));
                        ext.sqrt_count(y2)
                    })
                    .sum();
                Ok(affine + infinity(2))
            }
            _ => Err(Error::InvalidExtensionDegree(k)),
        }
    }

    /// Uniformly random squarefree quintic over `F_p` (rejection sampling).
    pub fn random_quintic<R: Rng + ?Sized>(p: u64, rng: &mut R) -> Result<Self> {
        let field = PrimeField::new(p)?;
        loop {
            let mut coeffs: Vec<u64> = (0..5).map(|_| rng.gen_range(0..p)).collect();
            coeffs.push(rng.gen_range(1..p));
            if let Ok(c) = Self::from_poly(field, Poly::new(coeffs)) {
                return Ok(c);
            }
        }
    }

    /// Every squarefree quintic over `F_p`, in lexicographic coefficient order.
    pub fn all_quintics(p: u64) -> Result<Vec<Self>> {
        let field = PrimeField::new(p)?;
        let total = p.pow(5) * (p - 1);
        Ok((0..total)
            .filter_map(|mut idx| {
                let mut coeffs = Vec::with_capacity(6);
                for _ in 0..5 {
                    coeffs.push(idx % p);
                    idx /= p;
                }
                coeffs.push(idx + 1);
                Self::from_poly(field, Poly::new(coeffs)).ok()
            })
            .collect())
    }
}

pub fn count_points(curve: &GenusTwoCurve, k: u32) -> Result<u64> {
    curve.count_points(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert_eq!(
            GenusTwoCurve::new(3, &[1, 0, 0, 0, 1]).unwrap_err(),
            Error::InvalidDegree(4)
        );
        assert!(GenusTwoCurve::new(2, &[1, 0, 0, 0, 0, 1]).is_err());
        // x⁵ + 1 = (x + 1)⁵ over F5
        assert_eq!(
            GenusTwoCurve::new(5, &[1, 0, 0, 0, 0, 1]).unwrap_err(),
            Error::NotSquarefree(5)
        );
        // leading coefficient reduces away
        assert_eq!(
            GenusTwoCurve::new(3, &[1, 0, 0, 0, 0, 1, 3])
                .unwrap()
                .degree(),
            5
        );
    }

    #[test]
    fn count_examples() {
        let c = GenusTwoCurve::new(3, &[1, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(c.count_points(1), Ok(4));
        assert_eq!(c.count_points(2), Ok(10));
        assert_eq!(c.count_points(3), Err(Error::InvalidExtensionDegree(3)));
        // x⁶ + 1 = (x² + 1)³ in characteristic 3, so that model is singular.
        assert_eq!(
            GenusTwoCurve::new(3, &[1, 0, 0, 0, 0, 0, 1]),
            Err(Error::NotSquarefree(3))
        );
        // x⁶ + x + 1: affine (0, ±1), (1, 0), (2, ±1) plus two points at infinity
        let c6 = GenusTwoCurve::new(3, &[1, 1, 0, 0, 0, 0, 1]).unwrap();
        assert_eq!(c6.count_points(1), Ok(7));
        // non-square leading coefficient: no rational points at infinity
        let c6n = GenusTwoCurve::new(3, &[1, 1, 0, 0, 0, 0, 2]).unwrap();
        let affine = (0..3u64)
            .map(|x| {
                let fx = (1 + x + 2 * x.pow(6)) % 3;
                (0..3u64).filter(|y| y * y % 3 == fx).count() as u64
            })
            .sum::<u64>();
        assert_eq!(c6n.count_points(1), Ok(affine));
    }

    #[test]
    fn counts_respect_weil_bounds() {
        for c in GenusTwoCurve::all_quintics(3).unwrap() {
            for k in 1..=2u32 {
                let q = 3i64.pow(k);
                let n = c.count_points(k).unwrap() as i64;
                // |q + 1 - N| ≤ 4·sqrt(q)  ⟺  (q + 1 - N)² ≤ 16q
                assert!((q + 1 - n).pow(2) <= 16 * q);
            }
        }
    }

    #[test]
    fn exhaustive_quintics_over_f3() {
        let all = GenusTwoCurve::all_quintics(3).unwrap();
        assert!(all.len() > 100 && all.len() < 486);
        assert!(all.iter().all(|c| c.degree() == 5));
    }
}
