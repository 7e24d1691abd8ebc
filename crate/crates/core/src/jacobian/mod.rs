//! Independent ground truth for small prime fields.
//!
//! Nothing here knows about CM fields: the Frobenius polynomial is recovered
//! from point counts over `F_p` and `F_{p²}`, and the group order from an
//! explicit enumeration of reduced Mumford divisors.

mod curve;
mod divisor;
mod field;
mod group;
mod poly;

pub use curve::{count_points, GenusTwoCurve};
pub use divisor::{cantor_add, scalar_mul, MumfordDivisor};
pub use field::{PrimeField, QuadraticExtension};
pub use group::{
    enumerate_jacobian, invariant_factors_from_orders, jacobian_elements, p_sylow_structure,
    weil_upper_bound, GroupStructure, DEFAULT_BUDGET,
};
pub use poly::Poly;

use num_bigint::BigInt;

use crate::arith::is_prime_u64;
use crate::frobenius::FrobeniusPoly;
use crate::{Error, Result};

/// `P(X)` from `N1 = #C(F_p)` and `N2 = #C(F_{p²})`:
/// `s1 = p + 1 - N1`, `s2 = (s1² - (p² + 1 - N2)) / 2`.
pub fn char_poly_from_counts(n1: u64, n2: u64, p: u64) -> Result<FrobeniusPoly> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let (n1i, n2i, pi) = (n1 as i128, n2 as i128, p as i128);
    let s1 = pi + 1 - n1i;
    let a2 = pi * pi + 1 - n2i;
    let twice_s2 = s1 * s1 - a2;
    if twice_s2 % 2 != 0 {
        return Err(Error::InconsistentCounts {
            n1: n1.to_string(),
            n2: n2.to_string(),
            p: p.to_string(),
        });
    }
    Ok(FrobeniusPoly::from_symmetric(
        BigInt::from(p),
        BigInt::from(s1),
        BigInt::from(twice_s2 / 2),
    ))
}

impl GenusTwoCurve {
    /// `P(X)` recovered from the point counts over `F_p` and `F_{p²}`.
    pub fn frobenius_poly(&self) -> Result<FrobeniusPoly> {
        char_poly_from_counts(self.count_points(1)?, self.count_points(2)?, self.p())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frobenius::weil_validate;

    fn poly(c: [i64; 5], p: i64) -> FrobeniusPoly {
        FrobeniusPoly::new(c.map(BigInt::from), BigInt::from(p)).unwrap()
    }

    #[test]
    fn counts_to_poly_examples() {
        assert_eq!(
            char_poly_from_counts(4, 10, 3).unwrap(),
            poly([9, 0, 0, 0, 1], 3)
        );
        for p in [3u64, 5, 7, 11] {
            let pi = p as i64;
            assert_eq!(
                char_poly_from_counts(p + 1, p * p + 1, p).unwrap(),
                poly([pi * pi, 0, 0, 0, 1], pi)
            );
        }
        assert_eq!(
            char_poly_from_counts(4, 54, 7).unwrap(),
            poly([49, -28, 10, -4, 1], 7)
        );
        assert!(matches!(
            char_poly_from_counts(4, 11, 3),
            Err(Error::InconsistentCounts { .. })
        ));
    }

    #[test]
    fn oracle_polys_satisfy_functional_equation() {
        for c in GenusTwoCurve::all_quintics(3).unwrap() {
            let r = weil_validate(&c.frobenius_poly().unwrap());
            assert!(r.functional_equation && r.constant_term);
        }
    }
}
