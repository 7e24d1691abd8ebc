//! p-Sylow analysis of `Jac(C)(F_p)` from Frobenius data.
//!
//! For `p > 5` the Weil bound `N ≤ (1 + sqrt(p))⁴ < 4p²` combined with
//! `4 | N` rules out `p² | N`. For `p ≤ 5` the admissible `(D, c1, c2)` are
//! finite and [`verify_lemma2`] enumerates them. Every inequality involving a
//! square root is decided on squared integers.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};

use crate::arith::{is_prime, is_prime_u64, is_squarefree, isqrt};
use crate::cm_field::{Discriminant, FrobeniusElement, XiBranch};
use crate::frobenius::{char_poly_product, FrobeniusPoly};
use crate::{Error, Result};

/// Largest `v` with `p^v | n`.
pub fn p_adic_valuation(n: &BigInt, p: &BigInt) -> Result<u32> {
    if !n.is_positive() {
        return Err(Error::InvalidArgument(format!(
            "valuation needs a positive integer, got {n}"
        )));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let mut v = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(p);
        if !r.is_zero() {
            return Ok(v);
        }
        rest = q;
        v += 1;
    }
}

/// Whether `(1 + sqrt(p))⁴ < 4p²`, via `(1 + sqrt(p))² < 2p ⟺ 4p < (p - 1)²
/// ⟺ p² - 6p + 1 > 0`.
pub fn lemma1_check(p: u64) -> Result<bool> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    let p = p as i128;
    Ok(p * p - 6 * p + 1 > 0)
}

fn check_small_prime(p: u64) -> Result<()> {
    if !is_prime_u64(p) {
        return Err(Error::NotPrime(p.to_string()));
    }
    if p > 5 {
        return Err(Error::PrimeOutOfRange(p, "p <= 5"));
    }
    Ok(())
}

/// Enumeration box for `(c1, c2)` when `p ≤ 5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientBounds {
    pub c1: RangeInclusive<i64>,
    pub c2: RangeInclusive<i64>,
}

impl CoefficientBounds {
    pub fn len(&self) -> usize {
        self.c1.clone().count() * self.c2.clone().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.c1
            .clone()
            .flat_map(move |c1| self.c2.clone().map(move |c2| (c1, c2)))
    }
}

fn largest_with_square_at_most(bound: u64, weight: u64) -> i64 {
    // max m ≥ 0 with m²·weight ≤ bound
    isqrt(bound / weight) as i64
}

/// Bounds on `(c1, c2)` forced by `|σ(c1 + c2ξ)| ≤ sqrt(p)` in both real
/// embeddings.
///
/// For `D ≡ 2, 3 (mod 4)`: `c1² ≤ p` and `c2²D ≤ p`. For `D ≡ 1 (mod 4)`:
/// `c2²D ≤ 4p` and `(2c1 ± c2)² ≤ 4p`; the `c1` range is the union over both
/// signs and all admissible `c2`, so it is a superset of either reading.
pub fn coefficient_bounds(p: u64, d: Discriminant) -> Result<CoefficientBounds> {
    check_small_prime(p)?;
    let dd = d.get();
    Ok(match d.branch() {
        XiBranch::Sqrt => {
            let m1 = isqrt(p) as i64;
            let m2 = largest_with_square_at_most(p, dd);
            CoefficientBounds {
                c1: -m1..=m1,
                c2: -m2..=m2,
            }
        }
        XiBranch::HalfInteger => {
            let m2 = largest_with_square_at_most(4 * p, dd);
            // |2c1 + c2| ≤ isqrt(4p) for some |c2| ≤ m2
            let s = isqrt(4 * p) as i64;
            let m1 = (s + m2).div_euclid(2);
            CoefficientBounds {
                c1: -m1..=m1,
                c2: -m2..=m2,
            }
        }
    })
}

/// Upper bound on `D` for `p ≤ 5`: `c2 ≠ 0` forces `c2²D ≤ p ≤ 5` on the
/// `ξ = sqrt(D)` branch and `c2²D ≤ 4p ≤ 20` on the other.
pub fn max_discriminant(p: u64, branch: XiBranch) -> Result<u64> {
    check_small_prime(p)?;
    Ok(match branch {
        XiBranch::Sqrt => 5,
        XiBranch::HalfInteger => 20,
    })
}

/// Squarefree `D ≤ max_discriminant` in the given residue class.
pub fn admissible_discriminants(p: u64, branch: XiBranch) -> Result<Vec<Discriminant>> {
    let max = max_discriminant(p, branch)?;
    Ok((2..=max)
        .filter(|&d| is_squarefree(d))
        .map(|d| Discriminant::new(d as i64).expect("squarefree and > 1"))
        .filter(|d| d.branch() == branch)
        .collect())
}

/// `P(1)` from the factored forms `(1 + p - 2c1)² - 4c2²D` and
/// `(1 + p - (2c1 + c2))² - c2²D`.
pub fn factored_group_order(p: &BigInt, c1: &BigInt, c2: &BigInt, d: Discriminant) -> BigInt {
    let dd = BigInt::from(d.get());
    let base = BigInt::one() + p;
    match d.branch() {
        XiBranch::Sqrt => {
            let s: BigInt = base - c1 * 2;
            &s * &s - c2 * c2 * dd * 4
        }
        XiBranch::HalfInteger => {
            let s: BigInt = base - (c1 * 2 + c2);
            &s * &s - c2 * c2 * dd
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2Row {
    pub p: u64,
    pub d: Discriminant,
    pub branch: XiBranch,
    pub c1: i64,
    pub c2: i64,
    pub n: BigInt,
    pub divisible_by_p: bool,
    pub divisible_by_p_squared: bool,
}

impl Lemma2Row {
    /// `c2 ≠ 0` and `p² | N`.
    pub fn is_counterexample(&self) -> bool {
        self.c2 != 0 && self.divisible_by_p_squared
    }

    /// `c2 = 0` rows with `p² | N` come from biquadratic fields.
    pub fn is_excluded_non_primitive(&self) -> bool {
        self.c2 == 0 && self.divisible_by_p_squared
    }

    fn sort_key(&self) -> (u64, u64, i64, i64) {
        (self.p, self.d.get(), self.c1, self.c2)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma2Report {
    /// Sorted by `(p, D, c1, c2)`.
    pub rows: Vec<Lemma2Row>,
    pub counterexamples: Vec<Lemma2Row>,
    /// Sum over `(p, D)` of the enumeration box sizes.
    pub expected_rows: usize,
}

impl Lemma2Report {
    pub fn holds(&self) -> bool {
        self.counterexamples.is_empty() && self.rows.len() == self.expected_rows
    }
}

pub const SMALL_PRIMES: [u64; 3] = [2, 3, 5];

/// Exhaustive check of every `(p ≤ 5, D, c1, c2)` case.
pub fn verify_lemma2() -> Lemma2Report {
    let mut rows = Vec::new();
    let mut expected_rows = 0;
    for p in SMALL_PRIMES {
        let pb = BigInt::from(p);
        let p_sq = &pb * &pb;
        for branch in [XiBranch::Sqrt, XiBranch::HalfInteger] {
            let discs = admissible_discriminants(p, branch).expect("p is a small prime");
            for d in discs {
                let bounds = coefficient_bounds(p, d).expect("p is a small prime");
                expected_rows += bounds.len();
                for (c1, c2) in bounds.iter() {
                    let n = factored_group_order(&pb, &BigInt::from(c1), &BigInt::from(c2), d);
                    rows.push(Lemma2Row {
                        p,
                        d,
                        branch,
                        c1,
                        c2,
                        divisible_by_p: (&n % &pb).is_zero(),
                        divisible_by_p_squared: (&n % &p_sq).is_zero(),
                        n,
                    });
                }
            }
        }
    }
    rows.sort_by_key(Lemma2Row::sort_key);
    let counterexamples = rows
        .iter()
        .filter(|r| r.is_counterexample())
        .cloned()
        .collect();
    Lemma2Report {
        rows,
        counterexamples,
        expected_rows,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SylowVerdict {
    pub p: BigInt,
    pub poly: FrobeniusPoly,
    /// `N = P(1)`.
    pub order: BigInt,
    pub valuation: u32,
    /// `p^valuation`.
    pub sylow_order: BigInt,
    /// `valuation ≤ 1`.
    pub theorem_holds: bool,
}

/// Full pipeline from a Frobenius element to the p-Sylow order.
///
/// Preconditions are checked in a fixed order: primitivity of the field, then
/// `c2 ≠ 0`, then primality of the relative norm.
pub fn analyze(w: &FrobeniusElement<'_>) -> Result<SylowVerdict> {
    if !w.field().is_primitive() {
        return Err(Error::NotPrimitive);
    }
    if w.c2().is_zero() {
        return Err(Error::C2Zero);
    }
    let poly = char_poly_product(w)?;
    let p = poly.p().clone();
    let order = poly.group_order();
    let valuation = p_adic_valuation(&order, &p)?;
    Ok(SylowVerdict {
        sylow_order: Pow::pow(&p, valuation),
        theorem_holds: valuation <= 1,
        p,
        poly,
        order,
        valuation,
    })
}
