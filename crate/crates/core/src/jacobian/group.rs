//! Brute-force enumeration of `Jac(C)(F_p)` and abelian structure recovery.

use std::collections::HashMap;

use super::curve::GenusTwoCurve;
use super::divisor::{add_unchecked, scalar_mul, MumfordDivisor};
use super::poly::Poly;
use crate::arith::prime_factors;
use crate::{Error, Result};

/// Largest admissible Weil upper bound `(sqrt(p) + 1)⁴` for enumeration.
pub const DEFAULT_BUDGET: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupStructure {
    pub order: u64,
    /// `n1 | n2 | ...`, ascending, all > 1.
    pub invariant_factors: Vec<u64>,
    /// p-parts of the invariant factors for `p` the characteristic.
    pub p_sylow_factors: Vec<u64>,
}

/// p-parts of the invariant factors, trivial parts dropped.
pub fn p_sylow_structure(g: &GroupStructure, p: u64) -> Vec<u64> {
    g.invariant_factors
        .iter()
        .filter_map(|&n| {
            let mut part = 1;
            let mut rest = n;
            while rest % p == 0 {
                rest /= p;
                part *= p;
            }
            (part > 1).then_some(part)
        })
        .collect()
}

/// Upper end of the Weil interval, rounded up.
pub fn weil_upper_bound(p: u64) -> u64 {
    ((p as f64).sqrt() + 1.0).powi(4).ceil() as u64
}

/// Every reduced divisor, identity first, then degree 1, then degree 2.
pub fn jacobian_elements(curve: &GenusTwoCurve) -> Result<Vec<MumfordDivisor>> {
    if !curve.is_odd_degree() {
        return Err(Error::EvenDegreeModel);
    }
    let fp = curve.field();
    let p = fp.p();
    let mut out = vec![MumfordDivisor::identity()];
    for x in 0..p {
        let fx = curve.f().eval(x, fp);
        for y in 0..p {
            if fp.mul(y, y) == fx {
                out.push(MumfordDivisor::from_point(x, y, curve));
            }
        }
    }
    for u0 in 0..p {
        for u1 in 0..p {
            let u = Poly::new(vec![u0, u1, 1]);
            let f_mod_u = curve.f().rem(&u, fp);
            for v0 in 0..p {
                for v1 in 0..p {
                    let v = Poly::new(vec![v0, v1]);
                    if v.mul(&v, fp).rem(&u, fp) == f_mod_u {
                        out.push(MumfordDivisor::new(u.clone(), v));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Invariant factors of a finite abelian group given the multiset of its
/// element orders.
///
/// For each prime `l`, `|G[l^k]| = l^(Σ min(k, e_i))` over the exponents
/// `e_i` of the cyclic `l`-factors, so successive ratios give the number of
/// factors with exponent at least `k`.
pub fn invariant_factors_from_orders(orders: &[u64]) -> Result<Vec<u64>> {
    let n = orders.len() as u64;
    let mut exponents: Vec<(u64, Vec<u32>)> = Vec::new();
    for l in prime_factors(n) {
        let mut at_least = Vec::new();
        let mut prev_log = 0u32;
        let mut k = 1u32;
        loop {
            let lk = l.pow(k);
            let count = orders.iter().filter(|&&o| lk % o == 0).count() as u64;
            let log = exact_log(count, l).ok_or_else(|| {
                Error::InvariantViolation(format!("|G[{l}^{k}]| = {count} is not a power of {l}"))
            })?;
            if log == prev_log {
                break;
            }
            at_least.push(log - prev_log);
            prev_log = log;
            k += 1;
        }
        // e_j = #{k : at_least[k] ≥ j}, descending in j
        let r = at_least.first().copied().unwrap_or(0);
        let exps = (1..=r)
            .map(|j| at_least.iter().filter(|&&c| c >= j).count() as u32)
            .collect();
        exponents.push((l, exps));
    }
    let rank = exponents.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<u64> = (0..rank)
        .map(|j| {
            exponents
                .iter()
                .map(|(l, e)| e.get(j).map_or(1, |&x| l.pow(x)))
                .product()
        })
        .collect();
    factors.reverse();
    if factors.iter().product::<u64>() != n || factors.windows(2).any(|w| w[1] % w[0] != 0) {
        return Err(Error::InvariantViolation(format!(
            "recovered factors {factors:?} do not describe a group of order {n}"
        )));
    }
    Ok(factors)
}

fn exact_log(mut n: u64, base: u64) -> Option<u32> {
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(base) {
            return None;
        }
        n /= base;
        k += 1;
    }
    (n == 1).then_some(k)
}

fn element_order(d: &MumfordDivisor, n: u64, curve: &GenusTwoCurve) -> Result<u64> {
    let mut ord = n;
    for q in prime_factors(n) {
        while ord.is_multiple_of(q) && scalar_mul(d, ord / q, curve)?.is_identity() {
            ord /= q;
        }
    }
    Ok(ord)
}

/// Full enumeration of `Jac(C)(F_p)` with closure and order checks.
pub fn enumerate_jacobian(curve: &GenusTwoCurve, budget: u64) -> Result<GroupStructure> {
    if !curve.is_odd_degree() {
        return Err(Error::EvenDegreeModel);
    }
    let needed = weil_upper_bound(curve.p());
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let elements = jacobian_elements(curve)?;
    let order = elements.len() as u64;
    let index: HashMap<&MumfordDivisor, usize> =
        elements.iter().enumerate().map(|(i, d)| (d, i)).collect();

    // Closure against the rational points and a few degree-2 classes.
    let generators: Vec<&MumfordDivisor> = elements
        .iter()
        .skip(1)
        .filter(|d| d.u.degree() == Some(1))
        .chain(elements.iter().filter(|d| d.u.degree() == Some(2)).take(4))
        .collect();
    for d in &elements {
        for g in &generators {
            let s = add_unchecked(d, g, curve)?;
            if !index.contains_key(&s) {
                return Err(Error::InvariantViolation(format!(
                    "sum {s:?} is missing from the enumerated Jacobian"
                )));
            }
        }
    }

    let orders = elements
        .iter()
        .map(|d| element_order(d, order, curve))
        .collect::<Result<Vec<_>>>()?;
    let invariant_factors = invariant_factors_from_orders(&orders)?;
    let mut g = GroupStructure {
        order,
        invariant_factors,
        p_sylow_factors: Vec::new(),
    };
    g.p_sylow_factors = p_sylow_structure(&g, curve.p());
    Ok(g)
}
