//! Grid sweeps: the p-Sylow property over a box of fields and Frobenius
//! elements, and the Jacobian oracle over many curves.

use cm2_core::arith::is_prime_u64;
use cm2_core::{
    analyze, char_poly_closed, char_poly_product, enumerate_jacobian, Error, FrobeniusElement,
    GenusTwoCurve, Result,
};
use num_bigint::BigInt;
use num_traits::Zero;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::commands::{grid_field, num, nums};
use crate::report::Outcome;

/// Cap on the number of failing cases listed in a report.
const MAX_LISTED: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridParams {
    pub max_d: i64,
    pub ab_bound: i64,
    pub c_bound: i64,
}

impl Default for GridParams {
    fn default() -> Self {
        GridParams {
            max_d: 20,
            ab_bound: 8,
            c_bound: 6,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GridSummary {
    pub primitive_fields: usize,
    pub elements: u64,
    pub prime_norm_elements: u64,
    /// Prime-norm elements with `c2 = 0` (impossible in a primitive field).
    pub c2_zero: u64,
    pub p_two: u64,
    pub max_valuation: u32,
    pub closed_product_mismatches: Vec<[i64; 7]>,
    pub four_divides_failures: Vec<[i64; 7]>,
    pub sylow_violations: Vec<[i64; 7]>,
}

impl GridSummary {
    pub fn holds(&self) -> bool {
        self.closed_product_mismatches.is_empty()
            && self.four_divides_failures.is_empty()
            && self.sylow_violations.is_empty()
    }
}

type Pair = (i64, i64);

fn mul(x: Pair, y: Pair, xi_sq: Pair) -> Pair {
    (
        x.0 * y.0 + x.1 * y.1 * xi_sq.0,
        x.0 * y.1 + x.1 * y.0 + x.1 * y.1 * xi_sq.1,
    )
}

/// `αα + ββt` in machine integers, used only to skip elements whose relative
/// norm is not even rational.
fn quick_norm(c: [i64; 4], t: Pair, xi_sq: Pair) -> Pair {
    let (alpha, beta) = ((c[0], c[1]), (c[2], c[3]));
    let a2 = mul(alpha, alpha, xi_sq);
    let bbt = mul(mul(beta, beta, xi_sq), t, xi_sq);
    (a2.0 + bbt.0, a2.1 + bbt.1)
}

fn push_capped(list: &mut Vec<[i64; 7]>, case: [i64; 7]) {
    if list.len() < MAX_LISTED {
        list.push(case);
    }
}

/// Every primitive field `D ≤ max_d`, `|a|, |b| ≤ ab_bound` and every
/// `|c_i| ≤ c_bound` whose relative norm is a rational prime.
pub fn theorem_grid(params: &GridParams) -> Result<GridSummary> {
    let mut s = GridSummary::default();
    let range = |m: i64| -m..=m;
    for d in 2..=params.max_d {
        for a in range(params.ab_bound) {
            for b in range(params.ab_bound) {
                let Some(k) = grid_field(d, a, b)? else {
                    continue;
                };
                s.primitive_fields += 1;
                let disc = k.discriminant();
                let xi_sq = disc.xi_square();
                for c1 in range(params.c_bound) {
                    for c2 in range(params.c_bound) {
                        for c3 in range(params.c_bound) {
                            for c4 in range(params.c_bound) {
                                s.elements += 1;
                                let c = [c1, c2, c3, c4];
                                let (n, irr) = quick_norm(c, (a, b), xi_sq);
                                if irr != 0 || n <= 1 || !is_prime_u64(n as u64) {
                                    continue;
                                }
                                s.prime_norm_elements += 1;
                                let case = [d, a, b, c1, c2, c3, c4];
                                check_element(&mut s, &FrobeniusElement::from_i64(&k, c), case)?;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(s)
}

fn check_element(s: &mut GridSummary, w: &FrobeniusElement<'_>, case: [i64; 7]) -> Result<()> {
    let product = char_poly_product(w)?;
    let [c1, c2, ..] = w.coeffs();
    let closed = char_poly_closed(product.p(), c1, c2, w.field().discriminant())?;
    if closed != product {
        push_capped(&mut s.closed_product_mismatches, case);
    }
    let n = product.group_order();
    if *product.p() == BigInt::from(2) {
        s.p_two += 1;
    } else if !(&n % 4u32).is_zero() {
        push_capped(&mut s.four_divides_failures, case);
    }
    match analyze(w) {
        Ok(v) => {
            s.max_valuation = s.max_valuation.max(v.valuation);
            if !v.theorem_holds || (v.sylow_order != BigInt::from(1) && v.sylow_order != v.p) {
                push_capped(&mut s.sylow_violations, case);
            }
        }
        Err(Error::C2Zero) => s.c2_zero += 1,
        Err(e) => return Err(e),
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CurveSet {
    Exhaustive,
    Random { samples: usize, seed: u64 },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OracleSummary {
    pub curves: usize,
    /// Coefficient vectors (low-degree first) whose order and `P(1)` differ.
    pub mismatches: Vec<Vec<u64>>,
    pub sylow_trivial: usize,
    pub sylow_order_p: usize,
    pub sylow_larger: usize,
}

pub fn curves(p: u64, set: &CurveSet) -> Result<Vec<GenusTwoCurve>> {
    match set {
        CurveSet::Exhaustive => GenusTwoCurve::all_quintics(p),
        CurveSet::Random { samples, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            (0..*samples)
                .map(|_| GenusTwoCurve::random_quintic(p, &mut rng))
                .collect()
        }
    }
}

/// Enumerated order against `P(1)` from point counts, for each curve.
pub fn oracle_sweep(p: u64, set: &CurveSet, budget: u64) -> Result<OracleSummary> {
    let mut s = OracleSummary::default();
    for curve in curves(p, set)? {
        s.curves += 1;
        let g = enumerate_jacobian(&curve, budget)?;
        let from_counts = curve.frobenius_poly()?.group_order();
        if BigInt::from(g.order) != from_counts && s.mismatches.len() < MAX_LISTED {
            s.mismatches.push(curve.f().coeffs().to_vec());
        }
        match g.p_sylow_factors.iter().product::<u64>() {
            1 => s.sylow_trivial += 1,
            q if q == p => s.sylow_order_p += 1,
            _ => s.sylow_larger += 1,
        }
    }
    Ok(s)
}

fn case_json(case: &[i64; 7]) -> Value {
    json!({"D": num(case[0]), "a": num(case[1]), "b": num(case[2]), "c": nums(case[3..].iter())})
}

pub fn cmd_scan_theorem(params: &GridParams) -> Outcome {
    let inputs = json!({
        "ab_bound": num(params.ab_bound),
        "c_bound": num(params.c_bound),
        "kind": "theorem",
        "max_d": num(params.max_d),
    });
    let s = match theorem_grid(params) {
        Ok(s) => s,
        Err(e) => return Outcome::failed("scan", inputs, &e),
    };
    let list = |v: &[[i64; 7]]| v.iter().map(case_json).collect::<Vec<_>>();
    let results = json!({
        "c2_zero": s.c2_zero,
        "closed_product_mismatches": list(&s.closed_product_mismatches),
        "elements": s.elements,
        "four_divides_failures": list(&s.four_divides_failures),
        "max_valuation": s.max_valuation,
        "p_two_excluded": s.p_two,
        "prime_norm_elements": s.prime_norm_elements,
        "primitive_fields": s.primitive_fields,
        "sylow_violations": list(&s.sylow_violations),
    });
    if s.holds() {
        Outcome::ok("scan", inputs, results)
    } else {
        Outcome::violation("scan", inputs, results, "grid check failed".into())
    }
}

pub fn cmd_scan_oracle(p: u64, set: &CurveSet, budget: u64) -> Outcome {
    let mut inputs = json!({"budget": num(budget), "kind": "oracle", "p": num(p)});
    match set {
        CurveSet::Exhaustive => inputs["curves"] = json!("exhaustive"),
        CurveSet::Random { samples, seed } => {
            inputs["samples"] = json!(samples);
            inputs["seed"] = num(seed);
        }
    }
    let s = match oracle_sweep(p, set, budget) {
        Ok(s) => s,
        Err(e) => return Outcome::failed("scan", inputs, &e),
    };
    let results = json!({
        "curves": s.curves,
        "mismatches": s.mismatches.iter().map(|c| nums(c.iter())).collect::<Vec<_>>(),
        "sylow": {
            "larger": s.sylow_larger,
            "order_p": s.sylow_order_p,
            "trivial": s.sylow_trivial,
        },
    });
    if s.mismatches.is_empty() {
        Outcome::ok("scan", inputs, results)
    } else {
        Outcome::violation(
            "scan",
            inputs,
            results,
            "enumerated order differs from P(1)".into(),
        )
    }
}
