//! One function per subcommand. Each returns a complete [`Outcome`]; nothing
//! here touches stdout or the process exit code.

use cm2_core::jacobian::char_poly_from_counts;
use cm2_core::sylow::coefficient_bounds;
use cm2_core::{
    analyze, char_poly_closed, char_poly_product, enumerate_jacobian, validate_field,
    verify_lemma2, weil_validate, CMFieldParams, FrobeniusElement, FrobeniusPoly, GenusTwoCurve,
    Lemma2Row, Result,
};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::report::Outcome;

/// Math values travel as decimal strings.
pub(crate) fn num(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub(crate) fn nums<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(num).collect())
}

/// Coefficients low-degree first, plus the rendered polynomial.
pub(crate) fn poly_json(poly: &FrobeniusPoly) -> Value {
    json!({
        "coefficients": nums(poly.coeffs().iter()),
        "display": poly.to_string(),
    })
}

fn field_inputs(d: i64, a: &BigInt, b: &BigInt) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("D".into(), num(d));
    m.insert("a".into(), num(a));
    m.insert("b".into(), num(b));
    m
}

fn field_results(k: &CMFieldParams) -> Value {
    let (p, q) = k.min_poly();
    let t = k.eta_square_neg();
    json!({
        "branch": k.discriminant().branch().label(),
        "eta_square": format!("-({t})"),
        "galois_type": k.galois_type().name(),
        "min_poly": {
            "P": num(p),
            "Q": num(q),
            "coefficients": nums([q.clone(), BigInt::from(0), p.clone(), BigInt::from(0), BigInt::from(1)]),
        },
        "primitive": k.is_primitive(),
    })
}

pub fn cmd_field(d: i64, a: &BigInt, b: &BigInt) -> Outcome {
    let inputs = Value::Object(field_inputs(d, a, b));
    match CMFieldParams::new(d, a.clone(), b.clone()) {
        Ok(k) => Outcome::ok("field", inputs, field_results(&k)),
        Err(e) => Outcome::failed("field", inputs, &e),
    }
}

fn omega_inputs(d: i64, a: &BigInt, b: &BigInt, c: &[BigInt; 4]) -> Value {
    let mut m = field_inputs(d, a, b);
    m.insert("c".into(), nums(c.iter()));
    Value::Object(m)
}

pub fn cmd_analyze(d: i64, a: &BigInt, b: &BigInt, c: &[BigInt; 4]) -> Outcome {
    let inputs = omega_inputs(d, a, b, c);
    let run = || -> Result<Outcome> {
        let k = CMFieldParams::new(d, a.clone(), b.clone())?;
        let w = FrobeniusElement::new(&k, c.clone());
        let verdict = analyze(&w)?;
        let closed = char_poly_closed(&verdict.p, &c[0], &c[1], k.discriminant())?;
        let agree = closed == verdict.poly;
        let results = json!({
            "closed_form": poly_json(&closed),
            "closed_equals_product": agree,
            "galois_type": k.galois_type().name(),
            "group_order": num(&verdict.order),
            "p": num(&verdict.p),
            "product_form": poly_json(&verdict.poly),
            "sylow_order": num(&verdict.sylow_order),
            "theorem_holds": verdict.theorem_holds,
            "valuation": verdict.valuation,
        });
        Ok(if !verdict.theorem_holds {
            Outcome::violation(
                "analyze",
                inputs.clone(),
                results,
                format!("p-Sylow subgroup has order {}", verdict.sylow_order),
            )
        } else if !agree {
            Outcome::violation(
                "analyze",
                inputs.clone(),
                results,
                "closed and product forms of P(X) differ".into(),
            )
        } else {
            Outcome::ok("analyze", inputs.clone(), results)
        })
    };
    run().unwrap_or_else(|e| Outcome::failed("analyze", inputs.clone(), &e))
}

fn weil_json(poly: &FrobeniusPoly) -> (Value, bool) {
    let w = weil_validate(poly);
    let v = json!({
        "constant_term": w.constant_term,
        "functional_equation": w.functional_equation,
        "root_moduli": w.root_moduli,
        "max_relative_deviation": format!("{:.3e}", w.max_relative_deviation),
    });
    (v, w.passed())
}

/// `P(X)` of a Frobenius element, from both the closed form and the product.
pub fn cmd_charpoly(d: i64, a: &BigInt, b: &BigInt, c: &[BigInt; 4]) -> Outcome {
    let inputs = omega_inputs(d, a, b, c);
    let run = || -> Result<Outcome> {
        let k = CMFieldParams::new(d, a.clone(), b.clone())?;
        let w = FrobeniusElement::new(&k, c.clone());
        let product = char_poly_product(&w)?;
        let closed = char_poly_closed(product.p(), &c[0], &c[1], k.discriminant())?;
        let (weil, weil_ok) = weil_json(&product);
        let agree = closed == product;
        let results = json!({
            "closed_equals_product": agree,
            "group_order": num(product.group_order()),
            "p": num(product.p()),
            "polynomial": poly_json(&product),
            "weil": weil,
        });
        Ok(if agree && weil_ok {
            Outcome::ok("charpoly", inputs.clone(), results)
        } else {
            Outcome::violation(
                "charpoly",
                inputs.clone(),
                results,
                "P(X) failed the closed-form or Weil cross-checks".into(),
            )
        })
    };
    run().unwrap_or_else(|e| Outcome::failed("charpoly", inputs.clone(), &e))
}

/// `P(X)` from the point counts `N1`, `N2` of a curve over `F_p`.
pub fn cmd_charpoly_counts(p: u64, n1: u64, n2: u64) -> Outcome {
    let inputs = json!({"N1": num(n1), "N2": num(n2), "p": num(p)});
    match char_poly_from_counts(n1, n2, p) {
        Ok(poly) => {
            let (weil, weil_ok) = weil_json(&poly);
            let results = json!({
                "group_order": num(poly.group_order()),
                "p": num(p),
                "polynomial": poly_json(&poly),
                "weil": weil,
            });
            if weil_ok {
                Outcome::ok("charpoly", inputs, results)
            } else {
                Outcome::violation(
                    "charpoly",
                    inputs,
                    results,
                    "counts do not come from a Weil polynomial".into(),
                )
            }
        }
        Err(e) => Outcome::failed("charpoly", inputs, &e),
    }
}

fn row_json(r: &Lemma2Row) -> Value {
    json!({
        "D": num(r.d),
        "N": num(&r.n),
        "c1": num(r.c1),
        "c2": num(r.c2),
        "p": num(r.p),
        "p_divides": r.divisible_by_p,
        "p2_divides": r.divisible_by_p_squared,
    })
}

pub fn cmd_lemma2(emit_rows: bool) -> Outcome {
    let inputs = json!({"rows": emit_rows});
    let report = verify_lemma2();

    let mut boxes = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for r in &report.rows {
        if seen.insert((r.p, r.d.get())) {
            let bounds = coefficient_bounds(r.p, r.d).expect("rows only use p ≤ 5");
            boxes.push(json!({
                "D": num(r.d),
                "branch": r.branch.label(),
                "c1": nums([*bounds.c1.start(), *bounds.c1.end()]),
                "c2": nums([*bounds.c2.start(), *bounds.c2.end()]),
                "p": num(r.p),
            }));
        }
    }
    let mut results = json!({
        "boxes": boxes,
        "counterexample_rows": report.counterexamples.iter().map(row_json).collect::<Vec<_>>(),
        "counterexamples": report.counterexamples.len(),
        "excluded_c2_zero": report.rows.iter().filter(|r| r.is_excluded_non_primitive()).count(),
        "expected_rows": report.expected_rows,
        "row_count": report.rows.len(),
    });
    if emit_rows {
        results["rows"] = report.rows.iter().map(row_json).collect();
    }
    if report.holds() {
        Outcome::ok("lemma2", inputs, results)
    } else {
        Outcome::violation(
            "lemma2",
            inputs,
            results,
            format!(
                "{} counterexamples, {} of {} rows enumerated",
                report.counterexamples.len(),
                report.rows.len(),
                report.expected_rows
            ),
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Count,
    Enumerate,
}

impl OracleMode {
    pub fn name(self) -> &'static str {
        match self {
            OracleMode::Count => "count",
            OracleMode::Enumerate => "enumerate",
        }
    }
}

pub fn cmd_oracle(p: u64, coeffs: &[i64], mode: OracleMode, budget: u64) -> Outcome {
    let mut inputs = json!({
        "coeffs": nums(coeffs.iter()),
        "mode": mode.name(),
        "p": num(p),
    });
    if mode == OracleMode::Enumerate {
        inputs["budget"] = num(budget);
    }
    let run = || -> Result<Outcome> {
        let curve = GenusTwoCurve::new(p, coeffs)?;
        let (n1, n2) = (curve.count_points(1)?, curve.count_points(2)?);
        let poly = char_poly_from_counts(n1, n2, p)?;
        let from_counts = poly.group_order();
        let mut results = json!({
            "N1": num(n1),
            "N2": num(n2),
            "degree": curve.degree(),
            "group_order_from_counts": num(&from_counts),
            "polynomial": poly_json(&poly),
        });
        if mode == OracleMode::Count {
            return Ok(Outcome::ok("oracle", inputs.clone(), results));
        }
        let g = enumerate_jacobian(&curve, budget)?;
        let cross_check = BigInt::from(g.order) == from_counts;
        results["order"] = num(g.order);
        results["invariant_factors"] = nums(g.invariant_factors.iter());
        results["p_sylow_factors"] = nums(g.p_sylow_factors.iter());
        results["sylow_order"] = num(g.p_sylow_factors.iter().product::<u64>());
        results["cross_check"] = Value::Bool(cross_check);
        Ok(if cross_check {
            Outcome::ok("oracle", inputs.clone(), results)
        } else {
            Outcome::violation(
                "oracle",
                inputs.clone(),
                results,
                format!(
                    "enumerated order {} differs from P(1) = {from_counts}",
                    g.order
                ),
            )
        })
    };
    run().unwrap_or_else(|e| Outcome::failed("oracle", inputs.clone(), &e))
}

/// Field check shared by the scan: `Ok(None)` for fields outside the grid.
pub(crate) fn grid_field(d: i64, a: i64, b: i64) -> Result<Option<CMFieldParams>> {
    match validate_field(d, a, b) {
        Ok(k) if k.is_primitive() => Ok(Some(k)),
        Ok(_) => Ok(None),
        Err(cm2_core::Error::InvalidDiscriminant(_))
        | Err(cm2_core::Error::NotTotallyImaginary { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}
