//! Exact arithmetic for genus-2 curves with complex multiplication by a
//! primitive quartic CM field.
//!
//! The crate is organised bottom-up:
//!
//! - [`cm_field`]: the real quadratic order `Z + ξZ` and validated quartic CM
//!   fields `K = K0(η)` together with Frobenius elements `ω ∈ O_K0 + ηO_K0`.
//! - [`frobenius`]: the characteristic polynomial of Frobenius, both from the
//!   closed formulas in `(p, c1, c2, D)` and by exact expansion over the
//!   conjugates of `ω`, plus Weil-polynomial diagnostics.
//! - [`sylow`]: p-adic valuations, the bound for `p > 5`, the exhaustive case
//!   analysis for `p ≤ 5`, and the end-to-end Sylow verdict.
//! - [`jacobian`]: an independent brute-force oracle. Point counts over
//!   `F_p` and `F_{p²}`, Cantor arithmetic on Mumford divisors and full
//!   enumeration of `Jac(C)(F_p)` with its invariant factors.
//!
//! All decision paths use exact integers. Floating point only shows up in
//! diagnostics ([`cm_field::FrobeniusElement::embeddings`] and the root-modulus
//! check in [`frobenius::weil_validate`]).

pub mod arith;
pub mod cm_field;
mod error;
pub mod frobenius;
pub mod jacobian;
pub mod sylow;

pub use cm_field::{
    relative_norm, rq_conjugate, rq_mul, validate_field, xi_square_rule, CMFieldParams,
    Discriminant, Embeddings, FrobeniusElement, GaloisType, RealQuadElem, XiBranch,
};
pub use error::{Error, Result};
pub use frobenius::{
    char_poly_closed, char_poly_product, group_order, weil_validate, FrobeniusPoly, WeilReport,
};
pub use jacobian::{
    cantor_add, char_poly_from_counts, count_points, enumerate_jacobian, p_sylow_structure,
    GenusTwoCurve, GroupStructure, MumfordDivisor, DEFAULT_BUDGET,
};
pub use sylow::{
    analyze, coefficient_bounds, lemma1_check, max_discriminant, p_adic_valuation, verify_lemma2,
    CoefficientBounds, Lemma2Report, Lemma2Row, SylowVerdict,
};
