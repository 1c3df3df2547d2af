//! JSON assembly for the machine-readable reports on stdout.
//!
//! Keys serialize sorted (serde_json's default map), rationals render as
//! `a` or `a/b`, and arbitrary-precision integers as decimal strings, so a
//! fixed invocation produces byte-identical output.

use num_bigint::BigUint;
use serde_json::{json, Value};

use sdist::bounds::BoundReport;
use sdist::matrix::InertiaSignature;
use sdist::points::PointSet;
use sdist::polynomial::Polynomial;
use sdist::rational::{format_rational, Rational};
use sdist::Monomial;

pub fn report(verb: &str, parameters: Value, results: Value) -> Value {
    json!({
        "verb": verb,
        "parameters": parameters,
        "results": results,
    })
}

pub fn big(value: &BigUint) -> Value {
    Value::String(value.to_string())
}

pub fn rational(value: &Rational) -> Value {
    Value::String(format_rational(value))
}

pub fn polynomials(polys: &[Polynomial]) -> Value {
    Value::Array(polys.iter().map(|p| Value::String(p.to_string())).collect())
}

pub fn monomials(monos: &[Monomial]) -> Value {
    Value::Array(monos.iter().map(|m| Value::String(m.to_string())).collect())
}

pub fn point(coords: &[Rational]) -> Value {
    Value::Array(coords.iter().map(rational).collect())
}

pub fn points(set: &PointSet) -> Value {
    Value::Array(set.points().iter().map(|p| point(p)).collect())
}

pub fn signature(sig: &InertiaSignature) -> Value {
    json!({
        "r_plus": sig.r_plus,
        "r_minus": sig.r_minus,
        "r_zero": sig.r_zero,
    })
}

pub fn bound_report(bound: &BoundReport) -> Value {
    let parameters: Value = bound
        .parameters
        .iter()
        .map(|(k, v)| (k.clone(), json!(v)))
        .collect::<serde_json::Map<String, Value>>()
        .into();
    json!({
        "family": bound.family.to_string(),
        "parameters": parameters,
        "value": big(&bound.value),
        "formula": bound.formula_text,
    })
}
