//! Arbitrary-precision rational scalars.
//!
//! `BigRational` already keeps values in lowest terms with a positive
//! denominator, which is exactly the invariant the rest of the crate relies
//! on. This module only adds construction and text helpers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Shorthand for `num/den`. Panics if `den` is zero.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical rendering: `a` for integers, `a/b` otherwise.
pub fn format_rational(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("invalid integer literal `{0}`")]
    InvalidInteger(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `a` or `a/b` with optional leading sign.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let text = text.trim();
    let (num_text, den_text) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numer: BigInt = num_text
        .parse()
        .map_err(|_| RationalParseError::InvalidInteger(text.to_string()))?;
    let denom: BigInt = match den_text {
        Some(d) => d
            .parse()
            .map_err(|_| RationalParseError::InvalidInteger(text.to_string()))?,
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(RationalParseError::ZeroDenominator(text.to_string()));
    }
    Ok(Rational::new(numer, denom))
}

/// If `value` is the square of a rational, returns that (non-negative) root.
pub fn rational_sqrt(value: &Rational) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    let num = value.numer().magnitude();
    let den = value.denom().magnitude();
    let num_root = num.sqrt();
    let den_root = den.sqrt();
    if &(&num_root * &num_root) == num && &(&den_root * &den_root) == den {
        Some(Rational::new(num_root.into(), den_root.into()))
    } else {
        None
    }
}
