//! Exact rational arithmetic helpers.
//!
//! All quantities the workbench certifies are elements of ℚ (or rational
//! multiples of π, see [`crate::certified`]). We use [`num_rational::BigRational`]
//! as the carrier: fractions are kept reduced with a positive denominator,
//! which is exactly the invariant the domain type demands.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den` as a rational, `den != 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k;
    }
    acc
}

pub fn pow2(n: u32) -> BigInt {
    BigInt::one() << n
}

/// Serializes in lowest terms, `"p/q"`, or just `"p"` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal `{0}`")]
    Invalid(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// Parses `"p"` or `"p/q"` (lowest terms not required on input).
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let mut parts = trimmed.splitn(2, '/');
    let numer: BigInt = parts
        .next()
        .unwrap()
        .trim()
        .parse()
        .map_err(|_| ParseRationalError::Invalid(trimmed.to_string()))?;
    match parts.next() {
        None => Ok(Rational::from_integer(numer)),
        Some(d) => {
            let denom: BigInt = d
                .trim()
                .parse()
                .map_err(|_| ParseRationalError::Invalid(trimmed.to_string()))?;
            if denom.is_zero() {
                return Err(ParseRationalError::ZeroDenominator(trimmed.to_string()));
            }
            Ok(Rational::new(numer, denom))
        }
    }
}

/// Largest integer `≤ r`, as a `BigInt`.
pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

/// Smallest integer `≥ r`, as a `BigInt`.
pub fn ceil_int(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}
