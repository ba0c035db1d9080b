//! Exact rational scalars and their `"p/q"` text form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator by `num-rational`.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Scalar {
    Scalar::new(BigInt::from(n), BigInt::from(d))
}

/// `x^e` for any integer `e`; `x` must be nonzero when `e < 0`.
pub fn pow(x: &Scalar, e: i64) -> Scalar {
    if e == 0 {
        return Scalar::one();
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut e = e.unsigned_abs();
    let mut acc = Scalar::one();
    let mut b = base;
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

/// Renders as `"p/q"`, or `"p"` for integers.
pub fn to_text(x: &Scalar) -> String {
    x.to_string()
}

pub fn parse(s: &str) -> Result<Scalar> {
    let t = s.trim();
    let err = || Error::ParseScalar(s.to_string());
    match t.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).map_err(|_| err())?;
            let d = BigInt::from_str(d.trim()).map_err(|_| err())?;
            if d.is_zero() {
                return Err(err());
            }
            Ok(Scalar::new(n, d))
        }
        None => BigInt::from_str(t).map(Scalar::from_integer).map_err(|_| err()),
    }
}

/// Number of bits in numerator plus denominator; a crude height.
pub fn height(x: &Scalar) -> u64 {
    x.numer().abs().bits() + x.denom().bits()
}

pub fn is_integer_valued(x: &Scalar) -> bool {
    x.denom().is_one()
}

/// Serde adapter writing a scalar as its `"p/q"` string.
pub mod text {
    use super::Scalar;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &Scalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::to_text(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Scalar, D::Error> {
        let raw = String::deserialize(d)?;
        super::parse(&raw).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form_is_lowest_terms() {
        assert_eq!(to_text(&frac(10, -4)), "-5/2");
        assert_eq!(to_text(&int(3)), "3");
        assert_eq!(parse("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse(" -7 ").unwrap(), int(-7));
        assert!(parse("1/0").is_err());
        assert!(parse("abc").is_err());
    }

    #[test]
    fn integer_powers() {
        let two = int(2);
        assert_eq!(pow(&two, 10), int(1024));
        assert_eq!(pow(&two, -3), frac(1, 8));
        assert_eq!(pow(&frac(-2, 3), 3), frac(-8, 27));
        assert_eq!(pow(&two, 0), int(1));
    }
}
