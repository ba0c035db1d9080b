//! q-numbers, q-factorials and q-binomials at a concrete rational `q`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// The deformation parameter. Any rational other than `0, 1, -1` has
/// infinite multiplicative order, so it is never a root of unity.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct QParam(Scalar);

impl TryFrom<String> for QParam {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        Self::new(scalar::parse(&s)?)
    }
}

impl From<QParam> for String {
    fn from(q: QParam) -> String {
        scalar::to_text(&q.0)
    }
}

impl QParam {
    pub fn new(q: Scalar) -> Result<Self> {
        if q.is_zero() || q.abs().is_one() {
            return Err(Error::InvalidQ(scalar::to_text(&q)));
        }
        Ok(QParam(q))
    }

    pub fn from_int(q: i64) -> Result<Self> {
        Self::new(scalar::int(q))
    }

    pub fn value(&self) -> &Scalar {
        &self.0
    }

    /// `q^e`.
    pub fn pow(&self, e: i64) -> Scalar {
        scalar::pow(&self.0, e)
    }

    /// `q - q^{-1}`, the denominator of every q-number.
    pub fn q_minus_qinv(&self) -> Scalar {
        &self.0 - self.0.recip()
    }

    /// If `x = q^k` for some integer `k`, return `k`.
    pub fn log(&self, x: &Scalar) -> Option<i64> {
        if x.is_one() {
            return Some(0);
        }
        if x.is_zero() {
            return None;
        }
        let target = scalar::height(x);
        let mut up = Scalar::one();
        let mut down = Scalar::one();
        let qinv = self.0.recip();
        for k in 1..=10_000i64 {
            up *= &self.0;
            down *= &qinv;
            if &up == x {
                return Some(k);
            }
            if &down == x {
                return Some(-k);
            }
            if scalar::height(&up) > target + 2 && scalar::height(&down) > target + 2 {
                break;
            }
        }
        None
    }
}

impl Default for QParam {
    fn default() -> Self {
        QParam(scalar::int(2))
    }
}

impl fmt::Display for QParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `[m] = (q^m - q^{-m}) / (q - q^{-1})`.
pub fn q_int(m: i64, q: &QParam) -> Scalar {
    (q.pow(m) - q.pow(-m)) / q.q_minus_qinv()
}

/// `[l]! = [l][l-1]...[1]`, with `[0]! = 1`.
pub fn q_factorial(ell: u32, q: &QParam) -> Scalar {
    (1..=ell as i64).fold(Scalar::one(), |acc, k| acc * q_int(k, q))
}

/// Gaussian binomial `[l]! / ([l-r]! [r]!)`.
pub fn q_binom(ell: u32, r: u32, q: &QParam) -> Result<Scalar> {
    if r > ell {
        return Err(Error::BinomialRange { ell, r });
    }
    Ok(q_factorial(ell, q) / (q_factorial(ell - r, q) * q_factorial(r, q)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use num_bigint::BigInt;
    use num_traits::Pow;
    use proptest::prelude::*;

    fn q2() -> QParam {
        QParam::from_int(2).unwrap()
    }

    #[test]
    fn rejects_roots_of_unity() {
        assert!(QParam::from_int(0).is_err());
        assert!(QParam::from_int(1).is_err());
        assert!(QParam::from_int(-1).is_err());
        assert!(QParam::new(frac(1, 3)).is_ok());
    }

    #[test]
    fn q_numbers() {
        let q = q2();
        assert_eq!(q_int(1, &q), int(1));
        assert_eq!(q_int(0, &q), int(0));
        assert_eq!(q_int(2, &q), frac(5, 2));
        assert_eq!(q_int(3, &q), frac(21, 4));
    }

    #[test]
    fn factorials_and_binomials() {
        let q = q2();
        assert_eq!(q_factorial(0, &q), int(1));
        assert_eq!(q_factorial(1, &q), int(1));
        assert_eq!(q_factorial(2, &q), frac(5, 2));
        assert_eq!(q_binom(2, 0, &q).unwrap(), int(1));
        assert_eq!(q_binom(2, 1, &q).unwrap(), frac(5, 2));
        assert_eq!(q_binom(3, 1, &q).unwrap(), frac(21, 4));
        assert!(matches!(q_binom(2, 3, &q), Err(Error::BinomialRange { .. })));
    }

    #[test]
    fn factorial_at_eight_closed_form() {
        // [k] = (4^k - 1) / (3 * 2^(k-1)) at q = 2
        let num: BigInt = (1..=8u32).map(|k| (BigInt::from(4).pow(k) - 1u32) / 3).product();
        let expected = Scalar::new(num, BigInt::from(2).pow(28u32));
        let f = q_factorial(8, &q2());
        assert_eq!(f, expected);
        // the unreduced product of q^(2k) - 1 leaves the i64 range
        let raw: BigInt = (1..=8u32).map(|k| BigInt::from(4).pow(k) - 1u32).product();
        assert!(raw.bits() > 63);
    }

    #[test]
    fn pascal_identity_exhaustive() {
        for qv in [2i64, 3, -2, 5] {
            let q = QParam::from_int(qv).unwrap();
            for ell in 1..=8u32 {
                for r in 1..ell {
                    let lhs = q_binom(ell, r, &q).unwrap();
                    let rhs = q.pow(r as i64) * q_binom(ell - 1, r, &q).unwrap()
                        + q.pow(-((ell - r) as i64)) * q_binom(ell - 1, r - 1, &q).unwrap();
                    assert_eq!(lhs, rhs, "q={qv} l={ell} r={r}");
                }
            }
        }
    }

    #[test]
    fn log_recovers_exponents() {
        let q = q2();
        assert_eq!(q.log(&int(64)), Some(6));
        assert_eq!(q.log(&frac(1, 8)), Some(-3));
        assert_eq!(q.log(&int(3)), None);
        let q = QParam::new(frac(2, 3)).unwrap();
        assert_eq!(q.log(&frac(27, 8)), Some(-3));
    }

    proptest! {
        #[test]
        fn q_int_is_odd(m in -20i64..20, num in 2i64..9, den in 1i64..9) {
            let q = QParam::new(frac(num, den));
            prop_assume!(q.is_ok());
            let q = q.unwrap();
            prop_assert_eq!(q_int(-m, &q), -q_int(m, &q));
        }

        #[test]
        fn binomial_symmetry(ell in 0u32..9, r in 0u32..9, qv in 2i64..6) {
            prop_assume!(r <= ell);
            let q = QParam::from_int(qv).unwrap();
            prop_assert_eq!(q_binom(ell, r, &q).unwrap(), q_binom(ell, ell - r, &q).unwrap());
        }
    }
}
