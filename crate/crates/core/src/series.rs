//! Dense polynomials and truncated power series over exact scalars.
//!
//! Coefficient vectors are indexed from degree 0. The exponential and
//! logarithm are written against [`Coefficient`] so the same recurrences
//! serve scalar series and series with commuting matrix coefficients.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Minimal ring interface for series coefficients. Products are only ever
/// taken between mutually commuting elements.
pub trait Coefficient: Clone {
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, s: &Scalar) -> Self;
    fn zero_like(&self) -> Self;
}

impl Coefficient for Scalar {
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, s: &Scalar) -> Self {
        self * s
    }
    fn zero_like(&self) -> Self {
        Scalar::zero()
    }
}

/// `exp(G)` through degree `order`, where `g[s]` is the coefficient of
/// `u^s` for `s >= 1` (entry 0 is ignored) and `one` is the unit.
pub fn exp_with<C: Coefficient>(g: &[C], one: &C, order: usize) -> Vec<C> {
    let zero = one.zero_like();
    let coeff = |s: usize| g.get(s).cloned().unwrap_or_else(|| zero.clone());
    let mut f = vec![one.clone()];
    for m in 1..=order {
        let mut acc = zero.clone();
        for s in 1..=m {
            let term = coeff(s).mul(&f[m - s]).scale(&scalar::int(s as i64));
            acc = acc.add(&term);
        }
        f.push(acc.scale(&scalar::frac(1, m as i64)));
    }
    f
}

/// Inverse of [`exp_with`]: given `F` with `F_0 = one`, returns `G` with
/// `G_0 = 0` and `exp(G) = F` through degree `order`.
pub fn log_with<C: Coefficient>(f: &[C], one: &C, order: usize) -> Vec<C> {
    let zero = one.zero_like();
    let coeff = |s: usize| f.get(s).cloned().unwrap_or_else(|| zero.clone());
    let mut g = vec![zero.clone()];
    for m in 1..=order {
        let mut acc = zero.clone();
        for s in 1..m {
            let term = g[s].mul(&coeff(m - s)).scale(&scalar::int(s as i64));
            acc = acc.add(&term);
        }
        g.push(coeff(m).sub(&acc.scale(&scalar::frac(1, m as i64))));
    }
    g
}

/// Coefficients of `exp(sum c_s u^s)` through degree `order`.
pub fn truncated_exp_series(coeffs: &BTreeMap<usize, Scalar>, order: usize) -> Result<Vec<Scalar>> {
    if coeffs.get(&0).is_some_and(|c| !c.is_zero()) {
        return Err(Error::ConstantTerm);
    }
    let mut g = vec![Scalar::zero(); order + 1];
    for (&d, c) in coeffs {
        if d <= order {
            g[d] = c.clone();
        }
    }
    Ok(exp_with(&g, &Scalar::one(), order))
}

/// Coefficients of `log(F)` for a series with constant term 1.
pub fn truncated_log_series(f: &[Scalar], order: usize) -> Result<Vec<Scalar>> {
    if f.first().is_none_or(|c| !c.is_one()) {
        return Err(Error::ConstantTerm);
    }
    Ok(log_with(f, &Scalar::one(), order))
}

pub fn trim(p: &mut Vec<Scalar>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree(p: &[Scalar]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn poly_mul(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub fn poly_add(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let n = a.len().max(b.len());
    let mut out: Vec<Scalar> = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default())
        .collect();
    trim(&mut out);
    out
}

pub fn poly_scale(a: &[Scalar], s: &Scalar) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = a.iter().map(|c| c * s).collect();
    trim(&mut out);
    out
}

pub fn poly_eval(p: &[Scalar], x: &Scalar) -> Scalar {
    p.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
}

pub fn derivative(p: &[Scalar]) -> Vec<Scalar> {
    let mut out: Vec<Scalar> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * scalar::int(i as i64))
        .collect();
    trim(&mut out);
    out
}

/// `p(c u)`.
pub fn rescale_argument(p: &[Scalar], c: &Scalar) -> Vec<Scalar> {
    let mut pw = Scalar::one();
    p.iter()
        .map(|a| {
            let v = a * &pw;
            pw *= c;
            v
        })
        .collect()
}

/// Quotient and remainder of polynomial division; `b` must be nonzero.
pub fn poly_divmod(a: &[Scalar], b: &[Scalar]) -> (Vec<Scalar>, Vec<Scalar>) {
    let db = degree(b).expect("division by the zero polynomial");
    let mut r: Vec<Scalar> = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut quot = vec![Scalar::zero(); r.len() - db];
    let lead = b[db].clone();
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        for (i, bc) in b.iter().enumerate().take(db + 1) {
            r[dr - db + i] -= &c * bc;
        }
        quot[dr - db] = c;
        trim(&mut r);
    }
    trim(&mut quot);
    (quot, r)
}

/// Monic greatest common divisor; the gcd of two zero polynomials is zero.
pub fn poly_gcd(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divmod(&x, &y);
        x = y;
        y = r;
    }
    if let Some(d) = degree(&x) {
        let lead = x[d].clone();
        x = x.iter().map(|c| c / &lead).collect();
    }
    x
}

/// Power series `a / b` through degree `order`; `b[0]` must be nonzero.
pub fn series_div(a: &[Scalar], b: &[Scalar], order: usize) -> Vec<Scalar> {
    let b0 = b[0].clone();
    let mut out = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let mut acc = a.get(n).cloned().unwrap_or_default();
        for k in 1..=n.min(b.len().saturating_sub(1)) {
            acc -= &b[k] * &out[n - k];
        }
        out.push(acc / &b0);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use proptest::prelude::*;

    #[test]
    fn exp_of_zero_and_linear() {
        assert_eq!(
            truncated_exp_series(&BTreeMap::new(), 3).unwrap(),
            vec![int(1), int(0), int(0), int(0)]
        );
        let c = frac(3, 7);
        let e = truncated_exp_series(&BTreeMap::from([(1, c.clone())]), 2).unwrap();
        assert_eq!(e, vec![int(1), c.clone(), &c * &c / int(2)]);
        let a = int(5);
        let e = truncated_exp_series(&BTreeMap::from([(1, -a.clone())]), 2).unwrap();
        assert_eq!(e, vec![int(1), -a.clone(), &a * &a / int(2)]);
    }

    #[test]
    fn exp_rejects_constant_term() {
        let r = truncated_exp_series(&BTreeMap::from([(0, int(1))]), 2);
        assert_eq!(r, Err(Error::ConstantTerm));
    }

    #[test]
    fn log_of_one_minus_au_matches_taylor() {
        // log(1 - a u) = -sum a^s u^s / s
        let a = frac(2, 3);
        let f = vec![int(1), -a.clone()];
        let g = truncated_log_series(&f, 5).unwrap();
        for s in 1..=5i64 {
            assert_eq!(g[s as usize], -scalar::pow(&a, s) / int(s));
        }
    }

    #[test]
    fn division_and_gcd() {
        // (u + 1)(u - 2) and (u + 1)^2 share u + 1
        let a = poly_mul(&[int(1), int(1)], &[int(-2), int(1)]);
        let b = poly_mul(&[int(1), int(1)], &[int(1), int(1)]);
        assert_eq!(poly_gcd(&a, &b), vec![int(1), int(1)]);
        let (quo, rem) = poly_divmod(&a, &[int(1), int(1)]);
        assert_eq!(quo, vec![int(-2), int(1)]);
        assert!(rem.is_empty());
    }

    #[test]
    fn series_quotient() {
        // 1 / (1 - 2u) = sum 2^n u^n
        let s = series_div(&[int(1)], &[int(1), int(-2)], 4);
        assert_eq!(s, vec![int(1), int(2), int(4), int(8), int(16)]);
    }

    proptest! {
        #[test]
        fn exp_inverts_log(coeffs in proptest::collection::vec((-9i64..9, 1i64..6), 6)) {
            let mut f = vec![int(1)];
            f.extend(coeffs.iter().map(|&(n, d)| frac(n, d)));
            let g = truncated_log_series(&f, 6).unwrap();
            let map: BTreeMap<usize, Scalar> = g.iter().cloned().enumerate().skip(1).collect();
            prop_assert_eq!(truncated_exp_series(&map, 6).unwrap(), f);
        }
    }
}
