//! The algebras `A_lambda`, the two-dimensional quotient attached to
//! `pi(m,a)^2`, and local Weyl modules as tensor products of fundamental
//! modules.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use crate::dpoly::DrinfeldPoly;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qnum::{q_int, QParam};
use crate::repcore::{spin, Module};
use crate::scalar::{self, Scalar};
use crate::selfext::ext1;
use crate::series;
use crate::sl2eval::{eval_module, EvalModuleSpec};

/// Normal forms in `A_lambda = C[L_1, ..., L_lambda, L_lambda^{-1}]`, where
/// `L_{-s} = L_{lambda-s} L_lambda^{-1}` for `0 <= s <= lambda`, `L_0 = 1`,
/// and `L_r = 0` for `|r| > lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ALambdaAlgebra {
    pub lambda: usize,
}

/// Monomial `prod L_i^{e_i}`, exponents indexed by `i = 1..=lambda`; only
/// the last exponent may be negative.
pub type Monomial = Vec<i64>;

impl ALambdaAlgebra {
    pub fn new(lambda: usize) -> Self {
        ALambdaAlgebra { lambda }
    }

    /// Normal form of `L_{s_1} ... L_{s_k}`, or `None` when it is zero.
    pub fn normal_form(&self, word: &[i64]) -> Option<Monomial> {
        let l = self.lambda as i64;
        let mut mono = vec![0i64; self.lambda];
        for &s in word {
            if s.abs() > l {
                return None;
            }
            if s > 0 {
                mono[(s - 1) as usize] += 1;
            } else if s < 0 {
                if l + s > 0 {
                    mono[(l + s - 1) as usize] += 1;
                }
                mono[(l - 1) as usize] -= 1;
            }
        }
        Some(mono)
    }
}

/// A finite-dimensional `A_lambda`-module: commuting matrices for
/// `L_1, ..., L_lambda` with `L_lambda` invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ALambdaModule {
    dim: usize,
    gens: Vec<Matrix>,
    top_inv: Option<Matrix>,
}

impl ALambdaModule {
    pub fn new(dim: usize, gens: Vec<Matrix>) -> Result<Self> {
        for (i, g) in gens.iter().enumerate() {
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::Malformed(format!("generator {} is not {dim}x{dim}", i + 1)));
            }
            for h in &gens[i + 1..] {
                if !g.commutator(h).is_zero() {
                    return Err(Error::Malformed("generators do not commute".into()));
                }
            }
        }
        let top_inv = match gens.last() {
            Some(g) => Some(g.inverse().ok_or_else(|| Error::Malformed("top generator is not invertible".into()))?),
            None => None,
        };
        Ok(ALambdaModule { dim, gens, top_inv })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn lambda(&self) -> usize {
        self.gens.len()
    }

    /// Matrix of `L_r` for `r > 0`; `r <= lambda` is assumed.
    pub fn generator(&self, r: usize) -> &Matrix {
        &self.gens[r - 1]
    }

    /// Matrix of `L_s` for any integer `s`.
    pub fn action(&self, s: i64) -> Matrix {
        let l = self.lambda() as i64;
        if s == 0 {
            return Matrix::identity(self.dim);
        }
        if s.abs() > l {
            return Matrix::zeros(self.dim, self.dim);
        }
        if s > 0 {
            return self.gens[(s - 1) as usize].clone();
        }
        let inv = self.top_inv.as_ref().expect("lambda > 0 here");
        &self.action(l + s) * inv
    }

    /// Evaluates a monomial in normal form.
    pub fn monomial(&self, mono: &[i64]) -> Matrix {
        let mut out = Matrix::identity(self.dim);
        for (i, &e) in mono.iter().enumerate() {
            let base = if e >= 0 { self.gens[i].clone() } else { self.top_inv.clone().expect("top inverse") };
            out = &out * &base.pow(e.unsigned_abs() as u32);
        }
        out
    }

    /// Whether every generator is diagonalizable with rational eigenvalues
    /// determined by the characteristic polynomial; a repeated eigenvalue
    /// with a nonzero nilpotent part makes this false.
    pub fn is_semisimple(&self) -> bool {
        self.gens.iter().all(|g| {
            let Some(roots) = crate::linalg::rational_roots(&g.char_poly()) else {
                return false;
            };
            let eig: usize = roots
                .iter()
                .map(|r| crate::linalg::nullspace(&(g - &Matrix::identity(self.dim).scale(r))).len())
                .sum();
            eig == self.dim
        })
    }
}

/// The one-dimensional module on which `L_r` acts by the coefficient of
/// `u^r` in `pi`.
pub fn evaluation_character(pi: &DrinfeldPoly, lambda: usize) -> Result<ALambdaModule> {
    if pi.degree() != lambda {
        return Err(Error::DegreeMismatch { expected: lambda, found: pi.degree() });
    }
    let c = pi.coefficients();
    let gens = (1..=lambda).map(|r| Matrix::diagonal(&[c[r].clone()])).collect();
    ALambdaModule::new(1, gens)
}

/// Outcome of reducing the ideal generated by `(L_1 + 2a[m])^2` and
/// `[r+2]L_{r+2} - (q^{r+1}L_1 + 2aq^m[r+1])L_{r+1} - a^2[2m-r]L_r`,
/// `0 <= r <= 2m`, in `A_{2m}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealAnalysis {
    pub m: u32,
    pub a: Scalar,
    /// `L_r = P_r(L_1)` after eliminating `L_2, ..., L_{2m}`.
    pub eliminated: Vec<Vec<Scalar>>,
    /// What the generators with `r = 2m-1` and `r = 2m` become in `L_1`.
    pub remaining: Vec<Vec<Scalar>>,
    /// Generator of the ideal of `C[L_1]` cut out by everything.
    pub quotient_poly: Vec<Scalar>,
    pub codim: usize,
    /// Every generator vanishes at the coefficients of `pi(m,a)^2`.
    pub membership: bool,
}

impl IdealAnalysis {
    /// `-2a[m]`, the value of `L_1` on `pi(m,a)^2`.
    pub fn eigenvalue(&self, q: &QParam) -> Scalar {
        -(&self.a * scalar::int(2) * q_int(i64::from(self.m), q))
    }
}

fn ideal_generator(r: usize, m: u32, a: &Scalar, q: &QParam, lam: &dyn Fn(usize) -> Vec<Scalar>) -> Vec<Scalar> {
    let ri = r as i64;
    let mi = i64::from(m);
    let two_a_qm = a * scalar::int(2) * q.pow(mi);
    // q^{r+1} X + 2 a q^m [r+1]
    let lin = vec![&two_a_qm * q_int(ri + 1, q), q.pow(ri + 1)];
    let t2 = series::poly_scale(&lam(r + 2), &q_int(ri + 2, q));
    let t1 = series::poly_mul(&lin, &lam(r + 1));
    let t0 = series::poly_scale(&lam(r), &(a * a * q_int(2 * mi - ri, q)));
    let mut g = series::poly_add(&t2, &series::poly_scale(&series::poly_add(&t1, &t0), &-Scalar::one()));
    series::trim(&mut g);
    g
}

pub fn ideal_i_analysis(m: u32, a: &Scalar, q: &QParam) -> Result<IdealAnalysis> {
    if m == 0 {
        return Err(Error::Malformed("the ideal needs m >= 1".into()));
    }
    if a.is_zero() {
        return Err(Error::ZeroRoot);
    }
    let top = 2 * m as usize;
    let mi = i64::from(m);
    let c = a * scalar::int(2) * q_int(mi, q);

    // P_0 = 1, P_1 = X, then solve the generator r for P_{r+2}
    let mut p: Vec<Vec<Scalar>> = vec![vec![Scalar::one()], vec![Scalar::zero(), Scalar::one()]];
    for r in 0..=top - 2 {
        let known = p.clone();
        let lam = |s: usize| if s == r + 2 { Vec::new() } else { known[s].clone() };
        let rest = ideal_generator(r, m, a, q, &lam);
        // [r+2] P_{r+2} + rest = 0
        p.push(series::poly_scale(&rest, &-q_int(r as i64 + 2, q).recip()));
    }
    let lam_all = |s: usize| if s <= top { p[s].clone() } else { Vec::new() };
    let remaining: Vec<Vec<Scalar>> = (top - 1..=top).map(|r| ideal_generator(r, m, a, q, &lam_all)).collect();
    for r in 0..=top - 2 {
        debug_assert!(ideal_generator(r, m, a, q, &lam_all).is_empty());
    }

    let square = series::poly_mul(&[c.clone(), Scalar::one()], &[c.clone(), Scalar::one()]);
    let mut quotient_poly = square;
    for g in &remaining {
        quotient_poly = series::poly_gcd(&quotient_poly, g);
    }
    // L_{2m} must stay invertible: drop factors where P_{2m} vanishes
    if series::poly_eval(&p[top], &-&c).is_zero() {
        quotient_poly = vec![Scalar::one()];
    }
    let codim = series::degree(&quotient_poly).unwrap_or(0);

    let pi = crate::dpoly::DrinfeldPoly::qstring(m, a, q)?.pow(2);
    let d = pi.coefficients();
    let point = |s: usize| vec![d.get(s).cloned().unwrap_or_else(Scalar::zero)];
    let mut membership = (&d[1] + &c).is_zero();
    for r in 0..=top {
        membership &= series::poly_eval(&ideal_generator(r, m, a, q, &point), &d[1]).is_zero();
    }

    Ok(IdealAnalysis { m, a: a.clone(), eliminated: p, remaining, quotient_poly, codim, membership })
}

/// `A_{2m}` modulo the ideal, as a two-dimensional module on the basis
/// `(1, L_1 + 2a[m])`.
pub fn ideal_i_quotient(m: u32, a: &Scalar, q: &QParam) -> Result<ALambdaModule> {
    let an = ideal_i_analysis(m, a, q)?;
    if an.codim != 2 {
        return Err(Error::Codimension(an.codim));
    }
    let x0 = an.eigenvalue(q);
    let gens = an.eliminated[1..]
        .iter()
        .map(|pr| {
            let v = series::poly_eval(pr, &x0);
            let dv = series::poly_eval(&series::derivative(pr), &x0);
            Matrix::from_fn(2, 2, |i, j| match (i, j) {
                (0, 1) => Scalar::zero(),
                (1, 0) => dv.clone(),
                _ => v.clone(),
            })
        })
        .collect();
    ALambdaModule::new(2, gens)
}

/// `W(pi)` as a tensor product of `eval(1, a_s)`, one factor per root with
/// multiplicity, in an order that is cyclic on the top vector.
pub fn local_weyl(pi: &DrinfeldPoly, q: &QParam) -> Result<Module> {
    if pi.is_trivial() {
        return Err(Error::TrivialPolynomial);
    }
    let roots = pi.roots_with_multiplicity();
    let mut orders: Vec<Vec<Scalar>> = Vec::new();
    let mut desc = roots.clone();
    desc.sort_by(|a, b| b.cmp(a));
    orders.push(desc);
    orders.push(roots.clone());
    let mut seen: BTreeSet<Vec<Scalar>> = BTreeSet::new();
    let mut perm = roots.clone();
    perm.sort();
    let mut all = Vec::new();
    loop {
        all.push(perm.clone());
        if !next_permutation(&mut perm) {
            break;
        }
    }
    orders.extend(all);

    let mut tried = 0;
    for order in orders {
        if !seen.insert(order.clone()) {
            continue;
        }
        tried += 1;
        let mut w: Option<Module> = None;
        for a in &order {
            let f = eval_module(&EvalModuleSpec::new(1, a.clone(), q.clone())?);
            w = Some(match w {
                None => f,
                Some(acc) => acc.tensor(&f)?,
            });
        }
        let w = w.expect("nontrivial");
        let mut top = vec![Scalar::zero(); w.dim()];
        top[0] = Scalar::one();
        if spin(&w, &top).len() == w.dim() {
            return Ok(w.with_label(format!("weyl({pi})")));
        }
    }
    Err(Error::NotCyclic { tried })
}

fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `(dim Ext^1(W(pi), W(pi)), deg pi)`.
pub fn ext_weyl_dimension_check(pi: &DrinfeldPoly, q: &QParam) -> Result<(usize, usize)> {
    let w = local_weyl(pi, q)?;
    let e = ext1(&w, &w)?;
    Ok((e.dim, pi.degree()))
}

/// Coefficients `Lambda_r` for `-lambda <= r <= lambda` of a character.
pub fn character_values(module: &ALambdaModule) -> BTreeMap<i64, Scalar> {
    let l = module.lambda() as i64;
    (-l..=l).map(|s| (s, module.action(s).get(0, 0).clone())).collect()
}
