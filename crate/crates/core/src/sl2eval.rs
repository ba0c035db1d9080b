//! Evaluation modules of the loop algebra of sl2 and their one-relation
//! presentations.

use num_traits::Zero;

use crate::dpoly::DrinfeldPoly;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qnum::{q_int, QParam};
use crate::repcore::{drinfeld_matrices, spin, Module};
use crate::scalar::{self, Scalar};
use crate::weylalg::local_weyl;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalModuleSpec {
    pub m: u32,
    pub a: Scalar,
    pub q: QParam,
}

impl EvalModuleSpec {
    pub fn new(m: u32, a: Scalar, q: QParam) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroRoot);
        }
        Ok(EvalModuleSpec { m, a, q })
    }

    pub fn dim(&self) -> usize {
        self.m as usize + 1
    }

    /// Basis index of `v_j`; the basis is ordered `v_m, ..., v_0`.
    pub fn index(&self, j: u32) -> usize {
        (self.m - j) as usize
    }

    pub fn drinfeld_poly(&self) -> DrinfeldPoly {
        DrinfeldPoly::qstring(self.m, &self.a, &self.q).expect("a is nonzero")
    }

    /// `x+_r v_j = (a q^{-m+2j+2})^r [j+1] v_{j+1}`.
    pub fn xplus(&self, r: i64) -> Matrix {
        let (m, q) = (i64::from(self.m), &self.q);
        let mut x = Matrix::zeros(self.dim(), self.dim());
        for j in 0..self.m {
            let jj = i64::from(j);
            let c = scalar::pow(&(&self.a * q.pow(-m + 2 * jj + 2)), r) * q_int(jj + 1, q);
            x.set(self.index(j + 1), self.index(j), c);
        }
        x
    }

    /// `x-_r v_j = (a q^{-m+2j})^r [m-j+1] v_{j-1}`.
    pub fn xminus(&self, r: i64) -> Matrix {
        let (m, q) = (i64::from(self.m), &self.q);
        let mut x = Matrix::zeros(self.dim(), self.dim());
        for j in 1..=self.m {
            let jj = i64::from(j);
            let c = scalar::pow(&(&self.a * q.pow(-m + 2 * jj)), r) * q_int(m - jj + 1, q);
            x.set(self.index(j - 1), self.index(j), c);
        }
        x
    }
}

/// The `(m+1)`-dimensional evaluation module with `e0 = x-_1 k^{-1}` and
/// `f0 = k x+_{-1}`.
pub fn eval_module(spec: &EvalModuleSpec) -> Module {
    let m = i64::from(spec.m);
    let weights: Vec<i64> = (0..=spec.m).rev().map(|j| 2 * i64::from(j) - m).collect();
    let k = Matrix::diagonal(&weights.iter().map(|&w| spec.q.pow(w)).collect::<Vec<_>>());
    let ki = Matrix::diagonal(&weights.iter().map(|&w| spec.q.pow(-w)).collect::<Vec<_>>());
    let act = [spec.xplus(0), spec.xminus(0), &spec.xminus(1) * &ki, &k * &spec.xplus(-1)];
    let label = format!("eval({},{},{})", spec.m, scalar::to_text(&spec.a), spec.q);
    Module::new(spec.q.clone(), weights, act, label).expect("weight-homogeneous by construction")
}

fn top_vector(dim: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); dim];
    v[0] = num_traits::One::one();
    v
}

/// `(x-_1 - c x-_0) v_m` with the Drinfeld generators recovered from the
/// Chevalley action.
pub fn genrel_single_vector(spec: &EvalModuleSpec, c: &Scalar) -> Result<Vec<Scalar>> {
    let v = eval_module(spec);
    let dm = drinfeld_matrices(&v, 1)?;
    let op = &dm.xminus[&1] - &dm.xminus[&0].scale(c);
    Ok(op.mul_vec(&top_vector(v.dim())))
}

/// Whether `(x-_1 - a q^m x-_0) v_m = 0`.
pub fn check_genrel_single(spec: &EvalModuleSpec) -> Result<bool> {
    let c = &spec.a * spec.q.pow(i64::from(spec.m));
    Ok(genrel_single_vector(spec, &c)?.iter().all(Zero::is_zero))
}

/// `x-_2 - c1 x-_1 + c2 x-_0`.
fn square_relation(v: &Module, c1: &Scalar, c2: &Scalar) -> Result<Matrix> {
    let dm = drinfeld_matrices(v, 2)?;
    Ok(&(&dm.xminus[&2] - &dm.xminus[&1].scale(c1)) + &dm.xminus[&0].scale(c2))
}

/// The standard coefficients `(2 a q^m, a^2 q^{2m})` of the square relation.
pub fn square_coefficients(spec: &EvalModuleSpec) -> (Scalar, Scalar) {
    let aq = &spec.a * spec.q.pow(i64::from(spec.m));
    (&aq * scalar::int(2), &aq * &aq)
}

pub fn genrel_square_vector(spec: &EvalModuleSpec, c1: &Scalar, c2: &Scalar) -> Result<Vec<Scalar>> {
    let v = eval_module(spec);
    let vv = v.tensor(&v)?;
    Ok(square_relation(&vv, c1, c2)?.mul_vec(&top_vector(vv.dim())))
}

/// Whether `(x-_2 - 2 a q^m x-_1 + a^2 q^{2m} x-_0)(v_m (x) v_m) = 0`.
pub fn check_genrel_square(spec: &EvalModuleSpec) -> Result<bool> {
    let (c1, c2) = square_coefficients(spec);
    Ok(genrel_square_vector(spec, &c1, &c2)?.iter().all(Zero::is_zero))
}

/// `(dim W, dim W / <relation vector>)` for the local Weyl module of
/// `pi(m,a)^2` and the square relation with coefficients `(c1, c2)`.
pub fn weyl_quotient_dims_with(spec: &EvalModuleSpec, c1: &Scalar, c2: &Scalar) -> Result<(usize, usize)> {
    let pi = spec.drinfeld_poly().pow(2);
    let w = local_weyl(&pi, &spec.q)?;
    let rel = square_relation(&w, c1, c2)?.mul_vec(&top_vector(w.dim()));
    let sub = if rel.iter().all(Zero::is_zero) { 0 } else { spin(&w, &rel).len() };
    Ok((w.dim(), w.dim() - sub))
}

pub fn weyl_quotient_dims(spec: &EvalModuleSpec) -> Result<(usize, usize)> {
    let (c1, c2) = square_coefficients(spec);
    weyl_quotient_dims_with(spec, &c1, &c2)
}
