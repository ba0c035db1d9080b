//! Finite-dimensional type-1 modules given by Chevalley generator matrices.

mod analysis;
mod drinfeld;
mod json;
mod presentation;

pub use analysis::{highest_lweight_vectors, is_simple, spin, LWeightBlock, Simplicity};
pub use drinfeld::{default_window, drinfeld_matrices, DrinfeldMatrices};
pub use json::ModuleJson;
pub use presentation::{verify_presentation, PresentationReport, Residual};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qnum::QParam;
use crate::scalar::Scalar;

/// Chevalley generators of the loop algebra of sl2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    E1,
    F1,
    E0,
    F0,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::E1, Gen::F1, Gen::E0, Gen::F0];

    pub fn name(self) -> &'static str {
        match self {
            Gen::E1 => "e1",
            Gen::F1 => "f1",
            Gen::E0 => "e0",
            Gen::F0 => "f0",
        }
    }

    /// Change of weight caused by the generator.
    pub fn weight_shift(self) -> i64 {
        match self {
            Gen::E1 | Gen::F0 => 2,
            Gen::F1 | Gen::E0 => -2,
        }
    }

    /// Loop degree: `e0` and `f0` carry `+1` and `-1`.
    pub fn degree(self) -> i64 {
        match self {
            Gen::E1 | Gen::F1 => 0,
            Gen::E0 => 1,
            Gen::F0 => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Module {
    q: QParam,
    weights: Vec<i64>,
    act: [Matrix; 4],
    label: String,
}

impl Module {
    /// Builds a module from generator matrices in the order `e1, f1, e0, f0`,
    /// checking shapes and weight homogeneity. The defining relations are
    /// checked separately by [`verify_presentation`].
    pub fn new(q: QParam, weights: Vec<i64>, act: [Matrix; 4], label: impl Into<String>) -> Result<Self> {
        let n = weights.len();
        for (g, m) in Gen::ALL.iter().zip(&act) {
            if m.rows() != n || m.cols() != n {
                return Err(Error::Malformed(format!("{} is {}x{}, expected {n}x{n}", g.name(), m.rows(), m.cols())));
            }
            for (i, j, _) in m.nonzero_entries() {
                if weights[i] != weights[j] + g.weight_shift() {
                    return Err(Error::Malformed(format!(
                        "{} has an entry at ({i},{j}) between weights {} and {}",
                        g.name(),
                        weights[j],
                        weights[i]
                    )));
                }
            }
        }
        Ok(Module { q, weights, act, label: label.into() })
    }

    /// The one-dimensional trivial module.
    pub fn trivial(q: QParam) -> Self {
        let z = Matrix::zeros(1, 1);
        Module { q, weights: vec![0], act: [z.clone(), z.clone(), z.clone(), z], label: "trivial".into() }
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn q(&self) -> &QParam {
        &self.q
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn act(&self, g: Gen) -> &Matrix {
        &self.act[g as usize]
    }

    pub fn actions(&self) -> &[Matrix; 4] {
        &self.act
    }

    pub fn e1(&self) -> &Matrix {
        self.act(Gen::E1)
    }

    pub fn f1(&self) -> &Matrix {
        self.act(Gen::F1)
    }

    pub fn e0(&self) -> &Matrix {
        self.act(Gen::E0)
    }

    pub fn f0(&self) -> &Matrix {
        self.act(Gen::F0)
    }

    /// `k^e`, diagonal with entries `q^{e * weight}`.
    pub fn k_pow(&self, e: i64) -> Matrix {
        let d: Vec<Scalar> = self.weights.iter().map(|&w| self.q.pow(e * w)).collect();
        Matrix::diagonal(&d)
    }

    pub fn k(&self) -> Matrix {
        self.k_pow(1)
    }

    pub fn k_inv(&self) -> Matrix {
        self.k_pow(-1)
    }

    /// Indices of basis vectors of weight `mu`.
    pub fn weight_indices(&self, mu: i64) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.weights[i] == mu).collect()
    }

    /// Distinct weights in decreasing order.
    pub fn distinct_weights(&self) -> Vec<i64> {
        let mut w = self.weights.clone();
        w.sort_unstable_by(|a, b| b.cmp(a));
        w.dedup();
        w
    }

    pub fn max_weight(&self) -> i64 {
        self.weights.iter().copied().max().unwrap_or(0)
    }

    fn check_same_q(&self, other: &Module) -> Result<()> {
        if self.q != other.q {
            return Err(Error::QMismatch(self.q.to_string(), other.q.to_string()));
        }
        Ok(())
    }

    /// Tensor product through the coproduct
    /// `e -> e(x)1 + k(x)e`, `f -> f(x)k^{-1} + 1(x)f` with `k0 = k^{-1}`.
    /// Basis vector `(i, j)` sits at index `i * dim(other) + j`.
    pub fn tensor(&self, other: &Module) -> Result<Module> {
        self.check_same_q(other)?;
        let (iv, iw) = (Matrix::identity(self.dim()), Matrix::identity(other.dim()));
        let (kv, kvi) = (self.k(), self.k_inv());
        let (kw, kwi) = (other.k(), other.k_inv());
        let e1 = &self.e1().kron(&iw) + &kv.kron(other.e1());
        let f1 = &self.f1().kron(&kwi) + &iv.kron(other.f1());
        let e0 = &self.e0().kron(&iw) + &kvi.kron(other.e0());
        let f0 = &self.f0().kron(&kw) + &iv.kron(other.f0());
        let weights = self.weights.iter().flat_map(|a| other.weights.iter().map(move |b| a + b)).collect();
        let label = format!("tensor({},{})", self.label, other.label);
        Ok(Module { q: self.q.clone(), weights, act: [e1, f1, e0, f0], label })
    }

    /// Dual module on the dual basis: `x` acts by the transpose of `S(x)`,
    /// with `S(e) = -k^{-1} e` and `S(f) = -f k` (and `k0 = k^{-1}`).
    pub fn dual(&self) -> Module {
        let (k, ki) = (self.k(), self.k_inv());
        let s = |m: Matrix| (-&m).transpose();
        let e1 = s(&ki * self.e1());
        let f1 = s(self.f1() * &k);
        let e0 = s(&k * self.e0());
        let f0 = s(self.f0() * &ki);
        let weights = self.weights.iter().map(|w| -w).collect();
        Module { q: self.q.clone(), weights, act: [e1, f1, e0, f0], label: format!("dual({})", self.label) }
    }

    /// Direct sum `self (+) other`.
    pub fn direct_sum(&self, other: &Module) -> Result<Module> {
        self.check_same_q(other)?;
        let act = std::array::from_fn(|g| {
            let (a, b) = (&self.act[g], &other.act[g]);
            Matrix::block(a, &Matrix::zeros(a.rows(), b.cols()), &Matrix::zeros(b.rows(), a.cols()), b)
        });
        let weights = self.weights.iter().chain(&other.weights).copied().collect();
        Ok(Module { q: self.q.clone(), weights, act, label: format!("sum({},{})", self.label, other.label) })
    }
}

#[cfg(test)]
mod tests;
