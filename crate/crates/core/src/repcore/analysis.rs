use std::collections::{BTreeMap, VecDeque};

use num_traits::Zero;

use super::{drinfeld_matrices, Gen, Module};
use crate::error::{Error, Result};
use crate::linalg::{self, combine, Echelon, Matrix};
use crate::scalar::Scalar;

/// A joint eigenspace of the `h_s` inside the highest l-weight space of one
/// weight, or a piece whose spectrum could not be split over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LWeightBlock {
    Eigen {
        weight: i64,
        /// Joint eigenvectors, as coordinate vectors in the module.
        basis: Vec<Vec<Scalar>>,
        /// Eigenvalue of `h_s` for `0 < |s| <= R`.
        h: BTreeMap<i64, Scalar>,
        /// Dimension of the joint generalized eigenspace.
        generalized_dim: usize,
    },
    Undecided {
        weight: i64,
        basis: Vec<Vec<Scalar>>,
        reason: String,
    },
}

impl LWeightBlock {
    pub fn weight(&self) -> i64 {
        match self {
            LWeightBlock::Eigen { weight, .. } | LWeightBlock::Undecided { weight, .. } => *weight,
        }
    }

    /// True when every `h_s` acts semisimply on the generalized eigenspace.
    pub fn is_semisimple(&self) -> bool {
        match self {
            LWeightBlock::Eigen { basis, generalized_dim, .. } => basis.len() == *generalized_dim,
            LWeightBlock::Undecided { .. } => false,
        }
    }
}

/// Highest l-weight vectors of `v`: the joint kernel of `x+_r` for
/// `|r| <= R`, split by weight and then by joint eigenvalues of the `h_s`.
///
/// The kernel is certified to be the full space of vectors killed by every
/// `x+_r` by checking that it is stable under `h_1` and `h_{-1}`.
pub fn highest_lweight_vectors(v: &Module, window: usize) -> Result<Vec<LWeightBlock>> {
    let dm = drinfeld_matrices(v, window)?;
    let n = v.dim();
    let mut blocks = Vec::new();
    for mu in v.distinct_weights() {
        let idx = v.weight_indices(mu);
        let mut e = Echelon::new(idx.len());
        for x in dm.xplus.values() {
            for i in 0..n {
                let row: Vec<Scalar> = idx.iter().map(|&j| x.get(i, j).clone()).collect();
                if row.iter().any(|c| !c.is_zero()) {
                    e.insert(row);
                }
            }
        }
        let basis: Vec<Vec<Scalar>> = e
            .nullspace()
            .into_iter()
            .map(|c| {
                let mut full = vec![Scalar::zero(); n];
                for (&j, x) in idx.iter().zip(c) {
                    full[j] = x;
                }
                full
            })
            .collect();
        if basis.is_empty() {
            continue;
        }
        for s in [1, -1] {
            if linalg::restrict(&dm.h[&s], &basis).is_none() {
                return Err(Error::Window(format!(
                    "kernel of x+_r for |r| <= {window} in weight {mu} is not stable under h_{s}"
                )));
            }
        }
        split_joint(mu, basis, &dm.h, &mut blocks)?;
    }
    Ok(blocks)
}

fn split_joint(
    weight: i64,
    basis: Vec<Vec<Scalar>>,
    h: &BTreeMap<i64, Matrix>,
    out: &mut Vec<LWeightBlock>,
) -> Result<()> {
    // (generalized eigenspace, eigenvalues so far)
    let mut pieces: Vec<(Vec<Vec<Scalar>>, BTreeMap<i64, Scalar>)> = vec![(basis, BTreeMap::new())];
    for (&s, hs) in h {
        let mut next = Vec::new();
        for (sub, vals) in pieces {
            let a = linalg::restrict(hs, &sub).ok_or_else(|| {
                Error::DrinfeldRelation(format!("h_{s} does not preserve the highest l-weight space"))
            })?;
            let d = sub.len();
            let Some(roots) = linalg::rational_roots(&a.char_poly()) else {
                out.push(LWeightBlock::Undecided {
                    weight,
                    basis: sub,
                    reason: format!("root search for the characteristic polynomial of h_{s} did not finish"),
                });
                continue;
            };
            let mut covered = 0;
            let mut split = Vec::new();
            for lam in roots {
                let shifted = &a - &Matrix::identity(d).scale(&lam);
                let gen = linalg::nullspace(&shifted.pow(d as u32));
                covered += gen.len();
                let vecs: Vec<Vec<Scalar>> = gen.iter().map(|c| combine(c, &sub)).collect();
                let mut vals = vals.clone();
                vals.insert(s, lam);
                split.push((vecs, vals));
            }
            if covered < d {
                out.push(LWeightBlock::Undecided {
                    weight,
                    basis: sub,
                    reason: format!("characteristic polynomial of h_{s} does not split over the rationals"),
                });
                continue;
            }
            next.extend(split);
        }
        pieces = next;
    }
    for (sub, vals) in pieces {
        let generalized_dim = sub.len();
        let mut e = Echelon::new(sub.len());
        for (s, lam) in &vals {
            let a = linalg::restrict(&h[s], &sub).expect("stable by construction");
            let shifted = &a - &Matrix::identity(sub.len()).scale(lam);
            for i in 0..shifted.rows() {
                e.insert(shifted.row(i).to_vec());
            }
        }
        let basis = e.nullspace().iter().map(|c| combine(c, &sub)).collect();
        out.push(LWeightBlock::Eigen { weight, basis, h: vals, generalized_dim });
    }
    Ok(())
}

/// Submodule generated by `v`: closure under `e1, f1, e0, f0` and `k`.
pub fn spin(m: &Module, v: &[Scalar]) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new(m.dim());
    let mut basis = Vec::new();
    let mut queue = VecDeque::new();
    // splitting into weight components makes the span k-stable
    for mu in m.distinct_weights() {
        let comp: Vec<Scalar> =
            (0..m.dim()).map(|i| if m.weights()[i] == mu { v[i].clone() } else { Scalar::zero() }).collect();
        queue.push_back(comp);
    }
    while let Some(w) = queue.pop_front() {
        if !e.insert(w.clone()) {
            continue;
        }
        for g in Gen::ALL {
            let x = m.act(g).mul_vec(&w);
            if x.iter().any(|c| !c.is_zero()) {
                queue.push_back(x);
            }
        }
        basis.push(w);
    }
    basis
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Simplicity {
    Simple,
    /// `certificate` generates a proper nonzero submodule.
    NotSimple { certificate: Vec<Scalar>, reason: String },
    Undecided(String),
}

impl Simplicity {
    pub fn is_simple(&self) -> Option<bool> {
        match self {
            Simplicity::Simple => Some(true),
            Simplicity::NotSimple { .. } => Some(false),
            Simplicity::Undecided(_) => None,
        }
    }
}

/// Decides simplicity from the highest l-weight vectors.
///
/// Every nonzero submodule contains a highest l-weight vector. A simple
/// module has a one-dimensional highest l-weight space, so two independent
/// such vectors already show reducibility; a lone line decides by spinning.
pub fn is_simple(v: &Module, window: usize) -> Result<Simplicity> {
    let blocks = highest_lweight_vectors(v, window)?;
    let mut lines: Vec<(i64, Vec<Scalar>)> = Vec::new();
    for b in &blocks {
        match b {
            LWeightBlock::Undecided { reason, .. } => return Ok(Simplicity::Undecided(reason.clone())),
            LWeightBlock::Eigen { weight, basis, .. } => lines.extend(basis.iter().map(|x| (*weight, x.clone()))),
        }
    }
    let top = v.max_weight();
    match lines.len() {
        0 => Ok(Simplicity::Undecided("no highest l-weight vector found".into())),
        1 => {
            let (_, x) = lines.pop().expect("one line");
            let dim = spin(v, &x).len();
            if dim == v.dim() {
                Ok(Simplicity::Simple)
            } else {
                Ok(Simplicity::NotSimple {
                    certificate: x,
                    reason: format!("the highest l-weight vector generates a submodule of dimension {dim}"),
                })
            }
        }
        count => {
            // a vector below the top weight cannot reach the top weight space
            let (w, x) = lines.iter().find(|(w, _)| *w < top).unwrap_or(&lines[0]).clone();
            let dim = spin(v, &x).len();
            debug_assert!(dim < v.dim());
            Ok(Simplicity::NotSimple {
                certificate: x,
                reason: format!(
                    "{count} independent highest l-weight vectors; the one of weight {w} generates a submodule of dimension {dim}"
                ),
            })
        }
    }
}
