//! The graded self-extension of a module and the exact computation of
//! `Ext^1` through derivation cocycles modulo inner coboundaries.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::dpoly::{primitive_root, DrinfeldPoly};
use crate::error::{Error, Result};
use crate::linalg::{self, Echelon, Matrix};
use crate::qnum::{q_binom, q_int, QParam};
use crate::repcore::{default_window, is_simple, Gen, Module, Simplicity};
use crate::scalar::{self, Scalar};
use crate::sl2eval::{eval_module, EvalModuleSpec};

/// `E(V)` on `V (+) V`: a generator of loop degree `d` acts by
/// `[[g, 0], [d g, g]]`.
pub fn graded_twist(v: &Module) -> Module {
    let act = Gen::ALL.map(|g| {
        let m = v.act(g);
        let z = Matrix::zeros(m.rows(), m.cols());
        Matrix::block(m, &z, &m.scale(&scalar::int(g.degree())), m)
    });
    let weights = v.weights().iter().chain(v.weights()).copied().collect();
    Module::new(v.q().clone(), weights, act, format!("eself({})", v.label())).expect("weights are preserved")
}

/// Position of every unknown entry `delta_g[i, j]` (`i` in the target,
/// `j` in the source) allowed by weight homogeneity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CocycleLayout {
    pub source_dim: usize,
    pub target_dim: usize,
    index: BTreeMap<(Gen, usize, usize), usize>,
    entries: Vec<(Gen, usize, usize)>,
}

impl CocycleLayout {
    fn new(source: &Module, target: &Module) -> Self {
        let mut index = BTreeMap::new();
        let mut entries = Vec::new();
        for g in Gen::ALL {
            for i in 0..target.dim() {
                for j in 0..source.dim() {
                    if target.weights()[i] == source.weights()[j] + g.weight_shift() {
                        index.insert((g, i, j), entries.len());
                        entries.push((g, i, j));
                    }
                }
            }
        }
        CocycleLayout { source_dim: source.dim(), target_dim: target.dim(), index, entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Matrices `(delta e1, delta f1, delta e0, delta f0)` of a coordinate vector.
    pub fn to_matrices(&self, x: &[Scalar]) -> [Matrix; 4] {
        let mut out = std::array::from_fn(|_| Matrix::zeros(self.target_dim, self.source_dim));
        for (&(g, i, j), c) in self.entries.iter().zip(x) {
            out[g as usize].set(i, j, c.clone());
        }
        out
    }

    /// Coordinates of four matrices, or `None` if an entry sits outside the
    /// allowed weight pattern.
    pub fn to_coordinates(&self, mats: &[Matrix; 4]) -> Option<Vec<Scalar>> {
        let mut x = vec![Scalar::zero(); self.len()];
        for g in Gen::ALL {
            for (i, j, c) in mats[g as usize].nonzero_entries() {
                x[*self.index.get(&(g, i, j))?] = c.clone();
            }
        }
        Some(x)
    }
}

/// `Ext^1(V, W)`: extensions `0 -> W -> E -> V -> 0` realized on `V (+) W`
/// with generators acting by `[[rho_V(g), 0], [delta_g, rho_W(g)]]`.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub dim: usize,
    pub dim_cocycles: usize,
    pub dim_coboundaries: usize,
    pub layout: CocycleLayout,
    /// Cocycles whose classes form a basis of `Ext^1`.
    pub cocycle_basis: Vec<Vec<Scalar>>,
    /// Basis of the coboundary space.
    pub coboundaries: Vec<Vec<Scalar>>,
    pub source_label: String,
    pub target_label: String,
}

impl ExtSpace {
    pub fn cocycle_matrices(&self) -> Vec<[Matrix; 4]> {
        self.cocycle_basis.iter().map(|x| self.layout.to_matrices(x)).collect()
    }
}

/// One summand `coef * A delta_g B` of a linearized relation.
struct Term<'a> {
    coef: Scalar,
    left: &'a Matrix,
    gen: Gen,
    right: &'a Matrix,
}

/// Sparse linear equations in the cocycle unknowns, one per entry of the
/// lower-left block of each relation.
fn assemble(layout: &CocycleLayout, shift: i64, source: &Module, target: &Module, terms: &[Term<'_>], out: &mut Echelon) {
    let n = layout.len();
    for p in 0..target.dim() {
        for s in 0..source.dim() {
            if target.weights()[p] != source.weights()[s] + shift {
                continue;
            }
            let mut row = vec![Scalar::zero(); n];
            let mut any = false;
            for t in terms {
                for a in 0..target.dim() {
                    let l = t.left.get(p, a);
                    if l.is_zero() {
                        continue;
                    }
                    for b in 0..source.dim() {
                        let r = t.right.get(b, s);
                        if r.is_zero() {
                            continue;
                        }
                        if let Some(&u) = layout.index.get(&(t.gen, a, b)) {
                            row[u] += &t.coef * l * r;
                            any = true;
                        }
                    }
                }
            }
            if any && row.iter().any(|c| !c.is_zero()) {
                out.insert(row);
            }
        }
    }
}

/// Computes `Ext^1(V, W)` in the category of type-1 modules: `delta_k = 0`,
/// weight-homogeneous `delta_g`, subject to the linearized Chevalley
/// relations, modulo `g -> rho_W(g) N - N rho_V(g)` for weight-preserving `N`.
pub fn ext1(source: &Module, target: &Module) -> Result<ExtSpace> {
    if source.q() != target.q() {
        return Err(Error::QMismatch(source.q().to_string(), target.q().to_string()));
    }
    let q = source.q();
    let layout = CocycleLayout::new(source, target);
    let mut eqs = Echelon::new(layout.len());
    let id_v = Matrix::identity(source.dim());
    let id_w = Matrix::identity(target.dim());
    let one = Scalar::one();

    // [e_i, f_j]: rho_W(e) d(f) + d(e) rho_V(f) - rho_W(f) d(e) - d(f) rho_V(e)
    for (e, f) in [(Gen::E1, Gen::F1), (Gen::E0, Gen::F0), (Gen::E1, Gen::F0), (Gen::E0, Gen::F1)] {
        let terms = [
            Term { coef: one.clone(), left: target.act(e), gen: f, right: &id_v },
            Term { coef: one.clone(), left: &id_w, gen: e, right: source.act(f) },
            Term { coef: -one.clone(), left: target.act(f), gen: e, right: &id_v },
            Term { coef: -one.clone(), left: &id_w, gen: f, right: source.act(e) },
        ];
        assemble(&layout, e.weight_shift() + f.weight_shift(), source, target, &terms, &mut eqs);
    }

    // Serre words x^{3-m} y x^m with one letter replaced by its delta
    for (x, y) in [(Gen::E1, Gen::E0), (Gen::E0, Gen::E1), (Gen::F1, Gen::F0), (Gen::F0, Gen::F1)] {
        let mut owned: Vec<(Scalar, Matrix, Gen, Matrix)> = Vec::new();
        for m in 0..=3usize {
            let c = q_binom(3, m as u32, q)? * scalar::int(if m % 2 == 0 { 1 } else { -1 });
            let word: Vec<Gen> = std::iter::repeat_n(x, 3 - m).chain([y]).chain(std::iter::repeat_n(x, m)).collect();
            for t in 0..4 {
                let prefix = word[..t].iter().fold(id_w.clone(), |acc, &g| &acc * target.act(g));
                let suffix = word[t + 1..].iter().fold(id_v.clone(), |acc, &g| &acc * source.act(g));
                owned.push((c.clone(), prefix, word[t], suffix));
            }
        }
        let terms: Vec<Term<'_>> =
            owned.iter().map(|(c, l, g, r)| Term { coef: c.clone(), left: l, gen: *g, right: r }).collect();
        assemble(&layout, 3 * x.weight_shift() + y.weight_shift(), source, target, &terms, &mut eqs);
    }

    let cocycles = eqs.nullspace();

    let mut bspace = Echelon::new(layout.len());
    let mut coboundaries = Vec::new();
    for a in 0..target.dim() {
        for b in 0..source.dim() {
            if target.weights()[a] != source.weights()[b] {
                continue;
            }
            let mut n = Matrix::zeros(target.dim(), source.dim());
            n.set(a, b, one.clone());
            let mats = Gen::ALL.map(|g| &(target.act(g) * &n) - &(&n * source.act(g)));
            let x = layout.to_coordinates(&mats).expect("coboundaries are weight-homogeneous");
            if bspace.insert(x.clone()) {
                coboundaries.push(x);
            }
        }
    }
    let dim_coboundaries = bspace.rank();
    let mut full = bspace;
    let mut cocycle_basis = Vec::new();
    for z in &cocycles {
        if full.insert(z.clone()) {
            cocycle_basis.push(z.clone());
        }
    }
    Ok(ExtSpace {
        dim: cocycles.len() - dim_coboundaries,
        dim_cocycles: cocycles.len(),
        dim_coboundaries,
        layout,
        cocycle_basis,
        coboundaries,
        source_label: source.label().to_string(),
        target_label: target.label().to_string(),
    })
}

/// Coordinates of the class of a block-lower-triangular self-extension of
/// `v` in the basis of `ext1(v, v)`.
pub fn class_of(v_ext: &Module, v: &Module) -> Result<Vec<Scalar>> {
    let n = v.dim();
    if v_ext.dim() != 2 * n {
        return Err(Error::ExtensionShape(format!("dimension {} is not twice {n}", v_ext.dim())));
    }
    if v_ext.weights()[..n] != *v.weights() || v_ext.weights()[n..] != *v.weights() {
        return Err(Error::ExtensionShape("weights are not those of V (+) V".into()));
    }
    let mut delta: [Matrix; 4] = std::array::from_fn(|_| Matrix::zeros(n, n));
    for g in Gen::ALL {
        let m = v_ext.act(g);
        if !m.submatrix(0..n, n..2 * n).is_zero() {
            return Err(Error::ExtensionShape(format!("{} has a nonzero upper-right block", g.name())));
        }
        if m.submatrix(0..n, 0..n) != *v.act(g) || m.submatrix(n..2 * n, n..2 * n) != *v.act(g) {
            return Err(Error::ExtensionShape(format!("diagonal blocks of {} differ from V", g.name())));
        }
        delta[g as usize] = m.submatrix(n..2 * n, 0..n);
    }
    let ext = ext1(v, v)?;
    let c = ext
        .layout
        .to_coordinates(&delta)
        .ok_or_else(|| Error::ExtensionShape("off-diagonal block is not weight-homogeneous".into()))?;
    let cols: Vec<Vec<Scalar>> = ext.cocycle_basis.iter().chain(&ext.coboundaries).cloned().collect();
    let a = Matrix::from_columns(ext.layout.len(), &cols);
    let x = linalg::solve(&a, &c).ok_or_else(|| Error::ExtensionShape("off-diagonal block is not a cocycle".into()))?;
    Ok(x[..ext.dim].to_vec())
}

/// Splits the roots of `pi` into q-strings in general position: roots are
/// grouped by their class modulo `q^2`, and the longest run of consecutive
/// roots is removed repeatedly. Returns `(length, center)` pairs.
pub fn qstring_decomposition(pi: &DrinfeldPoly, q: &QParam) -> Vec<(u32, Scalar)> {
    let q2 = QParam::new(q.value() * q.value()).expect("q^2 is not 0 or +-1");
    // class representative -> exponent -> multiplicity
    let mut classes: Vec<(Scalar, BTreeMap<i64, u32>)> = Vec::new();
    for (a, p) in pi.roots() {
        let hit = classes.iter_mut().find_map(|(base, exps)| q2.log(&(a / &*base)).map(|k| (exps, k)));
        match hit {
            Some((exps, k)) => *exps.entry(k).or_insert(0) += p,
            None => classes.push((a.clone(), BTreeMap::from([(0, p)]))),
        }
    }
    let mut out = Vec::new();
    for (base, mut exps) in classes {
        while !exps.is_empty() {
            let keys: Vec<i64> = exps.keys().copied().collect();
            let (mut best, mut best_len) = (keys[0], 0usize);
            let mut i = 0;
            while i < keys.len() {
                let mut j = i;
                while j + 1 < keys.len() && keys[j + 1] == keys[j] + 1 {
                    j += 1;
                }
                if j - i + 1 > best_len {
                    best = keys[i];
                    best_len = j - i + 1;
                }
                i = j + 1;
            }
            for k in best..best + best_len as i64 {
                let e = exps.get_mut(&k).expect("present");
                *e -= 1;
                if *e == 0 {
                    exps.remove(&k);
                }
            }
            let len = best_len as u32;
            let center = &base * q2.pow(best) * q.pow(i64::from(len) - 1);
            out.push((len, center));
        }
    }
    out
}

/// The tensor product of evaluation modules attached to a q-string
/// decomposition.
pub fn string_module(strings: &[(u32, Scalar)], q: &QParam) -> Result<Module> {
    let mut v: Option<Module> = None;
    for (m, a) in strings {
        let f = eval_module(&EvalModuleSpec::new(*m, a.clone(), q.clone())?);
        v = Some(match v {
            None => f,
            Some(acc) => acc.tensor(&f)?,
        });
    }
    v.ok_or(Error::TrivialPolynomial)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theorem1Report {
    pub pi: DrinfeldPoly,
    pub strings: Vec<(u32, Scalar)>,
    pub ext_dim: usize,
    pub pi0: DrinfeldPoly,
    pub s: u32,
    /// Whether `dim Ext^1 = 1`, the hypothesis of the factorization claim.
    pub applicable: bool,
    pub pi0_is_single_string: bool,
    /// `pi = pi0^s` with `pi0` a single q-string; only meaningful when
    /// `applicable`.
    pub conclusion_holds: bool,
}

/// Builds the simple module of `pi`, computes its self-extensions and checks
/// that a one-dimensional `Ext^1` forces `pi` to be a power of a single
/// q-string.
pub fn theorem1_part2_analysis(pi: &DrinfeldPoly, q: &QParam) -> Result<Theorem1Report> {
    let strings = qstring_decomposition(pi, q);
    let v = string_module(&strings, q)?;
    if let Simplicity::NotSimple { reason, .. } | Simplicity::Undecided(reason) = is_simple(&v, default_window(&v))? {
        return Err(Error::NotSimple(reason));
    }
    let ext_dim = ext1(&v, &v)?.dim;
    let (pi0, s) = primitive_root(pi)?;
    let pi0_is_single_string = qstring_decomposition(&pi0, q).len() == 1;
    let applicable = ext_dim == 1;
    let conclusion_holds = applicable && pi0_is_single_string && pi0.pow(s) == *pi;
    Ok(Theorem1Report { pi: pi.clone(), strings, ext_dim, pi0, s, applicable, pi0_is_single_string, conclusion_holds })
}

/// Solutions `(z_1, z_n, z')` of
/// `-z_1 [ra] q^{r(a-m)} + z_n [rm] = z' q^{ra} [r(m-a)]` for `r = 1, 2, 3`.
pub fn walkprop_solution_space(m: i64, a: i64, q: &QParam) -> Vec<Vec<Scalar>> {
    let rows: Vec<Vec<Scalar>> = (1..=3i64)
        .map(|r| {
            vec![
                -(q_int(r * a, q) * q.pow(r * (a - m))),
                q_int(r * m, q),
                -(q.pow(r * a) * q_int(r * (m - a), q)),
            ]
        })
        .collect();
    linalg::nullspace(&Matrix::from_fn(3, 3, |i, j| rows[i][j].clone()))
}

/// Whether the only solutions are `z_1 = z_n = z'`.
pub fn walkprop_forcing_check(m: i64, a: i64, q: &QParam) -> bool {
    let sol = walkprop_solution_space(m, a, q);
    sol.len() == 1 && sol[0].iter().all(|x| *x == sol[0][0])
}
