//! Dense exact matrices and row reduction over the rationals.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::{self, Scalar};
use crate::series::{self, Coefficient};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::diagonal(&vec![Scalar::one(); n])
    }

    pub fn diagonal(d: &[Scalar]) -> Self {
        let mut m = Self::zeros(d.len(), d.len());
        for (i, x) in d.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(rows: usize, cols: &[Vec<Scalar>]) -> Self {
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn nonzero_entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(move |(k, v)| (k / self.cols, k % self.cols, v))
    }

    pub fn max_abs_entry(&self) -> Scalar {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_else(Scalar::zero)
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i).clone()).sum()
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (a, x) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    /// Kronecker product; basis index `(i, j)` flattens to `i * other.rows + j`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for (i, j, a) in self.nonzero_entries() {
            for (k, l, b) in other.nonzero_entries() {
                out.set(i * other.rows + k, j * other.cols + l, a * b);
            }
        }
        out
    }

    /// `[self, other] = self * other - other * self`.
    pub fn commutator(&self, other: &Matrix) -> Matrix {
        &(self * other) - &(other * self)
    }

    pub fn pow(&self, e: u32) -> Matrix {
        (0..e).fold(Matrix::identity(self.rows), |acc, _| &acc * self)
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Matrix {
        let (r0, c0) = (a.rows, a.cols);
        Self::from_fn(r0 + c.rows, c0 + b.cols, |i, j| match (i < r0, j < c0) {
            (true, true) => a.get(i, j).clone(),
            (true, false) => b.get(i, j - c0).clone(),
            (false, true) => c.get(i - r0, j).clone(),
            (false, false) => d.get(i - r0, j - c0).clone(),
        })
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Matrix {
        let (r0, c0) = (rows.start, cols.start);
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Inverse of a square matrix, if it exists.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square());
        let n = self.rows;
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut e = vec![Scalar::zero(); n];
            e[j] = Scalar::one();
            cols.push(solve(self, &e)?);
        }
        let inv = Matrix::from_columns(n, &cols);
        ((self * &inv) == Matrix::identity(n)).then_some(inv)
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new(self.cols);
        for i in 0..self.rows {
            e.insert(self.row(i).to_vec());
        }
        e.rank()
    }

    /// Characteristic polynomial `det(x I - A)`, coefficients in ascending
    /// degree (Faddeev-LeVerrier).
    pub fn char_poly(&self) -> Vec<Scalar> {
        assert!(self.is_square());
        let n = self.rows;
        let mut coeffs = vec![Scalar::zero(); n + 1];
        coeffs[n] = Scalar::one();
        let mut m = Matrix::zeros(n, n);
        let id = Matrix::identity(n);
        for k in 1..=n {
            m = &(self * &m) + &id.scale(&coeffs[n - k + 1]);
            let am = self * &m;
            coeffs[n - k] = -am.trace() / scalar::int(k as i64);
        }
        coeffs
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Coefficient for Matrix {
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
        Matrix::scale(self, s)
    }
    fn zero_like(&self) -> Self {
        Matrix::zeros(self.rows, self.cols)
    }
}

/// Incrementally maintained reduced row echelon form.
///
/// Rows are kept fully reduced with unit pivots, so membership tests and
/// nullspace extraction need no back substitution.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Echelon { width, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    /// Residue of `v` after elimination against the current rows.
    pub fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.width);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    /// Basis of `{x : row . x = 0 for every row}`.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut x = vec![Scalar::zero(); self.width];
                x[f] = Scalar::one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    x[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }
}

/// One solution of `a x = b` (free variables set to zero), if consistent.
pub fn solve(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(a.rows(), b.len());
    let n = a.cols();
    let mut e = Echelon::new(n + 1);
    for i in 0..a.rows() {
        let mut row = a.row(i).to_vec();
        row.push(b[i].clone());
        e.insert(row);
    }
    if e.pivots().contains(&n) {
        return None;
    }
    let mut x = vec![Scalar::zero(); n];
    for (row, &p) in e.rows().iter().zip(e.pivots()) {
        x[p] = row[n].clone();
    }
    Some(x)
}

/// Basis of the kernel of `a`.
pub fn nullspace(a: &Matrix) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new(a.cols());
    for i in 0..a.rows() {
        e.insert(a.row(i).to_vec());
    }
    e.nullspace()
}

/// Joint kernel of several matrices with a common number of columns.
pub fn joint_kernel<'a>(width: usize, mats: impl IntoIterator<Item = &'a Matrix>) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new(width);
    for m in mats {
        for i in 0..m.rows() {
            let row = m.row(i);
            if row.iter().any(|x| !x.is_zero()) {
                e.insert(row.to_vec());
            }
        }
    }
    e.nullspace()
}

/// Matrix of `op` restricted to the span of `basis` (independent columns),
/// or `None` if the span is not `op`-stable.
pub fn restrict(op: &Matrix, basis: &[Vec<Scalar>]) -> Option<Matrix> {
    if basis.is_empty() {
        return Some(Matrix::zeros(0, 0));
    }
    let b = Matrix::from_columns(op.rows(), basis);
    let mut cols = Vec::with_capacity(basis.len());
    for v in basis {
        cols.push(solve(&b, &op.mul_vec(v))?);
    }
    Some(Matrix::from_columns(basis.len(), &cols))
}

/// Combination `sum c_i v_i` of equally long vectors.
pub fn combine(coeffs: &[Scalar], vecs: &[Vec<Scalar>]) -> Vec<Scalar> {
    let n = vecs.first().map_or(0, Vec::len);
    let mut out = vec![Scalar::zero(); n];
    for (c, v) in coeffs.iter().zip(vecs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// All rational roots (without multiplicity) of a nonzero polynomial, or
/// `None` when the search cannot be completed exactly.
pub fn rational_roots(p: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut p = p.to_vec();
    series::trim(&mut p);
    if p.is_empty() {
        return None;
    }
    let g = series::poly_gcd(&p, &series::derivative(&p));
    let (mut sf, _) = series::poly_divmod(&p, &g);
    let mut roots = Vec::new();
    while sf.first().is_some_and(Zero::is_zero) {
        sf.remove(0);
        if !roots.iter().any(Zero::is_zero) {
            roots.push(Scalar::zero());
        }
    }
    let d = series::degree(&sf).unwrap_or(0);
    match d {
        0 => {}
        1 => roots.push(-&sf[0] / &sf[1]),
        2 => {
            let (c, b, a) = (&sf[0], &sf[1], &sf[2]);
            let disc = b * b - scalar::int(4) * a * c;
            if let Some(s) = rational_sqrt(&disc) {
                let two_a = a * scalar::int(2);
                roots.push((-b + &s) / &two_a);
                roots.push((-b - &s) / &two_a);
            }
        }
        _ => {
            let ints = primitive_integer(&sf);
            let lead_divs = divisors(&ints[d].abs())?;
            let const_divs = divisors(&ints[0].abs())?;
            for num in &const_divs {
                for den in &lead_divs {
                    for sign in [1, -1] {
                        let cand = Scalar::new(num * BigInt::from(sign), den.clone());
                        if series::poly_eval(&sf, &cand).is_zero() && !roots.contains(&cand) {
                            roots.push(cand);
                        }
                    }
                }
            }
        }
    }
    Some(roots)
}

fn rational_sqrt(x: &Scalar) -> Option<Scalar> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Scalar::new(n, d))
}

fn primitive_integer(p: &[Scalar]) -> Vec<BigInt> {
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    p.iter().map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer()).collect()
}

const TRIAL_LIMIT: u64 = 1 << 20;

/// Positive divisors by trial division; `None` if a cofactor too large to
/// certify as prime remains.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let mut n = n.clone();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut f = 2u64;
    while f < TRIAL_LIMIT {
        let fb = BigInt::from(f);
        if &fb * &fb > n {
            break;
        }
        let mut e = 0;
        while (&n % &fb).is_zero() {
            n /= &fb;
            e += 1;
        }
        if e > 0 {
            factors.push((fb, e));
        }
        f += if f == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        let limit = BigInt::from(TRIAL_LIMIT);
        if n > &limit * &limit {
            return None;
        }
        factors.push((n, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pw = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pw);
                pw *= &p;
            }
        }
        divs = next;
    }
    Some(divs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_fn(rows.len(), rows[0].len(), |i, j| int(rows[i][j]))
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let k = nullspace(&a);
        assert_eq!(k.len(), 1);
        assert!(a.mul_vec(&k[0]).iter().all(Zero::is_zero));
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = solve(&a, &[int(3), int(2)]).unwrap();
        assert_eq!(x, vec![int(1), int(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(m(&[&[1, 1], &[1, 1]]).inverse().is_none());
        assert!(solve(&m(&[&[1, 1], &[1, 1]]), &[int(1), int(2)]).is_none());
    }

    #[test]
    fn char_poly_of_companion() {
        // companion matrix of x^2 - 3x + 2
        let a = m(&[&[0, -2], &[1, 3]]);
        assert_eq!(a.char_poly(), vec![int(2), int(-3), int(1)]);
    }

    #[test]
    fn roots_found_exactly() {
        // (x - 1/2)(x + 3)(x - 5)^2 (x^2 + 1)
        let mut p = vec![int(1)];
        for f in [vec![frac(-1, 2), int(1)], vec![int(3), int(1)], vec![int(-5), int(1)], vec![int(-5), int(1)], vec![int(1), int(0), int(1)]] {
            p = series::poly_mul(&p, &f);
        }
        let mut r = rational_roots(&p).unwrap();
        r.sort();
        assert_eq!(r, vec![int(-3), frac(1, 2), int(5)]);
        // irreducible quadratic: no rational roots
        assert_eq!(rational_roots(&[int(-2), int(0), int(1)]).unwrap(), vec![]);
    }

    #[test]
    fn kron_matches_index_flattening() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let b = m(&[&[0, 5], &[6, 7]]);
        let k = a.kron(&b);
        for (i, j, k2, l) in [(0, 1, 1, 0), (1, 1, 1, 1), (1, 0, 0, 1)] {
            assert_eq!(k.get(i * 2 + k2, j * 2 + l), &(a.get(i, j) * b.get(k2, l)));
        }
    }

    proptest! {
        #[test]
        fn rank_nullity(entries in proptest::collection::vec(-3i64..4, 12)) {
            let a = Matrix::from_fn(3, 4, |i, j| int(entries[i * 4 + j]));
            let k = nullspace(&a);
            prop_assert_eq!(a.rank() + k.len(), 4);
            for v in &k {
                prop_assert!(a.mul_vec(v).iter().all(Zero::is_zero));
            }
        }
    }
}
