use super::Module;
use crate::linalg::Matrix;
use crate::qnum::q_binom;
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual {
    pub relation: String,
    /// Largest absolute entry of the residual matrix.
    pub max_entry: Scalar,
}

impl Residual {
    pub fn holds(&self) -> bool {
        num_traits::Zero::is_zero(&self.max_entry)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationReport {
    pub residuals: Vec<Residual>,
}

impl PresentationReport {
    pub fn pass(&self) -> bool {
        self.residuals.iter().all(Residual::holds)
    }

    pub fn failures(&self) -> Vec<&str> {
        self.residuals.iter().filter(|r| !r.holds()).map(|r| r.relation.as_str()).collect()
    }
}

/// `sum_{m=0}^{3} (-1)^m [3 choose m] x^{3-m} y x^m`.
pub(crate) fn serre(x: &Matrix, y: &Matrix, q: &crate::qnum::QParam) -> Matrix {
    let mut powers = vec![Matrix::identity(x.rows())];
    for i in 1..=3 {
        powers.push(&powers[i - 1] * x);
    }
    let mut out = Matrix::zeros(x.rows(), x.cols());
    for m in 0..=3u32 {
        let c = q_binom(3, m, q).expect("m <= 3") * scalar::int(if m % 2 == 0 { 1 } else { -1 });
        let term = &(&powers[3 - m as usize] * y) * &powers[m as usize];
        out = &out + &term.scale(&c);
    }
    out
}

/// Residuals of every defining relation of the Chevalley presentation.
pub fn verify_presentation(v: &Module) -> PresentationReport {
    let q = v.q();
    let (k, ki) = (v.k(), v.k_inv());
    let n = v.dim();
    let (e1, f1, e0, f0) = (v.e1(), v.f1(), v.e0(), v.f0());
    let q2 = q.pow(2);
    let q2i = q.pow(-2);
    let denom = q.q_minus_qinv().recip();
    let cartan = (&k - &ki).scale(&denom);

    let mut residuals = Vec::new();
    let mut push = |name: &str, m: Matrix| {
        residuals.push(Residual { relation: name.to_string(), max_entry: m.max_abs_entry() });
    };
    push("k k^-1 = 1", &(&k * &ki) - &Matrix::identity(n));
    push("k e1 k^-1 = q^2 e1", &(&(&k * e1) * &ki) - &e1.scale(&q2));
    push("k f1 k^-1 = q^-2 f1", &(&(&k * f1) * &ki) - &f1.scale(&q2i));
    push("k0 e0 k0^-1 = q^2 e0", &(&(&ki * e0) * &k) - &e0.scale(&q2));
    push("k0 f0 k0^-1 = q^-2 f0", &(&(&ki * f0) * &k) - &f0.scale(&q2i));
    push("[e1,f1] = (k1 - k1^-1)/(q - q^-1)", &e1.commutator(f1) - &cartan);
    push("[e0,f0] = (k0 - k0^-1)/(q - q^-1)", &e0.commutator(f0) + &cartan);
    push("[e1,f0] = 0", e1.commutator(f0));
    push("[e0,f1] = 0", e0.commutator(f1));
    push("serre(e1,e0)", serre(e1, e0, q));
    push("serre(e0,e1)", serre(e0, e1, q));
    push("serre(f1,f0)", serre(f1, f0, q));
    push("serre(f0,f1)", serre(f0, f1, q));
    PresentationReport { residuals }
}
