use std::collections::BTreeMap;

use super::Module;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qnum::q_int;
use crate::scalar;
use crate::series::{exp_with, log_with};

/// Drinfeld generators of a module, recovered on a window `|r| <= R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DrinfeldMatrices {
    pub window: usize,
    pub xplus: BTreeMap<i64, Matrix>,
    pub xminus: BTreeMap<i64, Matrix>,
    pub h: BTreeMap<i64, Matrix>,
    pub phi_plus: BTreeMap<i64, Matrix>,
    pub phi_minus: BTreeMap<i64, Matrix>,
}

/// `max(3, top weight + 1)`.
pub fn default_window(v: &Module) -> usize {
    3.max(v.max_weight() + 1) as usize
}

/// Recovers the Drinfeld generators from the Chevalley action using
/// `x+_0 = e1`, `x-_0 = f1`, `x-_1 = e0 k`, `x+_{-1} = k^{-1} f0`,
/// `h_1 = k^{-1}[x+_0, x-_1]`, `h_{-1} = k[x+_{-1}, x-_0]` and the recursion
/// `x+-_{r+-1} = +-[h_{+-1}, x+-_r]/[2]`. The relations are then checked on
/// the window, with `phi` rebuilt from `h` by exponentiation.
pub fn drinfeld_matrices(v: &Module, window: usize) -> Result<DrinfeldMatrices> {
    if window == 0 {
        return Err(Error::Window("the Drinfeld window must be at least 1".into()));
    }
    let q = v.q();
    let rw = window as i64;
    let n = v.dim();
    let (k, ki) = (v.k(), v.k_inv());
    let qq = q.q_minus_qinv();
    let inv2 = q_int(2, q).recip();

    let mut xp = BTreeMap::new();
    let mut xm = BTreeMap::new();
    xp.insert(0, v.e1().clone());
    xm.insert(0, v.f1().clone());
    xm.insert(1, v.e0() * &k);
    xp.insert(-1, &ki * v.f0());
    let h1 = &ki * &xp[&0].commutator(&xm[&1]);
    let hm1 = &k * &xp[&-1].commutator(&xm[&0]);

    let step = |h: &Matrix, x: &Matrix, sign: i64| h.commutator(x).scale(&(&inv2 * scalar::int(sign)));
    let check = |name: &str, lhs: &Matrix, rhs: &Matrix| {
        if lhs == rhs {
            Ok(())
        } else {
            Err(Error::DrinfeldRelation(name.to_string()))
        }
    };
    check("x-_1 = -[h_1, x-_0]/[2]", &xm[&1], &step(&h1, &xm[&0], -1))?;
    check("x+_-1 = [h_-1, x+_0]/[2]", &xp[&-1], &step(&hm1, &xp[&0], 1))?;

    for r in 0..rw {
        let next = step(&h1, &xp[&r], 1);
        xp.insert(r + 1, next);
    }
    for r in 1..rw {
        let next = step(&h1, &xm[&r], -1);
        xm.insert(r + 1, next);
    }
    for r in (-rw + 1..=-1).rev() {
        let next = step(&hm1, &xp[&r], 1);
        xp.insert(r - 1, next);
    }
    for r in (-rw + 1..=0).rev() {
        let next = step(&hm1, &xm[&r], -1);
        xm.insert(r - 1, next);
    }
    xp.retain(|r, _| r.abs() <= rw);
    xm.retain(|r, _| r.abs() <= rw);

    let mut phi_plus = BTreeMap::from([(0, k.clone())]);
    let mut phi_minus = BTreeMap::from([(0, ki.clone())]);
    for m in 1..=rw {
        phi_plus.insert(m, xp[&m].commutator(&xm[&0]).scale(&qq));
        phi_minus.insert(-m, xp[&-m].commutator(&xm[&0]).scale(&-&qq));
    }

    let id = Matrix::identity(n);
    let plus: Vec<Matrix> = (0..=rw).map(|m| &ki * &phi_plus[&m]).collect();
    let minus: Vec<Matrix> = (0..=rw).map(|m| &k * &phi_minus[&-m]).collect();
    let gp = log_with(&plus, &id, window);
    let gm = log_with(&minus, &id, window);
    let qqi = qq.recip();
    let mut h = BTreeMap::new();
    for s in 1..=rw {
        h.insert(s, gp[s as usize].scale(&qqi));
        h.insert(-s, gm[s as usize].scale(&-&qqi));
    }

    let hs: Vec<(&i64, &Matrix)> = h.iter().collect();
    for (i, (s, a)) in hs.iter().enumerate() {
        for (t, b) in &hs[i + 1..] {
            if !a.commutator(b).is_zero() {
                return Err(Error::DrinfeldRelation(format!("[h_{s}, h_{t}] = 0")));
            }
        }
    }

    for (&s, hm) in &h {
        let c = q_int(2 * s, q) / scalar::int(s);
        for r in -rw..=rw {
            if (r + s).abs() > rw {
                continue;
            }
            check(&format!("[h_{s}, x+_{r}]"), &hm.commutator(&xp[&r]), &xp[&(r + s)].scale(&c))?;
            check(&format!("[h_{s}, x-_{r}]"), &hm.commutator(&xm[&r]), &xm[&(r + s)].scale(&-&c))?;
        }
    }

    let zero = Matrix::zeros(n, n);
    let hp: Vec<Matrix> = (0..=rw).map(|s| if s == 0 { zero.clone() } else { h[&s].scale(&qq) }).collect();
    let hn: Vec<Matrix> = (0..=rw).map(|s| if s == 0 { zero.clone() } else { h[&-s].scale(&-&qq) }).collect();
    let ep = exp_with(&hp, &id, window);
    let en = exp_with(&hn, &id, window);
    let rebuilt = |m: i64| -> Matrix {
        let plus = if m >= 0 { &k * &ep[m as usize] } else { zero.clone() };
        let minus = if m <= 0 { &ki * &en[(-m) as usize] } else { zero.clone() };
        &plus - &minus
    };
    for r in -rw..=rw {
        for s in -rw..=rw {
            let m = r + s;
            if m.abs() > rw {
                continue;
            }
            let lhs = xp[&r].commutator(&xm[&s]).scale(&qq);
            check(&format!("[x+_{r}, x-_{s}]"), &lhs, &rebuilt(m))?;
        }
    }

    Ok(DrinfeldMatrices { window, xplus: xp, xminus: xm, h, phi_plus, phi_minus })
}
