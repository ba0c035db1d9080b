//! Drinfeld polynomials for the loop algebra of sl2 and their l-weight data.

use std::collections::BTreeMap;
use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parse::Cursor;
use crate::qnum::{q_int, QParam};
use crate::scalar::{self, Scalar};
use crate::series;

/// One factor `(1 - a u)^p` of a Drinfeld polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Root {
    #[serde(with = "crate::scalar::text")]
    pub a: Scalar,
    pub p: u32,
}

/// `pi(u) = prod (1 - a_s u)^{p_s}` with distinct nonzero `a_s`, kept sorted
/// by `a`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<Root>", into = "Vec<Root>")]
pub struct DrinfeldPoly {
    roots: BTreeMap<ScalarKey, u32>,
}

/// Orderable wrapper so roots can key a map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct ScalarKey(Scalar);

impl TryFrom<Vec<Root>> for DrinfeldPoly {
    type Error = Error;
    fn try_from(v: Vec<Root>) -> Result<Self> {
        let mut pi = DrinfeldPoly::trivial();
        for r in v {
            pi = pi.multiply(&DrinfeldPoly::root(r.a, r.p)?);
        }
        Ok(pi)
    }
}

impl From<DrinfeldPoly> for Vec<Root> {
    fn from(pi: DrinfeldPoly) -> Self {
        pi.roots().map(|(a, p)| Root { a: a.clone(), p }).collect()
    }
}

impl DrinfeldPoly {
    pub fn trivial() -> Self {
        Self::default()
    }

    /// The factor `(1 - a u)^p`; `p = 0` gives the trivial polynomial.
    pub fn root(a: Scalar, p: u32) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroRoot);
        }
        let mut roots = BTreeMap::new();
        if p > 0 {
            roots.insert(ScalarKey(a), p);
        }
        Ok(DrinfeldPoly { roots })
    }

    /// The q-string with roots `a q^{m-1}, a q^{m-3}, ..., a q^{1-m}`.
    pub fn qstring(m: u32, a: &Scalar, q: &QParam) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroRoot);
        }
        let m = i64::from(m);
        let mut pi = Self::trivial();
        for k in 0..m {
            pi = pi.multiply(&Self::root(a * q.pow(m - 1 - 2 * k), 1)?);
        }
        Ok(pi)
    }

    pub fn multiply(&self, other: &Self) -> Self {
        let mut roots = self.roots.clone();
        for (a, p) in &other.roots {
            *roots.entry(a.clone()).or_insert(0) += p;
        }
        DrinfeldPoly { roots }
    }

    pub fn pow(&self, s: u32) -> Self {
        DrinfeldPoly { roots: self.roots.iter().filter(|_| s > 0).map(|(a, p)| (a.clone(), p * s)).collect() }
    }

    pub fn is_trivial(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.roots.values().map(|&p| p as usize).sum()
    }

    /// Distinct roots with multiplicities, in increasing order of `a`.
    pub fn roots(&self) -> impl Iterator<Item = (&Scalar, u32)> {
        self.roots.iter().map(|(a, &p)| (&a.0, p))
    }

    /// Roots repeated according to multiplicity.
    pub fn roots_with_multiplicity(&self) -> Vec<Scalar> {
        self.roots().flat_map(|(a, p)| std::iter::repeat_n(a.clone(), p as usize)).collect()
    }

    /// Coefficients of `pi(u)` in ascending degree.
    pub fn coefficients(&self) -> Vec<Scalar> {
        let mut c = vec![Scalar::one()];
        for a in self.roots_with_multiplicity() {
            c = series::poly_mul(&c, &[Scalar::one(), -a]);
        }
        c
    }

    /// The polynomial whose roots are the inverses, `prod (1 - a_s^{-1} u)^{p_s}`.
    pub fn inverted(&self) -> Self {
        let mut pi = Self::trivial();
        for (a, p) in self.roots() {
            pi = pi.multiply(&Self::root(a.recip(), p).expect("roots are nonzero"));
        }
        pi
    }

    /// Power sum `sum p_s a_s^r`.
    pub fn power_sum(&self, r: i64) -> Scalar {
        self.roots().map(|(a, p)| scalar::int(i64::from(p)) * scalar::pow(a, r)).sum()
    }

    /// Parses `str(m,a)`, `root(a,p)`, `1`, and `*`-products of these.
    pub fn parse(src: &str, q: &QParam) -> Result<Self> {
        let mut c = Cursor::new(src);
        let pi = Self::parse_from(&mut c, q)?;
        c.finish()?;
        Ok(pi)
    }

    pub fn parse_from(c: &mut Cursor<'_>, q: &QParam) -> Result<Self> {
        let mut pi = Self::parse_factor(c, q)?;
        while c.eat('*') {
            pi = pi.multiply(&Self::parse_factor(c, q)?);
        }
        Ok(pi)
    }

    fn parse_factor(c: &mut Cursor<'_>, q: &QParam) -> Result<Self> {
        if c.peek() == Some('1') {
            c.integer()?;
            return Ok(Self::trivial());
        }
        let at = c.pos();
        let name = c.ident()?;
        c.expect('(')?;
        let pi = match name {
            "str" => {
                let m = c.integer()?;
                c.expect(',')?;
                let a = c.scalar(q)?;
                let m = u32::try_from(m).or_else(|_| c.error("string length must be nonnegative"))?;
                Self::qstring(m, &a, q)?
            }
            "root" => {
                let a = c.scalar(q)?;
                c.expect(',')?;
                let p = c.integer()?;
                let p = u32::try_from(p).or_else(|_| c.error("multiplicity must be nonnegative"))?;
                Self::root(a, p)?
            }
            _ => return Err(Error::Parse { pos: at, msg: format!("unknown factor '{name}'") }),
        };
        c.expect(')')?;
        Ok(pi)
    }
}

impl fmt::Display for DrinfeldPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.roots().map(|(a, p)| format!("root({},{p})", scalar::to_text(a))).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Eigenvalue data of the highest l-weight vector of `V(pi)` on a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LWeightData {
    pub window: usize,
    pub h: BTreeMap<i64, Scalar>,
    pub lambda: BTreeMap<i64, Scalar>,
    pub phi_plus: BTreeMap<i64, Scalar>,
    pub phi_minus: BTreeMap<i64, Scalar>,
}

pub fn default_window(pi: &DrinfeldPoly) -> usize {
    2 * pi.degree() + 2
}

/// Computes `h`, `Lambda` and `phi` independently: Newton power sums,
/// polynomial coefficients, and Laurent expansion of
/// `q^{deg} pi(q^{-1} u) / pi(q u)` at `0` and at infinity.
pub fn lweight_data(pi: &DrinfeldPoly, q: &QParam, window: usize) -> LWeightData {
    let deg = pi.degree() as i64;
    let rw = window as i64;
    let mut h = BTreeMap::new();
    for r in 1..=rw {
        let c = q_int(r, q) / scalar::int(r);
        h.insert(r, &c * pi.power_sum(r));
        h.insert(-r, &c * pi.power_sum(-r));
    }

    let mut lambda = BTreeMap::new();
    let plus = pi.coefficients();
    let minus = pi.inverted().coefficients();
    for r in 0..=rw {
        let at = |c: &[Scalar]| c.get(r as usize).cloned().unwrap_or_else(Scalar::zero);
        lambda.insert(r, at(&plus));
        lambda.insert(-r, at(&minus));
    }

    let qv = q.value();
    let qi = qv.recip();
    let quotient = |p: &[Scalar], num: &Scalar, den: &Scalar, pref: Scalar| {
        let n = series::rescale_argument(p, num);
        let d = series::rescale_argument(p, den);
        series::poly_scale(&series::series_div(&n, &d, window), &pref)
    };
    let fp = quotient(&plus, &qi, qv, q.pow(deg));
    let fm = quotient(&minus, qv, &qi, q.pow(-deg));
    let mut phi_plus = BTreeMap::new();
    let mut phi_minus = BTreeMap::new();
    for m in 0..=rw {
        let at = |c: &[Scalar]| c.get(m as usize).cloned().unwrap_or_else(Scalar::zero);
        phi_plus.insert(m, at(&fp));
        phi_minus.insert(-m, at(&fm));
        if m > 0 {
            phi_plus.insert(-m, Scalar::zero());
            phi_minus.insert(m, Scalar::zero());
        }
    }
    LWeightData { window, h, lambda, phi_plus, phi_minus }
}

impl LWeightData {
    /// Checks that the three derivations agree: `exp(-sum h_{+-s}/[s] u^s)`
    /// gives `Lambda_{+-r}`, and `q^{+-deg} exp(+-(q - q^{-1}) sum h_{+-s} u^s)`
    /// gives `phi^{+-}_{+-m}`.
    pub fn is_consistent(&self, q: &QParam) -> bool {
        let r = self.window as i64;
        let deg = (1..=r).filter(|&k| !self.lambda[&k].is_zero()).max().unwrap_or(0);
        let qq = q.q_minus_qinv();
        for sign in [1i64, -1] {
            let to_lambda: BTreeMap<usize, Scalar> =
                (1..=r).map(|s| (s as usize, -&self.h[&(sign * s)] / q_int(s, q))).collect();
            let to_phi: BTreeMap<usize, Scalar> =
                (1..=r).map(|s| (s as usize, scalar::int(sign) * &qq * &self.h[&(sign * s)])).collect();
            let lam = series::truncated_exp_series(&to_lambda, self.window).expect("no constant term");
            let phi = series::truncated_exp_series(&to_phi, self.window).expect("no constant term");
            let k = q.pow(sign * deg);
            let phis = if sign > 0 { &self.phi_plus } else { &self.phi_minus };
            for m in 0..=r {
                if lam[m as usize] != self.lambda[&(sign * m)] {
                    return false;
                }
                if &k * &phi[m as usize] != phis[&(sign * m)] {
                    return false;
                }
            }
        }
        true
    }
}

/// Writes `pi = pi0^s` with `s` maximal.
pub fn primitive_root(pi: &DrinfeldPoly) -> Result<(DrinfeldPoly, u32)> {
    if pi.is_trivial() {
        return Err(Error::TrivialPolynomial);
    }
    let s = pi.roots().fold(0u32, |g, (_, p)| g.gcd(&p));
    let roots = pi.roots.iter().map(|(a, p)| (a.clone(), p / s)).collect();
    Ok((DrinfeldPoly { roots }, s))
}

/// The constant `c` with `h_r(pi1) = c h_r(pi2)` for all `r`, if one exists.
///
/// Since `h_r(pi) = ([r]/r) sum p_s a_s^r`, Vandermonde invertibility makes
/// this equivalent to equal root sets with proportional multiplicities.
pub fn proportional_h(pi1: &DrinfeldPoly, pi2: &DrinfeldPoly) -> Option<Scalar> {
    if pi1.is_trivial() || pi2.is_trivial() {
        return None;
    }
    if pi1.roots.len() != pi2.roots.len() || !pi1.roots.keys().eq(pi2.roots.keys()) {
        return None;
    }
    let mut ratio: Option<Scalar> = None;
    for ((_, p1), (_, p2)) in pi1.roots().zip(pi2.roots()) {
        let c = scalar::frac(i64::from(p1), i64::from(p2));
        match &ratio {
            None => ratio = Some(c),
            Some(r) if *r == c => {}
            Some(_) => return None,
        }
    }
    ratio
}
