//! The twelve acceptance criteria, each run at q = 2 and q = 3. Every check
//! prints one PASS/FAIL line.

use num_traits::Zero;
use qloop_core::dpoly::{lweight_data, primitive_root, proportional_h, DrinfeldPoly};
use qloop_core::qnum::{q_int, QParam};
use qloop_core::repcore::{
    drinfeld_matrices, highest_lweight_vectors, is_simple, spin, verify_presentation, LWeightBlock, Module, Simplicity,
};
use qloop_core::scalar::{self, int, Scalar};
use qloop_core::selfext::{class_of, ext1, graded_twist, walkprop_forcing_check};
use qloop_core::sl2eval::{check_genrel_single, check_genrel_square, eval_module, weyl_quotient_dims, EvalModuleSpec};
use qloop_core::weylalg::{ext_weyl_dimension_check, ideal_i_analysis, ideal_i_quotient, local_weyl};

const QS: [i64; 2] = [2, 3];

struct Outcome {
    criterion: u32,
    lines: Vec<(String, bool)>,
}

impl Outcome {
    fn new(criterion: u32) -> Self {
        Outcome { criterion, lines: Vec::new() }
    }

    fn check(&mut self, q: &QParam, what: impl Into<String>, ok: bool) {
        self.lines.push((format!("q={q} {}", what.into()), ok));
    }

    fn finish(self) {
        for (what, ok) in &self.lines {
            println!("criterion {:>2} {}: {what}", self.criterion, if *ok { "PASS" } else { "FAIL" });
        }
        let failed: Vec<&String> = self.lines.iter().filter(|(_, ok)| !ok).map(|(w, _)| w).collect();
        println!(
            "criterion {:>2} {}",
            self.criterion,
            if failed.is_empty() { "PASS" } else { "FAIL" }
        );
        assert!(failed.is_empty(), "criterion {} failed: {failed:?}", self.criterion);
    }
}

fn qp(v: i64) -> QParam {
    QParam::from_int(v).unwrap()
}

fn spec(m: u32, a: Scalar, q: &QParam) -> EvalModuleSpec {
    EvalModuleSpec::new(m, a, q.clone()).unwrap()
}

fn ev(m: u32, a: Scalar, q: &QParam) -> Module {
    eval_module(&spec(m, a, q))
}

fn string(m: u32, a: Scalar, q: &QParam) -> DrinfeldPoly {
    DrinfeldPoly::qstring(m, &a, q).unwrap()
}

fn hlw_line_count(v: &Module) -> Option<usize> {
    let mut n = 0;
    for b in highest_lweight_vectors(v, 3).ok()? {
        match b {
            LWeightBlock::Eigen { basis, .. } => n += basis.len(),
            LWeightBlock::Undecided { .. } => return None,
        }
    }
    Some(n)
}

fn ext_dim(v: &Module) -> usize {
    ext1(v, v).unwrap().dim
}

#[test]
fn criterion_01_presentation_soundness() {
    let mut out = Outcome::new(1);
    for qv in QS {
        let q = qp(qv);
        let mut evals = Vec::new();
        for m in 0..=3 {
            for a in [1, 2] {
                evals.push(ev(m, int(a), &q));
            }
        }
        let mut modules: Vec<Module> = evals.clone();
        for (i, v) in evals.iter().enumerate() {
            for w in &evals[i..] {
                if v.dim() * w.dim() <= 16 {
                    modules.push(v.tensor(w).unwrap());
                }
            }
        }
        let twists: Vec<Module> = modules.iter().map(graded_twist).collect();
        let duals: Vec<Module> = modules.iter().map(Module::dual).collect();
        modules.extend(twists);
        modules.extend(duals);
        for pi in [
            string(1, int(1), &q),
            string(1, int(1), &q).pow(2),
            string(2, int(1), &q),
            string(1, int(1), &q).multiply(&string(1, q.pow(2), &q)),
            string(2, int(1), &q).pow(2),
            string(1, int(1), &q).multiply(&string(3, int(5), &q)),
        ] {
            modules.push(local_weyl(&pi, &q).unwrap());
        }
        let failures: Vec<String> = modules
            .iter()
            .filter(|m| !verify_presentation(m).pass())
            .map(|m| m.label().to_string())
            .collect();
        out.check(&q, format!("{} modules with exactly zero residuals {failures:?}", modules.len()), failures.is_empty());
    }
    out.finish();
}

#[test]
fn criterion_02_drinfeld_oracle() {
    let mut out = Outcome::new(2);
    for qv in QS {
        let q = qp(qv);
        let qq = q.q_minus_qinv();
        let mut matrices_ok = true;
        let mut phi_ok = true;
        for m in 1..=3u32 {
            for a in [1, 2] {
                let s = spec(m, int(a), &q);
                let dm = drinfeld_matrices(&eval_module(&s), 3).unwrap();
                for r in -3..=3 {
                    matrices_ok &= dm.xplus[&r] == s.xplus(r) && dm.xminus[&r] == s.xminus(r);
                }
                let data = lweight_data(&s.drinfeld_poly(), &q, 3);
                let aq = int(a) * q.pow(i64::from(m));
                let qm = q_int(i64::from(m), &q);
                for r in 1..=3i64 {
                    let plus = &qq * scalar::pow(&aq, r) * &qm;
                    let minus = -(&qq * scalar::pow(&aq, -r) * &qm);
                    phi_ok &= dm.phi_plus[&r].get(0, 0) == &plus && data.phi_plus[&r] == plus;
                    phi_ok &= dm.phi_minus[&-r].get(0, 0) == &minus && data.phi_minus[&-r] == minus;
                }
            }
        }
        out.check(&q, "x+-_r matrices equal the closed form for |r| <= 3, m <= 3, a in {1,2}", matrices_ok);
        out.check(&q, "phi+- on the top vector match the closed form and the series expansion", phi_ok);
    }
    out.finish();
}

#[test]
fn criterion_03_graded_twist_is_nontrivial() {
    let mut out = Outcome::new(3);
    for qv in QS {
        let q = qp(qv);
        let mut cases: Vec<Module> = (1..=3).map(|m| ev(m, int(1), &q)).collect();
        cases.push(ev(1, int(1), &q).tensor(&ev(1, q.pow(4), &q)).unwrap());
        for v in cases {
            let e = graded_twist(&v);
            let class = class_of(&e, &v).unwrap();
            let nonzero = class.iter().any(|c| !c.is_zero());
            let lines = hlw_line_count(&e);
            let shown: Vec<String> = class.iter().map(scalar::to_text).collect();
            out.check(&q, format!("{}: class [{}] nonzero", v.label(), shown.join(", ")), nonzero);
            out.check(&q, format!("{}: E(V) has {lines:?} highest l-weight lines", v.label()), lines == Some(1));
        }
    }
    out.finish();
}

#[test]
fn criterion_04_ext_of_evaluation_modules() {
    let mut out = Outcome::new(4);
    for qv in QS {
        let q = qp(qv);
        for m in 1..=3 {
            let d = ext_dim(&ev(m, int(1), &q));
            out.check(&q, format!("dim Ext^1(eval({m},1), eval({m},1)) = {d}, expected 1"), d == 1);
        }
    }
    out.finish();
}

#[test]
fn criterion_05_ext_of_squares() {
    let mut out = Outcome::new(5);
    for qv in QS {
        let q = qp(qv);
        for m in 1..=2 {
            let v = ev(m, int(1), &q);
            let d = ext_dim(&v.tensor(&v).unwrap());
            out.check(&q, format!("dim Ext^1 of eval({m},1)^2 = {d}, expected >= 2"), d >= 2);
        }
    }
    out.finish();
}

#[test]
fn criterion_06_ext_of_local_weyl_modules() {
    let mut out = Outcome::new(6);
    for qv in QS {
        let q = qp(qv);
        let s11 = string(1, int(1), &q);
        for pi in [
            s11.clone(),
            s11.pow(2),
            s11.multiply(&string(1, q.pow(2), &q)),
            string(2, int(1), &q).multiply(&string(2, q.pow(6), &q)),
        ] {
            let (computed, expected) = ext_weyl_dimension_check(&pi, &q).unwrap();
            out.check(&q, format!("W({pi}): dim Ext^1 = {computed}, deg = {expected}"), computed == expected);
        }
    }
    out.finish();
}

#[test]
fn criterion_07_monotonicity_on_simple_tensor() {
    let mut out = Outcome::new(7);
    for qv in QS {
        let q = qp(qv);
        let v1 = ev(1, int(1), &q);
        let v2 = ev(1, q.pow(4), &q);
        let t = v1.tensor(&v2).unwrap();
        let simple = is_simple(&t, 3).unwrap() == Simplicity::Simple;
        out.check(&q, format!("{} is simple", t.label()), simple);
        let (d1, d) = (ext_dim(&v1), ext_dim(&t));
        out.check(&q, format!("dim Ext^1(V1 (x) V2) = {d} >= dim Ext^1(V1) = {d1} = 1"), d1 == 1 && d >= d1);
    }
    out.finish();
}

#[test]
fn criterion_08_codimension_two_ideal() {
    let mut out = Outcome::new(8);
    for qv in QS {
        let q = qp(qv);
        for m in 1..=3 {
            let an = ideal_i_analysis(m, &int(1), &q).unwrap();
            out.check(&q, format!("m={m}: codimension {}, expected 2", an.codim), an.codim == 2);
            out.check(&q, format!("m={m}: generators vanish at the coefficients of pi({m},1)^2"), an.membership);
            let nonsplit = match ideal_i_quotient(m, &int(1), &q) {
                Ok(module) => !module.is_semisimple(),
                Err(_) => false,
            };
            out.check(&q, format!("m={m}: quotient is a non-split extension"), nonsplit);
        }
    }
    out.finish();
}

#[test]
fn criterion_09_generating_relations() {
    let mut out = Outcome::new(9);
    for qv in QS {
        let q = qp(qv);
        for m in 1..=3 {
            let s = spec(m, int(1), &q);
            out.check(&q, format!("m={m}: single relation holds"), check_genrel_single(&s).unwrap());
            out.check(&q, format!("m={m}: square relation holds"), check_genrel_square(&s).unwrap());
        }
        let dims = weyl_quotient_dims(&spec(2, int(1), &q)).unwrap();
        out.check(&q, format!("m=2: weyl quotient dims {dims:?}, expected (16, 9)"), dims == (16, 9));
    }
    out.finish();
}

#[test]
fn criterion_10_simplicity_classification() {
    let mut out = Outcome::new(10);
    for qv in QS {
        let q = qp(qv);
        for m in 1..=2 {
            for a in [1, 2] {
                let v = ev(m, int(a), &q);
                out.check(&q, format!("eval({m},{a}) simple"), is_simple(&v, 3).unwrap() == Simplicity::Simple);
                let vv = v.tensor(&v).unwrap();
                out.check(&q, format!("eval({m},{a})^2 simple"), is_simple(&vv, 3).unwrap() == Simplicity::Simple);
            }
        }
        let t = ev(1, int(1), &q).tensor(&ev(1, q.pow(2), &q)).unwrap();
        let ok = match is_simple(&t, 3).unwrap() {
            Simplicity::NotSimple { certificate, .. } => {
                let d = spin(&t, &certificate).len();
                d > 0 && d < t.dim()
            }
            _ => false,
        };
        out.check(&q, format!("{} not simple, certificate spins to a proper submodule", t.label()), ok);
    }
    out.finish();
}

#[test]
fn criterion_11_primitive_roots() {
    let mut out = Outcome::new(11);
    for qv in QS {
        let q = qp(qv);
        let base = string(1, int(1), &q);
        for s in 1..=3u32 {
            let pi = base.pow(s);
            let (pi0, t) = primitive_root(&pi).unwrap();
            out.check(&q, format!("primitive_root({pi}) = ({pi0}, {t})"), pi0 == base && t == s);
            let c = proportional_h(&base, &pi);
            let expected = scalar::frac(1, i64::from(s));
            let shown = c.as_ref().map_or("none".to_string(), scalar::to_text);
            out.check(&q, format!("h(pi0) = c h(pi) with c = {shown}"), c == Some(expected));
        }
    }
    out.finish();
}

#[test]
fn criterion_12_walk_forcing() {
    let mut out = Outcome::new(12);
    for qv in QS {
        let q = qp(qv);
        for (m, a) in [(2, -1), (3, -1), (3, -2)] {
            out.check(&q, format!("m={m}, a={a}: solutions form the diagonal line"), walkprop_forcing_check(m, a, &q));
        }
    }
    out.finish();
}
