//! Named verification suites. Each produces checks in declaration order.

use num_traits::Zero;
use serde::Serialize;

use qloop_core::dpoly::{lweight_data, primitive_root, proportional_h, DrinfeldPoly};
use qloop_core::error::Result;
use qloop_core::qnum::{q_int, QParam};
use qloop_core::repcore::{drinfeld_matrices, is_simple, verify_presentation, Module, Simplicity};
use qloop_core::scalar::{self, int, Scalar};
use qloop_core::selfext::{class_of, ext1, graded_twist, theorem1_part2_analysis, walkprop_forcing_check};
use qloop_core::sl2eval::{check_genrel_single, check_genrel_square, eval_module, weyl_quotient_dims, EvalModuleSpec};
use qloop_core::weylalg::{ext_weyl_dimension_check, ideal_i_analysis, ideal_i_quotient, local_weyl};

pub const NAMES: [&str; 6] = ["presentation", "drinfeld-oracle", "theorem1", "weyl", "ideal", "walkprop"];

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub q: QParam,
    pub m_max: u32,
    pub window: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub suite: String,
    pub q: QParam,
    pub m_max: u32,
    pub window: usize,
    pub checks: Vec<Check>,
    pub pass: bool,
}

#[derive(Default)]
struct Checks(Vec<Check>);

impl Checks {
    fn push(&mut self, name: impl Into<String>, expected: impl Into<String>, computed: impl Into<String>, pass: bool) {
        self.0.push(Check { name: name.into(), expected: expected.into(), computed: computed.into(), pass });
    }

    /// Records an equality check, or a failing entry if the computation errored.
    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, name: impl Into<String>, expected: T, computed: Result<T>) {
        let name = name.into();
        match computed {
            Ok(c) => {
                let pass = c == expected;
                self.push(name, format!("{expected:?}"), format!("{c:?}"), pass)
            }
            Err(e) => self.push(name, format!("{expected:?}"), format!("error: {e}"), false),
        }
    }

    fn holds(&mut self, name: impl Into<String>, computed: Result<bool>) {
        self.eq(name, true, computed)
    }
}

pub fn run(suite: &str, cfg: &SuiteConfig) -> Report {
    let mut checks = Checks::default();
    for name in NAMES {
        if suite == "all" || suite == name {
            match name {
                "presentation" => presentation(cfg, &mut checks),
                "drinfeld-oracle" => drinfeld_oracle(cfg, &mut checks),
                "theorem1" => theorem1(cfg, &mut checks),
                "weyl" => weyl(cfg, &mut checks),
                "ideal" => ideal(cfg, &mut checks),
                _ => walkprop(cfg, &mut checks),
            }
        }
    }
    let pass = checks.0.iter().all(|c| c.pass);
    Report {
        suite: suite.to_string(),
        q: cfg.q.clone(),
        m_max: cfg.m_max,
        window: cfg.window,
        checks: checks.0,
        pass,
    }
}

fn ev(m: u32, a: Scalar, q: &QParam) -> Result<Module> {
    Ok(eval_module(&EvalModuleSpec::new(m, a, q.clone())?))
}

fn string(m: u32, a: Scalar, q: &QParam) -> Result<DrinfeldPoly> {
    DrinfeldPoly::qstring(m, &a, q)
}

fn modules_under_test(cfg: &SuiteConfig) -> Result<Vec<Module>> {
    let q = &cfg.q;
    let mut evals = Vec::new();
    for m in 0..=cfg.m_max {
        for a in [1, 2] {
            evals.push(ev(m, int(a), q)?);
        }
    }
    let mut modules = evals.clone();
    for (i, v) in evals.iter().enumerate() {
        for w in &evals[i..] {
            if v.dim() * w.dim() <= 16 {
                modules.push(v.tensor(w)?);
            }
        }
    }
    let twists: Vec<Module> = modules.iter().map(graded_twist).collect();
    let duals: Vec<Module> = modules.iter().map(Module::dual).collect();
    modules.extend(twists);
    modules.extend(duals);
    let s11 = string(1, int(1), q)?;
    for pi in [
        s11.clone(),
        s11.pow(2),
        string(2, int(1), q)?,
        s11.multiply(&string(1, q.pow(2), q)?),
        string(2, int(1), q)?.pow(2),
    ] {
        modules.push(local_weyl(&pi, q)?);
    }
    Ok(modules)
}

fn presentation(cfg: &SuiteConfig, out: &mut Checks) {
    let modules = match modules_under_test(cfg) {
        Ok(m) => m,
        Err(e) => return out.push("presentation: construct modules", "ok", format!("error: {e}"), false),
    };
    for v in modules {
        let report = verify_presentation(&v);
        let worst = report.residuals.iter().map(|r| r.max_entry.clone()).max().unwrap_or_else(Scalar::zero);
        let failures = report.failures();
        let computed = if failures.is_empty() {
            scalar::to_text(&worst)
        } else {
            format!("{} (failing: {})", scalar::to_text(&worst), failures.join("; "))
        };
        out.push(format!("presentation: {}", v.label()), "0", computed, report.pass());
    }
}

fn drinfeld_oracle(cfg: &SuiteConfig, out: &mut Checks) {
    let q = &cfg.q;
    let qq = q.q_minus_qinv();
    let window = cfg.window.max(1);
    for m in 1..=cfg.m_max {
        for a in [1i64, 2] {
            let spec = match EvalModuleSpec::new(m, int(a), q.clone()) {
                Ok(s) => s,
                Err(e) => return out.push("drinfeld-oracle: spec", "ok", format!("error: {e}"), false),
            };
            let label = format!("eval({m},{a})");
            let dm = match drinfeld_matrices(&eval_module(&spec), window) {
                Ok(dm) => dm,
                Err(e) => {
                    out.push(format!("drinfeld-oracle: {label} matrices"), "ok", format!("error: {e}"), false);
                    continue;
                }
            };
            let w = window as i64;
            let mismatched: Vec<i64> =
                (-w..=w).filter(|r| dm.xplus[r] != spec.xplus(*r) || dm.xminus[r] != spec.xminus(*r)).collect();
            out.push(
                format!("drinfeld-oracle: {label} x+-_r closed form, |r| <= {w}"),
                "[]",
                format!("{mismatched:?}"),
                mismatched.is_empty(),
            );
            let data = lweight_data(&spec.drinfeld_poly(), q, window);
            let aq = int(a) * q.pow(i64::from(m));
            let qm = q_int(i64::from(m), q);
            for r in 1..=w {
                let plus = &qq * scalar::pow(&aq, r) * &qm;
                let minus = -(&qq * scalar::pow(&aq, -r) * &qm);
                let (cp, cm) = (dm.phi_plus[&r].get(0, 0), dm.phi_minus[&-r].get(0, 0));
                out.push(
                    format!("drinfeld-oracle: {label} phi+_{r} top eigenvalue"),
                    scalar::to_text(&plus),
                    format!("{} (series {})", scalar::to_text(cp), scalar::to_text(&data.phi_plus[&r])),
                    cp == &plus && data.phi_plus[&r] == plus,
                );
                out.push(
                    format!("drinfeld-oracle: {label} phi-_{} top eigenvalue", -r),
                    scalar::to_text(&minus),
                    format!("{} (series {})", scalar::to_text(cm), scalar::to_text(&data.phi_minus[&-r])),
                    cm == &minus && data.phi_minus[&-r] == minus,
                );
            }
        }
    }
}

fn theorem1(cfg: &SuiteConfig, out: &mut Checks) {
    let q = &cfg.q;
    for m in 1..=cfg.m_max {
        out.eq(format!("theorem1: dim Ext^1(eval({m},1), eval({m},1))"), 1, ev(m, int(1), q).and_then(|v| Ok(ext1(&v, &v)?.dim)));
    }
    for m in 1..=cfg.m_max.min(2) {
        let dim = ev(m, int(1), q).and_then(|v| v.tensor(&v)).and_then(|vv| Ok(ext1(&vv, &vv)?.dim));
        match dim {
            Ok(d) => out.push(format!("theorem1: dim Ext^1 of eval({m},1)^2"), ">= 2", d.to_string(), d >= 2),
            Err(e) => out.push(format!("theorem1: dim Ext^1 of eval({m},1)^2"), ">= 2", format!("error: {e}"), false),
        }
    }
    for m in 1..=cfg.m_max {
        let class = ev(m, int(1), q).and_then(|v| class_of(&graded_twist(&v), &v));
        match class {
            Ok(c) => {
                let shown: Vec<String> = c.iter().map(scalar::to_text).collect();
                let nonzero = c.iter().any(|x| !x.is_zero());
                out.push(format!("theorem1: class of eself(eval({m},1))"), "nonzero", format!("[{}]", shown.join(", ")), nonzero)
            }
            Err(e) => out.push(format!("theorem1: class of eself(eval({m},1))"), "nonzero", format!("error: {e}"), false),
        }
    }
    let monotone = (|| -> Result<Option<(usize, usize)>> {
        let v1 = ev(1, int(1), q)?;
        let t = v1.tensor(&ev(1, q.pow(4), q)?)?;
        if is_simple(&t, cfg.window.max(1))? != Simplicity::Simple {
            return Ok(None);
        }
        Ok(Some((ext1(&v1, &v1)?.dim, ext1(&t, &t)?.dim)))
    })();
    match monotone {
        Ok(Some((d1, d))) => out.push(
            "theorem1: dim Ext^1(V1 (x) V2) >= dim Ext^1(V1) on a simple tensor",
            format!(">= {d1}"),
            d.to_string(),
            d1 == 1 && d >= d1,
        ),
        Ok(None) => out.push("theorem1: simple tensor eval(1,1) (x) eval(1,q^4)", "simple", "not simple", false),
        Err(e) => out.push("theorem1: monotonicity", "ok", format!("error: {e}"), false),
    }
    let base = match string(1, int(1), q) {
        Ok(b) => b,
        Err(e) => return out.push("theorem1: q-string", "ok", format!("error: {e}"), false),
    };
    for s in 1..=3u32 {
        let pi = base.pow(s);
        out.eq(
            format!("theorem1: primitive root of {pi}"),
            (base.to_string(), s),
            primitive_root(&pi).map(|(p, t)| (p.to_string(), t)),
        );
        let c = proportional_h(&base, &pi);
        out.push(
            format!("theorem1: h(pi0) = c h({pi})"),
            format!("1/{s}"),
            c.as_ref().map_or("none".to_string(), scalar::to_text),
            c == Some(scalar::frac(1, i64::from(s))),
        );
    }
    for s in 1..=cfg.m_max.min(2) {
        let pi = base.pow(s);
        out.holds(
            format!("theorem1: one-dimensional Ext^1 of the simple module of {pi} factors through a single string"),
            theorem1_part2_analysis(&pi, q).map(|r| !r.applicable || r.conclusion_holds),
        );
    }
}

fn weyl(cfg: &SuiteConfig, out: &mut Checks) {
    let q = &cfg.q;
    let polys = (|| -> Result<Vec<DrinfeldPoly>> {
        let s11 = string(1, int(1), q)?;
        Ok(vec![
            s11.clone(),
            s11.pow(2),
            s11.multiply(&string(1, q.pow(2), q)?),
            string(2, int(1), q)?.multiply(&string(2, q.pow(6), q)?),
        ])
    })();
    match polys {
        Ok(polys) => {
            for pi in polys {
                match ext_weyl_dimension_check(&pi, q) {
                    Ok((c, e)) => {
                        out.push(format!("weyl: dim Ext^1(W({pi}), W({pi}))"), e.to_string(), c.to_string(), c == e)
                    }
                    Err(err) => {
                        out.push(format!("weyl: dim Ext^1(W({pi}), W({pi}))"), "deg", format!("error: {err}"), false)
                    }
                }
            }
        }
        Err(e) => out.push("weyl: q-strings", "ok", format!("error: {e}"), false),
    }
    for m in 1..=cfg.m_max {
        let spec = EvalModuleSpec::new(m, int(1), q.clone());
        out.holds(format!("weyl: single relation on eval({m},1)"), spec.clone().and_then(|s| check_genrel_single(&s)));
        out.holds(format!("weyl: square relation on eval({m},1)^2"), spec.and_then(|s| check_genrel_square(&s)));
    }
    for m in 1..=cfg.m_max.min(2) {
        let top = (m as usize + 1) * (m as usize + 1);
        out.eq(
            format!("weyl: quotient dims for m={m}"),
            (1usize << (2 * m), top),
            EvalModuleSpec::new(m, int(1), q.clone()).and_then(|s| weyl_quotient_dims(&s)),
        );
    }
}

fn ideal(cfg: &SuiteConfig, out: &mut Checks) {
    let q = &cfg.q;
    for m in 1..=cfg.m_max {
        match ideal_i_analysis(m, &int(1), q) {
            Ok(an) => {
                out.push(format!("ideal: codimension for m={m}"), "2", an.codim.to_string(), an.codim == 2);
                out.push(
                    format!("ideal: generators vanish at pi({m},1)^2"),
                    "true",
                    an.membership.to_string(),
                    an.membership,
                );
            }
            Err(e) => out.push(format!("ideal: analysis for m={m}"), "ok", format!("error: {e}"), false),
        }
        match ideal_i_quotient(m, &int(1), q) {
            Ok(module) => {
                let nonsplit = !module.is_semisimple();
                out.push(format!("ideal: quotient non-split for m={m}"), "true", nonsplit.to_string(), nonsplit)
            }
            Err(e) => out.push(format!("ideal: quotient non-split for m={m}"), "true", format!("error: {e}"), false),
        }
    }
}

fn walkprop(cfg: &SuiteConfig, out: &mut Checks) {
    for (m, a) in [(2, -1), (3, -1), (3, -2)] {
        let ok = walkprop_forcing_check(m, a, &cfg.q);
        out.push(format!("walkprop: solutions for m={m}, a={a} form the diagonal line"), "true", ok.to_string(), ok);
    }
}
