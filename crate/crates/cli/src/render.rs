//! JSON renderings of analysis results, with every number as exact text.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use qloop_core::linalg::Matrix;
use qloop_core::repcore::{DrinfeldMatrices, LWeightBlock, Simplicity};
use qloop_core::scalar::{to_text, Scalar};
use qloop_core::selfext::ExtSpace;
use qloop_core::weylalg::{ALambdaModule, IdealAnalysis};

pub fn vector(v: &[Scalar]) -> Value {
    Value::from(v.iter().map(to_text).collect::<Vec<_>>())
}

pub fn matrix(m: &Matrix) -> Value {
    Value::from(m.nonzero_entries().map(|(i, j, x)| json!([i, j, to_text(x)])).collect::<Vec<_>>())
}

fn dense(m: &Matrix) -> Value {
    Value::from((0..m.rows()).map(|i| vector(m.row(i))).collect::<Vec<_>>())
}

fn scalar_map(m: &BTreeMap<i64, Scalar>) -> Value {
    Value::Object(m.iter().map(|(k, v)| (k.to_string(), Value::from(to_text(v)))).collect())
}

fn matrix_map(m: &BTreeMap<i64, Matrix>) -> Value {
    Value::Object(m.iter().map(|(k, v)| (k.to_string(), matrix(v))).collect())
}

pub fn lweight_blocks(blocks: &[LWeightBlock]) -> Value {
    Value::from(
        blocks
            .iter()
            .map(|b| match b {
                LWeightBlock::Eigen { weight, basis, h, generalized_dim } => json!({
                    "weight": weight,
                    "dim": basis.len(),
                    "generalized_dim": generalized_dim,
                    "semisimple": basis.len() == *generalized_dim,
                    "h": scalar_map(h),
                    "basis": basis.iter().map(|v| vector(v)).collect::<Vec<_>>(),
                }),
                LWeightBlock::Undecided { weight, basis, reason } => json!({
                    "weight": weight,
                    "dim": basis.len(),
                    "undecided": reason,
                }),
            })
            .collect::<Vec<_>>(),
    )
}

pub fn simplicity(s: &Simplicity) -> Value {
    match s {
        Simplicity::Simple => json!({ "simple": "true" }),
        Simplicity::NotSimple { certificate, reason } => {
            json!({ "simple": "false", "certificate": vector(certificate), "reason": reason })
        }
        Simplicity::Undecided(reason) => json!({ "simple": "undecided", "reason": reason }),
    }
}

pub fn drinfeld(d: &DrinfeldMatrices) -> Value {
    json!({
        "window": d.window,
        "xplus": matrix_map(&d.xplus),
        "xminus": matrix_map(&d.xminus),
        "h": matrix_map(&d.h),
        "phi_plus": matrix_map(&d.phi_plus),
        "phi_minus": matrix_map(&d.phi_minus),
    })
}

pub fn ext(e: &ExtSpace, with_basis: bool) -> Value {
    let mut out = Map::new();
    out.insert("source".into(), Value::from(e.source_label.clone()));
    out.insert("target".into(), Value::from(e.target_label.clone()));
    out.insert("dim".into(), Value::from(e.dim));
    out.insert("cocycles".into(), Value::from(e.dim_cocycles));
    out.insert("coboundaries".into(), Value::from(e.dim_coboundaries));
    if with_basis {
        let basis = e
            .cocycle_matrices()
            .iter()
            .map(|[e1, f1, e0, f0]| json!({ "e1": matrix(e1), "f1": matrix(f1), "e0": matrix(e0), "f0": matrix(f0) }))
            .collect::<Vec<_>>();
        out.insert("cocycle_basis".into(), Value::from(basis));
    }
    Value::Object(out)
}

pub fn ideal(an: &IdealAnalysis, quotient: Option<&ALambdaModule>) -> Value {
    let poly = |p: &[Scalar]| vector(p);
    json!({
        "m": an.m,
        "a": to_text(&an.a),
        "codim": an.codim,
        "membership": an.membership,
        "eliminated": an.eliminated.iter().map(|p| poly(p)).collect::<Vec<_>>(),
        "remaining": an.remaining.iter().map(|p| poly(p)).collect::<Vec<_>>(),
        "quotient_poly": poly(&an.quotient_poly),
        "matrices": quotient.map(|m| (1..=m.lambda()).map(|r| dense(m.generator(r))).collect::<Vec<_>>()),
        "non_split": quotient.map(|m| !m.is_semisimple()),
    })
}
