use serde::{Deserialize, Serialize};

use super::{Gen, Module};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::qnum::QParam;
use crate::scalar;

/// Serialized form: generator matrices as sparse `[row, col, "p/q"]` triplets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleJson {
    pub dim: usize,
    pub q: QParam,
    pub weights: Vec<i64>,
    pub e1: Vec<(usize, usize, String)>,
    pub f1: Vec<(usize, usize, String)>,
    pub e0: Vec<(usize, usize, String)>,
    pub f0: Vec<(usize, usize, String)>,
    pub label: String,
}

fn triplets(m: &Matrix) -> Vec<(usize, usize, String)> {
    m.nonzero_entries().map(|(i, j, v)| (i, j, scalar::to_text(v))).collect()
}

fn dense(dim: usize, name: &str, entries: &[(usize, usize, String)]) -> Result<Matrix> {
    let mut m = Matrix::zeros(dim, dim);
    for (i, j, v) in entries {
        if *i >= dim || *j >= dim {
            return Err(Error::Malformed(format!("{name} entry ({i},{j}) outside dimension {dim}")));
        }
        m.set(*i, *j, scalar::parse(v)?);
    }
    Ok(m)
}

impl From<&Module> for ModuleJson {
    fn from(m: &Module) -> Self {
        ModuleJson {
            dim: m.dim(),
            q: m.q().clone(),
            weights: m.weights().to_vec(),
            e1: triplets(m.act(Gen::E1)),
            f1: triplets(m.act(Gen::F1)),
            e0: triplets(m.act(Gen::E0)),
            f0: triplets(m.act(Gen::F0)),
            label: m.label().to_string(),
        }
    }
}

impl TryFrom<&ModuleJson> for Module {
    type Error = Error;
    fn try_from(j: &ModuleJson) -> Result<Module> {
        if j.weights.len() != j.dim {
            return Err(Error::Malformed(format!("{} weights for dimension {}", j.weights.len(), j.dim)));
        }
        let act = [
            dense(j.dim, "e1", &j.e1)?,
            dense(j.dim, "f1", &j.f1)?,
            dense(j.dim, "e0", &j.e0)?,
            dense(j.dim, "f0", &j.f0)?,
        ];
        Module::new(j.q.clone(), j.weights.clone(), act, j.label.clone())
    }
}

impl Module {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&ModuleJson::from(self)).expect("module serializes") + "\n"
    }

    pub fn from_json(s: &str) -> Result<Module> {
        let j: ModuleJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        Module::try_from(&j)
    }
}
