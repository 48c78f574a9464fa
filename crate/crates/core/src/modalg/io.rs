use super::{ComoduleAlgebra, ModuleAlgebra};
use crate::algebra::Algebra;
use crate::error::{Result, WhaError};
use crate::integrals::Side;
use crate::numerics::{QStr, Tensor3, Q};
use serde::{Deserialize, Serialize};

type Nested = Vec<Vec<Vec<QStr>>>;

/// JSON form of a (co)module algebra: structure constants plus exactly one of `action`/`coaction`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub dim: usize,
    #[serde(default)]
    pub label: String,
    pub mult: Nested,
    pub unit: Vec<QStr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<Nested>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coaction: Option<Nested>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<Side>,
}

fn err(location: impl Into<String>, message: impl Into<String>) -> WhaError {
    WhaError::Parse { location: location.into(), message: message.into() }
}

fn tensor(field: &str, v: &Nested, dims: (usize, usize, usize)) -> Result<Tensor3> {
    let (a, b, c) = dims;
    if v.len() != a {
        return Err(err(field, format!("expected {a} slices, found {}", v.len())));
    }
    for (i, s) in v.iter().enumerate() {
        if s.len() != b {
            return Err(err(format!("{field}[{i}]"), format!("expected {b} rows, found {}", s.len())));
        }
        for (j, r) in s.iter().enumerate() {
            if r.len() != c {
                return Err(err(format!("{field}[{i}][{j}]"), format!("expected {c} entries, found {}", r.len())));
            }
        }
    }
    Ok(Tensor3::from_fn(a, b, c, |i, j, k| v[i][j][k].0.clone()))
}

fn nested(t: &Tensor3) -> Nested {
    t.to_nested().into_iter().map(|m| m.into_iter().map(|r| r.into_iter().map(QStr).collect()).collect()).collect()
}

impl AlgebraFile {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| err(format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Checks associativity and the unit.
    pub fn algebra(&self) -> Result<Algebra> {
        let d = self.dim;
        let mult = tensor("mult", &self.mult, (d, d, d))?;
        if self.unit.len() != d {
            return Err(err("unit", format!("expected {d} entries, found {}", self.unit.len())));
        }
        let unit: Vec<Q> = self.unit.iter().map(|x| x.0.clone()).collect();
        let alg = Algebra::new(mult, unit);
        if alg.associativity_failure().is_some() {
            return Err(WhaError::AxiomViolation("associativity".into()));
        }
        if alg.unit_failure().is_some() {
            return Err(WhaError::AxiomViolation("unit".into()));
        }
        Ok(alg)
    }

    /// Module algebra over an algebra of dimension `n`.
    pub fn module_algebra(&self, n: usize) -> Result<ModuleAlgebra> {
        let act = self.action.as_ref().ok_or_else(|| err("action", "missing field"))?;
        let t = tensor("action", act, (n, self.dim, self.dim))?;
        ModuleAlgebra::new(self.label.clone(), self.algebra()?, t, self.side.unwrap_or(Side::Left))
    }

    /// Comodule algebra over an algebra of dimension `n`.
    pub fn comodule_algebra(&self, n: usize) -> Result<ComoduleAlgebra> {
        let co = self.coaction.as_ref().ok_or_else(|| err("coaction", "missing field"))?;
        let t = tensor("coaction", co, (self.dim, n, self.dim))?;
        ComoduleAlgebra::new(self.label.clone(), self.algebra()?, t)
    }

    fn base(label: &str, alg: &Algebra) -> Self {
        AlgebraFile {
            dim: alg.dim(),
            label: label.to_string(),
            mult: nested(alg.mult()),
            unit: alg.unit().iter().cloned().map(QStr).collect(),
            action: None,
            coaction: None,
            side: None,
        }
    }

    pub fn from_module(m: &ModuleAlgebra) -> Self {
        AlgebraFile { action: Some(nested(&m.action)), side: Some(m.side), ..Self::base(&m.label, &m.alg) }
    }

    pub fn from_comodule(m: &ComoduleAlgebra) -> Self {
        AlgebraFile { coaction: Some(nested(&m.coaction)), ..Self::base(&m.label, &m.alg) }
    }
}
