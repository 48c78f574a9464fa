use super::{WeakBialgebra, WeakHopfAlgebra};
use crate::error::{Result, WhaError};
use crate::numerics::{QMatrix, QStr, Tensor3, Q};
use serde::{Deserialize, Serialize};

/// On-disk form: `mult[i][j][k] = m_{ij}^k`, `comult[i][j][k] = Δ_i^{jk}`,
/// `antipode[i][j]` = coefficient of `e_i` in `S(e_j)`; rationals are strings.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WhaFile {
    pub dim: usize,
    pub label: String,
    pub mult: Vec<Vec<Vec<QStr>>>,
    pub unit: Vec<QStr>,
    pub comult: Vec<Vec<Vec<QStr>>>,
    pub counit: Vec<QStr>,
    pub antipode: Option<Vec<Vec<QStr>>>,
}

fn wrap(v: &[Q]) -> Vec<QStr> {
    v.iter().cloned().map(QStr).collect()
}

fn unwrap(v: &[QStr]) -> Vec<Q> {
    v.iter().map(|x| x.0.clone()).collect()
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> WhaError {
    WhaError::Parse { location: location.into(), message: message.into() }
}

fn tensor(field: &str, v: &[Vec<Vec<QStr>>], n: usize) -> Result<Tensor3> {
    if v.len() != n {
        return Err(parse_err(field, format!("expected {n} slices, found {}", v.len())));
    }
    for (i, a) in v.iter().enumerate() {
        if a.len() != n {
            return Err(parse_err(format!("{field}[{i}]"), format!("expected {n} rows, found {}", a.len())));
        }
        for (j, b) in a.iter().enumerate() {
            if b.len() != n {
                return Err(parse_err(
                    format!("{field}[{i}][{j}]"),
                    format!("expected {n} entries, found {}", b.len()),
                ));
            }
        }
    }
    Ok(Tensor3::from_fn(n, n, n, |i, j, k| v[i][j][k].0.clone()))
}

fn vector(field: &str, v: &[QStr], n: usize) -> Result<Vec<Q>> {
    if v.len() != n {
        return Err(parse_err(field, format!("expected {n} entries, found {}", v.len())));
    }
    Ok(unwrap(v))
}

impl WhaFile {
    pub fn from_algebra(a: &WeakHopfAlgebra) -> Self {
        let nested = |t: &Tensor3| -> Vec<Vec<Vec<QStr>>> {
            t.to_nested().into_iter().map(|m| m.into_iter().map(|r| wrap(&r)).collect()).collect()
        };
        WhaFile {
            dim: a.dim(),
            label: a.label().to_string(),
            mult: nested(a.mult()),
            unit: wrap(a.unit()),
            comult: nested(a.comult()),
            counit: wrap(a.counit()),
            antipode: Some(a.antipode().to_rows().iter().map(|r| wrap(r)).collect()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// Structure data without axiom checks; `antipode` is `None` when absent in the file.
    pub fn into_parts(self) -> Result<(WeakBialgebra, Option<QMatrix>)> {
        let n = self.dim;
        let mult = tensor("mult", &self.mult, n)?;
        let comult = tensor("comult", &self.comult, n)?;
        let unit = vector("unit", &self.unit, n)?;
        let counit = vector("counit", &self.counit, n)?;
        let antipode = match &self.antipode {
            None => None,
            Some(rows) => {
                if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                    return Err(parse_err("antipode", format!("expected a {n}×{n} matrix")));
                }
                Some(QMatrix::from_rows(rows.iter().map(|r| unwrap(r)).collect()))
            }
        };
        let core = WeakBialgebra::new(self.label, mult, unit, comult, counit)?;
        Ok((core, antipode))
    }

    /// Validated algebra; a missing antipode is solved for.
    pub fn into_algebra(self) -> Result<WeakHopfAlgebra> {
        let (core, s) = self.into_parts()?;
        WeakHopfAlgebra::new(core, s)
    }
}

impl WeakHopfAlgebra {
    pub fn to_json(&self) -> String {
        WhaFile::from_algebra(self).to_json()
    }

    pub fn from_json(text: &str) -> Result<Self> {
        WhaFile::parse(text)?.into_algebra()
    }
}
