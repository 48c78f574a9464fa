use super::{left_c, ser_f64s, RepData};
use crate::algebra::Wedderburn;
use crate::error::Result;
use crate::numerics::rational::{ser_q, to_f64};
use crate::numerics::{round_int, CMatrix, Tolerances, C64, Q};
use crate::repcat::SourceBlocks;
use crate::wha::WeakHopfAlgebra;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InclusionData {
    /// `Λ_{αj}`: multiplicity of the simple `A_s`-module `α` in `V_j`.
    #[serde(rename = "Lambda")]
    pub lambda: Vec<Vec<i64>>,
    pub n_alpha: Vec<usize>,
    #[serde(skip)]
    pub p: Vec<Vec<C64>>,
}

pub fn inclusion_matrix(w: &Wedderburn, src: &SourceBlocks, tol: &Tolerances) -> Result<InclusionData> {
    let lambda = src
        .p
        .iter()
        .zip(&src.n_alpha)
        .map(|(p, &na)| (0..w.len()).map(|j| Ok(round_int(w.character_at_c(j, p) / na as f64, tol)?)).collect())
        .collect::<Result<Vec<Vec<i64>>>>()?;
    Ok(InclusionData { lambda, n_alpha: src.n_alpha.clone(), p: src.p.clone() })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DimensionData {
    pub d: usize,
    #[serde(serialize_with = "ser_f64s")]
    pub f: Vec<f64>,
    #[serde(serialize_with = "super::ser_opt_f64s")]
    pub d_quantum: Option<Vec<f64>>,
    #[serde(serialize_with = "ser_f64s")]
    pub sqnorms: Vec<f64>,
    #[serde(rename = "dimA", serialize_with = "ser_q")]
    pub dim_a: Q,
    #[serde(rename = "FPdimA", serialize_with = "super::ser_f64")]
    pub fp_dim_a: f64,
    #[serde(rename = "mu", serialize_with = "super::ser_f64")]
    pub index_mu: f64,
    /// `|V_j|² ≤ f_j²` for all `j`.
    pub sqnorm_bound: bool,
    /// `dim A ≤ FPdim A`.
    pub dim_bound: bool,
}

impl DimensionData {
    pub fn dim_a_f64(&self) -> f64 {
        to_f64(&self.dim_a)
    }
}

pub fn dimension_data(a: &WeakHopfAlgebra, w: &Wedderburn, f: &[f64], tol: &Tolerances) -> DimensionData {
    let d = a.d();
    let d2 = (d * d) as f64;
    let dim_a = a.trace_s2() / Q::from_integer(((d * d) as i64).into());
    let s2 = CMatrix::from_q(&a.s_squared());
    let sqnorms: Vec<f64> =
        w.blocks.iter().map(|b| s2.mul(&left_c(a.algebra(), &b.idempotent)).trace().re / d2).collect();
    let fp_dim_a: f64 = f.iter().map(|x| x * x).sum();
    let index_mu: f64 = w.blocks.iter().zip(f).map(|(b, x)| b.dim_v as f64 * x).sum();
    let eps = tol.check();
    let sqnorm_bound = sqnorms.iter().zip(f).all(|(s, x)| *s <= x * x + eps * (x * x).max(1.0));
    let dim_bound = to_f64(&dim_a) <= fp_dim_a + eps * fp_dim_a.max(1.0);
    DimensionData { d, f: f.to_vec(), d_quantum: None, sqnorms, dim_a, fp_dim_a, index_mu, sqnorm_bound, dim_bound }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LLReport {
    #[serde(serialize_with = "ser_f64s")]
    pub v: Vec<f64>,
    pub lambda_f: bool,
    pub lambda_t_v: bool,
    pub lambda_t_lambda_f: bool,
    pub lambda_lambda_t_v: bool,
}

impl LLReport {
    pub fn holds(&self) -> bool {
        self.lambda_f && self.lambda_t_v && self.lambda_t_lambda_f && self.lambda_lambda_t_v
    }
}

fn apply(m: &[Vec<i64>], x: &[f64]) -> Vec<f64> {
    m.iter().map(|row| row.iter().zip(x).map(|(a, b)| *a as f64 * b).sum()).collect()
}

fn apply_t(m: &[Vec<i64>], y: &[f64], cols: usize) -> Vec<f64> {
    (0..cols).map(|j| m.iter().zip(y).map(|(row, b)| row[j] as f64 * b).sum()).collect()
}

fn near(x: &[f64], y: &[f64], eps: f64) -> bool {
    x.len() == y.len() && x.iter().zip(y).all(|(a, b)| (a - b).abs() <= eps * a.abs().max(b.abs()).max(1.0))
}

/// `Λf = μv`, `Λᵗv = f`, `ΛᵗΛf = μf`, `ΛΛᵗv = μv`.
pub fn verify_ll(rep: &RepData, tol: &Tolerances) -> LLReport {
    let lam = &rep.inclusion.lambda;
    let mu = rep.dims.index_mu;
    let f = &rep.dims.f;
    let r = f.len();
    let v: Vec<f64> = rep
        .inclusion
        .p
        .iter()
        .zip(&rep.inclusion.n_alpha)
        .map(|(p, &na)| {
            let rp: C64 = rep.rho.iter().zip(p).map(|(x, y)| x * y).sum();
            rp.re / (na as f64 * mu)
        })
        .collect();
    let eps = tol.check();
    let scale = |x: &[f64], s: f64| x.iter().map(|t| t * s).collect::<Vec<_>>();
    let lf = apply(lam, f);
    let ltv = apply_t(lam, &v, r);
    let ltlf = apply_t(lam, &lf, r);
    let lltv = apply(lam, &ltv);
    LLReport {
        lambda_f: near(&lf, &scale(&v, mu), eps),
        lambda_t_v: near(&ltv, f, eps),
        lambda_t_lambda_f: near(&ltlf, &scale(f, mu), eps),
        lambda_lambda_t_v: near(&lltv, &scale(&v, mu), eps),
        v,
    }
}
