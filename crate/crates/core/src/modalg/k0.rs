use super::{jacobson_radical, ComoduleAlgebra};
use crate::algebra::to_c;
use crate::error::{Result, WhaError};
use crate::numerics::rational::to_f64;
use crate::numerics::{perron, round_int, QMatrix, Tolerances, C64, Q};
use crate::repcat::{apply_q, proportional, ser_f64, ser_f64s, RepData};
use crate::theorems::Integrality;
use crate::wha::WeakHopfAlgebra;
use serde::Serialize;

/// `K₀(A)` acting on `K₀(M)`: `χ_jξ_k = Σ_i action[j][i][k] ξ_i`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct K0Action {
    /// Dimensions of the irreducible `M`-modules.
    pub dims: Vec<usize>,
    #[serde(skip)]
    pub xi: Vec<Vec<C64>>,
    #[serde(skip)]
    pub idempotents: Vec<Vec<C64>>,
    pub action: Vec<Vec<Vec<i64>>>,
}

fn zero() -> C64 {
    C64::new(0.0, 0.0)
}

/// `δ(m)` for complex `m`, as an `n_A × dim M` array.
fn coact_c(m: &ComoduleAlgebra, x: &[C64]) -> Vec<Vec<C64>> {
    let (d, n, _) = m.coaction.dims();
    let mut out = vec![vec![zero(); d]; n];
    for (i, xi) in x.iter().enumerate().filter(|(_, v)| v.norm() != 0.0) {
        for (h, row) in out.iter_mut().enumerate() {
            for (j, v) in m.coaction.fibre(i, h) {
                row[*j] += xi * to_f64(v);
            }
        }
    }
    out
}

pub fn k0_action(
    a: &WeakHopfAlgebra,
    rep: &RepData,
    m: &ComoduleAlgebra,
    tol: &Tolerances,
    seed: u64,
) -> Result<K0Action> {
    if m.coaction.dims().1 != a.dim() {
        return Err(WhaError::InvalidParams("coaction does not match the algebra dimension".into()));
    }
    if !jacobson_radical(&m.alg).is_empty() {
        return Err(WhaError::NotSemisimpleM);
    }
    let w = m.alg.wedderburn(tol, seed)?;
    let xi: Vec<Vec<C64>> = w.blocks.iter().map(|b| b.character.clone()).collect();
    let idempotents: Vec<Vec<C64>> = w.blocks.iter().map(|b| b.idempotent.clone()).collect();
    let t = xi.len();
    let chars = &rep.wedderburn.blocks;
    let mut action = vec![vec![vec![0i64; t]; t]; chars.len()];
    for (i, c) in idempotents.iter().enumerate() {
        let dc = coact_c(m, c);
        for (j, chi) in chars.iter().enumerate() {
            // (χ_j ⊗ id)δ(c_i)
            let mut v = vec![zero(); m.dim()];
            for (h, row) in dc.iter().enumerate() {
                for (s, x) in row.iter().enumerate() {
                    v[s] += chi.character[h] * x;
                }
            }
            for (k, xk) in xi.iter().enumerate() {
                let val: C64 = v.iter().zip(xk).map(|(p, q)| p * q).sum();
                action[j][i][k] = round_int(val / w.blocks[i].dim_v as f64, tol)?;
            }
        }
    }
    Ok(K0Action { dims: w.dims(), xi, idempotents, action })
}

/// A union of simple blocks whose ideal and its complement are both coaction-stable.
fn decomposition(m: &ComoduleAlgebra, k: &K0Action, eps: f64) -> Option<u64> {
    let t = k.idempotents.len();
    if !(2..=20).contains(&t) {
        return None;
    }
    let d = m.dim();
    let stable = |mask: u64| {
        let mut e = vec![zero(); d];
        for (_, c) in k.idempotents.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1) {
            for (x, y) in e.iter_mut().zip(c) {
                *x += y;
            }
        }
        let one_minus_e: Vec<C64> = to_c(m.alg.unit()).iter().zip(&e).map(|(u, x)| u - x).collect();
        (0..d).all(|s| {
            let mut basis = vec![zero(); d];
            basis[s] = C64::new(1.0, 0.0);
            let em = m.alg.mul_c(&e, &basis);
            coact_c(m, &em).iter().all(|row| m.alg.mul_c(&one_minus_e, row).iter().all(|z| z.norm() <= eps))
        })
    };
    (1..(1u64 << (t - 1))).find(|&mask| stable(mask) && stable(!mask & ((1u64 << t) - 1)))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct K0ModuleData {
    #[serde(flatten)]
    pub k0: K0Action,
    /// `FPdim(M_k) = ξ_k(1·w_{A*})/FPdim(A)` with `w_{A*} = ε_s(ρ)`; for Hopf algebras this is `dim M_k`.
    #[serde(serialize_with = "ser_f64s")]
    pub fp_xi: Vec<f64>,
    #[serde(rename = "FPdimM", serialize_with = "ser_f64")]
    pub fp_dim_m: f64,
    /// `Tr_V ξ_f = FPdim(V) ξ_f` for each irreducible `V`.
    pub eigenvector: bool,
    /// Agreement with the Perron vector of a strictly positive `[χ_V]`, when one exists.
    pub perron_agrees: Option<bool>,
}

impl K0ModuleData {
    pub fn passed(&self) -> bool {
        self.eigenvector && self.perron_agrees != Some(false) && self.fp_xi.iter().all(|x| *x > 0.0)
    }
}

/// `K₀(M)` as a `K₀(A)`-module with FP dimensions, for an indecomposable semisimple comodule algebra.
pub fn k0_module(
    a: &WeakHopfAlgebra,
    rep: &RepData,
    m: &ComoduleAlgebra,
    tol: &Tolerances,
    seed: u64,
) -> Result<K0ModuleData> {
    let k0 = k0_action(a, rep, m, tol, seed)?;
    let eps = 1e3 * tol.check();
    if decomposition(m, &k0, eps).is_some() {
        return Err(WhaError::Decomposable);
    }
    let w_dual = apply_q(a.dual_ref().eps_s_matrix(), &rep.rho);
    // 1·w = ⟨w, 1_I⟩ 1_II
    let one_w: Vec<C64> = {
        let d1 = coact_c(m, &to_c(m.alg.unit()));
        let mut v = vec![zero(); m.dim()];
        for (h, row) in d1.iter().enumerate() {
            for (s, x) in row.iter().enumerate() {
                v[s] += w_dual[h] * x;
            }
        }
        v
    };
    let fp_c: Vec<C64> = k0.xi.iter().map(|x| x.iter().zip(&one_w).map(|(p, q)| p * q).sum()).collect();
    if fp_c.iter().any(|z| z.im.abs() > eps || z.re <= eps) {
        return Err(WhaError::EquationViolated("FP dimensions of M are not positive reals".into()));
    }
    let fp_xi: Vec<f64> = fp_c.iter().map(|z| z.re / rep.dims.fp_dim_a).collect();
    let fp_dim_m = fp_xi.iter().map(|x| x * x).sum();
    let t = fp_xi.len();
    let f = &rep.dims.f;
    let eigenvector = k0.action.iter().zip(f).all(|(mat, fj)| {
        (0..t).all(|i| {
            let lhs: f64 = (0..t).map(|k| mat[i][k] as f64 * fp_xi[k]).sum();
            (lhs - fj * fp_xi[i]).abs() <= tol.check() * (fj * fp_xi[i]).abs().max(1.0)
        })
    });
    let perron_agrees = k0.action.iter().find(|mat| mat.iter().flatten().all(|x| *x > 0)).map(|mat| {
        let qm = QMatrix::from_fn(t, t, |i, k| Q::from_integer(mat[i][k].into()));
        match perron(&qm, tol) {
            Ok((_, v)) => proportional(&to_c_f(&v), &to_c_f(&fp_xi), 1e3 * tol.check()),
            Err(_) => false,
        }
    });
    Ok(K0ModuleData { k0, fp_xi, fp_dim_m, eigenvector, perron_agrees })
}

fn to_c_f(v: &[f64]) -> Vec<C64> {
    v.iter().map(|x| C64::new(*x, 0.0)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrbitReport {
    /// `FPdim(A)·FPdim(M_i)·FPdim(M_k)/FPdim(M)`.
    #[serde(serialize_with = "crate::repcat::ser_f64ss")]
    pub ratios: Vec<Vec<f64>>,
    /// Coefficient of `ξ_i` in `ρξ_k`.
    #[serde(serialize_with = "crate::repcat::ser_f64ss")]
    pub expansion: Vec<Vec<f64>>,
    pub integrality: Vec<Vec<Integrality>>,
    pub agree: bool,
}

impl OrbitReport {
    pub fn passed(&self) -> bool {
        self.agree
    }

    pub fn all_integers(&self) -> bool {
        self.integrality.iter().flatten().all(|x| matches!(x, Integrality::Integer(_)))
    }
}

pub fn orbit_theorem_check(rep: &RepData, data: &K0ModuleData, tol: &Tolerances) -> OrbitReport {
    let t = data.fp_xi.len();
    let fa = rep.dims.fp_dim_a;
    let clean = crate::repcat::clean;
    let ratios: Vec<Vec<f64>> =
        (0..t).map(|i| (0..t).map(|k| fa * data.fp_xi[i] * data.fp_xi[k] / data.fp_dim_m).collect()).collect();
    let expansion: Vec<Vec<f64>> = (0..t)
        .map(|i| {
            (0..t).map(|k| data.k0.action.iter().zip(&rep.dims.f).map(|(m, f)| m[i][k] as f64 * f).sum()).collect()
        })
        .collect();
    let agree = ratios
        .iter()
        .flatten()
        .zip(expansion.iter().flatten())
        .all(|(r, e)| (r - e).abs() <= tol.check() * r.abs().max(1.0));
    let integrality = ratios
        .iter()
        .map(|row| {
            row.iter()
                .map(|r| match round_int(C64::new(*r, 0.0), tol) {
                    Ok(k) => Integrality::Integer(k),
                    Err(_) => Integrality::UnverifiedAlgebraicInteger(clean(*r)),
                })
                .collect()
        })
        .collect();
    let round = |m: Vec<Vec<f64>>| m.into_iter().map(|r| r.into_iter().map(clean).collect()).collect();
    OrbitReport { ratios: round(ratios), expansion: round(expansion), integrality, agree }
}
