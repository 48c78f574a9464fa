use super::{apply_q, inverse_c, left_c, ser_cvec, RepData};
use crate::error::{Result, WhaError};
use crate::numerics::rational::{rationalize, to_f64};
use crate::numerics::{Tolerances, C64, Q};
use crate::wha::GroupLike;
use crate::wha::WeakHopfAlgebra;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FPElement {
    #[serde(serialize_with = "ser_cvec")]
    pub w: Vec<C64>,
    /// `w ∈ Z(A_s)`.
    pub in_center_of_source: bool,
    /// `Tr_V ⇀ w = FPdim(V)·w` for each irreducible `V`.
    pub eigenvector: bool,
    /// `Tr_V(z·wS(w)^{-1}) = FPdim(V)ε(z)` on a basis of `A_t`.
    pub vector_w: bool,
    /// Spectrum of `L_w` is strictly positive.
    pub positive: bool,
}

impl FPElement {
    pub fn passed(&self) -> bool {
        self.in_center_of_source && self.eigenvector && self.vector_w && self.positive
    }
}

fn small(x: &[C64], eps: f64) -> bool {
    x.iter().all(|z| z.norm() <= eps)
}

fn diff(x: &[C64], y: &[C64]) -> Vec<C64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn norm(x: &[C64]) -> f64 {
    x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `(1 ⊗ φ)Δ(x)` as an element of `A`.
fn left_hit_c(a: &WeakHopfAlgebra, phi: &[C64], x: &[C64]) -> Vec<C64> {
    let mut out = vec![C64::new(0.0, 0.0); a.dim()];
    for (h, xh) in x.iter().enumerate().filter(|(_, v)| v.norm() != 0.0) {
        for (i, j, v) in a.comult_basis(h) {
            out[i] += xh * phi[j] * to_f64(v);
        }
    }
    out
}

pub fn fp_element(a: &WeakHopfAlgebra, rep: &RepData, tol: &Tolerances) -> Result<FPElement> {
    let eps = tol.check();
    let one: Vec<C64> = a.unit().iter().map(|x| C64::new(to_f64(x), 0.0)).collect();
    let w: Vec<C64> = left_hit_c(a, &rep.rho, &one).into_iter().map(|z| z / rep.dims.index_mu).collect();
    let scale = norm(&w).max(1.0);
    let src = a.source_basis();
    let eps_s = apply_q(a.eps_s_matrix(), &w);
    let commutes = src.iter().all(|b| {
        let bc: Vec<C64> = b.iter().map(|x| C64::new(to_f64(x), 0.0)).collect();
        small(&diff(&a.algebra().mul_c(&w, &bc), &a.algebra().mul_c(&bc, &w)), eps * scale)
    });
    let in_center_of_source = commutes && small(&diff(&eps_s, &w), eps * scale);
    let eigenvector = rep.wedderburn.blocks.iter().zip(&rep.dims.f).all(|(b, f)| {
        let lhs = left_hit_c(a, &b.character, &w);
        let rhs: Vec<C64> = w.iter().map(|z| z * *f).collect();
        small(&diff(&lhs, &rhs), eps * scale * f.max(1.0))
    });
    let sw = apply_q(a.antipode(), &w);
    let vector_w = match inverse_c(a.algebra(), &sw) {
        None => false,
        Some(swi) => {
            let g = a.algebra().mul_c(&w, &swi);
            a.target_basis().iter().all(|z| {
                let zc: Vec<C64> = z.iter().map(|x| C64::new(to_f64(x), 0.0)).collect();
                let zg = a.algebra().mul_c(&zc, &g);
                let ez = to_f64(&a.eps(z));
                rep.wedderburn.blocks.iter().zip(&rep.dims.f).enumerate().all(|(j, (_, f))| {
                    (rep.wedderburn.character_at_c(j, &zg) - f * ez).norm() <= eps * f.max(1.0) * scale
                })
            })
        }
    };
    let positive = left_c(a.algebra(), &w).eigenvalues().iter().all(|z| z.re > eps && z.im.abs() <= eps);
    Ok(FPElement { w, in_center_of_source, eigenvector, vector_w, positive })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WColinearity {
    /// `w_A ⇀ ε` as a row on `A`.
    #[serde(serialize_with = "ser_cvec")]
    pub hit: Vec<C64>,
    /// `w_{A*}` as a row on `A`.
    #[serde(serialize_with = "ser_cvec")]
    pub w_dual: Vec<C64>,
    /// How `w_{A*}` was obtained.
    pub method: String,
    pub proportional: bool,
}

/// `v ∝ u` within `eps` relative to `|v|`.
pub fn proportional(u: &[C64], v: &[C64], eps: f64) -> bool {
    let uu: f64 = u.iter().map(|z| z.norm_sqr()).sum();
    if uu == 0.0 {
        return small(v, eps);
    }
    let c: C64 = v.iter().zip(u).map(|(x, y)| x * y.conj()).sum::<C64>() / uu;
    let r: Vec<C64> = v.iter().zip(u).map(|(x, y)| x - c * y).collect();
    c.norm() > eps && norm(&r) <= eps * norm(v).max(1.0)
}

/// `w_{A*}` versus `w_A ⇀ ε`. When `A*` is not connected, `w_{A*}` is taken as `ε_s(ρ)` in `A*`.
pub fn w_colinearity(a: &WeakHopfAlgebra, rep: &RepData, tol: &Tolerances, seed: u64) -> Result<WColinearity> {
    let fp = fp_element(a, rep, tol)?;
    let n = a.dim();
    let hit: Vec<C64> = (0..n)
        .map(|g| {
            let eg: Vec<C64> = (0..n).map(|i| C64::new(if i == g { 1.0 } else { 0.0 }, 0.0)).collect();
            let p = a.algebra().mul_c(&eg, &fp.w);
            p.iter().zip(a.counit()).map(|(x, e)| x * to_f64(e)).sum()
        })
        .collect();
    let dual = a.dual_ref();
    let (w_dual, method) = if dual.connectivity().connected {
        let drep = RepData::new(dual, tol, seed)?;
        (fp_element(dual, &drep, tol)?.w, "fp_element(dual)")
    } else {
        (apply_q(dual.eps_s_matrix(), &rep.rho), "eps_s(rho)")
    };
    let proportional = proportional(&hit, &w_dual, tol.check());
    Ok(WColinearity { hit, w_dual, method: method.into(), proportional })
}

/// `|dim A − FPdim A| < 10·zero·FPdim A`, cross-checked against positivity of the `S²` spectrum.
pub fn is_pseudounitary(a: &WeakHopfAlgebra, rep: &RepData, tol: &Tolerances) -> Result<bool> {
    let by_dims = (rep.dims.dim_a_f64() - rep.dims.fp_dim_a).abs() < tol.check() * rep.dims.fp_dim_a;
    let by_spectrum = s2_positive(a, tol);
    if by_dims != by_spectrum {
        return Err(WhaError::EquivalenceViolated(format!(
            "pseudo-unitarity by dimensions is {by_dims}, positivity of the S^2 spectrum is {by_spectrum}"
        )));
    }
    Ok(by_dims)
}

pub fn s2_positive(a: &WeakHopfAlgebra, tol: &Tolerances) -> bool {
    a.s2_eigenvalues().iter().all(|z| z.re > tol.check() && z.im.abs() <= tol.check())
}

/// `G = wS(w)^{-1}` for pseudo-unitary `A`, verified exactly.
pub fn canonical_pivotal(a: &WeakHopfAlgebra, rep: &RepData, tol: &Tolerances) -> Result<GroupLike> {
    if !is_pseudounitary(a, rep, tol)? {
        return Err(WhaError::NotPseudoUnitary);
    }
    let fp = fp_element(a, rep, tol)?;
    let sw = apply_q(a.antipode(), &fp.w);
    let swi = inverse_c(a.algebra(), &sw).ok_or(WhaError::NotInvertible)?;
    let g = a.algebra().mul_c(&fp.w, &swi);
    let exact: Vec<Q> = g
        .iter()
        .map(|z| if z.im.abs() > tol.int_round { None } else { rationalize(z.re, 1_000_000, 1e3 * tol.zero) })
        .collect::<Option<_>>()
        .ok_or(WhaError::NonRationalPivotal)?;
    let gl = a.grouplike(&exact).map_err(|_| WhaError::EquivalenceViolated("wS(w)^{-1} is not group-like".into()))?;
    if !implements_s2(a, &gl) {
        return Err(WhaError::EquivalenceViolated("wS(w)^{-1} does not implement S^2".into()));
    }
    if gl.trivial_witness.is_none() {
        return Err(WhaError::EquivalenceViolated("canonical pivotal element is not trivial".into()));
    }
    Ok(gl)
}

/// `S²(h) = GhG^{-1}` on every basis element, exactly.
pub fn implements_s2(a: &WeakHopfAlgebra, g: &GroupLike) -> bool {
    let s2 = a.s_squared();
    (0..a.dim()).all(|h| s2.column(h) == a.mul(&a.mul(&g.element, &a.basis(h)), &g.inverse))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PivotalReport {
    /// `d_j = χ_j(G)/d`.
    #[serde(serialize_with = "super::ser_f64s")]
    pub quantum_dims: Vec<f64>,
    /// `|V_j|² = d_j·d_{j*}`.
    pub sqnorm_identity: bool,
    #[serde(rename = "Lambda_d", serialize_with = "super::ser_f64s")]
    pub lambda_d: Vec<f64>,
    pub trivial: bool,
    /// `Λd ≠ 0 ⟹ G trivial`.
    pub ld_implication: bool,
}

impl PivotalReport {
    pub fn passed(&self) -> bool {
        self.sqnorm_identity && self.ld_implication
    }
}

pub fn quantum_dims(a: &WeakHopfAlgebra, rep: &RepData, g: &GroupLike) -> Vec<C64> {
    let d = a.d() as f64;
    (0..rep.wedderburn.len()).map(|j| rep.wedderburn.character_at(j, &g.element) / d).collect()
}

pub fn verify_pivotal(a: &WeakHopfAlgebra, rep: &RepData, g: &GroupLike, tol: &Tolerances) -> Result<PivotalReport> {
    if !a.is_grouplike(&g.element) {
        return Err(WhaError::InvalidParams("element is not group-like".into()));
    }
    if !implements_s2(a, g) {
        return Err(WhaError::NotPivotal);
    }
    let eps = tol.check();
    let qd = quantum_dims(a, rep, g);
    let star = &rep.fusion.star;
    let sqnorm_identity =
        rep.dims.sqnorms.iter().enumerate().all(|(j, s)| (qd[j] * qd[star[j]] - s).norm() <= eps * s.abs().max(1.0));
    let lambda_d: Vec<f64> =
        rep.inclusion.lambda.iter().map(|row| row.iter().zip(&qd).map(|(l, x)| *l as f64 * x.re).sum()).collect();
    let trivial = a.is_trivial(&g.element).is_some();
    let nonzero = lambda_d.iter().any(|x| x.abs() > eps);
    Ok(PivotalReport {
        quantum_dims: qd.iter().map(|z| z.re).collect(),
        sqnorm_identity,
        lambda_d,
        trivial,
        ld_implication: !nonzero || trivial,
    })
}
