//! Representation category: Wedderburn data, fusion ring, dimensions, FP element, pivotal structure.

mod dims;
mod fusion;
mod pivotal;
mod source;

pub use dims::{dimension_data, inclusion_matrix, verify_ll, DimensionData, InclusionData, LLReport};
pub use fusion::{
    fp_character, fp_dimensions, fp_is_multiplicative, fusion_ring, trivial_character, FusionChecks, FusionRing,
};
pub use pivotal::{
    canonical_pivotal, fp_element, implements_s2, is_pseudounitary, proportional, quantum_dims, s2_positive,
    verify_pivotal, w_colinearity, FPElement, PivotalReport, WColinearity,
};
pub use source::{source_blocks, SourceBlocks};

use crate::algebra::{to_c, Algebra, Wedderburn};
use crate::error::{Result, WhaError};
use crate::numerics::rational::to_f64;
use crate::numerics::{CMatrix, QMatrix, Tolerances, C64};
use crate::wha::WeakHopfAlgebra;
use num_traits::Zero;
use serde::Serializer;

/// Rounds to 12 significant decimals; magnitudes below 1e-12 become 0.
pub fn clean(x: f64) -> f64 {
    if !x.is_finite() {
        return x;
    }
    if x.abs() < 1e-12 {
        return 0.0;
    }
    let mag = 10f64.powi(11 - x.abs().log10().floor() as i32);
    (x * mag).round() / mag + 0.0
}

pub(crate) fn ser_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(clean(*x))
}

pub(crate) fn ser_f64s<S: Serializer>(v: &[f64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| clean(*x)))
}

pub(crate) fn ser_f64ss<S: Serializer>(v: &[Vec<f64>], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.iter().map(|x| clean(*x)).collect::<Vec<_>>()))
}

pub(crate) fn ser_opt_f64s<S: Serializer>(v: &Option<Vec<f64>>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(v) => ser_f64s(v, s),
        None => s.serialize_none(),
    }
}

pub(crate) fn ser_c<S: Serializer>(z: &C64, s: S) -> Result<S::Ok, S::Error> {
    if z.im.abs() < 1e-9 {
        s.serialize_f64(clean(z.re))
    } else {
        s.collect_seq([clean(z.re), clean(z.im)])
    }
}

/// Real parts when every imaginary part is negligible, otherwise `[re, im]` pairs.
pub(crate) fn ser_cvec<S: Serializer>(v: &[C64], s: S) -> Result<S::Ok, S::Error> {
    if v.iter().all(|z| z.im.abs() < 1e-9) {
        s.collect_seq(v.iter().map(|z| clean(z.re)))
    } else {
        s.collect_seq(v.iter().map(|z| [clean(z.re), clean(z.im)]))
    }
}

pub(crate) fn apply_q(m: &QMatrix, x: &[C64]) -> Vec<C64> {
    (0..m.rows())
        .map(|i| m.row(i).iter().zip(x).filter(|(q, _)| !q.is_zero()).map(|(q, z)| z * to_f64(q)).sum())
        .collect()
}

/// Left multiplication by a complex element.
pub(crate) fn left_c(alg: &Algebra, x: &[C64]) -> CMatrix {
    let n = alg.dim();
    let cols: Vec<Vec<C64>> = (0..n)
        .map(|j| {
            let mut e = vec![C64::new(0.0, 0.0); n];
            e[j] = C64::new(1.0, 0.0);
            alg.mul_c(x, &e)
        })
        .collect();
    CMatrix::from_fn(n, n, |i, j| cols[j][i])
}

pub(crate) fn inverse_c(alg: &Algebra, x: &[C64]) -> Option<Vec<C64>> {
    left_c(alg, x).solve(&to_c(alg.unit()))
}

/// Wedderburn data of a semisimple WHA with its defining invariants checked.
pub fn wedderburn(a: &WeakHopfAlgebra, tol: &Tolerances, seed: u64) -> Result<Wedderburn> {
    let w = a.algebra().wedderburn(tol, seed)?;
    let n = a.dim();
    let eps = 1e3 * tol.check();
    let mut sum = vec![C64::new(0.0, 0.0); n];
    for b in &w.blocks {
        for (s, z) in sum.iter_mut().zip(&b.idempotent) {
            *s += z;
        }
    }
    let unit_ok = sum.iter().zip(a.unit()).all(|(s, u)| (s - to_f64(u)).norm() <= eps);
    let orth = w.blocks.iter().enumerate().all(|(i, bi)| {
        w.blocks.iter().enumerate().all(|(j, bj)| {
            let v = w.character_at_c(i, &bj.idempotent);
            let expect = if i == j { bi.dim_v as f64 } else { 0.0 };
            (v - expect).norm() <= eps
        })
    });
    if !unit_ok || !orth {
        return Err(WhaError::Internal("Wedderburn idempotents fail orthogonality".into()));
    }
    Ok(w)
}

/// Everything about `Rep(A)` that the reports consume, computed once.
#[derive(Debug, Clone)]
pub struct RepData {
    pub wedderburn: Wedderburn,
    pub fusion: FusionRing,
    pub rho: Vec<C64>,
    pub source: SourceBlocks,
    pub inclusion: InclusionData,
    pub dims: DimensionData,
    pub fp_multiplicative: bool,
}

impl RepData {
    pub fn new(a: &WeakHopfAlgebra, tol: &Tolerances, seed: u64) -> Result<Self> {
        if !a.connectivity().connected {
            return Err(WhaError::NotConnected);
        }
        let wedderburn = wedderburn(a, tol, seed)?;
        let fusion = fusion_ring(a, &wedderburn, tol)?;
        let f = fp_dimensions(&fusion, tol)?;
        let fp_multiplicative = fp_is_multiplicative(&fusion, &f, tol);
        let rho = fp_character(&wedderburn, &f);
        let source = source_blocks(a, tol, seed)?;
        let inclusion = inclusion_matrix(&wedderburn, &source, tol)?;
        let dims = dimension_data(a, &wedderburn, &f, tol);
        Ok(RepData { wedderburn, fusion, rho, source, inclusion, dims, fp_multiplicative })
    }

    /// Fills `dims.d_quantum` from a pivotal element.
    pub fn with_quantum_dims(mut self, q: Vec<f64>) -> Self {
        self.dims.d_quantum = Some(q);
        self
    }
}
