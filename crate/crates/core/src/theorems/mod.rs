//! Character algebra, class equation and the trace formulas.

mod class_equation;

pub use class_equation::{class_equation, ClassEquationReport, ClassTerm, Integrality};

use crate::algebra::Algebra;
use crate::error::Result;
use crate::integrals::canonical_integral;
use crate::numerics::rational::{ser_q, to_f64};
use crate::numerics::{q, vecops, QMatrix, Tensor3, Tolerances, C64, Q};
use crate::repcat::{is_pseudounitary, trivial_character, FusionRing, RepData};
use crate::wha::WeakHopfAlgebra;
use num_traits::Zero;
use serde::Serialize;

/// `R(A) = K₀(A) ⊗ ℂ` with the pairing `(χ_i, χ_j)` = multiplicity of the unit in `χ_iχ_j`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CharacterAlgebra {
    pub fusion: FusionRing,
    pub form: Vec<Vec<i64>>,
    pub star: Vec<usize>,
    pub symmetric: bool,
    pub nondegenerate: bool,
    pub star_duality: bool,
    pub associative_form: bool,
    /// `Σ_i χ_iχ_{i*}` is central and acts invertibly.
    pub semisimple: bool,
}

impl CharacterAlgebra {
    pub fn passed(&self) -> bool {
        self.symmetric && self.nondegenerate && self.star_duality && self.associative_form && self.semisimple
    }

    /// `R(A)` as an algebra on the basis of irreducible characters.
    pub fn algebra(&self) -> Algebra {
        character_ring(&self.fusion)
    }
}

pub fn character_ring(f: &FusionRing) -> Algebra {
    let r = f.rank;
    let mult = Tensor3::from_fn(r, r, r, |i, j, k| q(f.n[i][j][k]));
    Algebra::new(mult, vecops::unit(r, f.unit_label))
}

pub fn character_algebra(f: &FusionRing) -> CharacterAlgebra {
    let r = f.rank;
    let u = f.unit_label;
    let form: Vec<Vec<i64>> = (0..r).map(|i| (0..r).map(|j| f.n[i][j][u]).collect()).collect();
    let symmetric = (0..r).all(|i| (0..r).all(|j| form[i][j] == form[j][i]));
    let fq = QMatrix::from_fn(r, r, |i, j| q(form[i][j]));
    let nondegenerate = fq.inverse().is_some();
    let star_duality = (0..r).all(|i| (0..r).all(|j| form[i][f.star[j]] == i64::from(i == j)));
    let associative_form = (0..r).all(|i| {
        (0..r).all(|j| {
            (0..r).all(|k| {
                let lhs: i64 = (0..r).map(|m| f.n[i][j][m] * form[m][k]).sum();
                let rhs: i64 = (0..r).map(|m| f.n[j][k][m] * form[i][m]).sum();
                lhs == rhs
            })
        })
    });
    let mut c = vec![0i64; r];
    for i in 0..r {
        for (ck, n) in c.iter_mut().zip(&f.n[i][f.star[i]]) {
            *ck += n;
        }
    }
    let central = (0..r).all(|j| {
        let e = (0..r).map(|k| i64::from(k == j)).collect::<Vec<_>>();
        f.product(&c, &e) == f.product(&e, &c)
    });
    let lc = QMatrix::from_fn(r, r, |k, j| {
        let e: Vec<i64> = (0..r).map(|t| i64::from(t == j)).collect();
        q(f.product(&c, &e)[k])
    });
    let semisimple = central && lc.inverse().is_some();
    CharacterAlgebra {
        fusion: f.clone(),
        form,
        star: f.star.clone(),
        symmetric,
        nondegenerate,
        star_duality,
        associative_form,
        semisimple,
    }
}

/// `⟨φ, ℓ⟩` with `ℓ ∈ A` the canonical left integral of `A*`; equals `Tr(L_φ S²|_{A*})`.
pub fn twisted_trace(a: &WeakHopfAlgebra, phi: &[C64]) -> C64 {
    let ell = canonical_integral(a.dual_ref());
    phi.iter().zip(&ell).map(|(p, l)| p * to_f64(l)).sum()
}

/// Exact variant of [`twisted_trace`].
pub fn twisted_trace_q(a: &WeakHopfAlgebra, phi: &[Q]) -> Q {
    vecops::dot(phi, &canonical_integral(a.dual_ref()))
}

/// `⟨ε₁ε₂, ℓ⟩ = Tr(S²|_{A*})/d`, `χ_1 = ε₁ε₂` and `⟨χ_1, ℓ⟩ = Tr(S²|_{A*})/d`, where `ε₁ε₂ ∈ A*` is the
/// product of the two legs of `Δ(1_{A*})`. These need `A` connected: on `A = pair(2)*` the first fails.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounitIdentities {
    #[serde(serialize_with = "ser_q")]
    pub unit_split_trace: Q,
    #[serde(serialize_with = "ser_q")]
    pub twisted_trivial: Q,
    #[serde(serialize_with = "ser_q")]
    pub dual_trace_s2_over_d: Q,
    pub trivial_is_unit_split: bool,
}

impl CounitIdentities {
    pub fn passed(&self) -> bool {
        self.trivial_is_unit_split
            && self.unit_split_trace == self.dual_trace_s2_over_d
            && self.twisted_trivial == self.dual_trace_s2_over_d
    }
}

/// `1₁1₂` of a weak bialgebra.
pub fn unit_split(a: &WeakHopfAlgebra) -> Vec<Q> {
    let mut prod = vec![Q::zero(); a.dim()];
    for ((x, y), c) in a.delta_one() {
        prod = vecops::add(&prod, &vecops::scale(&a.mul(&a.basis(*x), &a.basis(*y)), c));
    }
    prod
}

pub fn counit_identities(a: &WeakHopfAlgebra) -> Result<CounitIdentities> {
    let split = unit_split(a.dual_ref());
    let chi1 = trivial_character(a)?;
    let d = q(a.d() as i64);
    Ok(CounitIdentities {
        unit_split_trace: twisted_trace_q(a, &split),
        twisted_trivial: twisted_trace_q(a, &chi1),
        dual_trace_s2_over_d: a.dual_ref().trace_s2() / &d,
        trivial_is_unit_split: chi1 == split,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SecondTraceReport {
    #[serde(serialize_with = "crate::repcat::ser_f64")]
    pub t_rho: f64,
    pub d: usize,
    #[serde(rename = "dimA", serialize_with = "crate::repcat::ser_f64")]
    pub dim_a: f64,
    #[serde(rename = "FPdimA", serialize_with = "crate::repcat::ser_f64")]
    pub fp_dim_a: f64,
    /// `dim A = (t_ρ/d)·FPdim A`.
    pub identity: bool,
    /// `t_ρ ≤ d`.
    pub bound: bool,
    /// `d·t_ρ·FPdim A` reproduces the exact `Tr(S²|_A)`.
    pub matches_first: bool,
    /// `t_ρ = d`; expected on pseudo-unitary algebras.
    pub saturated: bool,
}

impl SecondTraceReport {
    pub fn passed(&self) -> bool {
        self.identity && self.bound && self.matches_first
    }
}

pub fn second_trace_formula(a: &WeakHopfAlgebra, rep: &RepData, tol: &Tolerances) -> SecondTraceReport {
    let fp = rep.dims.fp_dim_a;
    let t_rho = twisted_trace(a, &rep.rho).re / fp;
    let d = a.d();
    let df = d as f64;
    let dim_a = rep.dims.dim_a_f64();
    let eps = tol.check();
    let tr = to_f64(&a.trace_s2());
    SecondTraceReport {
        t_rho,
        d,
        dim_a,
        fp_dim_a: fp,
        identity: (dim_a - t_rho / df * fp).abs() <= eps * dim_a.max(1.0),
        bound: t_rho <= df + eps,
        matches_first: (df * t_rho * fp - tr).abs() <= eps * tr.abs().max(1.0),
        saturated: (t_rho - df).abs() <= eps,
    }
}

/// Common verdict of pseudo-unitarity and positivity of the `S²` spectrum.
pub fn positivity_criterion(a: &WeakHopfAlgebra, rep: &RepData, tol: &Tolerances) -> Result<bool> {
    is_pseudounitary(a, rep, tol)
}
