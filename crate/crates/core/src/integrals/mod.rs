//! Integrals, dual integral pairs, distinguished group-likes, Radford's
//! formula, the first trace formula and the semisimplicity battery.

mod battery;

pub use battery::{counitals_of_lambda_check, semisimplicity_battery, BatteryReport, Condition, CounitalsReport};

use crate::error::{Result, WhaError};
use crate::numerics::rational::ser_qvec;
use crate::numerics::{q, vecops, QMatrix, SparseRow, SparseSystem, Q};
use crate::wha::{GroupLike, WeakHopfAlgebra};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntegralSpace {
    pub side: Side,
    #[serde(serialize_with = "crate::numerics::rational::ser_qvecs")]
    pub basis: Vec<Vec<Q>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DualIntegralPair {
    #[serde(serialize_with = "ser_qvec")]
    pub ell: Vec<Q>,
    #[serde(serialize_with = "ser_qvec")]
    pub lambda: Vec<Q>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistinguishedGroupLikes {
    /// Group-like of `A*`.
    pub alpha: GroupLike,
    /// Group-like of `A`.
    pub a: GroupLike,
    pub pair: DualIntegralPair,
}

/// `φ⇀h = h₁φ(h₂)`.
pub fn hit_left(a: &WeakHopfAlgebra, phi: &[Q], h: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.dim()];
    for ((x, y), c) in a.comul(h) {
        if !phi[y].is_zero() {
            out[x] += c * &phi[y];
        }
    }
    out
}

/// `h↼φ = φ(h₁)h₂`.
pub fn hit_right(a: &WeakHopfAlgebra, h: &[Q], phi: &[Q]) -> Vec<Q> {
    let mut out = vec![Q::zero(); a.dim()];
    for ((x, y), c) in a.comul(h) {
        if !phi[x].is_zero() {
            out[y] += c * &phi[x];
        }
    }
    out
}

/// `h⇀φ` as a row: `⟨h⇀φ, g⟩ = φ(gh)`.
pub fn fn_hit_left(a: &WeakHopfAlgebra, h: &[Q], phi: &[Q]) -> Vec<Q> {
    (0..a.dim()).map(|g| vecops::dot(phi, &a.mul(&a.basis(g), h))).collect()
}

/// Integrals on one side: `hℓ = ε_t(h)ℓ` (left) or `ℓh = ℓε_s(h)` (right) for all `h`.
pub fn integral_space(a: &WeakHopfAlgebra, side: Side) -> Result<IntegralSpace> {
    let n = a.dim();
    let alg = a.algebra();
    let mut sys = SparseSystem::new(n);
    for i in 0..n {
        let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
        let mut bump = |k: usize, j: usize, v: Q| {
            *rows.entry(k).or_default().entry(j).or_insert_with(Q::zero) += v;
        };
        match side {
            Side::Left => {
                let t = a.counital_target(&a.basis(i));
                for j in 0..n {
                    for (k, m) in alg.basis_product(i, j) {
                        bump(*k, j, m.clone());
                    }
                    for (c, tc) in t.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        for (k, m) in alg.basis_product(c, j) {
                            bump(*k, j, -(tc * m));
                        }
                    }
                }
            }
            Side::Right => {
                let s = a.counital_source(&a.basis(i));
                for j in 0..n {
                    for (k, m) in alg.basis_product(j, i) {
                        bump(*k, j, m.clone());
                    }
                    for (c, sc) in s.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        for (k, m) in alg.basis_product(j, c) {
                            bump(*k, j, -(sc * m));
                        }
                    }
                }
            }
        }
        for (_, mut r) in rows {
            r.retain(|_, v| !v.is_zero());
            sys.add_homogeneous(r);
        }
    }
    let basis = sys.nullspace();
    if basis.len() != a.d() {
        return Err(WhaError::Internal(format!(
            "integral space has dimension {}, expected dim A_t = {}",
            basis.len(),
            a.d()
        )));
    }
    Ok(IntegralSpace { side, basis })
}

/// `λ(h) = Tr(L_h∘S²)`.
pub fn canonical_integral(a: &WeakHopfAlgebra) -> Vec<Q> {
    let n = a.dim();
    let t = a.s_squared();
    (0..n)
        .map(|i| {
            let mut acc = Q::zero();
            for k in 0..n {
                for (j, m) in a.algebra().basis_product(i, k) {
                    if !t[(k, *j)].is_zero() {
                        acc += m * &t[(k, *j)];
                    }
                }
            }
            acc
        })
        .collect()
}

/// Matrix `(Δℓ)^{ab}`; `ℓ` is non-degenerate iff it is invertible.
pub fn pairing_matrix(a: &WeakHopfAlgebra, ell: &[Q]) -> QMatrix {
    let n = a.dim();
    let mut m = QMatrix::zeros(n, n);
    for ((x, y), c) in a.comul(ell) {
        m[(x, y)] = c;
    }
    m
}

pub fn is_nondegenerate(a: &WeakHopfAlgebra, ell: &[Q]) -> bool {
    pairing_matrix(a, ell).rank() == a.dim()
}

pub fn is_left_integral(a: &WeakHopfAlgebra, ell: &[Q]) -> bool {
    (0..a.dim()).all(|i| {
        let h = a.basis(i);
        a.mul(&h, ell) == a.mul(&a.counital_target(&h), ell)
    })
}

pub fn is_right_integral(a: &WeakHopfAlgebra, ell: &[Q]) -> bool {
    (0..a.dim()).all(|i| {
        let h = a.basis(i);
        a.mul(ell, &h) == a.mul(ell, &a.counital_source(&h))
    })
}

/// Solves `ε_t(ℓ) = 1` (and optionally `ε_s(ℓ) = 1`) over a span of integrals;
/// returns a particular solution and the dimension of the solution set.
fn normalize_within(a: &WeakHopfAlgebra, basis: &[Vec<Q>], also_source: bool) -> Option<(Vec<Q>, usize)> {
    let n = a.dim();
    let mut sys = SparseSystem::new(basis.len());
    let imgs_t: Vec<Vec<Q>> = basis.iter().map(|b| a.counital_target(b)).collect();
    let imgs_s: Vec<Vec<Q>> = basis.iter().map(|b| a.counital_source(b)).collect();
    let mut add = |imgs: &[Vec<Q>]| {
        for k in 0..n {
            let row: SparseRow =
                imgs.iter().enumerate().filter(|(_, v)| !v[k].is_zero()).map(|(b, v)| (b, v[k].clone())).collect();
            sys.add_equation(row, a.unit()[k].clone());
        }
    };
    add(&imgs_t);
    if also_source {
        add(&imgs_s);
    }
    let x = sys.particular()?;
    Some((vecops::combine(&x, basis, n), basis.len() - sys.rank()))
}

/// A left integral with `ε_t(ℓ) = 1`, if one exists.
pub fn normalized_integral(a: &WeakHopfAlgebra) -> Result<Option<Vec<Q>>> {
    let space = integral_space(a, Side::Left)?;
    Ok(normalize_within(a, &space.basis, false).map(|(x, _)| x))
}

/// The normalized two-sided integral, if it exists and is unique; checked `S`-invariant.
pub fn haar_integral(a: &WeakHopfAlgebra) -> Result<Option<Vec<Q>>> {
    let n = a.dim();
    let l = integral_space(a, Side::Left)?;
    let r = integral_space(a, Side::Right)?;
    let both = crate::algebra::intersection(&l.basis, &r.basis, n);
    match normalize_within(a, &both, true) {
        Some((h, 0)) => {
            if a.s(&h) != h {
                return Err(WhaError::EquivalenceViolated("Haar integral is not S-invariant".into()));
            }
            Ok(Some(h))
        }
        _ => Ok(None),
    }
}

/// The unique `λ` with `λ⇀ℓ = 1`; verifies `ℓ⇀λ = ε`.
pub fn dual_integral(a: &WeakHopfAlgebra, ell: &[Q]) -> Result<DualIntegralPair> {
    if !is_left_integral(a, ell) {
        return Err(WhaError::InvalidParams("element is not a left integral".into()));
    }
    let m = pairing_matrix(a, ell);
    let inv = m.inverse().ok_or(WhaError::DegenerateIntegral)?;
    let lambda = inv.mul_vec(a.unit());
    debug_assert_eq!(hit_left(a, &lambda, ell), a.unit());
    let eps_ok = (0..a.dim()).all(|g| vecops::dot(&lambda, &a.mul(&a.basis(g), ell)) == a.counit()[g]);
    if !eps_ok {
        return Err(WhaError::EquivalenceViolated("dual integral does not satisfy ℓ⇀λ = ε".into()));
    }
    Ok(DualIntegralPair { ell: ell.to_vec(), lambda })
}

/// A non-degenerate left integral: the Haar integral when non-degenerate, else
/// the first non-degenerate basis integral, else a seeded generic combination.
pub fn nondegenerate_left_integral(a: &WeakHopfAlgebra, seed: u64) -> Result<Vec<Q>> {
    if let Some(h) = haar_integral(a)? {
        if is_nondegenerate(a, &h) {
            return Ok(h);
        }
    }
    let space = integral_space(a, Side::Left)?;
    if let Some(b) = space.basis.iter().find(|b| is_nondegenerate(a, b)) {
        return Ok(b.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        let c: Vec<Q> = (0..space.basis.len()).map(|_| q(rng.gen_range(1..=1000))).collect();
        let ell = vecops::combine(&c, &space.basis, a.dim());
        if is_nondegenerate(a, &ell) {
            return Ok(ell);
        }
    }
    Err(WhaError::DegenerateIntegral)
}

/// Solves `S(ℓ) = α⇀ℓ` and `S(λ) = a⇀λ`.
pub fn distinguished_grouplikes(a: &WeakHopfAlgebra, pair: &DualIntegralPair) -> Result<DistinguishedGroupLikes> {
    let n = a.dim();
    let m = pairing_matrix(a, &pair.ell);
    let alpha = m.inverse().ok_or(WhaError::DegenerateIntegral)?.mul_vec(&a.s(&pair.ell));
    // λ(e_g a) = λ(S(e_g)) for all g
    let lam_mat = QMatrix::from_fn(n, n, |g, k| {
        a.algebra().basis_product(g, k).iter().fold(Q::zero(), |acc, (j, c)| acc + c * &pair.lambda[*j])
    });
    let s_lambda = a.antipode().transpose().mul_vec(&pair.lambda);
    let elem = lam_mat.inverse().ok_or(WhaError::DegenerateIntegral)?.mul_vec(&s_lambda);
    let dual = a.dual_ref();
    let alpha_gl = dual
        .grouplike(&alpha)
        .map_err(|_| WhaError::EquivalenceViolated("distinguished α is not group-like".into()))?;
    let a_gl =
        a.grouplike(&elem).map_err(|_| WhaError::EquivalenceViolated("distinguished a is not group-like".into()))?;
    Ok(DistinguishedGroupLikes { alpha: alpha_gl, a: a_gl, pair: pair.clone() })
}

/// `S⁴(h) = a^{-1}(α⇀h↼α^{-1})a` on every basis element.
pub fn verify_radford(a: &WeakHopfAlgebra, seed: u64) -> Result<bool> {
    let ell = nondegenerate_left_integral(a, seed)?;
    let pair = dual_integral(a, &ell)?;
    let dg = distinguished_grouplikes(a, &pair)?;
    let s2 = a.s_squared();
    let s4 = s2.mul(&s2);
    let alpha = &dg.alpha.element;
    let alpha_inv = &dg.alpha.inverse;
    let (g, g_inv) = (&dg.a.element, &dg.a.inverse);
    Ok((0..a.dim()).all(|i| {
        let h = a.basis(i);
        let mid = hit_left(a, alpha, &hit_right(a, &h, alpha_inv));
        a.mul(&a.mul(g_inv, &mid), g) == s4.mul_vec(&h)
    }))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceFormulaReport {
    #[serde(serialize_with = "crate::numerics::rational::ser_q")]
    pub trace_s2: Q,
    #[serde(serialize_with = "crate::numerics::rational::ser_q")]
    pub pairing: Q,
    pub holds: bool,
    /// Dual-bases identity on seeded random operators.
    pub random_operators: Vec<bool>,
}

impl TraceFormulaReport {
    pub fn passed(&self) -> bool {
        self.holds && self.random_operators.iter().all(|&b| b)
    }
}

/// `Tr(S²|_A) = ⟨ε_s(λ), ε_s(ℓ)⟩` and `Tr(T) = ⟨λ, T(S^{-1}(ℓ₁))ℓ₂⟩` for random `T`.
pub fn trace_formula_1(a: &WeakHopfAlgebra, seed: u64) -> Result<TraceFormulaReport> {
    let n = a.dim();
    let ell = nondegenerate_left_integral(a, seed)?;
    let pair = dual_integral(a, &ell)?;
    let dual = a.dual_ref();
    let trace_s2 = a.trace_s2();
    let pairing = vecops::dot(&dual.counital_source(&pair.lambda), &a.counital_source(&ell));
    let s_inv = a.s_inverse_matrix().ok_or(WhaError::NotInvertible)?;
    let delta = a.comul(&ell);
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x7472_6163_6531);
    let mut random_operators = Vec::with_capacity(5);
    for _ in 0..5 {
        let t = QMatrix::from_fn(n, n, |_, _| q(rng.gen_range(-9..=9)));
        let mut rhs = Q::zero();
        for ((x, y), c) in &delta {
            let v = t.mul_vec(&s_inv.column(*x));
            rhs += c * vecops::dot(&pair.lambda, &a.mul(&v, &a.basis(*y)));
        }
        random_operators.push(rhs == t.trace());
    }
    Ok(TraceFormulaReport { holds: trace_s2 == pairing, trace_s2, pairing, random_operators })
}

/// `∫ˡ ∩ ∫ʳ` contains a non-degenerate element.
pub fn is_unimodular(a: &WeakHopfAlgebra, seed: u64) -> Result<bool> {
    let n = a.dim();
    let l = integral_space(a, Side::Left)?;
    let r = integral_space(a, Side::Right)?;
    let both = crate::algebra::intersection(&l.basis, &r.basis, n);
    if both.iter().any(|b| is_nondegenerate(a, b)) {
        return Ok(true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..16 {
        if both.is_empty() {
            break;
        }
        let c: Vec<Q> = (0..both.len()).map(|_| q(rng.gen_range(1..=1000))).collect();
        if is_nondegenerate(a, &vecops::combine(&c, &both, n)) {
            return Ok(true);
        }
    }
    Ok(false)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SInvariantReport {
    pub unimodular: bool,
    pub s_invariant_dim: usize,
    pub center_target_dim: usize,
    pub holds: bool,
}

/// `dim{ℓ ∈ ∫ˡ : S(ℓ) = ℓ} = dim(A_t ∩ Z(A))` for unimodular `A`.
pub fn s_invariant_integral_dim_check(a: &WeakHopfAlgebra, seed: u64) -> Result<SInvariantReport> {
    let n = a.dim();
    let unimodular = is_unimodular(a, seed)?;
    let l = integral_space(a, Side::Left)?;
    let cols: Vec<Vec<Q>> = l.basis.iter().map(|b| vecops::sub(&a.s(b), b)).collect();
    let kernel = crate::numerics::q_nullspace(&QMatrix::from_columns(&cols, n));
    let s_invariant_dim = kernel.len();
    let center_target_dim = crate::algebra::intersection(a.center(), a.target_basis(), n).len();
    Ok(SInvariantReport {
        unimodular,
        s_invariant_dim,
        center_target_dim,
        holds: !unimodular || s_invariant_dim == center_target_dim,
    })
}

/// `λ(gh) = λ(hS²(g))` on all basis pairs.
pub fn lambda_is_generalized_character(a: &WeakHopfAlgebra, lambda: &[Q]) -> bool {
    let n = a.dim();
    let s2 = a.s_squared();
    (0..n).all(|g| {
        let s2g = s2.column(g);
        (0..n).all(|h| {
            let lhs = vecops::dot(lambda, &a.mul(&a.basis(g), &a.basis(h)));
            lhs == vecops::dot(lambda, &a.mul(&a.basis(h), &s2g))
        })
    })
}
