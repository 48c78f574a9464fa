use super::{character_ring, twisted_trace};
use crate::algebra::Algebra;
use crate::error::{Result, WhaError};
use crate::numerics::spectral::cluster_values;
use crate::numerics::{round_int, CMatrix, Tolerances, C64};
use crate::repcat::{ser_cvec, RepData};
use crate::wha::WeakHopfAlgebra;
use nalgebra::DMatrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum Integrality {
    Integer(i64),
    UnverifiedAlgebraicInteger(f64),
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassTerm {
    /// Primitive idempotent of `R(A)` in the basis of irreducible characters.
    #[serde(serialize_with = "ser_cvec")]
    pub idempotent: Vec<C64>,
    #[serde(serialize_with = "crate::repcat::ser_c")]
    pub n: C64,
    #[serde(serialize_with = "crate::repcat::ser_c")]
    pub ratio: C64,
    pub integrality: Integrality,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassEquationReport {
    #[serde(rename = "dimA", serialize_with = "crate::repcat::ser_f64")]
    pub dim_a: f64,
    pub terms: Vec<ClassTerm>,
    /// `Σ n_i = dim A`.
    pub sum_holds: bool,
    /// Terms agree with a recomputation from a second seed.
    pub seed_independent: bool,
    pub seed: u64,
}

impl ClassEquationReport {
    pub fn passed(&self) -> bool {
        self.sum_holds && self.seed_independent
    }
}

fn sub(x: &[C64], y: &[C64]) -> Vec<C64> {
    x.iter().zip(y).map(|(a, b)| a - b).collect()
}

fn left_c(r: &Algebra, x: &[C64]) -> DMatrix<C64> {
    let n = r.dim();
    let mut m = DMatrix::zeros(n, n);
    for j in 0..n {
        let mut e = vec![C64::new(0.0, 0.0); n];
        e[j] = C64::new(1.0, 0.0);
        for (i, v) in r.mul_c(x, &e).into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    m
}

/// Splits a central idempotent `z` of a block `M_m` into `m` orthogonal primitive idempotents.
fn split_block(r: &Algebra, z: &[C64], m: usize, tol: &Tolerances, rng: &mut ChaCha8Rng) -> Result<Vec<Vec<C64>>> {
    if m == 1 {
        return Ok(vec![z.to_vec()]);
    }
    let n = r.dim();
    let svd = left_c(r, z).svd(true, false);
    let u = svd.u.ok_or_else(|| WhaError::Internal("SVD failed".into()))?;
    let cols: Vec<usize> = (0..n).filter(|&i| svd.singular_values[i] > 0.5).collect();
    if cols.len() != m * m {
        return Err(WhaError::Internal("block image has unexpected dimension".into()));
    }
    let b = u.select_columns(&cols);
    for _ in 0..5 {
        let x: Vec<C64> = (0..n).map(|_| C64::new(rng.gen_range(1..=97) as f64, 0.0)).collect();
        let y = r.mul_c(z, &x);
        let restricted = b.adjoint() * left_c(r, &y) * &b;
        let values = match cluster_values(&CMatrix(restricted).eigenvalues(), tol) {
            Ok(v) if v.len() == m && v.iter().all(|(_, k)| *k == m) => v,
            _ => continue,
        };
        let mus: Vec<C64> = values.iter().map(|(v, _)| *v).collect();
        let idem = (0..m)
            .map(|i| {
                let mut e = z.to_vec();
                for (k, mu) in mus.iter().enumerate().filter(|(k, _)| *k != i) {
                    let f: Vec<C64> = sub(&y, &z.iter().map(|t| t * mu).collect::<Vec<_>>());
                    e = r.mul_c(&e, &f).into_iter().map(|t| t / (mus[i] - mus[k])).collect();
                }
                e
            })
            .collect();
        return Ok(idem);
    }
    Err(WhaError::Numerics(crate::numerics::NumericsError::NumericallyIndistinct { distance: 0.0 }))
}

fn primitive_idempotents(ra: &Algebra, tol: &Tolerances, seed: u64) -> Result<Vec<Vec<C64>>> {
    let w = ra.wedderburn(tol, seed)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x4345_5131);
    let mut out = Vec::new();
    for b in &w.blocks {
        out.extend(split_block(ra, &b.idempotent, b.dim_v, tol, &mut rng)?);
    }
    Ok(out)
}

/// χ-basis element of `R(A)` as a row on `A`.
fn as_row(rep: &RepData, e: &[C64]) -> Vec<C64> {
    let n = rep.rho.len();
    let mut row = vec![C64::new(0.0, 0.0); n];
    for (j, c) in e.iter().enumerate() {
        for (r, x) in row.iter_mut().zip(&rep.wedderburn.blocks[j].character) {
            *r += c * x;
        }
    }
    row
}

fn terms(
    a: &WeakHopfAlgebra,
    rep: &RepData,
    ra: &Algebra,
    tol: &Tolerances,
    seed: u64,
) -> Result<Vec<(Vec<C64>, C64)>> {
    let d = a.d() as f64;
    let idem = primitive_idempotents(ra, tol, seed)?;
    let eps = 1e3 * tol.check();
    for (i, ei) in idem.iter().enumerate() {
        for (j, ej) in idem.iter().enumerate() {
            let p = ra.mul_c(ei, ej);
            let target: Vec<C64> = if i == j { ei.clone() } else { vec![C64::new(0.0, 0.0); ei.len()] };
            if sub(&p, &target).iter().any(|t| t.norm() > eps) {
                return Err(WhaError::Internal("class idempotents are not orthogonal".into()));
            }
        }
    }
    Ok(idem
        .into_iter()
        .map(|e| {
            let n = twisted_trace(a, &as_row(rep, &e)) / d;
            (e, n)
        })
        .collect())
}

fn sorted_terms(t: &[(Vec<C64>, C64)]) -> Vec<C64> {
    let mut v: Vec<C64> = t.iter().map(|(_, n)| *n).collect();
    v.sort_by(|x, y| x.re.total_cmp(&y.re).then(x.im.total_cmp(&y.im)));
    v
}

/// Class equation `dim A = Σ_i n_i` over the primitive idempotents of `R(A)`.
pub fn class_equation(a: &WeakHopfAlgebra, rep: &RepData, tol: &Tolerances, seed: u64) -> Result<ClassEquationReport> {
    let ra = character_ring(&rep.fusion);
    let first = terms(a, rep, &ra, tol, seed)?;
    let second = terms(a, rep, &ra, tol, seed.wrapping_add(0x9e37_79b9))?;
    let dim_a = rep.dims.dim_a_f64();
    let eps = tol.check();
    let sum: C64 = first.iter().map(|(_, n)| n).sum();
    let sum_holds = (sum - dim_a).norm() <= eps * dim_a.max(1.0);
    if !sum_holds {
        return Err(WhaError::EquationViolated(format!(
            "class equation: sum of terms {sum} differs from dim A = {dim_a}"
        )));
    }
    if let Some((_, n)) = first.iter().find(|(_, n)| n.norm() <= eps) {
        return Err(WhaError::EquationViolated(format!("class equation: vanishing term {n}")));
    }
    let (s1, s2) = (sorted_terms(&first), sorted_terms(&second));
    let seed_independent =
        s1.len() == s2.len() && s1.iter().zip(&s2).all(|(x, y)| (x - y).norm() <= eps * dim_a.max(1.0));
    let terms = first
        .into_iter()
        .map(|(idempotent, n)| {
            let ratio = C64::new(dim_a, 0.0) / n;
            let integrality = match round_int(ratio, tol) {
                Ok(k) => Integrality::Integer(k),
                Err(_) => Integrality::UnverifiedAlgebraicInteger(ratio.re),
            };
            ClassTerm { idempotent, n, ratio, integrality }
        })
        .collect();
    Ok(ClassEquationReport { dim_a, terms, sum_holds, seed_independent, seed })
}
