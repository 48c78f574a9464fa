//! Finite-dimensional unital associative algebras given by structure
//! constants, with exact structural queries and a numeric Wedderburn
//! decomposition over ℂ.

use crate::error::{Result, WhaError};
use crate::numerics::span::{self, SpanBuilder};
use crate::numerics::{
    coordinates, eig_decompose, q_nullspace, rational, round_int_real, vecops, CMatrix, NumericsError, QMatrix,
    SparseRow, SparseSystem, Tensor3, Tolerances, C64, Q,
};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeMap;
use std::sync::OnceLock;

/// Coefficient of `e_k` in `e_i·e_j` is `mult[i][j][k]`.
#[derive(Clone)]
pub struct Algebra {
    mult: Tensor3,
    unit: Vec<Q>,
    float_mult: OnceLock<Vec<Vec<(usize, f64)>>>,
    left_traces: OnceLock<Vec<Q>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.mult == other.mult && self.unit == other.unit
    }
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Algebra(dim={}, {:?})", self.dim(), self.mult)
    }
}

/// One simple block of a semisimple algebra.
#[derive(Clone, Debug)]
pub struct Block {
    /// Central primitive idempotent in algebra coordinates.
    pub idempotent: Vec<C64>,
    /// Dimension of the simple module.
    pub dim_v: usize,
    /// Character values on the basis.
    pub character: Vec<C64>,
}

#[derive(Clone, Debug)]
pub struct Wedderburn {
    pub blocks: Vec<Block>,
    pub seed: u64,
}

impl Wedderburn {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.dim_v).collect()
    }

    /// χ_j(x) for a rational element.
    pub fn character_at(&self, j: usize, x: &[Q]) -> C64 {
        self.blocks[j]
            .character
            .iter()
            .zip(x)
            .filter(|(_, c)| !c.is_zero())
            .map(|(ch, c)| ch * rational::to_f64(c))
            .sum()
    }

    /// χ_j(x) for a complex element.
    pub fn character_at_c(&self, j: usize, x: &[C64]) -> C64 {
        self.blocks[j].character.iter().zip(x).map(|(a, b)| a * b).sum()
    }
}

pub fn to_c(v: &[Q]) -> Vec<C64> {
    v.iter().map(|x| C64::new(rational::to_f64(x), 0.0)).collect()
}

fn round_key(x: f64) -> i64 {
    (x * 1e6).round() as i64
}

impl Algebra {
    pub fn new(mult: Tensor3, unit: Vec<Q>) -> Self {
        Algebra { mult, unit, float_mult: OnceLock::new(), left_traces: OnceLock::new() }
    }

    pub fn dim(&self) -> usize {
        self.unit.len()
    }

    pub fn mult(&self) -> &Tensor3 {
        &self.mult
    }

    pub fn unit(&self) -> &[Q] {
        &self.unit
    }

    /// `e_i·e_j` as sparse `(k, coefficient)` pairs.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Q)] {
        self.mult.fibre(i, j)
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let n = self.dim();
        let mut out = vec![Q::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = xi * yj;
                for (k, m) in self.mult.fibre(i, j) {
                    out[*k] += &c * m;
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_matrix(&self, x: &[Q]) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for j in 0..n {
                for (k, c) in self.mult.fibre(i, j) {
                    m[(*k, j)] += xi * c;
                }
            }
        }
        m
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_matrix(&self, x: &[Q]) -> QMatrix {
        let n = self.dim();
        let mut m = QMatrix::zeros(n, n);
        for (j, xj) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for i in 0..n {
                for (k, c) in self.mult.fibre(i, j) {
                    m[(*k, i)] += xj * c;
                }
            }
        }
        m
    }

    /// `Tr(L_{e_k})` for each basis element.
    pub fn left_traces(&self) -> &[Q] {
        self.left_traces.get_or_init(|| {
            (0..self.dim())
                .map(|k| {
                    let mut t = Q::zero();
                    for j in 0..self.dim() {
                        for (kk, c) in self.mult.fibre(k, j) {
                            if *kk == j {
                                t += c;
                            }
                        }
                    }
                    t
                })
                .collect()
        })
    }

    /// `Tr(L_x)` on the regular representation.
    pub fn regular_trace(&self, x: &[Q]) -> Q {
        vecops::dot(self.left_traces(), x)
    }

    pub fn regular_trace_c(&self, x: &[C64]) -> C64 {
        self.left_traces().iter().zip(x).map(|(t, v)| v * rational::to_f64(t)).sum()
    }

    fn float_fibres(&self) -> &Vec<Vec<(usize, f64)>> {
        self.float_mult.get_or_init(|| {
            let n = self.dim();
            (0..n * n)
                .map(|ij| self.mult.fibre(ij / n, ij % n).iter().map(|(k, v)| (*k, rational::to_f64(v))).collect())
                .collect()
        })
    }

    pub fn mul_c(&self, x: &[C64], y: &[C64]) -> Vec<C64> {
        let n = self.dim();
        let ff = self.float_fibres();
        let mut out = vec![C64::new(0.0, 0.0); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| v.norm() != 0.0) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| v.norm() != 0.0) {
                let c = xi * yj;
                for (k, m) in &ff[i * n + j] {
                    out[*k] += c * m;
                }
            }
        }
        out
    }

    /// First `(i,j,k)` with `(e_ie_j)e_k ≠ e_i(e_je_k)`.
    pub fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.mult.fibre(i, j);
                for k in 0..n {
                    let mut lhs: BTreeMap<usize, Q> = BTreeMap::new();
                    for (p, a) in ij {
                        for (r, b) in self.mult.fibre(*p, k) {
                            *lhs.entry(*r).or_insert_with(Q::zero) += a * b;
                        }
                    }
                    for (p, a) in self.mult.fibre(j, k) {
                        for (r, b) in self.mult.fibre(i, *p) {
                            *lhs.entry(*r).or_insert_with(Q::zero) -= a * b;
                        }
                    }
                    if lhs.values().any(|v| !v.is_zero()) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }

    /// First basis index `i` with `1·e_i ≠ e_i` or `e_i·1 ≠ e_i`.
    pub fn unit_failure(&self) -> Option<usize> {
        let n = self.dim();
        (0..n).find(|&i| {
            let e = vecops::unit(n, i);
            self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e
        })
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| self.mult.fibre(i, j) == self.mult.fibre(j, i)))
    }

    /// Exact basis of the center.
    pub fn center(&self) -> Vec<Vec<Q>> {
        let n = self.dim();
        let mut sys = SparseSystem::new(n);
        for i in 0..n {
            let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
            for j in 0..n {
                for (k, v) in self.mult.fibre(j, i) {
                    *rows.entry(*k).or_default().entry(j).or_insert_with(Q::zero) += v;
                }
                for (k, v) in self.mult.fibre(i, j) {
                    *rows.entry(*k).or_default().entry(j).or_insert_with(Q::zero) -= v;
                }
            }
            for (_, r) in rows {
                sys.add_homogeneous(r);
            }
        }
        sys.nullspace()
    }

    /// Jacobson radical as the radical of the trace form `Tr(L_xL_y)` (characteristic 0).
    pub fn radical(&self) -> Vec<Vec<Q>> {
        let n = self.dim();
        let t = self.left_traces();
        let form =
            QMatrix::from_fn(n, n, |a, b| self.mult.fibre(a, b).iter().fold(Q::zero(), |acc, (k, v)| acc + v * &t[*k]));
        q_nullspace(&form)
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().is_empty()
    }

    /// Smallest subalgebra containing the unit and `gens`.
    pub fn generated_subalgebra(&self, gens: &[Vec<Q>]) -> Vec<Vec<Q>> {
        let n = self.dim();
        let mut sb = SpanBuilder::new(n);
        sb.push(self.unit.clone());
        for g in gens {
            sb.push(g.clone());
        }
        let mut frontier = 0;
        while frontier < sb.dim() {
            let end = sb.dim();
            for a in frontier..end {
                for b in 0..end {
                    let x = sb.basis()[a].clone();
                    let y = sb.basis()[b].clone();
                    sb.push(self.mul(&x, &y));
                    sb.push(self.mul(&y, &x));
                }
            }
            frontier = end;
        }
        sb.into_basis()
    }

    /// Structure constants of the subalgebra spanned by `basis` (must be closed
    /// under multiplication and contain the unit).
    pub fn subalgebra(&self, basis: &[Vec<Q>]) -> Result<Algebra> {
        let m = basis.len();
        let mut t = Tensor3::zeros(m, m, m);
        for a in 0..m {
            for b in 0..m {
                let p = self.mul(&basis[a], &basis[b]);
                let c = coordinates(basis, &p)
                    .ok_or_else(|| WhaError::Internal("subspace not closed under product".into()))?;
                for (k, v) in c.iter().enumerate() {
                    t.add_to(a, b, k, v);
                }
            }
        }
        let unit = coordinates(basis, &self.unit)
            .ok_or_else(|| WhaError::Internal("subspace does not contain the unit".into()))?;
        Ok(Algebra::new(t, unit))
    }

    /// Exact inverse, if `x` is invertible.
    pub fn inverse(&self, x: &[Q]) -> Option<Vec<Q>> {
        let l = self.left_matrix(x);
        let inv = l.inverse()?;
        Some(inv.mul_vec(&self.unit))
    }

    /// Numeric Wedderburn decomposition of a semisimple algebra over ℂ.
    pub fn wedderburn(&self, tol: &Tolerances, seed: u64) -> Result<Wedderburn> {
        if !self.is_semisimple() {
            return Err(WhaError::NotSemisimple);
        }
        let n = self.dim();
        let center = self.center();
        let r = center.len();
        let one_coords =
            coordinates(&center, &self.unit).ok_or_else(|| WhaError::Internal("unit not central".into()))?;
        let mut last_err = WhaError::Numerics(NumericsError::NumericallyIndistinct { distance: 0.0 });
        for attempt in 0..5u64 {
            let s = seed.wrapping_add(attempt);
            let mut rng = ChaCha8Rng::seed_from_u64(s);
            let coeffs: Vec<Q> = (0..r).map(|_| rational::q(rng.gen_range(1..=97))).collect();
            let c = vecops::combine(&coeffs, &center, n);
            let mut m = QMatrix::zeros(r, r);
            for b in 0..r {
                let p = self.mul(&c, &center[b]);
                let co = coordinates(&center, &p).ok_or_else(|| WhaError::Internal("center not closed".into()))?;
                for a in 0..r {
                    m[(a, b)] = co[a].clone();
                }
            }
            let clusters = match eig_decompose(&CMatrix::from_q(&m), tol) {
                Ok(c) => c,
                Err(e) => {
                    last_err = e.into();
                    continue;
                }
            };
            if clusters.len() != r {
                last_err = WhaError::Numerics(NumericsError::NumericallyIndistinct { distance: 0.0 });
                continue;
            }
            let u = to_c(&one_coords);
            let mut blocks = Vec::with_capacity(r);
            for cl in &clusters {
                let zc = cl.projection.mul_vec(&u);
                let mut z = vec![C64::new(0.0, 0.0); n];
                for (a, coef) in zc.iter().enumerate() {
                    for (k, v) in center[a].iter().enumerate() {
                        if !v.is_zero() {
                            z[k] += coef * rational::to_f64(v);
                        }
                    }
                }
                let tr = self.regular_trace_c(&z);
                let dim_sq = round_int_real(tr.re, tol)?;
                let dim_v = (dim_sq as f64).sqrt().round() as usize;
                if dim_v == 0 || (dim_v * dim_v) as i64 != dim_sq {
                    return Err(WhaError::Numerics(NumericsError::NotIntegral {
                        value_re: tr.re.sqrt(),
                        value_im: 0.0,
                    }));
                }
                let character: Vec<C64> = (0..n)
                    .map(|i| {
                        let zi = self.mul_c(&z, &to_c(&vecops::unit(n, i)));
                        self.regular_trace_c(&zi) / dim_v as f64
                    })
                    .collect();
                blocks.push(Block { idempotent: z, dim_v, character });
            }
            let total: usize = blocks.iter().map(|b| b.dim_v * b.dim_v).sum();
            if total != n {
                return Err(WhaError::Internal(format!("block dimensions sum to {total}, expected {n}")));
            }
            blocks.sort_by(|a, b| {
                a.dim_v.cmp(&b.dim_v).then_with(|| {
                    let ka: Vec<(i64, i64)> = a.character.iter().map(|z| (round_key(z.re), round_key(z.im))).collect();
                    let kb: Vec<(i64, i64)> = b.character.iter().map(|z| (round_key(z.re), round_key(z.im))).collect();
                    kb.cmp(&ka)
                })
            });
            return Ok(Wedderburn { blocks, seed: s });
        }
        Err(last_err)
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Algebra) -> Algebra {
        let (n, m) = (self.dim(), other.dim());
        let mut t = Tensor3::zeros(n + m, n + m, n + m);
        for (i, j, k, v) in self.mult.entries() {
            t.add_to(i, j, k, v);
        }
        for (i, j, k, v) in other.mult.entries() {
            t.add_to(n + i, n + j, n + k, v);
        }
        let unit = self.unit.iter().chain(other.unit.iter()).cloned().collect();
        Algebra::new(t, unit)
    }
}

/// Matrix algebra `M_k(ℚ)` with matrix-unit basis `E_{ab}` at index `a·k+b`.
pub fn matrix_algebra(k: usize) -> Algebra {
    let n = k * k;
    let t = Tensor3::from_fn(n, n, n, |i, j, l| {
        let (a, b) = (i / k, i % k);
        let (c, d) = (j / k, j % k);
        if b == c && l == a * k + d {
            Q::one()
        } else {
            Q::zero()
        }
    });
    let unit = (0..n).map(|i| if i / k == i % k { Q::one() } else { Q::zero() }).collect();
    Algebra::new(t, unit)
}

/// Subspace helpers re-exported for callers working in algebra coordinates.
pub use span::{contains, intersection, is_subspace};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::q;

    fn dual_numbers() -> Algebra {
        // basis 1, x with x² = 0
        let t = Tensor3::from_fn(2, 2, 2, |i, j, k| if i + j == k { q(1) } else { q(0) });
        Algebra::new(t, vec![q(1), q(0)])
    }

    #[test]
    fn matrix_algebra_basics() {
        let a = matrix_algebra(2);
        assert_eq!(a.associativity_failure(), None);
        assert_eq!(a.unit_failure(), None);
        assert_eq!(a.center().len(), 1);
        assert!(a.is_semisimple());
        let w = a.wedderburn(&Tolerances::default(), 7).unwrap();
        assert_eq!(w.dims(), vec![2]);
    }

    #[test]
    fn radical_of_dual_numbers() {
        let a = dual_numbers();
        let j = a.radical();
        assert_eq!(j.len(), 1);
        assert!(j[0][0].is_zero());
        assert!(matches!(a.wedderburn(&Tolerances::default(), 1), Err(WhaError::NotSemisimple)));
    }

    #[test]
    fn direct_sum_center() {
        let a = matrix_algebra(2).direct_sum(&matrix_algebra(1));
        assert_eq!(a.center().len(), 2);
        let w = a.wedderburn(&Tolerances::default(), 3).unwrap();
        assert_eq!(w.dims(), vec![1, 2]);
        for (j, b) in w.blocks.iter().enumerate() {
            let v = w.character_at_c(j, &b.idempotent);
            assert!((v.re - b.dim_v as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn generated_subalgebra_of_diagonal() {
        let a = matrix_algebra(2);
        let e00 = vecops::unit(4, 0);
        let sub = a.generated_subalgebra(&[e00]);
        assert_eq!(sub.len(), 2);
        let s = a.subalgebra(&sub).unwrap();
        assert!(s.is_commutative());
    }
}
