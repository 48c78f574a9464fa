//! Complex floating-point layer: eigenvalue clustering, spectral projections,
//! Perron roots and integer rounding.

use super::qmatrix::QMatrix;
use super::{NumericsError, Tolerances};
use nalgebra::DMatrix;
use num_complex::Complex64;

pub type C64 = Complex64;

/// Dense complex matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct CMatrix(pub DMatrix<C64>);

impl CMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMatrix(DMatrix::from_element(rows, cols, C64::new(0.0, 0.0)))
    }

    pub fn identity(n: usize) -> Self {
        CMatrix(DMatrix::identity(n, n))
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl FnMut(usize, usize) -> C64) -> Self {
        CMatrix(DMatrix::from_fn(rows, cols, f))
    }

    pub fn from_real(rows: usize, cols: usize, data_row_major: &[f64]) -> Self {
        CMatrix(DMatrix::from_fn(rows, cols, |i, j| C64::new(data_row_major[i * cols + j], 0.0)))
    }

    pub fn from_q(m: &QMatrix) -> Self {
        Self::from_real(m.rows(), m.cols(), &m.to_f64())
    }

    pub fn rows(&self) -> usize {
        self.0.nrows()
    }

    pub fn cols(&self) -> usize {
        self.0.ncols()
    }

    pub fn mul(&self, other: &CMatrix) -> CMatrix {
        CMatrix(&self.0 * &other.0)
    }

    pub fn mul_vec(&self, v: &[C64]) -> Vec<C64> {
        (0..self.rows()).map(|i| (0..self.cols()).map(|j| self.0[(i, j)] * v[j]).sum()).collect()
    }

    pub fn trace(&self) -> C64 {
        self.0.trace()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Solution of `self·x = b`, if the matrix is numerically invertible.
    pub fn solve(&self, b: &[C64]) -> Option<Vec<C64>> {
        let rhs = nalgebra::DVector::from_column_slice(b);
        let x = self.0.clone().lu().solve(&rhs)?;
        x.iter().all(|z| z.re.is_finite() && z.im.is_finite()).then(|| x.iter().copied().collect())
    }

    pub fn eigenvalues(&self) -> Vec<C64> {
        let n = self.rows();
        if n == 0 {
            return Vec::new();
        }
        let schur = self.0.clone().schur();
        let (_, t) = schur.unpack();
        (0..n).map(|i| t[(i, i)]).collect()
    }
}

/// One eigenvalue cluster with its spectral projection.
#[derive(Clone, Debug)]
pub struct EigenCluster {
    pub value: C64,
    pub multiplicity: usize,
    pub projection: CMatrix,
}

fn cmp_c64(a: &C64, b: &C64) -> std::cmp::Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(std::cmp::Ordering::Equal)
        .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
}

/// Groups eigenvalues by single linkage at radius `tol.eig_cluster`; cluster
/// centres closer than twice that radius are reported as ambiguous.
pub fn cluster_values(values: &[C64], tol: &Tolerances) -> Result<Vec<(C64, usize)>, NumericsError> {
    let r = tol.eig_cluster;
    let mut groups: Vec<Vec<C64>> = Vec::new();
    for v in values {
        let hits: Vec<usize> =
            groups.iter().enumerate().filter(|(_, g)| g.iter().any(|w| (w - v).norm() <= r)).map(|(i, _)| i).collect();
        match hits.as_slice() {
            [] => groups.push(vec![*v]),
            [first, rest @ ..] => {
                let first = *first;
                for &i in rest.iter().rev() {
                    let g = groups.remove(i);
                    groups[first].extend(g);
                }
                groups[first].push(*v);
            }
        }
    }
    let mut clusters: Vec<(C64, usize)> =
        groups.iter().map(|g| (g.iter().sum::<C64>() / g.len() as f64, g.len())).collect();
    clusters.sort_by(|a, b| cmp_c64(&a.0, &b.0));
    for i in 0..clusters.len() {
        for j in i + 1..clusters.len() {
            let d = (clusters[i].0 - clusters[j].0).norm();
            if d < 2.0 * r && d > r / 2.0 {
                return Err(NumericsError::NumericallyIndistinct { distance: d });
            }
        }
    }
    Ok(clusters)
}

/// Eigenvalue clusters of a diagonalizable matrix together with the spectral
/// projections `P_i = Π_{k≠i} (M − μ_k)/(μ_i − μ_k)`.
pub fn eig_decompose(m: &CMatrix, tol: &Tolerances) -> Result<Vec<EigenCluster>, NumericsError> {
    let n = m.rows();
    if n != m.cols() {
        return Err(NumericsError::DimensionMismatch { expected: n, found: m.cols() });
    }
    let clusters = cluster_values(&m.eigenvalues(), tol)?;
    let id = DMatrix::<C64>::identity(n, n);
    let mut out = Vec::with_capacity(clusters.len());
    for (i, (mu_i, mult)) in clusters.iter().enumerate() {
        let mut p = id.clone();
        for (k, (mu_k, _)) in clusters.iter().enumerate() {
            if k != i {
                p *= (&m.0 - &id * *mu_k) / (mu_i - mu_k);
            }
        }
        out.push(EigenCluster { value: *mu_i, multiplicity: *mult, projection: CMatrix(p) });
    }
    Ok(out)
}

/// Largest real eigenvalue and a nonnegative eigenvector of a nonnegative
/// matrix, by power iteration on `M + I` from the all-ones vector.
pub fn perron(m: &QMatrix, tol: &Tolerances) -> Result<(f64, Vec<f64>), NumericsError> {
    let n = m.rows();
    if !m.is_square() {
        return Err(NumericsError::DimensionMismatch { expected: n, found: m.cols() });
    }
    if n == 0 || m.pow(n as u32).is_zero() {
        return Err(NumericsError::NilpotentInput);
    }
    let a = m.to_f64();
    if a.iter().any(|&x| x < 0.0) {
        return Err(NumericsError::NegativeEntry);
    }
    let apply = |x: &[f64]| -> Vec<f64> { (0..n).map(|i| (0..n).map(|j| a[i * n + j] * x[j]).sum::<f64>()).collect() };
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut theta = 0.0;
    for _ in 0..200_000 {
        let mx = apply(&x);
        let y: Vec<f64> = mx.iter().zip(&x).map(|(u, v)| u + v).collect();
        let norm = y.iter().map(|v| v * v).sum::<f64>().sqrt();
        let next: Vec<f64> = y.iter().map(|v| v / norm).collect();
        let mnext = apply(&next);
        let s: f64 = next.iter().sum();
        theta = mnext.iter().sum::<f64>() / s;
        let resid = mnext.iter().zip(&next).map(|(u, v)| (u - theta * v).powi(2)).sum::<f64>().sqrt();
        let scale = mnext.iter().map(|v| v * v).sum::<f64>().sqrt().max(f64::MIN_POSITIVE);
        x = next;
        if resid / scale < tol.zero || resid < tol.zero * 1e-3 {
            break;
        }
    }
    if theta.abs() < tol.zero {
        return Err(NumericsError::NilpotentInput);
    }
    Ok((theta, x))
}

/// Nearest integer to `x` if `x` is within `int_round` of it and has
/// negligible imaginary part.
pub fn round_int(x: C64, tol: &Tolerances) -> Result<i64, NumericsError> {
    let r = x.re.round();
    if (x.re - r).abs() < tol.int_round && x.im.abs() < tol.int_round && r.abs() < 9.0e15 {
        Ok(r as i64)
    } else {
        Err(NumericsError::NotIntegral { value_re: x.re, value_im: x.im })
    }
}

pub fn round_int_real(x: f64, tol: &Tolerances) -> Result<i64, NumericsError> {
    round_int(C64::new(x, 0.0), tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rational::q;

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn qm(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect())
    }

    #[test]
    fn perron_swap() {
        let (v, x) = perron(&qm(&[&[0, 1], &[1, 0]]), &tol()).unwrap();
        assert!((v - 1.0).abs() < 1e-9);
        assert!((x[0] - x[1]).abs() < 1e-9);
    }

    #[test]
    fn perron_identity() {
        let (v, _) = perron(&QMatrix::identity(3), &tol()).unwrap();
        assert!((v - 1.0).abs() < 1e-9);
    }

    #[test]
    fn perron_golden_ratio() {
        // characteristic polynomial x^2 - x - 1
        let (v, _) = perron(&qm(&[&[1, 1], &[1, 0]]), &tol()).unwrap();
        let golden = (1.0 + 5f64.sqrt()) / 2.0;
        assert!((v - golden).abs() < 1e-9, "{v}");
    }

    #[test]
    fn perron_nilpotent() {
        assert_eq!(perron(&qm(&[&[0, 1], &[0, 0]]), &tol()), Err(NumericsError::NilpotentInput));
    }

    #[test]
    fn clusters_diag() {
        let m = CMatrix::from_real(3, 3, &[1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 2.0]);
        let cl = eig_decompose(&m, &tol()).unwrap();
        assert_eq!(cl.len(), 2);
        assert!((cl[0].value.re - 1.0).abs() < 1e-12 && cl[0].multiplicity == 2);
        assert!((cl[1].value.re - 2.0).abs() < 1e-12 && cl[1].multiplicity == 1);
    }

    #[test]
    fn clusters_identity() {
        let cl = eig_decompose(&CMatrix::identity(4), &tol()).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].multiplicity, 4);
    }

    #[test]
    fn swap_projections() {
        let m = CMatrix::from_real(2, 2, &[0.0, 1.0, 1.0, 0.0]);
        let cl = eig_decompose(&m, &tol()).unwrap();
        assert_eq!(cl.len(), 2);
        // analytic decomposition: P± = (I ± M)/2
        let minus = &cl[0];
        let plus = &cl[1];
        assert!((minus.value.re + 1.0).abs() < 1e-12);
        let half = C64::new(0.5, 0.0);
        for i in 0..2 {
            for j in 0..2 {
                let id = if i == j { 1.0 } else { 0.0 };
                let mij = m.0[(i, j)].re;
                assert!((plus.projection.0[(i, j)] - half * (id + mij)).norm() < 1e-12);
                assert!((minus.projection.0[(i, j)] - half * (id - mij)).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn ambiguous_clusters_rejected() {
        let t = tol();
        let vals = [C64::new(0.0, 0.0), C64::new(1.5 * t.eig_cluster, 0.0)];
        assert!(matches!(cluster_values(&vals, &t), Err(NumericsError::NumericallyIndistinct { .. })));
    }

    #[test]
    fn rounding() {
        let t = tol();
        assert_eq!(round_int_real(2.0000000001, &t), Ok(2));
        assert!(round_int_real(1.5, &t).is_err());
        assert_eq!(round_int_real(6.0 / 3.0, &t), Ok(2));
        assert!(round_int(C64::new(2.0, 0.1), &t).is_err());
    }
}
