use super::WeakBialgebra;
use crate::error::{Result, WhaError};
use crate::numerics::{QMatrix, SparseRow, SparseSystem, Q};
use num_traits::Zero;
use std::collections::BTreeMap;

fn bump(rows: &mut BTreeMap<usize, SparseRow>, k: usize, var: usize, v: Q) {
    let e = rows.entry(k).or_default().entry(var).or_insert_with(Q::zero);
    *e += v;
}

impl WeakBialgebra {
    /// Solves the antipode axioms for the matrix of `S`.
    ///
    /// `S(h₁)h₂S(h₃) = S(h)` is replaced by the equivalent (given
    /// `h₁S(h₂) = ε_t(h)`) linear condition `S(h) = S(h₁)ε_t(h₂)`, so the whole
    /// system is linear in the `n²` entries of `S`.
    pub fn solve_antipode(&self) -> Result<QMatrix> {
        let n = self.dim();
        let var = |i: usize, j: usize| i * n + j;
        let mut sys = SparseSystem::new(n * n);
        let et: Vec<Vec<Q>> = (0..n).map(|b| self.counital_target(&self.basis(b))).collect();
        let es: Vec<Vec<Q>> = (0..n).map(|b| self.counital_source(&self.basis(b))).collect();
        for j in 0..n {
            let delta: Vec<(usize, usize, Q)> = self.comult_basis(j).map(|(a, b, v)| (a, b, v.clone())).collect();

            let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
            for (a, b, v) in &delta {
                for i in 0..n {
                    for (k, m) in self.alg.basis_product(*a, i) {
                        bump(&mut rows, *k, var(i, *b), v * m);
                    }
                }
            }
            for k in 0..n {
                sys.add_equation(rows.remove(&k).unwrap_or_default(), et[j][k].clone());
            }

            let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
            for (a, b, v) in &delta {
                for i in 0..n {
                    for (k, m) in self.alg.basis_product(i, *b) {
                        bump(&mut rows, *k, var(i, *a), v * m);
                    }
                }
            }
            for k in 0..n {
                sys.add_equation(rows.remove(&k).unwrap_or_default(), es[j][k].clone());
            }

            let mut rows: BTreeMap<usize, SparseRow> = BTreeMap::new();
            for k in 0..n {
                bump(&mut rows, k, var(k, j), Q::from_integer(1.into()));
            }
            for (a, b, v) in &delta {
                for i in 0..n {
                    for (c, t) in et[*b].iter().enumerate().filter(|(_, t)| !t.is_zero()) {
                        for (k, m) in self.alg.basis_product(i, c) {
                            bump(&mut rows, *k, var(i, *a), -(v * t * m));
                        }
                    }
                }
            }
            for (_, mut r) in rows {
                r.retain(|_, v| !v.is_zero());
                sys.add_homogeneous(r);
            }
            if !sys.is_consistent() {
                return Err(WhaError::NoAntipode);
            }
        }
        let free = n * n - sys.rank();
        if free > 0 {
            return Err(WhaError::AntipodeNotUnique(free));
        }
        let x = sys.particular().ok_or(WhaError::NoAntipode)?;
        Ok(QMatrix::from_fn(n, n, |i, j| x[var(i, j)].clone()))
    }
}
