//! Exact subspaces of ℚⁿ given by spanning columns.

use super::linsolve::{q_nullspace, SparseRow, SparseSystem};
use super::qmatrix::{vecops, QMatrix};
use super::rational::Q;
use num_traits::Zero;

fn to_row(v: &[Q]) -> SparseRow {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

/// Incrementally grown linearly independent family.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    echelon: SparseSystem,
    basis: Vec<Vec<Q>>,
}

impl SpanBuilder {
    pub fn new(n: usize) -> Self {
        SpanBuilder { echelon: SparseSystem::new(n), basis: Vec::new() }
    }

    /// Adds `v` if it is independent of the current family; returns whether it was added.
    pub fn push(&mut self, v: Vec<Q>) -> bool {
        let before = self.echelon.rank();
        self.echelon.add_homogeneous(to_row(&v));
        if self.echelon.rank() > before {
            self.basis.push(v);
            true
        } else {
            false
        }
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        let mut probe = self.echelon.clone();
        probe.add_homogeneous(to_row(v));
        probe.rank() == self.echelon.rank()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Q>] {
        &self.basis
    }

    pub fn into_basis(self) -> Vec<Vec<Q>> {
        self.basis
    }
}

/// An independent subfamily with the same span.
pub fn independent(vectors: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    let mut sb = SpanBuilder::new(n);
    for v in vectors {
        sb.push(v.clone());
    }
    sb.into_basis()
}

pub fn contains(basis: &[Vec<Q>], v: &[Q]) -> bool {
    let mut sb = SpanBuilder::new(v.len());
    for b in basis {
        sb.push(b.clone());
    }
    sb.contains(v)
}

pub fn is_subspace(sub: &[Vec<Q>], sup: &[Vec<Q>], n: usize) -> bool {
    let mut sb = SpanBuilder::new(n);
    for b in sup {
        sb.push(b.clone());
    }
    sub.iter().all(|v| sb.contains(v))
}

/// Basis of the intersection of two spans (inputs must be independent families).
pub fn intersection(u: &[Vec<Q>], v: &[Vec<Q>], n: usize) -> Vec<Vec<Q>> {
    if u.is_empty() || v.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<Q>> =
        u.iter().cloned().chain(v.iter().map(|x| vecops::scale(x, &Q::from_integer((-1).into())))).collect();
    let m = QMatrix::from_columns(&cols, n);
    let kernel = q_nullspace(&m);
    let raw: Vec<Vec<Q>> = kernel.iter().map(|k| vecops::combine(&k[..u.len()], u, n)).collect();
    independent(&raw, n)
}
