//! Sparse rank-3 tensors of rationals.

use super::rational::Q;
use num_traits::Zero;

/// A `d1×d2×d3` rational tensor stored as sparse fibres: for each `(i,j)` the
/// nonzero `(k, value)` pairs in increasing `k`.
#[derive(Clone, PartialEq, Eq)]
pub struct Tensor3 {
    dims: (usize, usize, usize),
    fibres: Vec<Vec<(usize, Q)>>,
}

impl Tensor3 {
    pub fn zeros(d1: usize, d2: usize, d3: usize) -> Self {
        Tensor3 { dims: (d1, d2, d3), fibres: vec![Vec::new(); d1 * d2] }
    }

    pub fn from_fn(d1: usize, d2: usize, d3: usize, mut f: impl FnMut(usize, usize, usize) -> Q) -> Self {
        let mut t = Self::zeros(d1, d2, d3);
        for i in 0..d1 {
            for j in 0..d2 {
                for k in 0..d3 {
                    let v = f(i, j, k);
                    if !v.is_zero() {
                        t.fibres[i * d2 + j].push((k, v));
                    }
                }
            }
        }
        t
    }

    /// Builds from dense nested vectors `v[i][j][k]`.
    pub fn from_nested(v: &[Vec<Vec<Q>>]) -> Option<Self> {
        let d1 = v.len();
        let d2 = v.first().map_or(0, |x| x.len());
        let d3 = v.first().and_then(|x| x.first()).map_or(0, |x| x.len());
        if v.iter().any(|a| a.len() != d2 || a.iter().any(|b| b.len() != d3)) {
            return None;
        }
        Some(Self::from_fn(d1, d2, d3, |i, j, k| v[i][j][k].clone()))
    }

    pub fn dims(&self) -> (usize, usize, usize) {
        self.dims
    }

    pub fn fibre(&self, i: usize, j: usize) -> &[(usize, Q)] {
        &self.fibres[i * self.dims.1 + j]
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Q {
        self.fibre(i, j).iter().find(|(kk, _)| *kk == k).map_or_else(Q::zero, |(_, v)| v.clone())
    }

    /// Adds `v` to entry `(i,j,k)`.
    pub fn add_to(&mut self, i: usize, j: usize, k: usize, v: &Q) {
        if v.is_zero() {
            return;
        }
        let fibre = &mut self.fibres[i * self.dims.1 + j];
        match fibre.binary_search_by_key(&k, |(kk, _)| *kk) {
            Ok(pos) => {
                fibre[pos].1 += v;
                if fibre[pos].1.is_zero() {
                    fibre.remove(pos);
                }
            }
            Err(pos) => fibre.insert(pos, (k, v.clone())),
        }
    }

    /// Iterates over nonzero entries `(i, j, k, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, usize, &Q)> + '_ {
        let d2 = self.dims.1;
        self.fibres.iter().enumerate().flat_map(move |(ij, f)| f.iter().map(move |(k, v)| (ij / d2, ij % d2, *k, v)))
    }

    pub fn nnz(&self) -> usize {
        self.fibres.iter().map(Vec::len).sum()
    }

    /// Tensor `u` with `u[p(i,j,k)] = self[i,j,k]`, where `perm[a]` is the
    /// output slot of input index `a`.
    pub fn permute(&self, perm: [usize; 3]) -> Tensor3 {
        let d = [self.dims.0, self.dims.1, self.dims.2];
        let mut nd = [0; 3];
        for a in 0..3 {
            nd[perm[a]] = d[a];
        }
        let mut out = Tensor3::zeros(nd[0], nd[1], nd[2]);
        for (i, j, k, v) in self.entries() {
            let idx = [i, j, k];
            let mut o = [0; 3];
            for a in 0..3 {
                o[perm[a]] = idx[a];
            }
            out.add_to(o[0], o[1], o[2], v);
        }
        out
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Q>>> {
        let (d1, d2, d3) = self.dims;
        let mut v = vec![vec![vec![Q::zero(); d3]; d2]; d1];
        for (i, j, k, x) in self.entries() {
            v[i][j][k] = x.clone();
        }
        v
    }
}

impl std::fmt::Debug for Tensor3 {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tensor3{:?} nnz={}", self.dims, self.nnz())
    }
}
