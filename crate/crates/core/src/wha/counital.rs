use super::{WeakBialgebra, WeakHopfAlgebra};
use crate::algebra::intersection;
use crate::numerics::linsolve::column_space;
use crate::numerics::{QMatrix, Q};
use num_traits::Zero;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Connectivity {
    pub connected: bool,
    pub coconnected: bool,
    pub biconnected: bool,
}

impl WeakBialgebra {
    /// `ε(e_a e_b)` for all basis pairs.
    fn eps_of_products(&self) -> QMatrix {
        let n = self.dim();
        QMatrix::from_fn(n, n, |a, b| {
            self.alg.basis_product(a, b).iter().fold(Q::zero(), |acc, (k, v)| acc + v * &self.counit[*k])
        })
    }

    /// Matrix of `ε_t(h) = ε(1₁h)1₂`.
    pub fn eps_t_matrix(&self) -> &QMatrix {
        self.eps_t.get_or_init(|| {
            let n = self.dim();
            let e = self.eps_of_products();
            let mut m = QMatrix::zeros(n, n);
            for ((a, b), c) in self.delta_one() {
                for j in 0..n {
                    if !e[(*a, j)].is_zero() {
                        m[(*b, j)] += c * &e[(*a, j)];
                    }
                }
            }
            m
        })
    }

    /// Matrix of `ε_s(h) = 1₁ε(h1₂)`.
    pub fn eps_s_matrix(&self) -> &QMatrix {
        self.eps_s.get_or_init(|| {
            let n = self.dim();
            let e = self.eps_of_products();
            let mut m = QMatrix::zeros(n, n);
            for ((a, b), c) in self.delta_one() {
                for j in 0..n {
                    if !e[(j, *b)].is_zero() {
                        m[(*a, j)] += c * &e[(j, *b)];
                    }
                }
            }
            m
        })
    }

    pub fn counital_target(&self, h: &[Q]) -> Vec<Q> {
        self.eps_t_matrix().mul_vec(h)
    }

    pub fn counital_source(&self, h: &[Q]) -> Vec<Q> {
        self.eps_s_matrix().mul_vec(h)
    }

    fn bases_pair(&self) -> &(Vec<Vec<Q>>, Vec<Vec<Q>>) {
        self.bases.get_or_init(|| (column_space(self.eps_t_matrix()), column_space(self.eps_s_matrix())))
    }

    /// Basis of `A_t = ε_t(A)`.
    pub fn target_basis(&self) -> &[Vec<Q>] {
        &self.bases_pair().0
    }

    /// Basis of `A_s = ε_s(A)`.
    pub fn source_basis(&self) -> &[Vec<Q>] {
        &self.bases_pair().1
    }

    /// `(A_t, A_s)`.
    pub fn bases(&self) -> (Vec<Vec<Q>>, Vec<Vec<Q>>) {
        self.bases_pair().clone()
    }

    /// `d = dim A_t`.
    pub fn d(&self) -> usize {
        self.target_basis().len()
    }

    /// True iff every element of `A_t` commutes with every element of `A_s`.
    pub fn bases_commute(&self) -> bool {
        let (t, s) = self.bases_pair();
        t.iter().all(|x| s.iter().all(|y| self.mul(x, y) == self.mul(y, x)))
    }

    /// Subalgebra generated by `A_t ∪ A_s`.
    pub fn minimal_subalgebra(&self) -> Vec<Vec<Q>> {
        let (t, s) = self.bases_pair();
        let gens: Vec<Vec<Q>> = t.iter().chain(s.iter()).cloned().collect();
        self.alg.generated_subalgebra(&gens)
    }

    pub fn connectivity(&self) -> Connectivity {
        let n = self.dim();
        let (t, s) = self.bases_pair();
        let connected = intersection(self.center(), t, n).len() == 1;
        let coconnected = intersection(s, t, n).len() == 1;
        Connectivity { connected, coconnected, biconnected: connected && coconnected }
    }
}

impl WeakHopfAlgebra {
    /// True iff `S²` is the identity on the minimal subalgebra.
    pub fn is_regular(&self) -> bool {
        let s2 = self.s_squared();
        self.minimal_subalgebra().iter().all(|b| &s2.mul_vec(b) == b)
    }
}
