//! Weak Hopf algebras by structure constants.
//!
//! Elements are coordinate columns in the defining basis `e_0..e_{n-1}`;
//! functionals are rows. `Δ(e_i) = Σ comult[i][j][k] e_j⊗e_k` and the antipode
//! matrix has `S(e_j) = Σ_i antipode[(i,j)] e_i`.

mod antipode;
mod axioms;
mod counital;
mod grouplike;
mod io;

pub use axioms::{AxiomCheck, AxiomReport};
pub use counital::Connectivity;
pub use grouplike::GroupLike;
pub use io::WhaFile;

use crate::algebra::Algebra;
use crate::error::{Result, WhaError};
use crate::numerics::{vecops, QMatrix, Tensor3, Q};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::ops::Deref;
use std::sync::OnceLock;

/// Element of `A⊗A`: `(a,b) ↦ coefficient of e_a⊗e_b`.
pub type Tens2 = BTreeMap<(usize, usize), Q>;
/// Bases of `A_t` and `A_s`.
type CounitalBases = (Vec<Vec<Q>>, Vec<Vec<Q>>);
/// Element of `A⊗A⊗A`.
pub type Tens3 = BTreeMap<(usize, usize, usize), Q>;

pub(crate) fn add_into<K: Ord + Clone>(map: &mut BTreeMap<K, Q>, k: K, v: Q) {
    if v.is_zero() {
        return;
    }
    let e = map.entry(k.clone()).or_insert_with(Q::zero);
    *e += v;
    if e.is_zero() {
        map.remove(&k);
    }
}

/// Algebra, coalgebra and the weak compatibility data, without an antipode.
#[derive(Clone)]
pub struct WeakBialgebra {
    label: String,
    alg: Algebra,
    comult: Tensor3,
    counit: Vec<Q>,
    delta_one: OnceLock<Tens2>,
    eps_t: OnceLock<QMatrix>,
    eps_s: OnceLock<QMatrix>,
    bases: OnceLock<CounitalBases>,
    center: OnceLock<Vec<Vec<Q>>>,
}

impl PartialEq for WeakBialgebra {
    fn eq(&self, other: &Self) -> bool {
        self.alg == other.alg && self.comult == other.comult && self.counit == other.counit
    }
}

impl std::fmt::Debug for WeakBialgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "WeakBialgebra({:?}, dim={})", self.label, self.dim())
    }
}

impl WeakBialgebra {
    pub fn new(label: impl Into<String>, mult: Tensor3, unit: Vec<Q>, comult: Tensor3, counit: Vec<Q>) -> Result<Self> {
        let n = unit.len();
        for (name, d) in [("mult", mult.dims()), ("comult", comult.dims())] {
            if d != (n, n, n) {
                return Err(WhaError::InvalidParams(format!("{name} has dims {d:?}, expected {n}^3")));
            }
        }
        if counit.len() != n {
            return Err(WhaError::InvalidParams(format!("counit has length {}, expected {n}", counit.len())));
        }
        Ok(WeakBialgebra {
            label: label.into(),
            alg: Algebra::new(mult, unit),
            comult,
            counit,
            delta_one: OnceLock::new(),
            eps_t: OnceLock::new(),
            eps_s: OnceLock::new(),
            bases: OnceLock::new(),
            center: OnceLock::new(),
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn mult(&self) -> &Tensor3 {
        self.alg.mult()
    }

    pub fn unit(&self) -> &[Q] {
        self.alg.unit()
    }

    pub fn comult(&self) -> &Tensor3 {
        &self.comult
    }

    pub fn counit(&self) -> &[Q] {
        &self.counit
    }

    pub fn basis(&self, i: usize) -> Vec<Q> {
        vecops::unit(self.dim(), i)
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.alg.mul(x, y)
    }

    pub fn eps(&self, x: &[Q]) -> Q {
        vecops::dot(&self.counit, x)
    }

    /// `Δ(e_i)` as sparse `((j,k), coefficient)` pairs.
    pub fn comult_basis(&self, i: usize) -> impl Iterator<Item = (usize, usize, &Q)> + '_ {
        let n = self.dim();
        (0..n).flat_map(move |j| self.comult.fibre(i, j).iter().map(move |(k, v)| (j, *k, v)))
    }

    pub fn comul(&self, x: &[Q]) -> Tens2 {
        let mut out = Tens2::new();
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, k, v) in self.comult_basis(i) {
                add_into(&mut out, (j, k), xi * v);
            }
        }
        out
    }

    pub fn delta_one(&self) -> &Tens2 {
        self.delta_one.get_or_init(|| self.comul(self.unit()))
    }

    /// Product in `A⊗A`.
    pub fn mul2(&self, x: &Tens2, y: &Tens2) -> Tens2 {
        let mut out = Tens2::new();
        for ((a, b), u) in x {
            for ((c, d), v) in y {
                let uv = u * v;
                for (p, m1) in self.alg.basis_product(*a, *c) {
                    let w = &uv * m1;
                    for (q, m2) in self.alg.basis_product(*b, *d) {
                        add_into(&mut out, (*p, *q), &w * m2);
                    }
                }
            }
        }
        out
    }

    /// Product in `A⊗A⊗A`.
    pub fn mul3(&self, x: &Tens3, y: &Tens3) -> Tens3 {
        let mut out = Tens3::new();
        for ((a, b, c), u) in x {
            for ((d, e, f), v) in y {
                let uv = u * v;
                for (p, m1) in self.alg.basis_product(*a, *d) {
                    let w1 = &uv * m1;
                    for (q, m2) in self.alg.basis_product(*b, *e) {
                        let w2 = &w1 * m2;
                        for (r, m3) in self.alg.basis_product(*c, *f) {
                            add_into(&mut out, (*p, *q, *r), &w2 * m3);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn dual_bialgebra(&self) -> WeakBialgebra {
        // (e^i e^j)(e_k) = Δ_k^{ij};  Δ(e^i) = Σ m_{jk}^i e^j⊗e^k
        let mult = self.comult.permute([2, 0, 1]);
        let comult = self.mult().permute([1, 2, 0]);
        WeakBialgebra::new(format!("dual({})", self.label), mult, self.counit.clone(), comult, self.unit().to_vec())
            .expect("dual dimensions are consistent")
    }

    pub fn center(&self) -> &[Vec<Q>] {
        self.center.get_or_init(|| self.alg.center())
    }
}

/// A weak bialgebra together with its antipode.
#[derive(Clone)]
pub struct WeakHopfAlgebra {
    core: WeakBialgebra,
    antipode: QMatrix,
    s_inverse: OnceLock<Option<QMatrix>>,
    dual: OnceLock<Box<WeakHopfAlgebra>>,
}

impl PartialEq for WeakHopfAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.core == other.core && self.antipode == other.antipode
    }
}

impl std::fmt::Debug for WeakHopfAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "WeakHopfAlgebra({:?}, dim={})", self.label(), self.dim())
    }
}

impl Deref for WeakHopfAlgebra {
    type Target = WeakBialgebra;
    fn deref(&self) -> &WeakBialgebra {
        &self.core
    }
}

impl WeakHopfAlgebra {
    /// Assembles without checking any axiom.
    pub fn from_parts_unchecked(core: WeakBialgebra, antipode: QMatrix) -> Self {
        WeakHopfAlgebra { core, antipode, s_inverse: OnceLock::new(), dual: OnceLock::new() }
    }

    /// Assembles and validates every axiom; solves for the antipode when absent.
    pub fn new(core: WeakBialgebra, antipode: Option<QMatrix>) -> Result<Self> {
        let pre = core.verify_bialgebra_axioms();
        if let Some(f) = pre.first_failure() {
            return Err(WhaError::AxiomViolation(f.name.clone()));
        }
        let antipode = match antipode {
            Some(s) => s,
            None => core.solve_antipode()?,
        };
        let n = core.dim();
        if antipode.rows() != n || antipode.cols() != n {
            return Err(WhaError::InvalidParams(format!("antipode must be {n}×{n}")));
        }
        let a = Self::from_parts_unchecked(core, antipode);
        let rep = a.verify_axioms();
        if let Some(f) = rep.first_failure() {
            return Err(WhaError::AxiomViolation(f.name.clone()));
        }
        Ok(a)
    }

    pub fn core(&self) -> &WeakBialgebra {
        &self.core
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.core.label = label.into();
        self.dual = OnceLock::new();
        self
    }

    pub fn antipode(&self) -> &QMatrix {
        &self.antipode
    }

    pub fn s(&self, x: &[Q]) -> Vec<Q> {
        self.antipode.mul_vec(x)
    }

    pub fn s_inverse_matrix(&self) -> Option<&QMatrix> {
        self.s_inverse.get_or_init(|| self.antipode.inverse()).as_ref()
    }

    pub fn s_inv(&self, x: &[Q]) -> Result<Vec<Q>> {
        Ok(self.s_inverse_matrix().ok_or(WhaError::NotInvertible)?.mul_vec(x))
    }

    /// Matrix of `S∘S`.
    pub fn s_squared(&self) -> QMatrix {
        self.antipode.mul(&self.antipode)
    }

    /// `Tr(S²|_A)`.
    pub fn trace_s2(&self) -> Q {
        let n = self.dim();
        let s = &self.antipode;
        let mut t = Q::zero();
        for i in 0..n {
            for k in 0..n {
                if !s[(i, k)].is_zero() && !s[(k, i)].is_zero() {
                    t += &s[(i, k)] * &s[(k, i)];
                }
            }
        }
        t
    }

    pub fn s2_eigenvalues(&self) -> Vec<crate::numerics::C64> {
        crate::numerics::CMatrix::from_q(&self.s_squared()).eigenvalues()
    }

    pub fn dual(&self) -> WeakHopfAlgebra {
        WeakHopfAlgebra::from_parts_unchecked(self.core.dual_bialgebra(), self.antipode.transpose())
    }

    /// The dual, computed once.
    pub fn dual_ref(&self) -> &WeakHopfAlgebra {
        self.dual.get_or_init(|| Box::new(self.dual()))
    }

    pub fn direct_sum(&self, other: &WeakHopfAlgebra) -> WeakHopfAlgebra {
        let (n, m) = (self.dim(), other.dim());
        let alg = self.algebra().direct_sum(other.algebra());
        let mut comult = Tensor3::zeros(n + m, n + m, n + m);
        for (i, j, k, v) in self.comult().entries() {
            comult.add_to(i, j, k, v);
        }
        for (i, j, k, v) in other.comult().entries() {
            comult.add_to(n + i, n + j, n + k, v);
        }
        let counit = self.counit().iter().chain(other.counit()).cloned().collect();
        let mut s = QMatrix::zeros(n + m, n + m);
        for i in 0..n {
            for j in 0..n {
                s[(i, j)] = self.antipode[(i, j)].clone();
            }
        }
        for i in 0..m {
            for j in 0..m {
                s[(n + i, n + j)] = other.antipode[(i, j)].clone();
            }
        }
        let core = WeakBialgebra::new(
            format!("ds({},{})", self.label(), other.label()),
            alg.mult().clone(),
            alg.unit().to_vec(),
            comult,
            counit,
        )
        .expect("direct sum dimensions are consistent");
        WeakHopfAlgebra::from_parts_unchecked(core, s)
    }

    /// True iff `Δ(1) = 1⊗1`.
    pub fn is_hopf(&self) -> bool {
        let one = self.unit();
        let mut t = Tens2::new();
        for (a, x) in one.iter().enumerate() {
            for (b, y) in one.iter().enumerate() {
                add_into(&mut t, (a, b), x * y);
            }
        }
        &t == self.delta_one()
    }
}
