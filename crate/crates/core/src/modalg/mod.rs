//! Module and comodule algebras over a weak Hopf algebra.

pub mod fixtures;
mod io;
mod k0;

pub use io::AlgebraFile;
pub use k0::{k0_action, k0_module, orbit_theorem_check, K0Action, K0ModuleData, OrbitReport};

use crate::algebra::{is_subspace, Algebra};
use crate::error::{Result, WhaError};
use crate::integrals::Side;
use crate::numerics::{vecops, QMatrix, SpanBuilder, Tensor3, Tolerances, Q};
use crate::repcat::{is_pseudounitary, RepData};
use crate::wha::{add_into, AxiomCheck, AxiomReport, Tens3, WeakHopfAlgebra};
use num_traits::Zero;
use serde::Serialize;
use std::collections::BTreeMap;

/// `action[h][i][j]` is the coefficient of `m_j` in `e_h·m_i` (or `m_i·e_h` on the right).
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleAlgebra {
    pub label: String,
    pub alg: Algebra,
    pub action: Tensor3,
    pub side: Side,
}

/// `coaction[i][h][j]` is the coefficient of `e_h⊗m_j` in `δ(m_i)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComoduleAlgebra {
    pub label: String,
    pub alg: Algebra,
    pub coaction: Tensor3,
}

fn check(name: &str, witness: Option<Vec<usize>>) -> AxiomCheck {
    AxiomCheck { name: name.into(), passed: witness.is_none(), witness }
}

fn find<I: IntoIterator<Item = Vec<usize>>>(tuples: I, mut fails: impl FnMut(&[usize]) -> bool) -> Option<Vec<usize>> {
    tuples.into_iter().find(|t| fails(t))
}

fn pairs(a: usize, b: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..a).flat_map(move |i| (0..b).map(move |j| vec![i, j]))
}

fn triples(a: usize, b: usize, c: usize) -> impl Iterator<Item = Vec<usize>> {
    (0..a).flat_map(move |i| (0..b).flat_map(move |j| (0..c).map(move |k| vec![i, j, k])))
}

impl ModuleAlgebra {
    pub fn new(label: impl Into<String>, alg: Algebra, action: Tensor3, side: Side) -> Result<Self> {
        let m = alg.dim();
        let (_, d2, d3) = action.dims();
        if d2 != m || d3 != m {
            return Err(WhaError::InvalidParams(format!("action tensor does not match algebra dimension {m}")));
        }
        Ok(ModuleAlgebra { label: label.into(), alg, action, side })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// `h·m` (or `m·h`), bilinear in the coordinates.
    pub fn act(&self, h: &[Q], m: &[Q]) -> Vec<Q> {
        let mut out = vec![Q::zero(); self.dim()];
        for (a, ha) in h.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (i, mi) in m.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let c = ha * mi;
                for (j, v) in self.action.fibre(a, i) {
                    out[*j] += &c * v;
                }
            }
        }
        out
    }

    /// Matrix of `m ↦ h·m`.
    pub fn operator(&self, h: &[Q]) -> QMatrix {
        let m = self.dim();
        QMatrix::from_columns(&(0..m).map(|i| self.act(h, &vecops::unit(m, i))).collect::<Vec<_>>(), m)
    }

    /// `h·1_M`.
    pub fn on_unit(&self, h: &[Q]) -> Vec<Q> {
        self.act(h, self.alg.unit())
    }
}

/// Module-algebra identities over `a`, on basis tuples. Right actions are checked with the mirrored identities.
pub fn verify_module_algebra(a: &WeakHopfAlgebra, m: &ModuleAlgebra) -> AxiomReport {
    let (n, d) = (a.dim(), m.dim());
    let e = |i| vecops::unit(d, i);
    let mul = |x: &[Q], y: &[Q]| m.alg.mul(x, y);
    let left = m.side == Side::Left;
    let unit = find((0..d).map(|i| vec![i]), |t| m.act(a.unit(), &e(t[0])) != e(t[0]));
    let action = find(triples(n, n, d), |t| {
        let (g, h, i) = (a.basis(t[0]), a.basis(t[1]), e(t[2]));
        if left {
            m.act(&g, &m.act(&h, &i)) != m.act(&a.mul(&g, &h), &i)
        } else {
            m.act(&h, &m.act(&g, &i)) != m.act(&a.mul(&g, &h), &i)
        }
    });
    let algebra = find(triples(n, d, d), |t| {
        let (x, y) = (e(t[1]), e(t[2]));
        let lhs = m.act(&a.basis(t[0]), &mul(&x, &y));
        let mut rhs = vec![Q::zero(); d];
        for (p, r, c) in a.comult_basis(t[0]) {
            let term = mul(&m.act(&a.basis(p), &x), &m.act(&a.basis(r), &y));
            rhs = vecops::add(&rhs, &vecops::scale(&term, c));
        }
        lhs != rhs
    });
    let unit_cond = find((0..n).map(|h| vec![h]), |t| {
        let h = a.basis(t[0]);
        let proj = if left { a.counital_target(&h) } else { a.counital_source(&h) };
        m.on_unit(&h) != m.on_unit(&proj)
    });
    AxiomReport {
        checks: vec![
            check("unit acts trivially", unit),
            check("action", action),
            check("module algebra", algebra),
            check("unit condition", unit_cond),
        ],
    }
}

impl ComoduleAlgebra {
    pub fn new(label: impl Into<String>, alg: Algebra, coaction: Tensor3) -> Result<Self> {
        let m = alg.dim();
        let (d1, _, d3) = coaction.dims();
        if d1 != m || d3 != m {
            return Err(WhaError::InvalidParams(format!("coaction tensor does not match algebra dimension {m}")));
        }
        Ok(ComoduleAlgebra { label: label.into(), alg, coaction })
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    /// `δ(m)` as `{(h, j): coefficient}`.
    pub fn coact(&self, m: &[Q]) -> BTreeMap<(usize, usize), Q> {
        let mut out = BTreeMap::new();
        let (_, n, _) = self.coaction.dims();
        for (i, mi) in m.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for h in 0..n {
                for (j, v) in self.coaction.fibre(i, h) {
                    add_into(&mut out, (h, *j), mi * v);
                }
            }
        }
        out
    }
}

pub fn verify_comodule_algebra(a: &WeakHopfAlgebra, m: &ComoduleAlgebra) -> AxiomReport {
    let d = m.dim();
    let e = |i| vecops::unit(d, i);
    let coassoc = find((0..d).map(|i| vec![i]), |t| {
        let dm = m.coact(&e(t[0]));
        let mut lhs = Tens3::new();
        let mut rhs = Tens3::new();
        for ((h, j), c) in &dm {
            for (p, r, v) in a.comult_basis(*h) {
                add_into(&mut lhs, (p, r, *j), c * v);
            }
            for ((r, k), v) in m.coact(&e(*j)) {
                add_into(&mut rhs, (*h, r, k), c * v);
            }
        }
        lhs != rhs
    });
    let counit = find((0..d).map(|i| vec![i]), |t| {
        let mut v = vec![Q::zero(); d];
        for ((h, j), c) in m.coact(&e(t[0])) {
            v[j] += c * &a.counit()[h];
        }
        v != e(t[0])
    });
    let mult = find(pairs(d, d), |t| {
        let lhs = m.coact(&m.alg.mul(&e(t[0]), &e(t[1])));
        let mut rhs = BTreeMap::new();
        for ((h, j), c) in m.coact(&e(t[0])) {
            for ((g, k), v) in m.coact(&e(t[1])) {
                let ag = a.mul(&a.basis(h), &a.basis(g));
                let mk = m.alg.mul(&e(j), &e(k));
                for (p, x) in ag.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (q, y) in mk.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        add_into(&mut rhs, (p, q), &c * &v * x * y);
                    }
                }
            }
        }
        lhs != rhs
    });
    let d1 = m.coact(m.alg.unit());
    let mut proj = BTreeMap::new();
    for ((h, j), c) in &d1 {
        for (p, x) in a.counital_source(&a.basis(*h)).iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            add_into(&mut proj, (p, *j), c * x);
        }
    }
    let unit_cond = if proj == d1 { None } else { Some(vec![]) };
    AxiomReport {
        checks: vec![
            check("coassociativity", coassoc),
            check("counit", counit),
            check("multiplicativity", mult),
            check("unit condition", unit_cond),
        ],
    }
}

/// `m·φ = ⟨φ, m_I⟩m_II`: a right module algebra over `A*` in the dual basis.
pub fn comodule_to_module(m: &ComoduleAlgebra) -> ModuleAlgebra {
    let (d, n, _) = m.coaction.dims();
    let action = Tensor3::from_fn(n, d, d, |h, i, j| m.coaction.get(i, h, j));
    ModuleAlgebra { label: format!("{} (right dual action)", m.label), alg: m.alg.clone(), action, side: Side::Right }
}

/// Radical of the trace form, exact; equals the Jacobson radical in characteristic zero.
pub fn jacobson_radical(alg: &Algebra) -> Vec<Vec<Q>> {
    alg.radical()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RadicalStability {
    #[serde(serialize_with = "crate::numerics::rational::ser_qvecs")]
    pub radical: Vec<Vec<Q>>,
    pub a_radical_dim: usize,
    /// `A·J(M) ⊆ J(M)`.
    pub stable: bool,
    /// `A·J(M) = J(M)`.
    pub equal: bool,
    /// `A·J(M)` is a two-sided ideal and `A`-stable.
    pub a_stable_ideal: bool,
    pub lrt: Lrt,
}

impl RadicalStability {
    pub fn passed(&self) -> bool {
        self.stable && self.equal && self.a_stable_ideal && self.lrt.passed()
    }
}

/// Identities between left/right multiplication `L`, `R` and the action `T`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Lrt {
    /// `T(y) = R(y·1)` for `y ∈ A_s`.
    pub source: bool,
    /// `T(z) = L(z·1)` for `z ∈ A_t`.
    pub target: bool,
    /// `L(h·m) = T(h₁)L(m)T(S(h₂))`.
    pub conjugation: bool,
}

impl Lrt {
    pub fn passed(&self) -> bool {
        self.source && self.target && self.conjugation
    }
}

pub fn verify_lrt(a: &WeakHopfAlgebra, m: &ModuleAlgebra) -> Lrt {
    let d = m.dim();
    let source = a.source_basis().iter().all(|y| m.operator(y) == m.alg.right_matrix(&m.on_unit(y)));
    let target = a.target_basis().iter().all(|z| m.operator(z) == m.alg.left_matrix(&m.on_unit(z)));
    let conjugation = (0..a.dim()).all(|h| {
        (0..d).all(|i| {
            let lhs = m.alg.left_matrix(&m.act(&a.basis(h), &vecops::unit(d, i)));
            let li = m.alg.left_matrix(&vecops::unit(d, i));
            let mut rhs = QMatrix::zeros(d, d);
            for (p, r, c) in a.comult_basis(h) {
                let t = m.operator(&a.basis(p)).mul(&li).mul(&m.operator(&a.s(&a.basis(r))));
                rhs = rhs.add(&t.scale(c));
            }
            lhs == rhs
        })
    });
    Lrt { source, target, conjugation }
}

fn span(n: usize, vs: impl IntoIterator<Item = Vec<Q>>) -> Vec<Vec<Q>> {
    let mut b = SpanBuilder::new(n);
    for v in vs {
        b.push(v);
    }
    b.into_basis()
}

/// `A·J(M) ⊆ J(M)` for a left module algebra over a pseudo-unitary `A`.
pub fn verify_radical_stability(
    a: &WeakHopfAlgebra,
    m: &ModuleAlgebra,
    tol: &Tolerances,
    seed: u64,
) -> Result<RadicalStability> {
    let rep = RepData::new(a, tol, seed)?;
    if !is_pseudounitary(a, &rep, tol)? {
        return Err(WhaError::NotPseudoUnitary);
    }
    if m.side != Side::Left {
        return Err(WhaError::InvalidParams("radical stability is checked for left module algebras".into()));
    }
    let d = m.dim();
    let j = jacobson_radical(&m.alg);
    let aj = span(d, (0..a.dim()).flat_map(|h| j.iter().map(move |x| (h, x))).map(|(h, x)| m.act(&a.basis(h), x)));
    let stable = is_subspace(&aj, &j, d);
    let equal = stable && aj.len() == j.len();
    let a_stable_ideal = aj.iter().all(|x| {
        (0..d).all(|i| {
            let e = vecops::unit(d, i);
            is_subspace(&[m.alg.mul(&e, x), m.alg.mul(x, &e)], &aj, d)
        }) && (0..a.dim()).all(|h| is_subspace(&[m.act(&a.basis(h), x)], &aj, d))
    });
    Ok(RadicalStability { radical: j, a_radical_dim: aj.len(), stable, equal, a_stable_ideal, lrt: verify_lrt(a, m) })
}
