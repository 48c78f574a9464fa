use super::{canonical_integral, haar_integral, is_nondegenerate, normalized_integral};
use crate::error::{Result, WhaError};
use crate::numerics::linsolve::column_space;
use crate::numerics::rational::{ser_q, to_f64};
use crate::numerics::{coordinates, vecops, QMatrix, Tolerances, C64, Q};
use crate::repcat::source_blocks;
use crate::wha::{Connectivity, WeakHopfAlgebra};
use num_traits::Zero;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Condition {
    pub condition: String,
    pub verdict: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BatteryReport {
    pub conditions: Vec<Condition>,
    /// Common verdict; `None` when the conditions disagree outside the biconnected case.
    pub verdict: Option<bool>,
    pub connectivity: Connectivity,
}

fn cond(name: &str, verdict: bool, witness: Option<String>) -> Condition {
    Condition { condition: name.to_string(), verdict, witness }
}

/// The five equivalent semisimplicity conditions. Requires a connected
/// algebra; disagreement is fatal when the algebra is biconnected.
pub fn semisimplicity_battery(a: &WeakHopfAlgebra) -> Result<BatteryReport> {
    let connectivity = a.connectivity();
    if !connectivity.connected {
        return Err(WhaError::NotConnected);
    }
    let dual = a.dual_ref();
    let tr = a.trace_s2();
    let lambda = canonical_integral(a);
    let na = normalized_integral(a)?;
    let nd = normalized_integral(dual)?;
    let hd = haar_integral(dual)?;
    let conditions = vec![
        cond("Tr(S^2|A) != 0", !tr.is_zero(), Some(crate::numerics::format_q(&tr))),
        cond("normalized left integral in A", na.is_some(), None),
        cond("normalized left integral in A*", nd.is_some(), None),
        cond("Haar integral in A*", hd.is_some(), None),
        cond("canonical integral non-degenerate", is_nondegenerate(dual, &lambda), None),
    ];
    let first = conditions[0].verdict;
    let agree = conditions.iter().all(|c| c.verdict == first);
    if !agree && connectivity.biconnected {
        let detail: Vec<String> = conditions.iter().map(|c| format!("{}={}", c.condition, c.verdict)).collect();
        return Err(WhaError::EquivalenceViolated(format!(
            "semisimplicity conditions disagree: {}",
            detail.join(", ")
        )));
    }
    Ok(BatteryReport { conditions, verdict: agree.then_some(first), connectivity })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CounitalsReport {
    #[serde(serialize_with = "ser_q")]
    pub trace_s2: Q,
    pub d: usize,
    pub target_holds: bool,
    pub source_holds: bool,
    /// Whether the source identity was checked in exact arithmetic.
    pub source_exact: bool,
    pub connectivity: Connectivity,
}

impl CounitalsReport {
    pub fn passed(&self) -> bool {
        self.target_holds && self.source_holds
    }
}

fn trace_on_invariant_subspace(m: &QMatrix, basis: &[Vec<Q>]) -> Option<Q> {
    let mut t = Q::zero();
    for (i, b) in basis.iter().enumerate() {
        t += coordinates(basis, &m.mul_vec(b))?[i].clone();
    }
    Some(t)
}

/// `ε_t(λ) = (Tr(S²)/dim A_s)·ε` and
/// `ε_s(λ) = Σ_α Tr(S²|_{p_αA})/dim(p_αA_s)·(p_α⇀ε)` for the canonical `λ`.
pub fn counitals_of_lambda_check(a: &WeakHopfAlgebra, tol: &Tolerances, seed: u64) -> Result<CounitalsReport> {
    let connectivity = a.connectivity();
    if !connectivity.connected {
        return Err(WhaError::NotConnected);
    }
    let n = a.dim();
    let dual = a.dual_ref();
    let lambda = canonical_integral(a);
    let tr = a.trace_s2();
    let d = a.source_basis().len();
    let target_holds =
        dual.counital_target(&lambda) == vecops::scale(a.counit(), &(tr.clone() / Q::from_integer(d.into())));

    let src = source_blocks(a, tol, seed)?;
    let lhs = dual.counital_source(&lambda);
    let s2 = a.s_squared();
    let (source_holds, source_exact) = match &src.p_exact {
        Some(ps) => {
            let mut rhs = vec![Q::zero(); n];
            let mut ok = true;
            for (p, n_alpha) in ps.iter().zip(&src.n_alpha) {
                let block = column_space(&a.algebra().left_matrix(p));
                let Some(t) = trace_on_invariant_subspace(&s2, &block) else {
                    ok = false;
                    break;
                };
                let coef = t / Q::from_integer((n_alpha * n_alpha).into());
                for (g, r) in rhs.iter_mut().enumerate() {
                    *r += &coef * a.eps(&a.mul(&a.basis(g), p));
                }
            }
            (ok && rhs == lhs, true)
        }
        None => {
            let mut rhs = vec![C64::new(0.0, 0.0); n];
            for (p, n_alpha) in src.p.iter().zip(&src.n_alpha) {
                let t: C64 = lambda.iter().zip(p).map(|(l, x)| x * to_f64(l)).sum();
                let coef = t / (n_alpha * n_alpha) as f64;
                for (g, r) in rhs.iter_mut().enumerate() {
                    let gp = a.algebra().mul_c(&crate::algebra::to_c(&a.basis(g)), p);
                    let e: C64 = a.counit().iter().zip(&gp).map(|(c, x)| x * to_f64(c)).sum();
                    *r += coef * e;
                }
            }
            let ok = lhs.iter().zip(&rhs).all(|(x, y)| (C64::new(to_f64(x), 0.0) - y).norm() < tol.check());
            (ok, false)
        }
    };
    Ok(CounitalsReport { trace_s2: tr, d, target_holds, source_holds, source_exact, connectivity })
}
