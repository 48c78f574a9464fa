use crate::algebra::Algebra;
use crate::error::Result;
use crate::numerics::rational::rationalize;
use crate::numerics::{Tolerances, C64, Q};
use crate::wha::WeakHopfAlgebra;
use num_traits::Zero;

/// Simple blocks of the source base `A_s`.
#[derive(Debug, Clone)]
pub struct SourceBlocks {
    /// Primitive central idempotents `p_α` of `A_s`, in `A` coordinates.
    pub p: Vec<Vec<C64>>,
    /// The same idempotents when all are rational (checked exactly).
    pub p_exact: Option<Vec<Vec<Q>>>,
    /// Matrix sizes `n_α` of the blocks of `A_s`.
    pub n_alpha: Vec<usize>,
}

fn try_rational(v: &[C64], tol: &Tolerances) -> Option<Vec<Q>> {
    v.iter()
        .map(|z| if z.im.abs() > tol.int_round { None } else { rationalize(z.re, 1_000_000, 1e3 * tol.zero) })
        .collect()
}

fn exact_block_idempotents(alg: &Algebra, cand: &[Vec<Q>]) -> bool {
    let n = alg.dim();
    let mut sum = vec![Q::zero(); n];
    for (i, p) in cand.iter().enumerate() {
        if alg.mul(p, p) != *p {
            return false;
        }
        for q in &cand[i + 1..] {
            if alg.mul(p, q).iter().any(|x| !x.is_zero()) {
                return false;
            }
        }
        for (s, x) in sum.iter_mut().zip(p) {
            *s += x;
        }
    }
    sum == alg.unit()
}

pub fn source_blocks(a: &WeakHopfAlgebra, tol: &Tolerances, seed: u64) -> Result<SourceBlocks> {
    let src = a.source_basis();
    let sub = a.algebra().subalgebra(src)?;
    let w = sub.wedderburn(tol, seed)?;
    let n = a.dim();
    let p: Vec<Vec<C64>> = w
        .blocks
        .iter()
        .map(|b| {
            let mut v = vec![C64::new(0.0, 0.0); n];
            for (c, coef) in b.idempotent.iter().enumerate() {
                for (k, x) in src[c].iter().enumerate() {
                    if !x.is_zero() {
                        v[k] += coef * crate::numerics::rational::to_f64(x);
                    }
                }
            }
            v
        })
        .collect();
    let cand: Option<Vec<Vec<Q>>> = p.iter().map(|v| try_rational(v, tol)).collect();
    let p_exact = cand.filter(|c| {
        exact_block_idempotents(a.algebra(), c)
            && c.iter().all(|x| crate::algebra::contains(src, x))
            && c.iter().all(|x| src.iter().all(|y| a.mul(x, y) == a.mul(y, x)))
    });
    Ok(SourceBlocks { p, p_exact, n_alpha: w.dims() })
}
