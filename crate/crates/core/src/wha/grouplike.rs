use super::{add_into, Tens2, WeakHopfAlgebra};
use crate::error::{Result, WhaError};
use crate::numerics::{q, q_nullspace, vecops, QMatrix, Q};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GroupLike {
    #[serde(serialize_with = "crate::numerics::rational::ser_qvec")]
    pub element: Vec<Q>,
    #[serde(serialize_with = "crate::numerics::rational::ser_qvec")]
    pub inverse: Vec<Q>,
    /// `y ∈ A_s` with `g = yS(y)^{-1}`, when `g` is trivial.
    #[serde(serialize_with = "crate::numerics::rational::ser_opt_qvec")]
    pub trivial_witness: Option<Vec<Q>>,
}

fn outer(x: &[Q], y: &[Q]) -> Tens2 {
    let mut t = Tens2::new();
    for (a, u) in x.iter().enumerate().filter(|(_, u)| !u.is_zero()) {
        for (b, v) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            add_into(&mut t, (a, b), u * v);
        }
    }
    t
}

impl WeakHopfAlgebra {
    /// `g` is invertible and `Δ(g) = (g⊗g)Δ(1) = Δ(1)(g⊗g)`.
    pub fn is_grouplike(&self, g: &[Q]) -> bool {
        if self.algebra().inverse(g).is_none() {
            return false;
        }
        let gg = outer(g, g);
        let dg = self.comul(g);
        dg == self.mul2(&gg, self.delta_one()) && dg == self.mul2(self.delta_one(), &gg)
    }

    pub fn grouplike(&self, g: &[Q]) -> Result<GroupLike> {
        let inverse = self.algebra().inverse(g).ok_or(WhaError::NotInvertible)?;
        if !self.is_grouplike(g) {
            return Err(WhaError::InvalidParams("element is not group-like".into()));
        }
        let trivial_witness = self.is_trivial(g);
        Ok(GroupLike { element: g.to_vec(), inverse, trivial_witness })
    }

    /// `yS(y)^{-1}` for an invertible `y ∈ A_s`.
    pub fn trivial_grouplike(&self, y: &[Q]) -> Result<GroupLike> {
        if !crate::algebra::contains(self.source_basis(), y) {
            return Err(WhaError::InvalidParams("element is not in the source base".into()));
        }
        let sy_inv = self.algebra().inverse(&self.s(y)).ok_or(WhaError::NotInvertible)?;
        let g = self.mul(y, &sy_inv);
        let inverse = self.algebra().inverse(&g).ok_or(WhaError::NotInvertible)?;
        Ok(GroupLike { element: g, inverse, trivial_witness: Some(y.to_vec()) })
    }

    /// An invertible `y ∈ A_s` with `y = gS(y)`, if one exists.
    pub fn is_trivial(&self, g: &[Q]) -> Option<Vec<Q>> {
        let n = self.dim();
        let src = self.source_basis();
        let cols: Vec<Vec<Q>> = src.iter().map(|b| vecops::sub(b, &self.mul(g, &self.s(b)))).collect();
        let kernel = q_nullspace(&QMatrix::from_columns(&cols, n));
        if kernel.is_empty() {
            return None;
        }
        let sols: Vec<Vec<Q>> = kernel.iter().map(|k| vecops::combine(k, src, n)).collect();
        let invertible = |y: &Vec<Q>| self.algebra().inverse(y).is_some();
        if let Some(y) = sols.iter().find(|y| invertible(y)) {
            return Some(y.clone());
        }
        // invertibility is a nonvanishing determinant, so a generic combination works if any does
        let mut rng = ChaCha8Rng::seed_from_u64(0x5452_4956);
        for _ in 0..16 {
            let coeffs: Vec<Q> = (0..sols.len()).map(|_| q(rng.gen_range(1..=1000))).collect();
            let y = vecops::combine(&coeffs, &sols, n);
            if invertible(&y) {
                return Some(y);
            }
        }
        None
    }
}
