use crate::algebra::Wedderburn;
use crate::error::{Result, WhaError};
use crate::integrals::canonical_integral;
use crate::numerics::rational::to_f64;
use crate::numerics::{coordinates, perron, round_int, QMatrix, Tolerances, C64, Q};
use crate::wha::WeakHopfAlgebra;
use num_traits::Zero;
use serde::Serialize;

/// `K₀(A)`: `χ_iχ_j = Σ_k n[i][j][k] χ_k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FusionRing {
    pub rank: usize,
    pub labels: Vec<String>,
    #[serde(rename = "N")]
    pub n: Vec<Vec<Vec<i64>>>,
    pub star: Vec<usize>,
    pub unit_label: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FusionChecks {
    pub nonnegative: bool,
    pub associative: bool,
    pub unit_law: bool,
    pub star_involution: bool,
    pub star_anti_automorphism: bool,
    pub duality: bool,
}

impl FusionChecks {
    pub fn passed(&self) -> bool {
        self.nonnegative
            && self.associative
            && self.unit_law
            && self.star_involution
            && self.star_anti_automorphism
            && self.duality
    }
}

impl FusionRing {
    /// Matrix of left multiplication by `χ_j` on the `χ`-basis.
    pub fn left_matrix(&self, j: usize) -> QMatrix {
        QMatrix::from_fn(self.rank, self.rank, |k, i| Q::from_integer(self.n[j][i][k].into()))
    }

    /// Product of two integer combinations of basis characters.
    pub fn product(&self, x: &[i64], y: &[i64]) -> Vec<i64> {
        let r = self.rank;
        let mut out = vec![0; r];
        for i in 0..r {
            for j in 0..r {
                if x[i] == 0 || y[j] == 0 {
                    continue;
                }
                for k in 0..r {
                    out[k] += x[i] * y[j] * self.n[i][j][k];
                }
            }
        }
        out
    }

    pub fn checks(&self) -> FusionChecks {
        let r = self.rank;
        let n = &self.n;
        let u = self.unit_label;
        let s = &self.star;
        let idx = || (0..r).flat_map(move |i| (0..r).map(move |j| (i, j)));
        let nonnegative = n.iter().flatten().flatten().all(|&x| x >= 0);
        let associative = idx().all(|(i, j)| {
            (0..r).all(|k| {
                (0..r).all(|l| {
                    let lhs: i64 = (0..r).map(|m| n[i][j][m] * n[m][k][l]).sum();
                    let rhs: i64 = (0..r).map(|m| n[j][k][m] * n[i][m][l]).sum();
                    lhs == rhs
                })
            })
        });
        let delta = |a: usize, b: usize| i64::from(a == b);
        let unit_law = idx().all(|(j, k)| n[u][j][k] == delta(j, k) && n[j][u][k] == delta(j, k));
        let star_involution = (0..r).all(|i| s[s[i]] == i) && s[u] == u;
        let star_anti_automorphism = idx().all(|(i, j)| (0..r).all(|k| n[s[i]][s[j]][s[k]] == n[j][i][k]));
        let duality = idx().all(|(i, j)| n[i][s[j]][u] == delta(i, j));
        FusionChecks { nonnegative, associative, unit_law, star_involution, star_anti_automorphism, duality }
    }
}

/// Character of the trivial module `A_t` with action `h·z = ε_t(hz)`, exactly.
pub fn trivial_character(a: &WeakHopfAlgebra) -> Result<Vec<Q>> {
    let basis = a.target_basis();
    (0..a.dim())
        .map(|h| {
            let e = a.basis(h);
            let mut tr = Q::zero();
            for (i, b) in basis.iter().enumerate() {
                let img = a.counital_target(&a.mul(&e, b));
                let c = coordinates(basis, &img).ok_or_else(|| WhaError::Internal("A_t not stable".into()))?;
                tr += &c[i];
            }
            Ok(tr)
        })
        .collect()
}

fn close(x: &[C64], y: &[C64], eps: f64) -> bool {
    x.iter().zip(y).all(|(a, b)| (a - b).norm() < eps)
}

/// Fusion ring from the Wedderburn data of a connected semisimple algebra.
pub fn fusion_ring(a: &WeakHopfAlgebra, w: &Wedderburn, tol: &Tolerances) -> Result<FusionRing> {
    if !a.connectivity().connected {
        return Err(WhaError::NotConnected);
    }
    let n = a.dim();
    let r = w.len();
    // T_k[a][b] = Σ_h z_k[h] Δ_h^{ab}
    let mut n_tensor = vec![vec![vec![0i64; r]; r]; r];
    for k in 0..r {
        let z = &w.blocks[k].idempotent;
        let mut t = vec![C64::new(0.0, 0.0); n * n];
        for (h, zh) in z.iter().enumerate() {
            if zh.norm() == 0.0 {
                continue;
            }
            for (x, y, v) in a.comult_basis(h) {
                t[x * n + y] += zh * to_f64(v);
            }
        }
        let dim_v = w.blocks[k].dim_v as f64;
        for i in 0..r {
            let ci = &w.blocks[i].character;
            // u = ci^T T
            let mut u = vec![C64::new(0.0, 0.0); n];
            for x in 0..n {
                if ci[x].norm() == 0.0 {
                    continue;
                }
                for y in 0..n {
                    u[y] += ci[x] * t[x * n + y];
                }
            }
            for j in 0..r {
                let phi: C64 = u.iter().zip(&w.blocks[j].character).map(|(p, q)| p * q).sum();
                n_tensor[i][j][k] = round_int(phi / dim_v, tol)?;
            }
        }
    }
    let eps = 1e3 * tol.check();
    let sm = a.antipode();
    let star = (0..r)
        .map(|j| {
            let chi = &w.blocks[j].character;
            let cs: Vec<C64> = (0..n)
                .map(|h| (0..n).filter(|&i| !sm[(i, h)].is_zero()).map(|i| chi[i] * to_f64(&sm[(i, h)])).sum())
                .collect();
            (0..r)
                .find(|&k| close(&w.blocks[k].character, &cs, eps))
                .ok_or_else(|| WhaError::Internal(format!("dual of block {j} not found")))
        })
        .collect::<Result<Vec<usize>>>()?;
    let unit = (0..r).find(|&u| {
        (0..r).all(|j| {
            (0..r).all(|k| {
                let d = i64::from(j == k);
                n_tensor[u][j][k] == d && n_tensor[j][u][k] == d
            })
        })
    });
    let u = unit.ok_or_else(|| WhaError::EquivalenceViolated("fusion ring has no unit object".into()))?;
    // cross-checks: the canonical integral of A* is detected only by χ_u, and χ_u is the trivial character
    let ell = canonical_integral(a.dual_ref());
    let hits: Vec<usize> = (0..r).filter(|&j| w.character_at(j, &ell).norm() > tol.int_round).collect();
    if hits != vec![u] {
        return Err(WhaError::EquivalenceViolated(format!(
            "unit object detection: fusion unit {u}, blocks detecting the dual canonical integral {hits:?}"
        )));
    }
    let triv: Vec<C64> = trivial_character(a)?.iter().map(|x| C64::new(to_f64(x), 0.0)).collect();
    if !close(&w.blocks[u].character, &triv, eps) {
        return Err(WhaError::EquivalenceViolated("fusion unit is not the trivial module".into()));
    }
    Ok(FusionRing { rank: r, labels: (1..=r).map(|j| format!("V{j}")).collect(), n: n_tensor, star, unit_label: u })
}

/// `f_j` = Perron root of `[χ_j]`.
pub fn fp_dimensions(f: &FusionRing, tol: &Tolerances) -> Result<Vec<f64>> {
    (0..f.rank).map(|j| Ok(perron(&f.left_matrix(j), tol)?.0)).collect()
}

/// `f_if_j = Σ_k N_{ij}^k f_k`, within `10·zero` relative to the magnitude.
pub fn fp_is_multiplicative(f: &FusionRing, dims: &[f64], tol: &Tolerances) -> bool {
    let r = f.rank;
    (0..r).all(|i| {
        (0..r).all(|j| {
            let rhs: f64 = (0..r).map(|k| f.n[i][j][k] as f64 * dims[k]).sum();
            (dims[i] * dims[j] - rhs).abs() <= tol.check() * rhs.abs().max(1.0)
        })
    })
}

/// `ρ = Σ_j f_jχ_j` as a row on `A`.
pub fn fp_character(w: &Wedderburn, dims: &[f64]) -> Vec<C64> {
    let n = w.blocks.first().map_or(0, |b| b.character.len());
    let mut rho = vec![C64::new(0.0, 0.0); n];
    for (b, f) in w.blocks.iter().zip(dims) {
        for (r, c) in rho.iter_mut().zip(&b.character) {
            *r += c * *f;
        }
    }
    rho
}
