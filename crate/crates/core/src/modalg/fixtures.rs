//! Example module and comodule algebras.

use super::{ComoduleAlgebra, ModuleAlgebra};
use crate::algebra::{matrix_algebra, Algebra};
use crate::builders::{self, FiniteGroup};
use crate::error::{Result, WhaError};
use crate::integrals::Side;
use crate::numerics::{coordinates, q, vecops, Tensor3, Q};
use crate::wha::WeakHopfAlgebra;
use num_traits::{One, Zero};

fn tensor_from(
    d1: usize,
    d2: usize,
    d3: usize,
    entries: impl IntoIterator<Item = (usize, usize, usize, Q)>,
) -> Tensor3 {
    let mut t = Tensor3::zeros(d1, d2, d3);
    for (i, j, k, v) in entries {
        t.add_to(i, j, k, &v);
    }
    t
}

/// `k[x]/(x²)` on the basis `(1, x)`.
pub fn dual_numbers() -> Algebra {
    let mult = tensor_from(2, 2, 2, [(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1))]);
    Algebra::new(mult, vec![q(1), q(0)])
}

/// Upper-triangular 2×2 matrices on the basis `(e11, e12, e22)`.
pub fn upper_triangular() -> Algebra {
    let mult = tensor_from(3, 3, 3, [(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 2, 1, q(1)), (2, 2, 2, q(1))]);
    Algebra::new(mult, vec![q(1), q(0), q(1)])
}

/// `k[x,y]/(x,y)²` on the basis `(1, x, y)`.
pub fn square_zero_plane() -> Algebra {
    let mult =
        tensor_from(3, 3, 3, [(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1)), (0, 2, 2, q(1)), (2, 0, 2, q(1))]);
    Algebra::new(mult, vec![q(1), q(0), q(0)])
}

/// `grp(Z2)` acting on `k[x]/(x²)` by `x ↦ −x`.
pub fn dual_numbers_sign() -> Result<(WeakHopfAlgebra, ModuleAlgebra)> {
    let a = builders::grp("Z2")?;
    let action = tensor_from(2, 2, 2, [(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 0, q(1)), (1, 1, 1, q(-1))]);
    Ok((a, ModuleAlgebra::new("k[x]/(x^2) with sign action", dual_numbers(), action, Side::Left)?))
}

/// Action through the counit, `h·m = ε(h)m`; a module algebra when `A` is a Hopf algebra.
pub fn trivial_action(a: &WeakHopfAlgebra, alg: Algebra, label: &str) -> Result<ModuleAlgebra> {
    let d = alg.dim();
    let action = tensor_from(
        a.dim(),
        d,
        d,
        (0..a.dim()).flat_map(|h| (0..d).map(move |i| (h, i, i))).map(|(h, i, j)| (h, i, j, a.counit()[h].clone())),
    );
    ModuleAlgebra::new(label, alg, action, Side::Left)
}

/// `grp(S3)` acting on `k[x,y]/(x,y)²` through the standard representation on `span{x, y}`.
pub fn square_zero_standard() -> Result<(WeakHopfAlgebra, ModuleAlgebra)> {
    let g = FiniteGroup::symmetric(3)?;
    let a = builders::grp("S3")?;
    let mut entries = Vec::new();
    for (h, label) in g.labels.iter().enumerate() {
        let sigma: Vec<usize> = label.chars().map(|c| c.to_digit(10).unwrap() as usize - 1).collect();
        entries.push((h, 0, 0, q(1)));
        // x = e0 − e1, y = e1 − e2; a sum-zero vector Σ a_i e_i is a0·x + (a0 + a1)·y
        for (col, (p, r)) in [(1usize, (0usize, 1usize)), (2, (1, 2))] {
            let mut v = [0i64; 3];
            v[sigma[p]] += 1;
            v[sigma[r]] -= 1;
            entries.push((h, col, 1, q(v[0])));
            entries.push((h, col, 2, q(v[0] + v[1])));
        }
    }
    let action = tensor_from(6, 3, 3, entries);
    Ok((a, ModuleAlgebra::new("k[x,y]/(x,y)^2 with standard action", square_zero_plane(), action, Side::Left)?))
}

/// `A_t` with `h·z = ε_t(hz)`, on the basis `a.target_basis()`.
pub fn target_module(a: &WeakHopfAlgebra) -> Result<ModuleAlgebra> {
    let basis = a.target_basis().to_vec();
    let alg = a.algebra().subalgebra(&basis)?;
    let d = basis.len();
    let coords = |v: &[Q]| coordinates(&basis, v).ok_or_else(|| WhaError::Internal("A_t not closed".into()));
    let mut entries = Vec::new();
    for h in 0..a.dim() {
        for (i, z) in basis.iter().enumerate() {
            for (j, c) in coords(&a.counital_target(&a.mul(&a.basis(h), z)))?.into_iter().enumerate() {
                entries.push((h, i, j, c));
            }
        }
    }
    ModuleAlgebra::new("A_t", alg, tensor_from(a.dim(), d, d, entries), Side::Left)
}

/// `A_t` with `δ = Δ|_{A_t}`.
pub fn target_comodule(a: &WeakHopfAlgebra) -> Result<ComoduleAlgebra> {
    let basis = a.target_basis().to_vec();
    let alg = a.algebra().subalgebra(&basis)?;
    let d = basis.len();
    let mut entries = Vec::new();
    for (i, z) in basis.iter().enumerate() {
        // Δ(z) = Σ c^{h,k} e_h ⊗ e_k with the right legs in A_t
        let dz = a.comul(z);
        for h in 0..a.dim() {
            let right: Vec<Q> = (0..a.dim()).map(|k| dz.get(&(h, k)).cloned().unwrap_or_else(Q::zero)).collect();
            if vecops::is_zero(&right) {
                continue;
            }
            let c = coordinates(&basis, &right).ok_or_else(|| WhaError::Internal("Δ(A_t) ⊄ A⊗A_t".into()))?;
            for (j, v) in c.into_iter().enumerate() {
                entries.push((i, h, j, v));
            }
        }
    }
    ComoduleAlgebra::new("A_t", alg, tensor_from(d, a.dim(), d, entries))
}

/// Elements of the cyclic subgroup generated by the first element of order `k`.
pub fn cyclic_subgroup(g: &FiniteGroup, k: usize) -> Result<Vec<usize>> {
    let order = |x: usize| {
        let mut y = x;
        let mut n = 1;
        while y != 0 {
            y = g.table[y][x];
            n += 1;
        }
        n
    };
    let gen = (0..g.order())
        .find(|&x| order(x) == k)
        .ok_or_else(|| WhaError::InvalidParams(format!("{} has no element of order {k}", g.name)))?;
    let mut h = vec![0];
    let mut y = gen;
    while y != 0 {
        h.push(y);
        y = g.table[y][gen];
    }
    h.sort_unstable();
    Ok(h)
}

/// `k[H] ⊂ grp(G)` with `δ(h) = h⊗h`.
pub fn subgroup_comodule(group: &str, k: usize) -> Result<(WeakHopfAlgebra, ComoduleAlgebra)> {
    let g = FiniteGroup::by_name(group)?;
    let a = builders::grp(group)?;
    let h = cyclic_subgroup(&g, k)?;
    let pos = |x: usize| h.iter().position(|&y| y == x).expect("closed subgroup");
    let d = h.len();
    let mult = tensor_from(
        d,
        d,
        d,
        (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).map(|(i, j)| (i, j, pos(g.table[h[i]][h[j]]), q(1))),
    );
    let coaction = tensor_from(d, g.order(), d, (0..d).map(|i| (i, h[i], i, q(1))));
    let m =
        ComoduleAlgebra::new(format!("k[Z{k}] in k[{}]", g.name), Algebra::new(mult, vecops::unit(d, 0)), coaction)?;
    Ok((a, m))
}

/// `k^{G/H}` over `fun(G)` with `δ(δ_x) = Σ_g δ_g ⊗ δ_{g^{-1}x}`, for the left cosets of a cyclic `H` of order `k`.
pub fn coset_comodule(group: &str, k: usize) -> Result<(WeakHopfAlgebra, ComoduleAlgebra)> {
    let g = FiniteGroup::by_name(group)?;
    let a = builders::fun(group)?;
    let h = cyclic_subgroup(&g, k)?;
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for x in 0..g.order() {
        let mut c: Vec<usize> = h.iter().map(|&y| g.table[x][y]).collect();
        c.sort_unstable();
        if !cosets.contains(&c) {
            cosets.push(c);
        }
    }
    let coset_of = |x: usize| cosets.iter().position(|c| c.contains(&x)).expect("cosets partition G");
    let d = cosets.len();
    let mult = tensor_from(d, d, d, (0..d).map(|i| (i, i, i, q(1))));
    let mut entries = Vec::new();
    for (x, c) in cosets.iter().enumerate() {
        for gi in 0..g.order() {
            let y = coset_of(g.table[g.inverse(gi)][c[0]]);
            entries.push((x, gi, y, q(1)));
        }
    }
    let m = ComoduleAlgebra::new(
        format!("k^({}/Z{k})", g.name),
        Algebra::new(mult, vec![Q::one(); d]),
        tensor_from(d, g.order(), d, entries),
    )?;
    Ok((a, m))
}

/// `M_2(k)` with the trivial action of `grp(Z2)`; a semisimple example.
pub fn matrix_trivial() -> Result<(WeakHopfAlgebra, ModuleAlgebra)> {
    let a = builders::grp("Z2")?;
    let m = trivial_action(&a, matrix_algebra(2), "M_2 with trivial action")?;
    Ok((a, m))
}

/// A named fixture: the acting algebra and either a module or a comodule algebra.
pub enum Fixture {
    Module(WeakHopfAlgebra, ModuleAlgebra),
    Comodule(WeakHopfAlgebra, ComoduleAlgebra),
}

/// `dual-numbers`, `square-zero-std`, `upper-triangular`, `matrix-trivial`, `target(X)`, `target-comodule(X)`,
/// `subgroup(G,k)`, `cosets(G,k)`.
pub fn by_name(spec: &str) -> Result<Fixture> {
    let spec = spec.trim();
    let bad = || WhaError::InvalidParams(format!("unknown fixture {spec:?}"));
    let args = |s: &str| -> Option<String> { s.strip_suffix(')').map(str::to_string) };
    let group_k = |rest: &str| -> Result<(String, usize)> {
        let (g, k) = rest.split_once(',').ok_or_else(bad)?;
        Ok((g.trim().to_string(), k.trim().trim_start_matches('Z').parse().map_err(|_| bad())?))
    };
    Ok(match spec {
        "dual-numbers" => {
            let (a, m) = dual_numbers_sign()?;
            Fixture::Module(a, m)
        }
        "square-zero-std" => {
            let (a, m) = square_zero_standard()?;
            Fixture::Module(a, m)
        }
        "upper-triangular" => {
            let a = builders::grp("Z2")?;
            let m = trivial_action(&a, upper_triangular(), "upper triangular with trivial action")?;
            Fixture::Module(a, m)
        }
        "matrix-trivial" => {
            let (a, m) = matrix_trivial()?;
            Fixture::Module(a, m)
        }
        _ => {
            if let Some(rest) = spec.strip_prefix("target-comodule(").and_then(args) {
                let a = builders::by_name(&rest)?;
                let m = target_comodule(&a)?;
                Fixture::Comodule(a, m)
            } else if let Some(rest) = spec.strip_prefix("target(").and_then(args) {
                let a = builders::by_name(&rest)?;
                let m = target_module(&a)?;
                Fixture::Module(a, m)
            } else if let Some(rest) = spec.strip_prefix("subgroup(").and_then(args) {
                let (g, k) = group_k(&rest)?;
                let (a, m) = subgroup_comodule(&g, k)?;
                Fixture::Comodule(a, m)
            } else if let Some(rest) = spec.strip_prefix("cosets(").and_then(args) {
                let (g, k) = group_k(&rest)?;
                let (a, m) = coset_comodule(&g, k)?;
                Fixture::Comodule(a, m)
            } else {
                return Err(bad());
            }
        }
    })
}
