use super::{add_into, Tens2, Tens3, WeakBialgebra, WeakHopfAlgebra};
use crate::numerics::{vecops, Q};
use num_traits::Zero;
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomCheck {
    pub name: String,
    pub passed: bool,
    /// First failing basis tuple.
    pub witness: Option<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomReport {
    pub checks: Vec<AxiomCheck>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &str, witness: Option<Vec<usize>>) -> AxiomCheck {
    AxiomCheck { name: name.to_string(), passed: witness.is_none(), witness }
}

fn embed_left(x: &Tens2, n: usize, unit: &[Q]) -> Tens3 {
    // x ⊗ 1
    let mut out = Tens3::new();
    for ((a, b), v) in x {
        for c in 0..n {
            add_into(&mut out, (*a, *b, c), v * &unit[c]);
        }
    }
    out
}

fn embed_right(x: &Tens2, n: usize, unit: &[Q]) -> Tens3 {
    // 1 ⊗ x
    let mut out = Tens3::new();
    for ((b, c), v) in x {
        for a in 0..n {
            add_into(&mut out, (a, *b, *c), v * &unit[a]);
        }
    }
    out
}

impl WeakBialgebra {
    fn coassociativity_failure(&self) -> Option<usize> {
        (0..self.dim()).find(|&i| {
            let mut diff = Tens3::new();
            for (j, k, v) in self.comult_basis(i) {
                for (a, b, w) in self.comult_basis(j) {
                    add_into(&mut diff, (a, b, k), v * w);
                }
                for (b, c, w) in self.comult_basis(k) {
                    add_into(&mut diff, (j, b, c), -(v * w));
                }
            }
            !diff.is_empty()
        })
    }

    fn counit_failure(&self) -> Option<usize> {
        let n = self.dim();
        (0..n).find(|&i| {
            let mut left = vec![Q::zero(); n];
            let mut right = vec![Q::zero(); n];
            for (j, k, v) in self.comult_basis(i) {
                left[k] += v * &self.counit[j];
                right[j] += v * &self.counit[k];
            }
            let e = vecops::unit(n, i);
            left != e || right != e
        })
    }

    fn multiplicativity_failure(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        let deltas: Vec<Tens2> = (0..n).map(|i| self.comul(&vecops::unit(n, i))).collect();
        for i in 0..n {
            for j in 0..n {
                let mut lhs = Tens2::new();
                for (k, m) in self.alg.basis_product(i, j) {
                    for (key, v) in &deltas[*k] {
                        add_into(&mut lhs, *key, m * v);
                    }
                }
                if lhs != self.mul2(&deltas[i], &deltas[j]) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `(Δ⊗id)Δ(1) = (Δ(1)⊗1)(1⊗Δ(1)) = (1⊗Δ(1))(Δ(1)⊗1)`.
    fn weak_unit_holds(&self) -> bool {
        let n = self.dim();
        let d1 = self.delta_one();
        let mut lhs = Tens3::new();
        for ((j, k), v) in d1 {
            for (a, b, w) in self.comult_basis(*j) {
                add_into(&mut lhs, (a, b, *k), v * w);
            }
        }
        let l = embed_left(d1, n, self.unit());
        let r = embed_right(d1, n, self.unit());
        lhs == self.mul3(&l, &r) && lhs == self.mul3(&r, &l)
    }

    /// `ε(fgh) = ε(fg₁)ε(g₂h) = ε(fg₂)ε(g₁h)`; first failing `(f,g,h)`.
    fn weak_counit_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.dim();
        let e: Vec<Vec<Q>> = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| {
                        self.alg.basis_product(a, b).iter().fold(Q::zero(), |acc, (k, v)| acc + v * &self.counit[*k])
                    })
                    .collect()
            })
            .collect();
        for g in 0..n {
            let dg: Vec<(usize, usize, Q)> = self.comult_basis(g).map(|(a, b, v)| (a, b, v.clone())).collect();
            for f in 0..n {
                let fg = self.alg.basis_product(f, g);
                for h in 0..n {
                    let lhs = fg.iter().fold(Q::zero(), |acc, (k, v)| acc + v * &e[*k][h]);
                    let mut m1 = Q::zero();
                    let mut m2 = Q::zero();
                    for (a, b, v) in &dg {
                        if !e[f][*a].is_zero() && !e[*b][h].is_zero() {
                            m1 += v * &e[f][*a] * &e[*b][h];
                        }
                        if !e[f][*b].is_zero() && !e[*a][h].is_zero() {
                            m2 += v * &e[f][*b] * &e[*a][h];
                        }
                    }
                    if lhs != m1 || lhs != m2 {
                        return Some((f, g, h));
                    }
                }
            }
        }
        None
    }

    /// Algebra, coalgebra, multiplicativity and weak unit/counit axioms.
    pub fn verify_bialgebra_axioms(&self) -> AxiomReport {
        let assoc = self.alg.associativity_failure().map(|(i, j, k)| vec![i, j, k]);
        let unit = self.alg.unit_failure().map(|i| vec![i]);
        let coassoc = self.coassociativity_failure().map(|i| vec![i]);
        let counit = self.counit_failure().map(|i| vec![i]);
        let mult = self.multiplicativity_failure().map(|(i, j)| vec![i, j]);
        let wu = if self.weak_unit_holds() { None } else { Some(vec![]) };
        let wc = self.weak_counit_failure().map(|(f, g, h)| vec![f, g, h]);
        AxiomReport {
            checks: vec![
                check("associativity", assoc),
                check("unit", unit),
                check("coassociativity", coassoc),
                check("counit", counit),
                check("comultiplicativity", mult),
                check("weak unit", wu),
                check("weak counit", wc),
            ],
        }
    }
}

impl WeakHopfAlgebra {
    /// Failing basis index for `h₁S(h₂) = ε_t(h)`.
    fn antipode_target_failure(&self) -> Option<usize> {
        let n = self.dim();
        (0..n).find(|&i| {
            let mut acc = vec![Q::zero(); n];
            for (a, b, v) in self.comult_basis(i) {
                let p = self.mul(&self.basis(a), &self.s(&self.basis(b)));
                acc = vecops::add(&acc, &vecops::scale(&p, v));
            }
            acc != self.counital_target(&self.basis(i))
        })
    }

    /// Failing basis index for `S(h₁)h₂ = ε_s(h)`.
    fn antipode_source_failure(&self) -> Option<usize> {
        let n = self.dim();
        (0..n).find(|&i| {
            let mut acc = vec![Q::zero(); n];
            for (a, b, v) in self.comult_basis(i) {
                let p = self.mul(&self.s(&self.basis(a)), &self.basis(b));
                acc = vecops::add(&acc, &vecops::scale(&p, v));
            }
            acc != self.counital_source(&self.basis(i))
        })
    }

    /// Failing basis index for `S(h₁)h₂S(h₃) = S(h)`.
    fn antipode_failure(&self) -> Option<usize> {
        let n = self.dim();
        (0..n).find(|&i| {
            let mut acc = vec![Q::zero(); n];
            for (a, c, v) in self.comult_basis(i) {
                for (x, y, w) in self.comult_basis(a) {
                    let p = self.mul(&self.mul(&self.s(&self.basis(x)), &self.basis(y)), &self.s(&self.basis(c)));
                    acc = vecops::add(&acc, &vecops::scale(&p, &(v * w)));
                }
            }
            acc != self.s(&self.basis(i))
        })
    }

    /// Every axiom, checked exactly over all basis tuples.
    pub fn verify_axioms(&self) -> AxiomReport {
        let mut rep = self.verify_bialgebra_axioms();
        let t = self.antipode_target_failure().map(|i| vec![i]);
        let s = self.antipode_source_failure().map(|i| vec![i]);
        let a = self.antipode_failure().map(|i| vec![i]);
        let inv = if self.s_inverse_matrix().is_some() { None } else { Some(vec![]) };
        rep.checks.push(check("antipode target", t));
        rep.checks.push(check("antipode source", s));
        rep.checks.push(check("antipode", a));
        rep.checks.push(check("antipode invertible", inv));
        rep
    }

    /// Failing basis pair for `S(gh) = S(h)S(g)` or `Δ(S(h)) = (S⊗S)Δ^{op}(h)`.
    pub fn anti_homomorphism_failure(&self) -> Option<(usize, usize)> {
        let n = self.dim();
        for g in 0..n {
            for h in 0..n {
                let lhs = self.s(&self.mul(&self.basis(g), &self.basis(h)));
                let rhs = self.mul(&self.s(&self.basis(h)), &self.s(&self.basis(g)));
                if lhs != rhs {
                    return Some((g, h));
                }
            }
        }
        for h in 0..n {
            let lhs = self.comul(&self.s(&self.basis(h)));
            let mut rhs = Tens2::new();
            for (a, b, v) in self.comult_basis(h) {
                let sb = self.s(&self.basis(b));
                let sa = self.s(&self.basis(a));
                for (p, x) in sb.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                    for (q, y) in sa.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                        add_into(&mut rhs, (p, q), v * x * y);
                    }
                }
            }
            if lhs != rhs {
                return Some((h, h));
            }
        }
        None
    }
}
