//! Example weak Hopf algebras and file ingestion.

mod groupoid;

pub use groupoid::{FiniteGroup, FiniteGroupoid, GroupoidJson, Morphism, MorphismJson};

use crate::error::{Result, WhaError};
use crate::numerics::{q, QMatrix, Tensor3, Q};
use crate::wha::{WeakBialgebra, WeakHopfAlgebra, WhaFile};
use num_traits::{One, Zero};
use std::path::Path;

pub const DEFAULT_DIM_CAP: usize = 256;

pub fn check_cap(dim: usize, cap: usize) -> Result<()> {
    if dim > cap {
        Err(WhaError::DimCapExceeded { dim, cap })
    } else {
        Ok(())
    }
}

/// Groupoid algebra: `g·h = g∘h` or 0, `Δ(g) = g⊗g`, `ε(g) = 1`, `S(g) = g^{-1}`.
pub fn groupoid_algebra_unchecked(g: &FiniteGroupoid, label: &str) -> WeakHopfAlgebra {
    let n = g.len();
    let mut mult = Tensor3::zeros(n, n, n);
    for a in 0..n {
        for b in 0..n {
            if let Some(c) = g.compose(a, b) {
                mult.add_to(a, b, c, &Q::one());
            }
        }
    }
    let mut unit = vec![Q::zero(); n];
    for x in 0..g.objects().len() {
        unit[g.identity(x)] = Q::one();
    }
    let mut comult = Tensor3::zeros(n, n, n);
    for a in 0..n {
        comult.add_to(a, a, a, &Q::one());
    }
    let counit = vec![q(1); n];
    let s = QMatrix::from_fn(n, n, |i, j| if g.inverse(j) == i { Q::one() } else { Q::zero() });
    let core = WeakBialgebra::new(label, mult, unit, comult, counit).expect("consistent dimensions");
    WeakHopfAlgebra::from_parts_unchecked(core, s)
}

/// Validated groupoid algebra.
pub fn groupoid_algebra(g: &FiniteGroupoid, label: &str, cap: usize) -> Result<WeakHopfAlgebra> {
    check_cap(g.len(), cap)?;
    let a = groupoid_algebra_unchecked(g, label);
    if let Some(f) = a.verify_axioms().first_failure() {
        return Err(WhaError::AxiomViolation(f.name.clone()));
    }
    Ok(a)
}

/// `pair(n)`: algebra of the pair groupoid, isomorphic to `M_n`.
pub fn pair(n: usize) -> Result<WeakHopfAlgebra> {
    check_cap(n * n, DEFAULT_DIM_CAP)?;
    Ok(groupoid_algebra_unchecked(&FiniteGroupoid::pair_groupoid(n)?, &format!("pair({n})")))
}

/// `grp(G)` for `G` named `Z<n>` or `S<n>`.
pub fn grp(name: &str) -> Result<WeakHopfAlgebra> {
    let g = FiniteGroup::by_name(name)?;
    Ok(groupoid_algebra_unchecked(&FiniteGroupoid::from_group(&g)?, &format!("grp({})", g.name)))
}

/// `gpd(n, G)`: connected groupoid on `n` objects with vertex group `G`.
pub fn gpd(n: usize, group: &str) -> Result<WeakHopfAlgebra> {
    let g = FiniteGroup::by_name(group)?;
    check_cap(n * n * g.order(), DEFAULT_DIM_CAP)?;
    Ok(groupoid_algebra_unchecked(&FiniteGroupoid::connected_groupoid(n, &g)?, &format!("gpd({n},{})", g.name)))
}

/// `fun(G)`: the dual of `grp(G)`.
pub fn fun(name: &str) -> Result<WeakHopfAlgebra> {
    let a = grp(name)?;
    let label = a.label().replacen("grp", "fun", 1);
    Ok(a.dual().with_label(label))
}

/// Parses, checks the dimension cap and validates every axiom; a missing
/// antipode is solved for.
pub fn parse(text: &str, cap: usize) -> Result<WeakHopfAlgebra> {
    let file = WhaFile::parse(text)?;
    check_cap(file.dim, cap)?;
    file.into_algebra()
}

pub fn load(path: impl AsRef<Path>, cap: usize) -> Result<WeakHopfAlgebra> {
    parse(&read(path)?, cap)
}

/// Parses without checking axioms (for reporting on invalid inputs).
pub fn load_unchecked(path: impl AsRef<Path>, cap: usize) -> Result<(WeakBialgebra, Option<QMatrix>)> {
    let file = WhaFile::parse(&read(path)?)?;
    check_cap(file.dim, cap)?;
    file.into_parts()
}

pub fn read(path: impl AsRef<Path>) -> Result<String> {
    let p = path.as_ref();
    std::fs::read_to_string(p).map_err(|e| WhaError::Io(format!("{}: {e}", p.display())))
}

pub fn save(a: &WeakHopfAlgebra, path: impl AsRef<Path>) -> Result<()> {
    write(path, &a.to_json())
}

pub fn write(path: impl AsRef<Path>, text: &str) -> Result<()> {
    let p = path.as_ref();
    std::fs::write(p, format!("{text}\n")).map_err(|e| WhaError::Io(format!("{}: {e}", p.display())))
}

/// Builder examples by short name: `pair(n)`, `grp(G)`, `gpd(n,G)`, `fun(G)`,
/// `dual(X)`, `ds(X,Y)`.
pub fn by_name(spec: &str) -> Result<WeakHopfAlgebra> {
    let s = spec.replace(' ', "");
    let bad = || WhaError::InvalidParams(format!("unknown example {spec:?}"));
    let (head, args) = s.split_once('(').ok_or_else(bad)?;
    let args = args.strip_suffix(')').ok_or_else(bad)?;
    let split = split_top(args);
    match (head, split.as_slice()) {
        ("pair", [n]) => pair(n.parse().map_err(|_| bad())?),
        ("grp", [g]) => grp(g),
        ("fun", [g]) => fun(g),
        ("gpd", [n, g]) => gpd(n.parse().map_err(|_| bad())?, g),
        ("dual", [x]) => Ok(by_name(x)?.dual()),
        ("ds", [x, y]) => Ok(by_name(x)?.direct_sum(&by_name(y)?)),
        _ => Err(bad()),
    }
}

fn split_top(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// The acceptance example list: groupoid algebras, their duals and two direct sums.
pub fn standard_examples() -> Vec<WeakHopfAlgebra> {
    let base = ["pair(2)", "pair(3)", "grp(Z2)", "grp(Z3)", "grp(S3)", "gpd(2,Z2)"];
    let mut out: Vec<WeakHopfAlgebra> = base.iter().map(|s| by_name(s).expect("builtin")).collect();
    let duals: Vec<WeakHopfAlgebra> = out.iter().map(|a| a.dual()).collect();
    out.extend(duals);
    out.push(by_name("ds(grp(Z2),grp(Z2))").expect("builtin"));
    out.push(by_name("ds(pair(2),grp(Z3))").expect("builtin"));
    out
}
