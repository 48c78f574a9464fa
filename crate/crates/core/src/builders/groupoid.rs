use crate::error::{Result, WhaError};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    pub id: String,
    pub src: usize,
    pub tgt: usize,
}

/// A finite groupoid. `compose(g, h)` is `g∘h`, defined iff `src(g) = tgt(h)`.
/// Morphisms are kept sorted by `(src, tgt, local index)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupoid {
    objects: Vec<String>,
    morphisms: Vec<Morphism>,
    compose: Vec<Option<usize>>,
    inverse: Vec<usize>,
    identity: Vec<usize>,
}

fn invalid(msg: impl Into<String>) -> WhaError {
    WhaError::InvalidGroupoid(msg.into())
}

/// A finite group as a multiplication table with `0` the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    pub name: String,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl FiniteGroup {
    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn inverse(&self, g: usize) -> usize {
        (0..self.order()).find(|&h| self.table[g][h] == 0).expect("group element has an inverse")
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(invalid("cyclic group order must be at least 1"));
        }
        Ok(FiniteGroup {
            name: format!("Z{n}"),
            labels: (0..n).map(|k| if k == 0 { "e".into() } else { format!("g{k}") }).collect(),
            table: (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect(),
        })
    }

    /// Permutations of `{1..n}` in lexicographic one-line order; product is composition `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Result<Self> {
        if !(1..=4).contains(&n) {
            return Err(invalid("symmetric group degree must be between 1 and 4"));
        }
        let mut perms: Vec<Vec<usize>> = vec![(0..n).collect()];
        loop {
            let mut p = perms.last().unwrap().clone();
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else { break };
            let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
            p.swap(i, j);
            p[i + 1..].reverse();
            perms.push(p);
        }
        let index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index[&t.iter().map(|&x| s[x]).collect::<Vec<_>>()]).collect())
            .collect();
        let labels = perms.iter().map(|p| p.iter().map(|x| (x + 1).to_string()).collect::<String>()).collect();
        Ok(FiniteGroup { name: format!("S{n}"), labels, table })
    }

    /// Parses `Z<n>` or `S<n>`.
    pub fn by_name(name: &str) -> Result<Self> {
        let bad = || WhaError::InvalidParams(format!("unknown group {name:?}; expected Z<n> or S<n>"));
        let (kind, rest) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
        let n: usize = rest.parse().map_err(|_| bad())?;
        match kind {
            "Z" | "C" => Self::cyclic(n),
            "S" => Self::symmetric(n),
            _ => Err(bad()),
        }
    }
}

impl FiniteGroupoid {
    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn len(&self) -> usize {
        self.morphisms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.morphisms.is_empty()
    }

    pub fn compose(&self, g: usize, h: usize) -> Option<usize> {
        self.compose[g * self.len() + h]
    }

    pub fn inverse(&self, g: usize) -> usize {
        self.inverse[g]
    }

    pub fn identity(&self, x: usize) -> usize {
        self.identity[x]
    }

    /// Validates the groupoid axioms and sorts morphisms by `(src, tgt, position)`.
    pub fn new(
        objects: Vec<String>,
        morphisms: Vec<Morphism>,
        compose: &HashMap<(usize, usize), usize>,
    ) -> Result<Self> {
        let m = morphisms.len();
        if objects.is_empty() {
            return Err(invalid("no objects"));
        }
        if let Some(g) = morphisms.iter().find(|g| g.src >= objects.len() || g.tgt >= objects.len()) {
            return Err(invalid(format!("morphism {} has an unknown endpoint", g.id)));
        }
        let mut order: Vec<usize> = (0..m).collect();
        order.sort_by_key(|&i| (morphisms[i].src, morphisms[i].tgt, i));
        let mut pos = vec![0; m];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let sorted: Vec<Morphism> = order.iter().map(|&i| morphisms[i].clone()).collect();
        let mut table = vec![None; m * m];
        for g in 0..m {
            for h in 0..m {
                let composable = morphisms[g].src == morphisms[h].tgt;
                match (compose.get(&(g, h)), composable) {
                    (Some(&gh), true) => {
                        if gh >= m || morphisms[gh].src != morphisms[h].src || morphisms[gh].tgt != morphisms[g].tgt {
                            return Err(invalid(format!(
                                "{}∘{} has the wrong endpoints",
                                morphisms[g].id, morphisms[h].id
                            )));
                        }
                        table[pos[g] * m + pos[h]] = Some(pos[gh]);
                    }
                    (None, true) => {
                        return Err(invalid(format!("{}∘{} is undefined", morphisms[g].id, morphisms[h].id)))
                    }
                    (Some(_), false) => {
                        return Err(invalid(format!(
                            "{}∘{} is defined but not composable",
                            morphisms[g].id, morphisms[h].id
                        )))
                    }
                    (None, false) => {}
                }
            }
        }
        let c = |g: usize, h: usize| table[g * m + h];
        for g in 0..m {
            for h in 0..m {
                let Some(gh) = c(g, h) else { continue };
                for k in 0..m {
                    if let (Some(hk), Some(ghk)) = (c(h, k), c(gh, k)) {
                        if c(g, hk) != Some(ghk) {
                            return Err(invalid("composition is not associative"));
                        }
                    }
                }
            }
        }
        let mut identity = Vec::with_capacity(objects.len());
        for x in 0..objects.len() {
            let e = (0..m).find(|&e| {
                sorted[e].src == x
                    && sorted[e].tgt == x
                    && (0..m).all(|g| {
                        (sorted[g].tgt != x || c(e, g) == Some(g)) && (sorted[g].src != x || c(g, e) == Some(g))
                    })
            });
            identity.push(e.ok_or_else(|| invalid(format!("object {} has no identity", objects[x])))?);
        }
        let mut inverse = Vec::with_capacity(m);
        for g in 0..m {
            let (s, t) = (sorted[g].src, sorted[g].tgt);
            let inv = (0..m).find(|&h| c(g, h) == Some(identity[t]) && c(h, g) == Some(identity[s]));
            inverse.push(inv.ok_or_else(|| invalid(format!("morphism {} is not invertible", sorted[g].id)))?);
        }
        Ok(FiniteGroupoid { objects, morphisms: sorted, compose: table, inverse, identity })
    }

    /// One-object groupoid of a group.
    pub fn from_group(g: &FiniteGroup) -> Result<Self> {
        let morphisms = g.labels.iter().map(|l| Morphism { id: l.clone(), src: 0, tgt: 0 }).collect();
        let mut compose = HashMap::new();
        for a in 0..g.order() {
            for b in 0..g.order() {
                compose.insert((a, b), g.table[a][b]);
            }
        }
        Self::new(vec![g.name.clone()], morphisms, &compose)
    }

    pub fn cyclic_group(n: usize) -> Result<Self> {
        Self::from_group(&FiniteGroup::cyclic(n)?)
    }

    pub fn symmetric_group(n: usize) -> Result<Self> {
        Self::from_group(&FiniteGroup::symmetric(n)?)
    }

    /// `n` objects, exactly one morphism `i→j` for every ordered pair.
    pub fn pair_groupoid(n: usize) -> Result<Self> {
        Self::connected_groupoid(n, &FiniteGroup::cyclic(1)?)
    }

    /// `n` objects with morphisms `(i→j, g)` for every `g` in the vertex group.
    pub fn connected_groupoid(n: usize, group: &FiniteGroup) -> Result<Self> {
        if n == 0 {
            return Err(invalid("at least one object is required"));
        }
        let k = group.order();
        let idx = |i: usize, j: usize, g: usize| (i * n + j) * k + g;
        let mut morphisms = Vec::with_capacity(n * n * k);
        for i in 0..n {
            for j in 0..n {
                for g in 0..k {
                    let id = if k == 1 { format!("{i}->{j}") } else { format!("{i}->{j}:{}", group.labels[g]) };
                    morphisms.push(Morphism { id, src: i, tgt: j });
                }
            }
        }
        let mut compose = HashMap::new();
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for g in 0..k {
                        for h in 0..k {
                            // (j→l, g)∘(i→j, h) = (i→l, gh)
                            compose.insert((idx(j, l, g), idx(i, j, h)), idx(i, l, group.table[g][h]));
                        }
                    }
                }
            }
        }
        Self::new((0..n).map(|i| i.to_string()).collect(), morphisms, &compose)
    }

    /// Disjoint union; objects and morphisms of `a` precede those of `b`.
    pub fn disjoint_union(a: &FiniteGroupoid, b: &FiniteGroupoid) -> Result<Self> {
        let (na, ma) = (a.objects.len(), a.len());
        let objects =
            a.objects.iter().map(|o| format!("a.{o}")).chain(b.objects.iter().map(|o| format!("b.{o}"))).collect();
        let morphisms = a
            .morphisms
            .iter()
            .map(|g| Morphism { id: format!("a.{}", g.id), ..g.clone() })
            .chain(b.morphisms.iter().map(|g| Morphism { id: format!("b.{}", g.id), src: g.src + na, tgt: g.tgt + na }))
            .collect();
        let mut compose = HashMap::new();
        for g in 0..ma {
            for h in 0..ma {
                if let Some(gh) = a.compose(g, h) {
                    compose.insert((g, h), gh);
                }
            }
        }
        for g in 0..b.len() {
            for h in 0..b.len() {
                if let Some(gh) = b.compose(g, h) {
                    compose.insert((ma + g, ma + h), ma + gh);
                }
            }
        }
        Self::new(objects, morphisms, &compose)
    }

    /// True iff every pair of objects is joined by a morphism.
    pub fn is_connected(&self) -> bool {
        let n = self.objects.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for g in &self.morphisms {
                if g.src == x && !seen[g.tgt] {
                    seen[g.tgt] = true;
                    stack.push(g.tgt);
                }
            }
        }
        seen.iter().all(|&s| s)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MorphismJson {
    pub id: String,
    pub src: String,
    pub tgt: String,
}

/// Groupoid interchange format.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupoidJson {
    pub objects: Vec<String>,
    pub morphisms: Vec<MorphismJson>,
    pub compose: Vec<[String; 3]>,
    pub inverse: Vec<[String; 2]>,
}

impl GroupoidJson {
    pub fn from_groupoid(g: &FiniteGroupoid) -> Self {
        let m = g.len();
        let id = |i: usize| g.morphisms[i].id.clone();
        let mut compose = Vec::new();
        for a in 0..m {
            for b in 0..m {
                if let Some(c) = g.compose(a, b) {
                    compose.push([id(a), id(b), id(c)]);
                }
            }
        }
        GroupoidJson {
            objects: g.objects.clone(),
            morphisms: g
                .morphisms
                .iter()
                .map(|x| MorphismJson {
                    id: x.id.clone(),
                    src: g.objects[x.src].clone(),
                    tgt: g.objects[x.tgt].clone(),
                })
                .collect(),
            compose,
            inverse: (0..m).map(|a| [id(a), id(g.inverse(a))]).collect(),
        }
    }

    pub fn to_groupoid(&self) -> Result<FiniteGroupoid> {
        let obj: HashMap<&str, usize> = self.objects.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
        if obj.len() != self.objects.len() {
            return Err(invalid("duplicate object label"));
        }
        let mut mor: HashMap<&str, usize> = HashMap::new();
        let mut morphisms = Vec::new();
        for (i, m) in self.morphisms.iter().enumerate() {
            if mor.insert(m.id.as_str(), i).is_some() {
                return Err(invalid(format!("duplicate morphism {}", m.id)));
            }
            let src = *obj.get(m.src.as_str()).ok_or_else(|| invalid(format!("unknown object {}", m.src)))?;
            let tgt = *obj.get(m.tgt.as_str()).ok_or_else(|| invalid(format!("unknown object {}", m.tgt)))?;
            morphisms.push(Morphism { id: m.id.clone(), src, tgt });
        }
        let look = |s: &str| mor.get(s).copied().ok_or_else(|| invalid(format!("unknown morphism {s}")));
        let mut compose = HashMap::new();
        for [g, h, gh] in &self.compose {
            if compose.insert((look(g)?, look(h)?), look(gh)?).is_some() {
                return Err(invalid(format!("{g}∘{h} listed twice")));
            }
        }
        let gpd = FiniteGroupoid::new(self.objects.clone(), morphisms, &compose)?;
        for [g, gi] in &self.inverse {
            let (a, b) = (look(g)?, look(gi)?);
            let (ia, ib) = (
                gpd.morphisms.iter().position(|x| x.id == self.morphisms[a].id).unwrap(),
                gpd.morphisms.iter().position(|x| x.id == self.morphisms[b].id).unwrap(),
            );
            if gpd.inverse(ia) != ib {
                return Err(invalid(format!("declared inverse of {g} is wrong")));
            }
        }
        Ok(gpd)
    }
}
