//! Exact linear algebra: fraction-free elimination for dense systems and an
//! incremental sparse eliminator for the large overdetermined systems that
//! axiom-derived conditions produce.

use super::qmatrix::QMatrix;
use super::rational::{common_denominator, Q};
use super::NumericsError;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};

/// Row echelon form over the integers produced by Bareiss elimination.
struct IntEchelon {
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

fn integer_rows(a: &QMatrix, rhs: Option<&[Q]>) -> Vec<Vec<BigInt>> {
    (0..a.rows())
        .map(|i| {
            let mut row: Vec<Q> = a.row(i).to_vec();
            if let Some(b) = rhs {
                row.push(b[i].clone());
            }
            let den = common_denominator(row.iter());
            row.iter().map(|x| x.numer() * (&den / x.denom())).collect()
        })
        .collect()
}

/// Fraction-free forward elimination on the first `ncols` columns; all
/// intermediate divisions are exact.
fn bareiss(mut m: Vec<Vec<BigInt>>, ncols: usize) -> IntEchelon {
    let nrows = m.len();
    let width = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..nrows {
            let lead = m[i][c].clone();
            let piv = m[r][c].clone();
            for j in c + 1..width {
                let v = &piv * &m[i][j] - &lead * &m[r][j];
                let (quot, rem) = v.div_rem(&prev);
                debug_assert!(rem.is_zero(), "inexact Bareiss step");
                m[i][j] = quot;
            }
            m[i][c] = BigInt::zero();
            // rows below a pivot must be scaled consistently even when zero in c
        }
        prev = m[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    m.truncate(nrows);
    IntEchelon { rows: m, pivots }
}

/// Back substitution: free variables take the values in `free_values`.
fn back_substitute(ech: &IntEchelon, ncols: usize, rhs_col: Option<usize>, free: &HashMap<usize, Q>) -> Vec<Q> {
    let mut x = vec![Q::zero(); ncols];
    for (c, v) in free {
        x[*c] = v.clone();
    }
    for (r, &pc) in ech.pivots.iter().enumerate().rev() {
        let row = &ech.rows[r];
        let mut acc = match rhs_col {
            Some(b) => Q::from_integer(row[b].clone()),
            None => Q::zero(),
        };
        for j in pc + 1..ncols {
            if !row[j].is_zero() && !x[j].is_zero() {
                acc -= Q::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[pc] = acc / Q::from_integer(row[pc].clone());
    }
    x
}

/// Exact solution of `a·x = b` (free variables set to zero).
pub fn q_solve(a: &QMatrix, b: &[Q]) -> Result<Vec<Q>, NumericsError> {
    if a.rows() != b.len() {
        return Err(NumericsError::DimensionMismatch { expected: a.rows(), found: b.len() });
    }
    let n = a.cols();
    let ech = bareiss(integer_rows(a, Some(b)), n);
    let rank = ech.pivots.len();
    if ech.rows[rank..].iter().any(|row| !row[n].is_zero()) {
        return Err(NumericsError::NoSolution);
    }
    Ok(back_substitute(&ech, n, Some(n), &HashMap::new()))
}

/// Exact basis of the right kernel of `a`.
pub fn q_nullspace(a: &QMatrix) -> Vec<Vec<Q>> {
    let n = a.cols();
    if a.rows() == 0 {
        return (0..n).map(|i| super::qmatrix::vecops::unit(n, i)).collect();
    }
    let ech = bareiss(integer_rows(a, None), n);
    let free_cols: Vec<usize> = (0..n).filter(|c| !ech.pivots.contains(c)).collect();
    free_cols
        .iter()
        .map(|&f| {
            let free: HashMap<usize, Q> =
                free_cols.iter().map(|&c| (c, if c == f { Q::one() } else { Q::zero() })).collect();
            back_substitute(&ech, n, None, &free)
        })
        .collect()
}

pub fn rank(a: &QMatrix) -> usize {
    if a.rows() == 0 || a.cols() == 0 {
        return 0;
    }
    bareiss(integer_rows(a, None), a.cols()).pivots.len()
}

pub fn inverse(a: &QMatrix) -> Option<QMatrix> {
    if !a.is_square() {
        return None;
    }
    let n = a.rows();
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e = super::qmatrix::vecops::unit(n, j);
        match q_solve(a, &e) {
            Ok(x) => cols.push(x),
            Err(_) => return None,
        }
    }
    let inv = QMatrix::from_columns(&cols, n);
    if a.mul(&inv) == QMatrix::identity(n) {
        Some(inv)
    } else {
        None
    }
}

/// Column-space basis of `a` (pivot columns of the original matrix).
pub fn column_space(a: &QMatrix) -> Vec<Vec<Q>> {
    if a.rows() == 0 || a.cols() == 0 {
        return Vec::new();
    }
    let ech = bareiss(integer_rows(a, None), a.cols());
    ech.pivots.iter().map(|&c| a.column(c)).collect()
}

/// A sparse linear row.
pub type SparseRow = BTreeMap<usize, Q>;

/// Incremental Gaussian elimination over sparse rows with an optional
/// right-hand side; rows are reduced against existing pivots as they arrive,
/// so only an echelon basis (at most `nvars` rows) is ever stored.
#[derive(Debug, Clone)]
pub struct SparseSystem {
    nvars: usize,
    // pivot column -> (row normalized to 1 at pivot, rhs)
    pivots: BTreeMap<usize, (SparseRow, Q)>,
    inconsistent: bool,
}

impl SparseSystem {
    pub fn new(nvars: usize) -> Self {
        SparseSystem { nvars, pivots: BTreeMap::new(), inconsistent: false }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    pub fn add_homogeneous(&mut self, row: SparseRow) {
        self.add_equation(row, Q::zero());
    }

    pub fn add_equation(&mut self, mut row: SparseRow, mut rhs: Q) {
        row.retain(|_, v| !v.is_zero());
        let mut cursor = 0usize;
        loop {
            let next = row.range(cursor..).map(|(k, _)| *k).find(|k| self.pivots.contains_key(k));
            let Some(k) = next else { break };
            let coef = row[&k].clone();
            let (prow, prhs) = &self.pivots[&k];
            for (j, v) in prow {
                let e = row.entry(*j).or_insert_with(Q::zero);
                *e -= &coef * v;
                if e.is_zero() {
                    row.remove(j);
                }
            }
            rhs -= &coef * prhs;
            cursor = k + 1;
        }
        match row.iter().next() {
            None => {
                if !rhs.is_zero() {
                    self.inconsistent = true;
                }
            }
            Some((&p, lead)) => {
                let inv = Q::one() / lead;
                let row: SparseRow = row.into_iter().map(|(j, v)| (j, v * &inv)).collect();
                self.pivots.insert(p, (row, rhs * inv));
            }
        }
    }

    fn back_substitute(&self, free: &HashMap<usize, Q>, with_rhs: bool) -> Vec<Q> {
        let mut x = vec![Q::zero(); self.nvars];
        for (c, v) in free {
            x[*c] = v.clone();
        }
        for (&p, (row, rhs)) in self.pivots.iter().rev() {
            let mut acc = if with_rhs { rhs.clone() } else { Q::zero() };
            for (j, v) in row.range(p + 1..) {
                if !x[*j].is_zero() {
                    acc -= v * &x[*j];
                }
            }
            x[p] = acc;
        }
        x
    }

    /// A particular solution with free variables zero.
    pub fn particular(&self) -> Option<Vec<Q>> {
        if self.inconsistent {
            return None;
        }
        Some(self.back_substitute(&HashMap::new(), true))
    }

    /// Basis of the homogeneous solution space.
    pub fn nullspace(&self) -> Vec<Vec<Q>> {
        let free_cols: Vec<usize> = (0..self.nvars).filter(|c| !self.pivots.contains_key(c)).collect();
        free_cols
            .iter()
            .map(|&f| {
                let free: HashMap<usize, Q> =
                    free_cols.iter().map(|&c| (c, if c == f { Q::one() } else { Q::zero() })).collect();
                self.back_substitute(&free, false)
            })
            .collect()
    }
}

/// Coordinates of `v` in the (linearly independent) `basis`, if `v` lies in its span.
pub fn coordinates(basis: &[Vec<Q>], v: &[Q]) -> Option<Vec<Q>> {
    let n = v.len();
    let mut sys = SparseSystem::new(basis.len());
    for i in 0..n {
        let row: SparseRow =
            basis.iter().enumerate().filter(|(_, b)| !b[i].is_zero()).map(|(k, b)| (k, b[i].clone())).collect();
        sys.add_equation(row, v[i].clone());
    }
    sys.particular()
}
