//! Exact sparse linear algebra over any [`Field`].
//!
//! Rows are sparse vectors sorted by column. [`Echelon`] keeps a set of pivot
//! rows, each normalized to 1 at its pivot; inserting a row reduces it by the
//! leading-term rule. The pivot of a row is its *smallest* column index, so
//! callers that want "largest term leads" reverse their column order.

use std::collections::BTreeMap;
use std::fmt;

use crate::field::FieldError;

/// Minimal exact field interface used by the elimination routines.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; fails on zero and on zero divisors.
    fn inv(&self) -> Result<Self, FieldError>;
}

pub type SparseVec<F> = Vec<(usize, F)>;

/// `acc += scale * v`, dropping entries that cancel.
pub fn axpy<F: Field>(acc: &mut BTreeMap<usize, F>, scale: &F, v: &[(usize, F)]) {
    for (c, x) in v {
        let term = scale.mul(x);
        match acc.get_mut(c) {
            Some(cur) => {
                let next = cur.add(&term);
                if next.is_zero() {
                    acc.remove(c);
                } else {
                    *cur = next;
                }
            }
            None => {
                if !term.is_zero() {
                    acc.insert(*c, term);
                }
            }
        }
    }
}

pub fn sparse_from_dense<F: Field>(dense: &[F]) -> SparseVec<F> {
    dense
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (c, x.clone()))
        .collect()
}

pub fn dense_from_sparse<F: Field>(v: &[(usize, F)], len: usize) -> Vec<F> {
    let mut out = vec![F::zero(); len];
    for (c, x) in v {
        out[*c] = x.clone();
    }
    out
}

/// Row echelon form built incrementally.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    ncols: usize,
    /// pivot column -> row with a 1 at the pivot and nothing to its left
    pivots: BTreeMap<usize, SparseVec<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.pivots.keys().copied()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    pub fn pivot_row(&self, col: usize) -> Option<&SparseVec<F>> {
        self.pivots.get(&col)
    }

    /// Reduces `row` and adds it as a new pivot row if it is independent.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, row: SparseVec<F>) -> Result<bool, FieldError> {
        let mut work: BTreeMap<usize, F> = row.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        loop {
            let Some((&lead, coeff)) = work.iter().next() else {
                return Ok(false);
            };
            match self.pivots.get(&lead) {
                Some(p) => {
                    let scale = coeff.neg();
                    axpy(&mut work, &scale, p);
                }
                None => {
                    let inv = coeff.inv()?;
                    let normalized: SparseVec<F> =
                        work.into_iter().map(|(c, x)| (c, x.mul(&inv))).collect();
                    self.pivots.insert(lead, normalized);
                    return Ok(true);
                }
            }
        }
    }

    /// Full reduction: eliminates every pivot column from `row`.
    pub fn reduce(&self, row: &[(usize, F)]) -> SparseVec<F> {
        let mut work: BTreeMap<usize, F> =
            row.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        let mut cursor = 0usize;
        loop {
            let next = work
                .range(cursor..)
                .find(|(c, _)| self.pivots.contains_key(c))
                .map(|(c, x)| (*c, x.clone()));
            let Some((col, coeff)) = next else { break };
            let scale = coeff.neg();
            axpy(&mut work, &scale, &self.pivots[&col]);
            cursor = col + 1;
        }
        work.into_iter().collect()
    }

    /// Turns the echelon form into reduced row echelon form in place.
    pub fn make_reduced(&mut self) {
        let cols: Vec<usize> = self.pivots.keys().rev().copied().collect();
        for col in cols {
            let row = self.pivots[&col].clone();
            let reduced = {
                let mut work: BTreeMap<usize, F> = row.into_iter().collect();
                let later: Vec<usize> = work
                    .keys()
                    .copied()
                    .filter(|c| *c != col && self.pivots.contains_key(c))
                    .collect();
                for c in later {
                    if let Some(coeff) = work.get(&c).cloned() {
                        axpy(&mut work, &coeff.neg(), &self.pivots[&c]);
                    }
                }
                work.into_iter().collect()
            };
            self.pivots.insert(col, reduced);
        }
    }

    /// Basis of the null space `{x : row . x = 0 for every inserted row}`.
    /// Requires reduced form (call [`Echelon::make_reduced`] first).
    pub fn null_space(&self) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.is_pivot(*c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.ncols];
                v[f] = F::one();
                for (&p, row) in &self.pivots {
                    if let Some((_, x)) = row.iter().find(|(c, _)| *c == f) {
                        v[p] = x.neg();
                    }
                }
                v
            })
            .collect()
    }
}

pub fn rank<F: Field>(rows: &[Vec<F>]) -> Result<usize, FieldError> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(sparse_from_dense(r))?;
    }
    Ok(e.rank())
}

/// Null space of the matrix whose rows are `rows` (vectors `x` with `M x = 0`).
pub fn kernel<F: Field>(rows: &[Vec<F>], ncols: usize) -> Result<Vec<Vec<F>>, FieldError> {
    let mut e = Echelon::new(ncols);
    for r in rows {
        e.insert(sparse_from_dense(r))?;
    }
    e.make_reduced();
    Ok(e.null_space())
}

/// Solves `M x = b` for square or rectangular `M`; returns one solution.
pub fn solve<F: Field>(m: &[Vec<F>], b: &[F]) -> Result<Option<Vec<F>>, FieldError> {
    let ncols = m.first().map_or(0, Vec::len);
    // augmented system; a pivot in the last column means inconsistency
    let mut e = Echelon::new(ncols + 1);
    for (row, rhs) in m.iter().zip(b) {
        let mut r = sparse_from_dense(row);
        if !rhs.is_zero() {
            r.push((ncols, rhs.clone()));
        }
        e.insert(r)?;
    }
    if e.is_pivot(ncols) {
        return Ok(None);
    }
    e.make_reduced();
    let mut x = vec![F::zero(); ncols];
    for (&p, row) in &e.pivots {
        if let Some((_, v)) = row.iter().find(|(c, _)| *c == ncols) {
            x[p] = v.clone();
        }
    }
    Ok(Some(x))
}

/// Expresses `target` as a linear combination of `rows`, tracking the
/// combination through elimination. Returns coefficients indexed like `rows`.
pub fn express_in_span<F: Field>(
    rows: &[SparseVec<F>],
    target: &[(usize, F)],
) -> Result<Option<Vec<F>>, FieldError> {
    // each pivot row carries its combination of the original rows
    let mut pivots: BTreeMap<usize, (SparseVec<F>, SparseVec<F>)> = BTreeMap::new();
    for (idx, row) in rows.iter().enumerate() {
        let mut work: BTreeMap<usize, F> =
            row.iter().filter(|(_, x)| !x.is_zero()).cloned().collect();
        let mut combo: BTreeMap<usize, F> = BTreeMap::from([(idx, F::one())]);
        while let Some((&lead, coeff)) = work.iter().next() {
            match pivots.get(&lead) {
                Some((p, pc)) => {
                    let scale = coeff.neg();
                    axpy(&mut work, &scale, p);
                    axpy(&mut combo, &scale, pc);
                }
                None => {
                    let inv = coeff.inv()?;
                    let r = work.into_iter().map(|(c, x)| (c, x.mul(&inv))).collect();
                    let cb = combo.into_iter().map(|(c, x)| (c, x.mul(&inv))).collect();
                    pivots.insert(lead, (r, cb));
                    break;
                }
            }
        }
    }
    let mut work: BTreeMap<usize, F> = target
        .iter()
        .filter(|(_, x)| !x.is_zero())
        .cloned()
        .collect();
    let mut combo: BTreeMap<usize, F> = BTreeMap::new();
    while let Some((&lead, coeff)) = work.iter().next() {
        let Some((p, pc)) = pivots.get(&lead) else {
            return Ok(None);
        };
        let coeff = coeff.clone();
        axpy(&mut work, &coeff.neg(), p);
        axpy(&mut combo, &coeff, pc);
    }
    let mut out = vec![F::zero(); rows.len()];
    for (i, x) in combo {
        out[i] = x;
    }
    Ok(Some(out))
}

/// Determinant by elimination; `m` must be square.
pub fn determinant<F: Field>(m: &[Vec<F>]) -> Result<F, FieldError> {
    let n = m.len();
    let mut a: Vec<Vec<F>> = m.to_vec();
    let mut det = F::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Ok(F::zero());
        };
        if piv != col {
            a.swap(piv, col);
            det = det.neg();
        }
        det = det.mul(&a[col][col]);
        let inv = a[col][col].inv()?;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].mul(&inv);
            let pivot_row = a[col].clone();
            for (x, p) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *x = x.sub(&f.mul(p));
            }
        }
    }
    Ok(det)
}
