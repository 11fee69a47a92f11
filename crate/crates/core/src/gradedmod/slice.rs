use serde_json::json;

use super::ModuleError;
use crate::field::TowerScalar;
use crate::linalg;
use crate::ncalg::{NcPoly, Presentation};

/// Dense matrix, `[row][col]`.
pub type Matrix = Vec<Vec<TowerScalar>>;

pub(crate) fn zeros(r: usize, c: usize) -> Matrix {
    vec![vec![TowerScalar::zero(); c]; r]
}

pub(crate) fn identity(n: usize) -> Matrix {
    let mut m = zeros(n, n);
    for (k, row) in m.iter_mut().enumerate() {
        row[k] = TowerScalar::one();
    }
    m
}

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Result<Matrix, ModuleError> {
    let cols = b.first().map_or(0, Vec::len);
    let mut out = zeros(a.len(), cols);
    for (r, row) in a.iter().enumerate() {
        for (k, x) in row.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (c, y) in b[k].iter().enumerate() {
                if !y.is_zero() {
                    out[r][c] = out[r][c].try_add(&x.try_mul(y)?)?;
                }
            }
        }
    }
    Ok(out)
}

pub(crate) fn mat_axpy(acc: &mut Matrix, c: &TowerScalar, m: &Matrix) -> Result<(), ModuleError> {
    for (ra, rm) in acc.iter_mut().zip(m) {
        for (a, x) in ra.iter_mut().zip(rm) {
            if !x.is_zero() {
                *a = a.try_add(&c.try_mul(x)?)?;
            }
        }
    }
    Ok(())
}

pub(crate) fn vec_mat(v: &[TowerScalar], m: &Matrix) -> Result<Vec<TowerScalar>, ModuleError> {
    Ok(mat_mul(&vec![v.to_vec()], m)?.pop().unwrap_or_default())
}

pub(crate) fn is_zero_matrix(m: &Matrix) -> bool {
    m.iter().flatten().all(TowerScalar::is_zero)
}

pub(crate) fn transpose(m: &Matrix, cols: usize) -> Matrix {
    (0..cols)
        .map(|c| m.iter().map(|row| row[c].clone()).collect())
        .collect()
}

/// A graded module truncated at degree `depth`: `dims[j]` for `j ≤ depth`
/// and, for each generator, matrices `actions[g][j]` of size
/// `dims[j] × dims[j+1]`. Vectors are rows, so `v · x_g = v · actions[g][j]`.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleSlice {
    dims: Vec<usize>,
    actions: Vec<Vec<Matrix>>,
}

impl ModuleSlice {
    pub fn new(dims: Vec<usize>, actions: Vec<Vec<Matrix>>) -> Result<Self, ModuleError> {
        let depth = dims.len().saturating_sub(1);
        for per_gen in &actions {
            if per_gen.len() != depth {
                return Err(ModuleError::Decomposition(format!(
                    "expected {depth} action matrices per generator, got {}",
                    per_gen.len()
                )));
            }
            for (j, m) in per_gen.iter().enumerate() {
                if m.len() != dims[j] || m.iter().any(|r| r.len() != dims[j + 1]) {
                    return Err(ModuleError::Decomposition(format!(
                        "action in degree {j} has the wrong shape"
                    )));
                }
            }
        }
        Ok(Self { dims, actions })
    }

    pub fn depth(&self) -> usize {
        self.dims.len().saturating_sub(1)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn generators(&self) -> usize {
        self.actions.len()
    }

    pub fn action(&self, g: usize, j: usize) -> &Matrix {
        &self.actions[g][j]
    }

    /// The same slice with every action from degree `j` on replaced by zero.
    pub fn zeroed_from(&self, j: usize) -> Self {
        let mut out = self.clone();
        for per_gen in &mut out.actions {
            for (k, m) in per_gen.iter_mut().enumerate().skip(j) {
                *m = zeros(self.dims[k], self.dims[k + 1]);
            }
        }
        out
    }

    /// Matrix by which a homogeneous `f` acts from degree `j`.
    pub fn evaluate(&self, f: &NcPoly, j: usize) -> Result<Matrix, ModuleError> {
        let d = f.degree().unwrap_or(0);
        if j + d > self.depth() {
            return Err(ModuleError::DegreeOutOfRange {
                degree: j + d,
                depth: self.depth(),
            });
        }
        let mut acc = zeros(self.dims[j], self.dims[j + d]);
        for (w, c) in f.terms() {
            if w.len() != d {
                return Err(ModuleError::Algebra(format!("{f} is not homogeneous")));
            }
            let mut m = identity(self.dims[j]);
            for (t, &l) in w.letters().iter().enumerate() {
                m = mat_mul(&m, &self.actions[l as usize][j + t])?;
            }
            mat_axpy(&mut acc, c, &m)?;
        }
        Ok(acc)
    }

    /// Checks that every relation acts as zero from every degree where it
    /// fits inside the slice. Returns the first failing relation.
    pub fn check_relations(&self, p: &Presentation) -> Result<Option<usize>, ModuleError> {
        for (k, r) in p.relations().iter().enumerate() {
            let d = r.degree().unwrap_or(0);
            for j in 0..=self.depth().saturating_sub(d) {
                if j + d > self.depth() {
                    break;
                }
                if !is_zero_matrix(&self.evaluate(r, j)?) {
                    return Ok(Some(k));
                }
            }
        }
        Ok(None)
    }

    pub fn satisfies(&self, p: &Presentation) -> Result<bool, ModuleError> {
        Ok(self.check_relations(p)?.is_none())
    }

    /// Bases of the submodule generated by `gens` (degree-`j` vectors), in
    /// degrees `j..=depth`.
    pub fn generated(
        &self,
        j: usize,
        gens: &[Vec<TowerScalar>],
    ) -> Result<Vec<Vec<Vec<TowerScalar>>>, ModuleError> {
        if j > self.depth() {
            return Err(ModuleError::DegreeOutOfRange {
                degree: j,
                depth: self.depth(),
            });
        }
        let mut layers = vec![basis_of(gens, self.dims[j])?];
        for k in j..self.depth() {
            let mut next = Vec::new();
            for v in layers.last().expect("nonempty") {
                for g in 0..self.generators() {
                    next.push(vec_mat(v, &self.actions[g][k])?);
                }
            }
            layers.push(basis_of(&next, self.dims[k + 1])?);
        }
        Ok(layers)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "dims": self.dims })
    }
}

/// A basis of the span of `rows`, as echelon rows.
pub(crate) fn basis_of(
    rows: &[Vec<TowerScalar>],
    ncols: usize,
) -> Result<Vec<Vec<TowerScalar>>, ModuleError> {
    let mut e = linalg::Echelon::new(ncols);
    for r in rows {
        e.insert(linalg::sparse_from_dense(r))?;
    }
    Ok(e.pivot_columns()
        .map(|c| linalg::dense_from_sparse(e.pivot_row(c).expect("pivot"), ncols))
        .collect())
}
