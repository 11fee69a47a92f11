use super::point_module::{point_slice, PointModuleData};
use super::slice::{basis_of, mat_axpy, mat_mul, zeros, Matrix, ModuleSlice};
use super::ModuleError;
use crate::cocycle::{generator_matrix, group_matrix, KleinElement};
use crate::field::TowerScalar;
use crate::ncalg::{NcPoly, Presentation};

/// Action of a linear polynomial `Σ c_k x_k` from degree `j`.
fn linear_action(m: &ModuleSlice, f: &NcPoly, j: usize) -> Result<Matrix, ModuleError> {
    let mut acc = zeros(m.dims()[j], m.dims()[j + 1]);
    for (w, c) in f.terms() {
        match w.letters() {
            [l] => mat_axpy(&mut acc, c, m.action(*l as usize, j))?,
            _ => return Err(ModuleError::Algebra(format!("{f} is not linear"))),
        }
    }
    Ok(acc)
}

/// `M ⊕ M` with generator `i` acting through the block matrix obtained by
/// evaluating the 2×2 model of `i` on `M`. Pairs are rows `(a, b)`, so
/// `(a, b) · [[P, Q], [R, S]] = (aP + bR, aQ + bS)`.
pub fn double(m: &ModuleSlice) -> Result<ModuleSlice, ModuleError> {
    let dims: Vec<usize> = m.dims().iter().map(|d| 2 * d).collect();
    let mut actions = Vec::with_capacity(4);
    for i in 0..4 {
        let model = generator_matrix(i);
        let mut per_degree = Vec::with_capacity(m.depth());
        for j in 0..m.depth() {
            let (r, c) = (m.dims()[j], m.dims()[j + 1]);
            let mut block = zeros(2 * r, 2 * c);
            for (br, model_row) in model.iter().enumerate() {
                for (bc, entry) in model_row.iter().enumerate() {
                    let a = linear_action(m, entry, j)?;
                    for (x, row) in a.into_iter().enumerate() {
                        for (y, v) in row.into_iter().enumerate() {
                            block[br * r + x][bc * c + y] = v;
                        }
                    }
                }
            }
            per_degree.push(block);
        }
        actions.push(per_degree);
    }
    ModuleSlice::new(dims, actions)
}

/// The fat point `M_p ⊕ M_p` over `acting`, which must be the algebra
/// embedded in 2×2 matrices over the algebra `pm` is a module for.
/// Every relation of `acting` is checked on the result.
pub fn fat_point(
    pm: &PointModuleData,
    acting: &Presentation,
    depth: usize,
) -> Result<ModuleSlice, ModuleError> {
    let nz = pm.base.nonzero_count();
    if nz < 3 {
        return Err(ModuleError::TooFewNonzero(nz));
    }
    if pm.depth() < depth {
        return Err(ModuleError::DegreeOutOfRange {
            degree: depth,
            depth: pm.depth(),
        });
    }
    let mut truncated = pm.clone();
    truncated.rows.truncate(depth + 1);
    let fat = double(&point_slice(&truncated))?;
    if let Some(k) = fat.check_relations(acting)? {
        return Err(ModuleError::RelationFails(
            acting.relations()[k].to_string(),
        ));
    }
    Ok(fat)
}

/// Whether degree 0 generates every degree of the slice.
pub fn generated_in_degree_zero(m: &ModuleSlice) -> Result<bool, ModuleError> {
    let n0 = m.dims()[0];
    let gens: Vec<Vec<TowerScalar>> = super::slice::identity(n0);
    let layers = m.generated(0, &gens)?;
    Ok(layers.iter().zip(m.dims()).all(|(b, &d)| b.len() == d))
}

/// Whether the submodule generated by the degree-`j` vector `v` contains
/// the whole of degree `j + 1`.
pub fn cyclic_codimension_check(
    m: &ModuleSlice,
    j: usize,
    v: &[TowerScalar],
) -> Result<bool, ModuleError> {
    if v.iter().all(TowerScalar::is_zero) {
        return Err(ModuleError::ZeroVector);
    }
    if j >= m.depth() {
        return Err(ModuleError::DegreeOutOfRange {
            degree: j + 1,
            depth: m.depth(),
        });
    }
    let mut images = Vec::with_capacity(m.generators());
    for g in 0..m.generators() {
        images.push(super::slice::vec_mat(v, m.action(g, j))?);
    }
    Ok(basis_of(&images, m.dims()[j + 1])?.len() == m.dims()[j + 1])
}

fn int_matrix(t: [[i64; 2]; 2]) -> Matrix {
    t.iter()
        .map(|r| r.iter().map(|&x| TowerScalar::from_int(x)).collect())
        .collect()
}

/// Whether right multiplication by the matrix of `g` is a module map from
/// the fat point at `p` to the fat point at `p^g`, degree by degree:
/// `X_i(j) · T = T · X'_i(j)` for every generator.
pub fn group_intertwiner_check(
    pm: &PointModuleData,
    g: KleinElement,
    acting: &Presentation,
    depth: usize,
) -> Result<bool, ModuleError> {
    let f = fat_point(pm, acting, depth)?;
    let fg = fat_point(&pm.act(g), acting, depth)?;
    let t = int_matrix(group_matrix(g));
    for i in 0..4 {
        for j in 0..depth {
            if mat_mul(f.action(i, j), &t)? != mat_mul(&t, fg.action(i, j))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
