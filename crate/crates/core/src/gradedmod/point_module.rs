use serde_json::json;

use super::slice::{is_zero_matrix, ModuleSlice};
use super::ModuleError;
use crate::cocycle::KleinElement;
use crate::field::TowerScalar;
use crate::ncalg::NcPoly;
use crate::pointscheme::{MultilinearSystem, Point};

/// A point module truncated at degree `depth`: `rows[j]` holds the
/// scalars with `m_j · x_i = rows[j][i] m_{j+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PointModuleData {
    pub base: Point,
    pub rows: Vec<[TowerScalar; 4]>,
}

impl PointModuleData {
    pub fn depth(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    /// The module twisted by the automorphism `x_i ↦ χ_g(x_i) x_i`: every
    /// row picks up the sign pattern of `g`, without renormalizing.
    pub fn act(&self, g: KleinElement) -> Self {
        let flip = |row: &[TowerScalar; 4]| {
            std::array::from_fn(|k| {
                if g.character(KleinElement::from_index(k)) < 0 {
                    row[k].negated()
                } else {
                    row[k].clone()
                }
            })
        };
        Self {
            base: self.base.act(g),
            rows: self.rows.iter().map(flip).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "base": self.base.to_json(),
            "rows": self.rows.iter()
                .map(|r| r.iter().map(TowerScalar::to_exact_string).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

/// Iterates the successor map `depth` times from `p`.
pub fn point_module(
    s: &MultilinearSystem,
    p: &Point,
    depth: usize,
) -> Result<PointModuleData, ModuleError> {
    let mut rows = vec![p.coords().clone()];
    let mut cur = p.clone();
    for _ in 0..depth {
        cur = s.successor(&cur)?;
        rows.push(cur.coords().clone());
    }
    Ok(PointModuleData {
        base: p.clone(),
        rows,
    })
}

/// The point module as a slice with one basis vector per degree.
pub fn point_slice(pm: &PointModuleData) -> ModuleSlice {
    let depth = pm.depth();
    let actions = (0..4)
        .map(|i| {
            (0..depth)
                .map(|j| vec![vec![pm.rows[j][i].clone()]])
                .collect()
        })
        .collect();
    ModuleSlice::new(vec![1; depth + 1], actions).expect("shapes are consistent")
}

/// Whether `m_0 · θ = 0`, i.e. `Σ_w c_w rows[0][a] rows[1][b]` vanishes for
/// the quadratic `θ = Σ c_w x_a x_b`.
pub fn theta_kills(pm: &PointModuleData, theta: &NcPoly) -> Result<bool, ModuleError> {
    let mut acc = TowerScalar::zero();
    for (w, c) in theta.terms() {
        let l = w.letters();
        if l.len() != 2 || pm.rows.len() < 2 {
            return Err(ModuleError::Algebra(format!("{theta} is not quadratic")));
        }
        let t = pm.rows[0][l[0] as usize].try_mul(&pm.rows[1][l[1] as usize])?;
        acc = acc.try_add(&c.try_mul(&t)?)?;
    }
    Ok(acc.is_zero())
}

/// General form of [`theta_kills`] on any slice: `θ` acts as zero on
/// degree 0.
pub fn slice_kills(m: &ModuleSlice, theta: &NcPoly) -> Result<bool, ModuleError> {
    Ok(is_zero_matrix(&m.evaluate(theta, 0)?))
}
