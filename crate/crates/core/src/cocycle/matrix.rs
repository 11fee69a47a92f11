//! The embedding of the twisted algebra into 2×2 matrices over the original
//! one, and the matrices of the twisted group algebra.

use super::KleinElement;
use crate::field::{FieldError, TowerScalar};
use crate::ncalg::NcPoly;

/// A 2×2 matrix of polynomials, indexed `[row][col]`.
pub type PolyMatrix = [[NcPoly; 2]; 2];

fn signed(g: usize, s: i64) -> NcPoly {
    NcPoly::gen(g).scale(&TowerScalar::from_int(s))
}

/// Image of a generator: `v0 ↦ diag(x0, x0)`, `v1 ↦ diag(x1, -x1)`,
/// `v2 ↦ [[0, x2], [x2, 0]]`, `v3 ↦ [[0, -x3], [x3, 0]]`.
///
/// The twist is an involution, so the same formulas express the original
/// generators in 2×2 matrices over the twisted algebra.
pub fn generator_matrix(g: usize) -> PolyMatrix {
    let z = NcPoly::zero;
    match g {
        0 => [[signed(0, 1), z()], [z(), signed(0, 1)]],
        1 => [[signed(1, 1), z()], [z(), signed(1, -1)]],
        2 => [[z(), signed(2, 1)], [signed(2, 1), z()]],
        3 => [[z(), signed(3, -1)], [signed(3, 1), z()]],
        _ => panic!("generator index out of range"),
    }
}

pub fn matrix_mul(a: &PolyMatrix, b: &PolyMatrix) -> Result<PolyMatrix, FieldError> {
    let mut out: PolyMatrix = Default::default();
    for (r, row) in out.iter_mut().enumerate() {
        for (c, slot) in row.iter_mut().enumerate() {
            *slot = a[r][0]
                .try_mul(&b[0][c])?
                .try_add(&a[r][1].try_mul(&b[1][c])?)?;
        }
    }
    Ok(out)
}

/// Extends [`generator_matrix`] to an algebra map on polynomials.
pub fn matrix_model(f: &NcPoly) -> Result<PolyMatrix, FieldError> {
    let mut out: PolyMatrix = Default::default();
    for (w, c) in f.terms() {
        let mut m: PolyMatrix = [
            [NcPoly::constant(c.clone()), NcPoly::zero()],
            [NcPoly::zero(), NcPoly::constant(c.clone())],
        ];
        for &l in w.letters() {
            m = matrix_mul(&m, &generator_matrix(l as usize))?;
        }
        for r in 0..2 {
            for k in 0..2 {
                out[r][k] = out[r][k].try_add(&m[r][k])?;
            }
        }
    }
    Ok(out)
}

/// Matrices of the twisted group algebra: `e ↦ I`, `g1 ↦ diag(1, -1)`,
/// `g2 ↦ [[0, 1], [1, 0]]`, `g1g2 ↦ [[0, -1], [1, 0]]`.
pub fn group_matrix(g: KleinElement) -> [[i64; 2]; 2] {
    match g.index() {
        0 => [[1, 0], [0, 1]],
        1 => [[1, 0], [0, -1]],
        2 => [[0, 1], [1, 0]],
        _ => [[0, -1], [1, 0]],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::Word;

    #[test]
    fn v2_and_v1v2() {
        let m = matrix_model(&NcPoly::gen(2)).unwrap();
        assert!(m[0][0].is_zero() && m[1][1].is_zero());
        assert_eq!(m[0][1], NcPoly::gen(2));
        let v1v2 = NcPoly::monomial(Word::new(vec![1, 2]), TowerScalar::one());
        let m = matrix_model(&v1v2).unwrap();
        assert!(m[0][0].is_zero() && m[1][1].is_zero());
        assert_eq!(m[0][1], v1v2);
        assert_eq!(m[1][0], v1v2.negated());
    }
}
