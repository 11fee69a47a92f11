use super::{Point, PointError};
use crate::field::TowerScalar;
use crate::linalg;
use crate::ncalg::Presentation;

/// Bilinear forms on P^3 × P^3, one per quadratic relation: the word
/// `x_a x_b` contributes `c · p_a q_b`. Stored as `forms[k][a][b]`.
#[derive(Clone, Debug)]
pub struct MultilinearSystem {
    forms: Vec<[[TowerScalar; 4]; 4]>,
}

/// Splits each quadratic relation across two consecutive coordinate spaces.
pub fn multilinearize(p: &Presentation) -> Result<MultilinearSystem, PointError> {
    let mut forms = Vec::with_capacity(p.relations().len());
    for r in p.relations() {
        if r.degree() != Some(2) {
            return Err(PointError::NotQuadratic(r.to_string()));
        }
        let mut form: [[TowerScalar; 4]; 4] = Default::default();
        for (w, c) in r.terms() {
            let l = w.letters();
            form[l[0] as usize][l[1] as usize] = c.clone();
        }
        forms.push(form);
    }
    Ok(MultilinearSystem { forms })
}

impl MultilinearSystem {
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn form(&self, k: usize) -> &[[TowerScalar; 4]; 4] {
        &self.forms[k]
    }

    /// Value of form `k` at `(p, q)`.
    pub fn evaluate(
        &self,
        k: usize,
        p: &[TowerScalar; 4],
        q: &[TowerScalar; 4],
    ) -> Result<TowerScalar, PointError> {
        let mut acc = TowerScalar::zero();
        for (row, pa) in self.forms[k].iter().zip(p) {
            for (c, qb) in row.iter().zip(q) {
                if c.is_zero() || pa.is_zero() || qb.is_zero() {
                    continue;
                }
                acc = acc.try_add(&c.try_mul(pa)?.try_mul(qb)?)?;
            }
        }
        Ok(acc)
    }

    /// Whether `(p, q)` lies on every form.
    pub fn vanishes_at(&self, p: &Point, q: &Point) -> Result<bool, PointError> {
        for k in 0..self.forms.len() {
            if !self.evaluate(k, p.coords(), q.coords())?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The matrix `M(p)` with `M(p) q = 0` exactly when `(p, q)` lies on
    /// every form: `M(p)[k][b] = Σ_a forms[k][a][b] p_a`.
    pub fn coefficient_matrix(&self, p: &Point) -> Result<Vec<Vec<TowerScalar>>, PointError> {
        self.forms
            .iter()
            .map(|form| {
                (0..4)
                    .map(|b| {
                        let mut acc = TowerScalar::zero();
                        for (row, pa) in form.iter().zip(p.coords()) {
                            if !row[b].is_zero() && !pa.is_zero() {
                                acc = acc.try_add(&row[b].try_mul(pa)?)?;
                            }
                        }
                        Ok(acc)
                    })
                    .collect()
            })
            .collect()
    }

    pub fn rank_at(&self, p: &Point) -> Result<usize, PointError> {
        Ok(linalg::rank(&self.coefficient_matrix(p)?)?)
    }

    /// The unique `q` with `(p, q)` on every form.
    pub fn successor(&self, p: &Point) -> Result<Point, PointError> {
        let m = self.coefficient_matrix(p)?;
        let kernel = linalg::kernel(&m, 4)?;
        match kernel.len() {
            0 => Err(PointError::KernelDimZero),
            1 => {
                let v = kernel.into_iter().next().expect("one vector");
                let coords: [TowerScalar; 4] = v.try_into().expect("four coordinates");
                Point::new(coords)
            }
            d => Err(PointError::KernelDimHigh(d)),
        }
    }
}

/// Free-function form of [`MultilinearSystem::coefficient_matrix`].
pub fn coefficient_matrix(
    s: &MultilinearSystem,
    p: &Point,
) -> Result<Vec<Vec<TowerScalar>>, PointError> {
    s.coefficient_matrix(p)
}

/// Free-function form of [`MultilinearSystem::successor`].
pub fn successor(s: &MultilinearSystem, p: &Point) -> Result<Point, PointError> {
    s.successor(p)
}
