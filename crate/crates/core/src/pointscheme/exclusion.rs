use std::collections::BTreeMap;

use serde_json::json;

use super::{MultilinearSystem, PointError};
use crate::field::TowerScalar;

/// Homogeneous polynomial in two fresh indeterminates, keyed by exponents.
type Bivariate = BTreeMap<(u32, u32), TowerScalar>;

fn add_into(acc: &mut Bivariate, e: (u32, u32), c: TowerScalar) -> Result<(), PointError> {
    let slot = acc.entry(e).or_insert_with(TowerScalar::zero);
    *slot = slot.try_add(&c)?;
    if slot.is_zero() {
        acc.remove(&e);
    }
    Ok(())
}

fn mul(a: &Bivariate, b: &Bivariate) -> Result<Bivariate, PointError> {
    let mut out = Bivariate::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            add_into(&mut out, (ea.0 + eb.0, ea.1 + eb.1), ca.try_mul(cb)?)?;
        }
    }
    Ok(out)
}

/// Determinant by Leibniz expansion; 24 terms for a 4×4 matrix.
fn determinant(m: &[[Bivariate; 4]; 4]) -> Result<Bivariate, PointError> {
    let mut out = Bivariate::new();
    let mut perm = [0usize, 1, 2, 3];
    for_each_permutation(&mut perm, 0, &mut |p, sign| {
        let mut term: Bivariate = [((0, 0), TowerScalar::from_int(sign))].into();
        for (row, &col) in p.iter().enumerate() {
            term = mul(&term, &m[row][col])?;
            if term.is_empty() {
                return Ok(());
            }
        }
        for (e, c) in term {
            add_into(&mut out, e, c)?;
        }
        Ok(())
    })?;
    Ok(out)
}

fn for_each_permutation(
    p: &mut [usize; 4],
    k: usize,
    f: &mut impl FnMut(&[usize; 4], i64) -> Result<(), PointError>,
) -> Result<(), PointError> {
    if k == p.len() {
        let mut inversions = 0;
        for i in 0..4 {
            for j in i + 1..4 {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        return f(p, if inversions % 2 == 0 { 1 } else { -1 });
    }
    for i in k..p.len() {
        p.swap(k, i);
        for_each_permutation(p, k + 1, f)?;
        p.swap(k, i);
    }
    Ok(())
}

/// Outcome for one zero pattern: the two nonzero coordinates and, when
/// found, the rows of a 4×4 minor that is a nonzero monomial.
#[derive(Clone, Debug)]
pub struct PatternResult {
    pub nonzero: (usize, usize),
    pub witness_rows: Option<[usize; 4]>,
}

impl PatternResult {
    pub fn passes(&self) -> bool {
        self.witness_rows.is_some()
    }

    /// `(∗,∗,0,0)`-style label.
    pub fn label(&self) -> String {
        let cells: Vec<&str> = (0..4)
            .map(|j| {
                if j == self.nonzero.0 || j == self.nonzero.1 {
                    "*"
                } else {
                    "0"
                }
            })
            .collect();
        format!("({})", cells.join(","))
    }
}

#[derive(Clone, Debug)]
pub struct ExclusionReport {
    pub patterns: Vec<PatternResult>,
}

impl ExclusionReport {
    pub fn passes(&self) -> bool {
        self.patterns.iter().all(PatternResult::passes)
    }

    pub fn pattern(&self, a: usize, b: usize) -> Option<&PatternResult> {
        self.patterns.iter().find(|p| p.nonzero == (a, b))
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!(self
            .patterns
            .iter()
            .map(|p| json!({
                "pattern": p.label(),
                "passes": p.passes(),
                "minor_rows": p.witness_rows,
            }))
            .collect::<Vec<_>>())
    }
}

/// For each way of zeroing exactly two coordinates, treats the other two
/// as indeterminates and searches the 4×4 minors of the coefficient matrix
/// for a nonzero monomial. Such a minor is nonzero at every point with that
/// zero pattern, so the matrix has rank 4 there and no successor exists.
pub fn exclusion_report(s: &MultilinearSystem) -> Result<ExclusionReport, PointError> {
    let mut patterns = Vec::with_capacity(6);
    for a in 0..4 {
        for b in a + 1..4 {
            // M[k][col] = form[k][a][col]·X + form[k][b][col]·Y
            let rows: Vec<[Bivariate; 4]> = (0..s.len())
                .map(|k| {
                    let f = s.form(k);
                    std::array::from_fn(|col| {
                        let mut e = Bivariate::new();
                        if !f[a][col].is_zero() {
                            e.insert((1, 0), f[a][col].clone());
                        }
                        if !f[b][col].is_zero() {
                            e.insert((0, 1), f[b][col].clone());
                        }
                        e
                    })
                })
                .collect();
            let mut witness_rows = None;
            'search: for r0 in 0..rows.len() {
                for r1 in r0 + 1..rows.len() {
                    for r2 in r1 + 1..rows.len() {
                        for r3 in r2 + 1..rows.len() {
                            let idx = [r0, r1, r2, r3];
                            let m = idx.map(|r| rows[r].clone());
                            if determinant(&m)?.len() == 1 {
                                witness_rows = Some(idx);
                                break 'search;
                            }
                        }
                    }
                }
            }
            patterns.push(PatternResult {
                nonzero: (a, b),
                witness_rows,
            });
        }
    }
    Ok(ExclusionReport { patterns })
}

/// True when every two-zero pattern is excluded by a monomial minor.
pub fn two_zero_exclusion(s: &MultilinearSystem) -> Result<bool, PointError> {
    Ok(exclusion_report(s)?.passes())
}
