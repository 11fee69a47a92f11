use serde_json::Value;

use super::{KleinElement, Perm4};
use crate::field::{FieldError, TowerScalar};

/// A function `G × G → k^×`, stored as a 4×4 grid indexed by
/// [`KleinElement::index`].
#[derive(Clone, Debug, PartialEq)]
pub struct CocycleTable {
    values: [[TowerScalar; 4]; 4],
}

/// `μ(g1^p g2^q, g1^r g2^s) = (-1)^{ps}`, the cocycle used throughout.
pub fn mu(g: KleinElement, h: KleinElement) -> TowerScalar {
    if g.p() * h.q() == 1 {
        TowerScalar::from_int(-1)
    } else {
        TowerScalar::one()
    }
}

impl CocycleTable {
    pub fn from_fn(mut f: impl FnMut(KleinElement, KleinElement) -> TowerScalar) -> Self {
        let values = std::array::from_fn(|g| {
            std::array::from_fn(|h| f(KleinElement::from_index(g), KleinElement::from_index(h)))
        });
        Self { values }
    }

    /// The table of [`mu`].
    pub fn standard() -> Self {
        Self::from_fn(mu)
    }

    /// The constant cocycle 1.
    pub fn trivial() -> Self {
        Self::from_fn(|_, _| TowerScalar::one())
    }

    pub fn get(&self, g: KleinElement, h: KleinElement) -> &TowerScalar {
        &self.values[g.index()][h.index()]
    }

    /// Normalization and the 2-cocycle identity on all 64 triples.
    pub fn is_cocycle(&self) -> Result<bool, FieldError> {
        for g in KleinElement::ALL {
            if !self.get(KleinElement::E, g).is_one() || !self.get(g, KleinElement::E).is_one() {
                return Ok(false);
            }
        }
        for g in KleinElement::ALL {
            for h in KleinElement::ALL {
                for l in KleinElement::ALL {
                    let lhs = self.get(g, h).try_mul(self.get(g * h, l))?;
                    let rhs = self.get(g, h * l).try_mul(self.get(h, l))?;
                    if lhs != rhs {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `(g, h) ↦ μ(σ(g), σ(h))` for an automorphism of `G` given as a
    /// permutation of element indices fixing `e`.
    pub fn pulled_back(&self, sigma: &Perm4) -> Self {
        Self::from_fn(|g, h| {
            self.get(
                KleinElement::from_index(sigma.apply(g.index())),
                KleinElement::from_index(sigma.apply(h.index())),
            )
            .clone()
        })
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.values
                .iter()
                .map(|row| Value::Array(row.iter().map(|x| x.to_exact_string().into()).collect()))
                .collect(),
        )
    }
}

/// A function `ρ: G → k^×` with `ρ(e) = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coboundary {
    values: [TowerScalar; 4],
}

impl Coboundary {
    pub fn new(values: [TowerScalar; 4]) -> Result<Self, FieldError> {
        if !values[0].is_one() {
            return Err(FieldError::Parse("coboundary must send e to 1".into()));
        }
        for v in &values {
            v.invert()?;
        }
        Ok(Self { values })
    }

    pub fn get(&self, g: KleinElement) -> &TowerScalar {
        &self.values[g.index()]
    }

    pub fn values(&self) -> &[TowerScalar; 4] {
        &self.values
    }
}

/// Whether `μ2(g,h) = μ1(g,h) ρ(g) ρ(h) ρ(gh)^{-1}` for all `g, h`.
pub fn coboundary_equivalent(
    mu1: &CocycleTable,
    mu2: &CocycleTable,
    rho: &Coboundary,
) -> Result<bool, FieldError> {
    for g in KleinElement::ALL {
        for h in KleinElement::ALL {
            let rhs = mu1
                .get(g, h)
                .try_mul(rho.get(g))?
                .try_mul(rho.get(h))?
                .try_mul(&rho.get(g * h).invert()?)?;
            if *mu2.get(g, h) != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One row of the table of coboundaries between `μ` and its pullbacks
/// along automorphisms of `G`.
#[derive(Clone, Debug)]
pub struct CoboundaryRow {
    /// The automorphism, as a permutation of `{e, g1, g2, g1g2}` in cycle
    /// notation on the indices 1..3.
    pub label: &'static str,
    pub sigma: Perm4,
    pub rho: Coboundary,
}

impl CoboundaryRow {
    /// Checks that `μ` and `(g,h) ↦ μ(σ^{-1}g, σ^{-1}h)` differ by `ρ`.
    pub fn verify(&self) -> Result<bool, FieldError> {
        let mu = CocycleTable::standard();
        let pulled = mu.pulled_back(&self.sigma.inverse());
        coboundary_equivalent(&mu, &pulled, &self.rho)
    }
}

/// The five non-identity automorphisms of `G` with their coboundaries.
pub fn coboundary_table() -> Vec<CoboundaryRow> {
    let i = TowerScalar::i;
    let one = TowerScalar::one;
    let m1 = || TowerScalar::from_int(-1);
    let rows: [(&'static str, [usize; 4], [TowerScalar; 4]); 5] = [
        ("(12)", [0, 2, 1, 3], [one(), m1(), one(), one()]),
        ("(13)", [0, 3, 2, 1], [one(), i(), one(), i()]),
        ("(23)", [0, 1, 3, 2], [one(), one(), i(), i()]),
        ("(123)", [0, 2, 3, 1], [one(), i(), m1(), i()]),
        ("(132)", [0, 3, 1, 2], [one(), one(), i(), i().negated()]),
    ];
    rows.into_iter()
        .map(|(label, perm, rho)| CoboundaryRow {
            label,
            sigma: Perm4::new(perm).expect("valid permutation"),
            rho: Coboundary::new(rho).expect("invertible values"),
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use KleinElement as K;

    #[test]
    fn mu_values() {
        assert_eq!(mu(K::G1, K::G2), TowerScalar::from_int(-1));
        assert!(mu(K::E, K::G1G2).is_one());
        assert!(mu(K::G2, K::G1).is_one());
        assert!(CocycleTable::standard().is_cocycle().unwrap());
    }

    #[test]
    fn all_coboundary_rows_verify() {
        for row in coboundary_table() {
            assert!(row.verify().unwrap(), "{}", row.label);
        }
    }

    #[test]
    fn pulling_back_the_wrong_way_fails_for_three_cycles() {
        let mu = CocycleTable::standard();
        for row in coboundary_table()
            .into_iter()
            .filter(|r| r.label.len() == 5)
        {
            let wrong = mu.pulled_back(&row.sigma);
            assert!(!coboundary_equivalent(&mu, &wrong, &row.rho).unwrap());
        }
    }

    #[test]
    fn trivial_rho_detects_difference() {
        let rho = Coboundary::new(std::array::from_fn(|_| TowerScalar::one())).unwrap();
        let mu = CocycleTable::standard();
        assert!(!coboundary_equivalent(&mu, &CocycleTable::trivial(), &rho).unwrap());
        assert!(coboundary_equivalent(&mu, &mu, &rho).unwrap());
    }
}
