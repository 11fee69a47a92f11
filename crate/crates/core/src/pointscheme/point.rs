use std::fmt;

use super::PointError;
use crate::cocycle::KleinElement;
use crate::field::TowerScalar;

/// A point of P^3, scaled so its first nonzero coordinate is 1.
#[derive(Clone, PartialEq)]
pub struct Point {
    coords: [TowerScalar; 4],
}

impl Point {
    pub fn new(coords: [TowerScalar; 4]) -> Result<Self, PointError> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(PointError::ZeroPoint)?;
        if lead.is_one() {
            return Ok(Self { coords });
        }
        let inv = lead.invert()?;
        let mut out = coords;
        for c in out.iter_mut() {
            *c = c.try_mul(&inv)?;
        }
        Ok(Self { coords: out })
    }

    pub fn from_ints(c: [i64; 4]) -> Result<Self, PointError> {
        Self::new(c.map(TowerScalar::from_int))
    }

    /// The coordinate point `e_j`.
    pub fn basis(j: usize) -> Self {
        let mut c = [0; 4];
        c[j] = 1;
        Self::from_ints(c).expect("nonzero")
    }

    pub fn coords(&self) -> &[TowerScalar; 4] {
        &self.coords
    }

    pub fn nonzero_count(&self) -> usize {
        self.coords.iter().filter(|c| !c.is_zero()).count()
    }

    /// Independent equality test: every 2×2 cross-product `p_i q_j - p_j q_i`
    /// vanishes.
    pub fn projectively_equal(&self, other: &Point) -> Result<bool, PointError> {
        for i in 0..4 {
            for j in i + 1..4 {
                let a = self.coords[i].try_mul(&other.coords[j])?;
                let b = self.coords[j].try_mul(&other.coords[i])?;
                if a != b {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// `p^g`: coordinate `j` is multiplied by the character of `g` at the
    /// degree of `x_j`, e.g. `p^{g1} = (p0, p1, -p2, -p3)`.
    pub fn act(&self, g: KleinElement) -> Point {
        let coords = std::array::from_fn(|j| {
            if g.character(KleinElement::from_index(j)) < 0 {
                self.coords[j].negated()
            } else {
                self.coords[j].clone()
            }
        });
        // renormalizes when the leading coordinate flips sign
        Point::new(coords).expect("sign flips preserve nonzero-ness")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coords
                .iter()
                .map(|c| c.to_exact_string().into())
                .collect(),
        )
    }
}

/// `p^g`
pub fn g_action(p: &Point, g: KleinElement) -> Point {
    p.act(g)
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
