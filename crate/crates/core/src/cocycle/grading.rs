use std::fmt;

use super::{CocycleTable, KleinElement};
use crate::field::FieldError;
use crate::ncalg::{AlgebraError, NcPoly, Presentation};

/// A permutation of `{0, 1, 2, 3}`, stored as its image list.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm4([u8; 4]);

impl Perm4 {
    pub fn new(images: [usize; 4]) -> Option<Self> {
        let mut seen = [false; 4];
        for &i in &images {
            if i >= 4 || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm4(images.map(|i| i as u8)))
    }

    pub fn identity() -> Self {
        Perm4([0, 1, 2, 3])
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> [usize; 4] {
        self.0.map(usize::from)
    }

    pub fn inverse(&self) -> Self {
        let mut out = [0u8; 4];
        for (i, &j) in self.0.iter().enumerate() {
            out[j as usize] = i as u8;
        }
        Perm4(out)
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &Perm4) -> Self {
        Perm4(std::array::from_fn(|i| self.0[other.0[i] as usize]))
    }

    /// All 24 permutations in lexicographic order of image lists.
    pub fn all() -> Vec<Perm4> {
        let mut out = Vec::with_capacity(24);
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    for d in 0..4 {
                        if let Some(p) = Perm4::new([a, b, c, d]) {
                            out.push(p);
                        }
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for Perm4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A G-grading on degree one: generator `i` gets `perm(i)` read as a
/// [`KleinElement`] index. Every bijection affords the regular
/// representation.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GradingAssignment {
    perm: Perm4,
}

/// `x0 -> e, x1 -> g1, x2 -> g2, x3 -> g1g2`
pub fn standard_grading() -> [KleinElement; 4] {
    KleinElement::ALL
}

impl GradingAssignment {
    pub fn new(perm: Perm4) -> Self {
        Self { perm }
    }

    pub fn standard() -> Self {
        Self::new(Perm4::identity())
    }

    pub fn perm(&self) -> Perm4 {
        self.perm
    }

    pub fn degrees(&self) -> [KleinElement; 4] {
        std::array::from_fn(|i| KleinElement::from_index(self.perm.apply(i)))
    }

    /// The generator carrying the identity degree; gradings are grouped
    /// into classes by this index.
    pub fn identity_generator(&self) -> usize {
        self.perm.inverse().apply(0)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.degrees().map(KleinElement::name))
    }
}

/// The 24 gradings, grouped into 4 classes by [`GradingAssignment::identity_generator`].
pub fn enumerate_gradings() -> [Vec<GradingAssignment>; 4] {
    let mut classes: [Vec<GradingAssignment>; 4] = Default::default();
    for p in Perm4::all() {
        let g = GradingAssignment::new(p);
        classes[g.identity_generator()].push(g);
    }
    classes
}

/// Rescales each word by the inverse cocycle along its letters,
/// `x_a x_b ↦ μ(|x_a|, |x_b|)^{-1} x_a x_b`, multiplied left to right for
/// longer words.
pub fn twist_poly(
    f: &NcPoly,
    degrees: &[KleinElement; 4],
    mu: &CocycleTable,
) -> Result<NcPoly, FieldError> {
    f.map_coeffs(|w| {
        let mut factor = crate::field::TowerScalar::one();
        let mut prefix = KleinElement::E;
        for &l in w.letters() {
            let d = degrees[l as usize];
            factor = factor.try_mul(&mu.get(prefix, d).invert()?)?;
            prefix = prefix * d;
        }
        Ok(factor)
    })
}

/// The image of `f` under the automorphism `x_i ↦ χ_g(|x_i|) x_i`.
pub fn g_translate(
    f: &NcPoly,
    g: KleinElement,
    degrees: &[KleinElement; 4],
) -> Result<NcPoly, FieldError> {
    f.map_coeffs(|w| {
        let sign: i8 = w
            .letters()
            .iter()
            .map(|&l| g.character(degrees[l as usize]))
            .product();
        Ok(crate::field::TowerScalar::from_int(sign.into()))
    })
}

/// The cocycle twist of `p` along a grading of its generators.
pub fn twist_presentation(
    p: &Presentation,
    grading: &GradingAssignment,
    mu: &CocycleTable,
) -> Result<Presentation, AlgebraError> {
    let degrees = grading.degrees();
    let mut rels = Vec::with_capacity(p.relations().len());
    for (k, r) in p.relations().iter().enumerate() {
        if r.g_degree(&degrees).is_none() {
            return Err(AlgebraError::Inhomogeneous(format!(
                "relation {k} under grading {:?}",
                grading.perm()
            )));
        }
        rels.push(twist_poly(r, &degrees, mu)?);
    }
    Presentation::new(
        format!("{}^twist", p.name()),
        degrees,
        rels,
        p.params().cloned(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncalg::{sklyanin_presentation, span_equal, twisted_relations, Params};

    #[test]
    fn twenty_four_gradings_in_four_classes() {
        let classes = enumerate_gradings();
        assert_eq!(classes.iter().map(Vec::len).sum::<usize>(), 24);
        for c in &classes {
            assert_eq!(c.len(), 6);
        }
        assert!(classes[0].contains(&GradingAssignment::standard()));
    }

    #[test]
    fn perm_inverse_and_compose() {
        for p in Perm4::all() {
            assert_eq!(p.compose(&p.inverse()), Perm4::identity());
        }
    }

    #[test]
    fn twist_matches_closed_form() {
        let params = Params::defaults();
        let a = sklyanin_presentation(&params).unwrap();
        let t = twist_presentation(
            &a,
            &GradingAssignment::standard(),
            &CocycleTable::standard(),
        )
        .unwrap();
        let expect = twisted_relations(&params);
        assert_eq!(t.relations()[0], expect[0]);
        assert_eq!(t.relations()[4], expect[4]);
        assert!(span_equal(t.relations(), &expect).unwrap());
    }

    #[test]
    fn twist_is_an_involution() {
        let a = sklyanin_presentation(&Params::defaults()).unwrap();
        let g = GradingAssignment::standard();
        let mu = CocycleTable::standard();
        let back = twist_presentation(&twist_presentation(&a, &g, &mu).unwrap(), &g, &mu).unwrap();
        assert!(span_equal(back.relations(), a.relations()).unwrap());
    }
}
