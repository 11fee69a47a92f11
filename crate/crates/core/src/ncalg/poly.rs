use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde_json::{json, Value};

use super::{AlgebraError, Word};
use crate::cocycle::KleinElement;
use crate::field::{FieldError, FieldSpec, TowerScalar};

/// A finite linear combination of words with tower coefficients.
#[derive(Clone, Default, PartialEq)]
pub struct NcPoly {
    terms: BTreeMap<Word, TowerScalar>,
}

impl NcPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: TowerScalar) -> Self {
        Self::monomial(Word::empty(), c)
    }

    pub fn monomial(w: Word, c: TowerScalar) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c).expect("single term");
        p
    }

    /// The generator `x_g`.
    pub fn gen(g: usize) -> Self {
        Self::monomial(Word::letter(g), TowerScalar::one())
    }

    /// `x_a x_b - x_b x_a`
    pub fn commutator(a: usize, b: usize) -> Self {
        let mut p = Self::zero();
        p.add_int(Word::new(vec![a as u8, b as u8]), 1);
        p.add_int(Word::new(vec![b as u8, a as u8]), -1);
        p
    }

    /// `x_a x_b + x_b x_a`
    pub fn anticommutator(a: usize, b: usize) -> Self {
        let mut p = Self::zero();
        p.add_int(Word::new(vec![a as u8, b as u8]), 1);
        p.add_int(Word::new(vec![b as u8, a as u8]), 1);
        p
    }

    /// Sum of `coeff_i * x_i^2`.
    pub fn diagonal_quadric(coeffs: &[TowerScalar; 4]) -> Self {
        let mut p = Self::zero();
        for (g, c) in coeffs.iter().enumerate() {
            p.add_term(Word::new(vec![g as u8, g as u8]), c.clone())
                .expect("coefficients share a tower");
        }
        p
    }

    fn add_int(&mut self, w: Word, n: i64) {
        self.add_term(w, TowerScalar::from_int(n))
            .expect("rational");
    }

    pub fn from_terms(
        terms: impl IntoIterator<Item = (Word, TowerScalar)>,
    ) -> Result<Self, FieldError> {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c)?;
        }
        Ok(p)
    }

    /// Adds `c * w` in place.
    pub fn add_term(&mut self, w: Word, c: TowerScalar) -> Result<(), FieldError> {
        if c.is_zero() {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().try_add(&c)?;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &TowerScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> TowerScalar {
        self.terms.get(w).cloned().unwrap_or_else(TowerScalar::zero)
    }

    /// The common length of all words, or `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Word::len);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Like [`NcPoly::degree`] but an error for inhomogeneous input; zero has
    /// no degree and is reported as `Ok(None)`.
    pub fn homogeneous_degree(&self) -> Result<Option<usize>, AlgebraError> {
        if self.is_zero() {
            return Ok(None);
        }
        self.degree()
            .map(Some)
            .ok_or_else(|| AlgebraError::Inhomogeneous(format!("N-degree of {self}")))
    }

    /// Common G-degree of all words, or `None` for zero or mixed G-degrees.
    pub fn g_degree(&self, grading: &[KleinElement; 4]) -> Option<KleinElement> {
        let mut it = self.terms.keys().map(|w| w.g_degree(grading));
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone())?;
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.try_add(&rhs.negated())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        let mut out = Self::zero();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &rhs.terms {
                out.add_term(wa.concat(wb), ca.try_mul(cb)?)?;
            }
        }
        Ok(out)
    }

    pub fn try_scale(&self, c: &TowerScalar) -> Result<Self, FieldError> {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x.try_mul(c)?)?;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &TowerScalar) -> Self {
        self.try_scale(c).expect("tower mismatch in scale")
    }

    pub fn negated(&self) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.negated()))
                .collect(),
        }
    }

    /// Rewrites each coefficient as `f(word) * coeff`.
    pub fn map_coeffs(
        &self,
        mut f: impl FnMut(&Word) -> Result<TowerScalar, FieldError>,
    ) -> Result<Self, FieldError> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.try_mul(&f(w)?)?)?;
        }
        Ok(out)
    }

    /// Algebra substitution `x_g -> images[g]`.
    pub fn substitute(&self, images: &[NcPoly; 4]) -> Result<Self, FieldError> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            let mut prod = NcPoly::constant(c.clone());
            for &l in w.letters() {
                prod = prod.try_mul(&images[l as usize])?;
            }
            out = out.try_add(&prod)?;
        }
        Ok(out)
    }

    /// The smallest tower holding every coefficient.
    pub fn spec(&self) -> Result<Arc<FieldSpec>, FieldError> {
        let mut spec = FieldSpec::gaussian();
        for c in self.terms.values() {
            if c.spec().len() > spec.len() {
                if !spec.is_prefix_of(c.spec()) {
                    return Err(FieldError::MismatchedSpec);
                }
                spec = c.spec().clone();
            } else if !c.spec().is_prefix_of(&spec) {
                return Err(FieldError::MismatchedSpec);
            }
        }
        Ok(spec)
    }

    /// `[{"word": [..], "coeff": ".."}, ..]`
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(w, c)| json!({"word": w.letters(), "coeff": c.to_exact_string()}))
                .collect(),
        )
    }

    pub fn from_json(v: &Value, spec: &Arc<FieldSpec>) -> Result<Self, AlgebraError> {
        let bad = |m: &str| AlgebraError::Parse(m.to_string());
        let arr = v
            .as_array()
            .ok_or_else(|| bad("polynomial must be an array"))?;
        let mut p = Self::zero();
        for term in arr {
            let letters = term["word"]
                .as_array()
                .ok_or_else(|| bad("term without word"))?
                .iter()
                .map(|l| match l.as_u64() {
                    Some(g) if g < 4 => Ok(g as u8),
                    _ => Err(bad("generator index must be 0..3")),
                })
                .collect::<Result<Vec<u8>, _>>()?;
            let coeff = term["coeff"]
                .as_str()
                .ok_or_else(|| bad("term without coeff"))?;
            p.add_term(Word::new(letters), TowerScalar::parse(coeff, spec)?)?;
        }
        Ok(p)
    }
}

impl fmt::Display for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}){w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NcPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn add(self, rhs: &NcPoly) -> NcPoly {
        self.try_add(rhs).expect("tower mismatch in +")
    }
}
impl Sub<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn sub(self, rhs: &NcPoly) -> NcPoly {
        self.try_sub(rhs).expect("tower mismatch in -")
    }
}
impl Mul<&NcPoly> for &NcPoly {
    type Output = NcPoly;
    fn mul(self, rhs: &NcPoly) -> NcPoly {
        self.try_mul(rhs).expect("tower mismatch in *")
    }
}
impl Neg for &NcPoly {
    type Output = NcPoly;
    fn neg(self) -> NcPoly {
        self.negated()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn commutator_shape() {
        let c = NcPoly::commutator(0, 1);
        assert_eq!(c.len(), 2);
        assert_eq!(c.coeff(&Word::new(vec![1, 0])), TowerScalar::from_int(-1));
        assert_eq!(c.degree(), Some(2));
        assert!((&c + &c.negated()).is_zero());
    }

    #[test]
    fn product_and_substitution() {
        let x0 = NcPoly::gen(0);
        let x1 = NcPoly::gen(1);
        let p = &(&x0 * &x1) - &(&x1 * &x0);
        assert_eq!(p, NcPoly::commutator(0, 1));
        // swap generators 0 and 1
        let images = [x1.clone(), x0.clone(), NcPoly::gen(2), NcPoly::gen(3)];
        assert_eq!(p.substitute(&images).unwrap(), NcPoly::commutator(1, 0));
    }

    #[test]
    fn json_round_trip() {
        let p = NcPoly::commutator(2, 3).scale(&TowerScalar::from_rational(rat(-5, 7)));
        let spec = FieldSpec::gaussian();
        assert_eq!(NcPoly::from_json(&p.to_json(), &spec).unwrap(), p);
    }

    #[test]
    fn inhomogeneous_detected() {
        let p = &NcPoly::gen(0) + &NcPoly::commutator(0, 1);
        assert_eq!(p.degree(), None);
        assert!(p.homogeneous_degree().is_err());
    }
}
