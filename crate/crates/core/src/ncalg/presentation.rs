use std::collections::BTreeMap;
use std::sync::Arc;

use serde_json::{json, Value};

use super::{AlgebraError, NcPoly, Params, Word};
use crate::cocycle::{standard_grading, KleinElement};
use crate::field::{FieldSpec, TowerScalar};
use crate::linalg::{self, SparseVec};

/// A graded algebra on four generators given by homogeneous relations.
#[derive(Clone, Debug)]
pub struct Presentation {
    name: String,
    g_degrees: [KleinElement; 4],
    relations: Vec<NcPoly>,
    params: Option<Params>,
}

impl Presentation {
    /// Checks every relation is nonzero and homogeneous in both gradings.
    pub fn new(
        name: impl Into<String>,
        g_degrees: [KleinElement; 4],
        relations: Vec<NcPoly>,
        params: Option<Params>,
    ) -> Result<Self, AlgebraError> {
        for (k, r) in relations.iter().enumerate() {
            if r.is_zero() {
                return Err(AlgebraError::Inhomogeneous(format!("relation {k} is zero")));
            }
            match r.degree() {
                Some(d) if d > 0 => {}
                _ => {
                    return Err(AlgebraError::Inhomogeneous(format!(
                        "relation {k} is not N-homogeneous of positive degree: {r}"
                    )))
                }
            }
            if r.g_degree(&g_degrees).is_none() {
                return Err(AlgebraError::Inhomogeneous(format!(
                    "relation {k} is not G-homogeneous: {r}"
                )));
            }
        }
        Ok(Self {
            name: name.into(),
            g_degrees,
            relations,
            params,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn g_degrees(&self) -> &[KleinElement; 4] {
        &self.g_degrees
    }

    pub fn relations(&self) -> &[NcPoly] {
        &self.relations
    }

    pub fn params(&self) -> Option<&Params> {
        self.params.as_ref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Largest tower used by any relation coefficient.
    pub fn spec(&self) -> Result<Arc<FieldSpec>, AlgebraError> {
        let mut spec = FieldSpec::gaussian();
        for r in &self.relations {
            let s = r.spec()?;
            if s.len() > spec.len() {
                spec = s;
            }
        }
        for r in &self.relations {
            if !r.spec()?.is_prefix_of(&spec) {
                return Err(crate::field::FieldError::MismatchedSpec.into());
            }
        }
        Ok(spec)
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.relations
            .iter()
            .all(|r| r.terms().all(|(_, c)| c.as_rational().is_some()))
    }

    pub fn to_json(&self) -> Result<Value, AlgebraError> {
        Ok(json!({
            "name": self.name,
            "generators": 4,
            "g_degrees": self.g_degrees.iter().map(|g| g.name()).collect::<Vec<_>>(),
            "field": self.spec()?.to_json(),
            "params": self.params.as_ref().map(Params::to_json),
            "relations": self.relations.iter().map(NcPoly::to_json).collect::<Vec<_>>(),
        }))
    }

    pub fn from_json(v: &Value) -> Result<Self, AlgebraError> {
        let bad = |m: &str| AlgebraError::Parse(m.to_string());
        if v["generators"].as_u64() != Some(4) {
            return Err(bad("expected four generators"));
        }
        let spec = FieldSpec::from_json(&v["field"])?;
        let names = v["g_degrees"]
            .as_array()
            .ok_or_else(|| bad("missing g_degrees"))?;
        if names.len() != 4 {
            return Err(bad("g_degrees must have four entries"));
        }
        let mut g_degrees = [KleinElement::E; 4];
        for (slot, n) in g_degrees.iter_mut().zip(names) {
            *slot = KleinElement::parse(n.as_str().unwrap_or_default())
                .ok_or_else(|| bad("unknown group element"))?;
        }
        let params = match &v["params"] {
            Value::Null => None,
            p => {
                let get = |k: &str| -> Result<_, AlgebraError> {
                    Ok(crate::field::parse_rational(
                        p[k].as_str()
                            .ok_or_else(|| bad("parameter must be a string"))?,
                    )?)
                };
                Some(Params::new(get("alpha")?, get("beta")?, get("gamma")?)?)
            }
        };
        let relations = v["relations"]
            .as_array()
            .ok_or_else(|| bad("missing relations"))?
            .iter()
            .map(|r| NcPoly::from_json(r, &spec))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(
            v["name"].as_str().unwrap_or("imported"),
            g_degrees,
            relations,
            params,
        )
    }
}

/// The six defining relations of the Sklyanin algebra `A(alpha, beta, gamma)`,
/// in the order `[x0,x1] - a[x2,x3]+`, `[x0,x1]+ - [x2,x3]`, then the same
/// pattern for `(x0,x2 ; x3,x1)` with `beta` and `(x0,x3 ; x1,x2)` with `gamma`.
pub fn sklyanin_relations(params: &Params) -> Vec<NcPoly> {
    let [a, b, c] = params.triple();
    let mut out = Vec::with_capacity(6);
    for (coef, (i, j), (k, l)) in [
        (a, (0, 1), (2, 3)),
        (b, (0, 2), (3, 1)),
        (c, (0, 3), (1, 2)),
    ] {
        out.push(&NcPoly::commutator(i, j) - &NcPoly::anticommutator(k, l).scale(&coef));
        out.push(&NcPoly::anticommutator(i, j) - &NcPoly::commutator(k, l));
    }
    out
}

/// `A(alpha, beta, gamma)` with the Klein-four grading `x0 -> e, x1 -> g1,
/// x2 -> g2, x3 -> g1g2`.
pub fn sklyanin_presentation(params: &Params) -> Result<Presentation, AlgebraError> {
    params.check()?;
    Presentation::new(
        "A",
        standard_grading(),
        sklyanin_relations(params),
        Some(params.clone()),
    )
}

/// Adds homogeneous relations.
pub fn quotient(p: &Presentation, extra: &[NcPoly]) -> Result<Presentation, AlgebraError> {
    if extra.is_empty() {
        return Ok(p.clone());
    }
    let mut rels = p.relations.clone();
    rels.extend(extra.iter().cloned());
    let name = format!("{}/({} extra)", p.name, extra.len());
    Presentation::new(name, p.g_degrees, rels, p.params.clone())
}

fn word_columns(sets: &[&[NcPoly]]) -> BTreeMap<Word, usize> {
    let mut cols = BTreeMap::new();
    for set in sets {
        for r in set.iter() {
            for (w, _) in r.terms() {
                let n = cols.len();
                cols.entry(w.clone()).or_insert(n);
            }
        }
    }
    cols
}

fn to_rows(set: &[NcPoly], cols: &BTreeMap<Word, usize>) -> Vec<SparseVec<TowerScalar>> {
    set.iter()
        .map(|r| {
            let mut v: SparseVec<TowerScalar> =
                r.terms().map(|(w, c)| (cols[w], c.clone())).collect();
            v.sort_by_key(|(c, _)| *c);
            v
        })
        .collect()
}

/// Dimension of the linear span of `set`.
pub fn span_rank(set: &[NcPoly]) -> Result<usize, AlgebraError> {
    let cols = word_columns(&[set]);
    let mut e = linalg::Echelon::new(cols.len());
    for row in to_rows(set, &cols) {
        e.insert(row)?;
    }
    Ok(e.rank())
}

/// Whether `a` and `b` span the same subspace of the free algebra.
pub fn span_equal(a: &[NcPoly], b: &[NcPoly]) -> Result<bool, AlgebraError> {
    let ra = span_rank(a)?;
    if ra != span_rank(b)? {
        return Ok(false);
    }
    let both: Vec<NcPoly> = a.iter().chain(b).cloned().collect();
    Ok(span_rank(&both)? == ra)
}

/// Whether `f` lies in the linear span of `set`.
pub fn in_span(set: &[NcPoly], f: &NcPoly) -> Result<bool, AlgebraError> {
    let mut with = set.to_vec();
    with.push(f.clone());
    Ok(span_rank(&with)? == span_rank(set)?)
}

/// Coefficients expressing `f` in terms of `set`, when it lies in the span.
pub fn span_coefficients(
    set: &[NcPoly],
    f: &NcPoly,
) -> Result<Option<Vec<TowerScalar>>, AlgebraError> {
    let single = std::slice::from_ref(f);
    let cols = word_columns(&[set, single]);
    let rows = to_rows(set, &cols);
    let target = to_rows(single, &cols).pop().unwrap_or_default();
    Ok(linalg::express_in_span(&rows, &target)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn second_relation_shape() {
        let p = sklyanin_presentation(&Params::defaults()).unwrap();
        assert_eq!(p.relations().len(), 6);
        let expect = &NcPoly::anticommutator(0, 1) - &NcPoly::commutator(2, 3);
        assert_eq!(p.relations()[1], expect);
        let first = &NcPoly::commutator(0, 1)
            - &NcPoly::anticommutator(2, 3).scale(&TowerScalar::from_rational(rat(-5, 7)));
        assert_eq!(p.relations()[0], first);
        // each relation pairs x_a x_b with x_c x_d where {a,b,c,d} = {0,1,2,3},
        // so it is homogeneous of degree |x_a||x_b|, not of degree e
        use KleinElement as K;
        let expect = [K::G1, K::G1, K::G2, K::G2, K::G1G2, K::G1G2];
        for (r, g) in p.relations().iter().zip(expect) {
            assert_eq!(r.degree(), Some(2));
            assert_eq!(r.g_degree(p.g_degrees()), Some(g));
        }
    }

    #[test]
    fn quotient_by_nothing_is_identity() {
        let p = sklyanin_presentation(&Params::defaults()).unwrap();
        let q = quotient(&p, &[]).unwrap();
        assert_eq!(q.relations(), p.relations());
    }

    #[test]
    fn quotient_rejects_inhomogeneous() {
        let p = sklyanin_presentation(&Params::defaults()).unwrap();
        let bad = &NcPoly::gen(0) + &NcPoly::commutator(0, 1);
        assert!(matches!(
            quotient(&p, &[bad]),
            Err(AlgebraError::Inhomogeneous(_))
        ));
        // x0 x1 has G-degree g1, x0 x0 has e
        let mixed = &NcPoly::commutator(0, 1) + &NcPoly::anticommutator(0, 0);
        assert!(quotient(&p, &[mixed]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = sklyanin_presentation(&Params::defaults()).unwrap();
        let v = p.to_json().unwrap();
        let q = Presentation::from_json(&v).unwrap();
        assert_eq!(q.relations(), p.relations());
        assert_eq!(q.g_degrees(), p.g_degrees());
        assert_eq!(q.params(), p.params());
    }

    #[test]
    fn span_equality_ignores_basis_choice() {
        let a = vec![NcPoly::commutator(0, 1), NcPoly::anticommutator(0, 1)];
        let b = vec![
            NcPoly::gen(0).try_mul(&NcPoly::gen(1)).unwrap(),
            NcPoly::gen(1).try_mul(&NcPoly::gen(0)).unwrap(),
        ];
        assert!(span_equal(&a, &b).unwrap());
        assert!(!span_equal(&a[..1], &b).unwrap());
    }
}
