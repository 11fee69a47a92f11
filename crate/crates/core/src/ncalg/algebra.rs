use std::collections::BTreeMap;

use serde::Serialize;

use super::graded::{free_products, free_span_dimension, Coefficient, GradedQuotient};
use super::{quotient, AlgebraError, NcPoly, Presentation, Word};
use crate::field::{Rational, TowerScalar};
use crate::linalg::{self, Echelon, SparseVec};

/// Default truncation degree.
pub const DEFAULT_BOUND: usize = 6;

#[derive(Clone, Debug)]
enum Engine {
    Rational(GradedQuotient<Rational>),
    Tower(GradedQuotient<TowerScalar>),
}

macro_rules! dispatch {
    ($self:expr, $q:ident => $body:expr) => {
        match &$self.engine {
            Engine::Rational($q) => $body,
            Engine::Tower($q) => $body,
        }
    };
}

/// A presentation together with its graded quotient built up to `bound`.
///
/// Runs over Q when every relation coefficient is rational and over the
/// coefficients' tower otherwise.
#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    presentation: Presentation,
    engine: Engine,
}

fn relation_terms(p: &Presentation) -> Vec<Vec<(Word, TowerScalar)>> {
    p.relations()
        .iter()
        .map(|r| r.terms().map(|(w, c)| (w.clone(), c.clone())).collect())
        .collect()
}

fn to_tower_vec<F: Coefficient>(v: SparseVec<F>) -> SparseVec<TowerScalar> {
    v.into_iter().map(|(i, x)| (i, x.to_tower())).collect()
}

impl GradedAlgebra {
    pub fn new(presentation: &Presentation, bound: usize) -> Result<Self, AlgebraError> {
        let rels = relation_terms(presentation);
        let engine = if presentation.is_rational() {
            Engine::Rational(GradedQuotient::build(&rels, bound)?)
        } else {
            Engine::Tower(GradedQuotient::build(&rels, bound)?)
        };
        Ok(Self {
            presentation: presentation.clone(),
            engine,
        })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn bound(&self) -> usize {
        dispatch!(self, q => q.bound())
    }

    fn check(&self, n: usize) -> Result<(), AlgebraError> {
        if n > self.bound() {
            Err(AlgebraError::DegreeExceedsBound {
                degree: n,
                bound: self.bound(),
            })
        } else {
            Ok(())
        }
    }

    pub fn dimension(&self, n: usize) -> Result<usize, AlgebraError> {
        self.check(n)?;
        Ok(dispatch!(self, q => q.dimension(n).expect("within bound")))
    }

    /// Dimensions of degrees `0..=bound`.
    pub fn dimensions(&self) -> Vec<usize> {
        (0..=self.bound())
            .map(|n| self.dimension(n).expect("within bound"))
            .collect()
    }

    pub fn normal_words(&self, n: usize) -> Result<Vec<Word>, AlgebraError> {
        self.check(n)?;
        Ok(dispatch!(self, q => q.normal_words(n).expect("within bound").to_vec()))
    }

    /// Coordinates of a homogeneous polynomial in the normal-word basis.
    pub fn normal_form(&self, f: &NcPoly) -> Result<SparseVec<TowerScalar>, AlgebraError> {
        let Some(n) = f.homogeneous_degree()? else {
            return Ok(Vec::new());
        };
        self.check(n)?;
        let mut acc: BTreeMap<usize, TowerScalar> = BTreeMap::new();
        for (w, c) in f.terms() {
            let v =
                dispatch!(self, q => to_tower_vec(q.normal_form_word(w).expect("within bound")));
            for (i, x) in v {
                let term = c.try_mul(&x)?;
                let cur = acc.remove(&i).unwrap_or_else(TowerScalar::zero);
                let next = cur.try_add(&term)?;
                if !next.is_zero() {
                    acc.insert(i, next);
                }
            }
        }
        Ok(acc.into_iter().collect())
    }

    /// The polynomial in normal words equal to `f` modulo the ideal.
    pub fn reduce(&self, f: &NcPoly) -> Result<NcPoly, AlgebraError> {
        let Some(n) = f.homogeneous_degree()? else {
            return Ok(NcPoly::zero());
        };
        let words = self.normal_words(n)?;
        let nf = self.normal_form(f)?;
        Ok(NcPoly::from_terms(
            nf.into_iter().map(|(i, c)| (words[i].clone(), c)),
        )?)
    }

    /// Whether `f` is zero in the quotient.
    pub fn contains(&self, f: &NcPoly) -> Result<bool, AlgebraError> {
        Ok(self.normal_form(f)?.is_empty())
    }

    pub fn is_central(&self, z: &NcPoly) -> Result<bool, AlgebraError> {
        let Some(d) = z.homogeneous_degree()? else {
            return Ok(true);
        };
        self.check(d + 1)?;
        for g in 0..4 {
            let x = NcPoly::gen(g);
            let c = z.try_mul(&x)?.try_sub(&x.try_mul(z)?)?;
            if !self.contains(&c)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Basis of the degree-`d` elements commuting with every generator
    /// modulo the ideal, written in normal words.
    pub fn central_subspace(&self, d: usize) -> Result<Vec<NcPoly>, AlgebraError> {
        self.check(d + 1)?;
        let words = self.normal_words(d)?;
        let kernel = dispatch!(self, q => central_kernel(q, d)?);
        Ok(kernel
            .into_iter()
            .map(|v| {
                NcPoly::from_terms(
                    v.into_iter()
                        .enumerate()
                        .map(|(i, c)| (words[i].clone(), c)),
                )
                .expect("single tower")
            })
            .collect())
    }
}

fn central_kernel<F: Coefficient>(
    q: &GradedQuotient<F>,
    d: usize,
) -> Result<Vec<Vec<TowerScalar>>, AlgebraError> {
    let dim = q.dimension(d).expect("checked");
    let next = q.dimension(d + 1).expect("checked");
    // columns: basis words of degree d; rows: (g, coordinate in degree d+1)
    let mut rows: Vec<BTreeMap<usize, F>> = vec![BTreeMap::new(); 4 * next];
    for b in 0..dim {
        for g in 0..4 {
            let r = q.right_multiply_basis(g, d, b).expect("checked");
            let l = q.left_multiply_basis(g, d, b).expect("checked");
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            linalg::axpy(&mut acc, &F::one(), r);
            linalg::axpy(&mut acc, &F::one().neg(), &l);
            for (i, x) in acc {
                rows[g * next + i].insert(b, x);
            }
        }
    }
    let mut ech = Echelon::new(dim);
    for r in rows {
        ech.insert(r.into_iter().collect())?;
    }
    ech.make_reduced();
    Ok(ech
        .null_space()
        .into_iter()
        .map(|v| v.iter().map(Coefficient::to_tower).collect())
        .collect())
}

/// One summand `coeff · left · r_k · right` of a membership certificate.
#[derive(Clone, Debug, PartialEq)]
pub struct CertificateTerm {
    pub left: Word,
    pub relation: usize,
    pub right: Word,
    pub coeff: TowerScalar,
}

/// A combination of relation multiples; see [`Certificate::evaluate`].
#[derive(Clone, Debug, PartialEq, Default)]
pub struct Certificate {
    pub terms: Vec<CertificateTerm>,
}

impl Certificate {
    /// Re-expands the combination in the free algebra.
    pub fn evaluate(&self, p: &Presentation) -> Result<NcPoly, AlgebraError> {
        let mut out = NcPoly::zero();
        for t in &self.terms {
            let r = p
                .relations()
                .get(t.relation)
                .ok_or_else(|| AlgebraError::Parse(format!("no relation {}", t.relation)))?;
            let u = NcPoly::monomial(t.left.clone(), t.coeff.clone());
            let w = NcPoly::monomial(t.right.clone(), TowerScalar::one());
            out = out.try_add(&u.try_mul(r)?.try_mul(&w)?)?;
        }
        Ok(out)
    }

    /// Coefficient on each relation when every term has empty left and
    /// right words (the degree-of-relation case).
    pub fn relation_coefficients(&self, count: usize) -> Option<Vec<TowerScalar>> {
        let mut out = vec![TowerScalar::zero(); count];
        for t in &self.terms {
            if !t.left.is_empty() || !t.right.is_empty() {
                return None;
            }
            out[t.relation] = out[t.relation].try_add(&t.coeff).ok()?;
        }
        Some(out)
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term<'a> {
            left: &'a [u8],
            relation: usize,
            right: &'a [u8],
            coeff: String,
        }
        serde_json::to_value(
            self.terms
                .iter()
                .map(|t| Term {
                    left: t.left.letters(),
                    relation: t.relation,
                    right: t.right.letters(),
                    coeff: t.coeff.to_exact_string(),
                })
                .collect::<Vec<_>>(),
        )
        .expect("plain data")
    }
}

/// Outcome of [`ideal_membership`].
#[derive(Clone, Debug)]
pub struct Membership {
    pub member: bool,
    pub certificate: Option<Certificate>,
}

/// Decides `f ∈ I` and, when true, finds `f = Σ c · u r w`.
///
/// The decision uses the graded quotient; the certificate is an independent
/// solve in the free algebra, restricted to products with the same G-degree
/// as `f`, and is re-evaluated before being returned.
pub fn ideal_membership(
    p: &Presentation,
    f: &NcPoly,
    bound: usize,
) -> Result<Membership, AlgebraError> {
    let Some(n) = f.homogeneous_degree()? else {
        return Ok(Membership {
            member: true,
            certificate: Some(Certificate::default()),
        });
    };
    if n > bound {
        return Err(AlgebraError::DegreeExceedsBound { degree: n, bound });
    }
    let alg = GradedAlgebra::new(p, n)?;
    if !alg.contains(f)? {
        return Ok(Membership {
            member: false,
            certificate: None,
        });
    }
    let certificate = certificate_for(p, f, n)?.ok_or_else(|| {
        AlgebraError::Inconsistent("quotient reports membership but no certificate exists".into())
    })?;
    if certificate.evaluate(p)? != *f {
        return Err(AlgebraError::Inconsistent(
            "certificate does not re-evaluate to the target".into(),
        ));
    }
    Ok(Membership {
        member: true,
        certificate: Some(certificate),
    })
}

fn certificate_for(
    p: &Presentation,
    f: &NcPoly,
    n: usize,
) -> Result<Option<Certificate>, AlgebraError> {
    let grading = p.g_degrees();
    let block = f.g_degree(grading);
    let rels = relation_terms(p);
    let products = free_products::<TowerScalar>(&rels, n)?;
    let (rows, meta): (Vec<_>, Vec<_>) = products
        .into_iter()
        .filter(|(row, _)| match (block, row.first()) {
            (Some(g), Some((c, _))) => Word::from_rank_index(*c, n).g_degree(grading) == g,
            _ => true,
        })
        .unzip();
    let mut target: SparseVec<TowerScalar> = f
        .terms()
        .map(|(w, c)| (w.rank_index(), c.clone()))
        .collect();
    target.sort_by_key(|(c, _)| *c);
    let Some(coeffs) = linalg::express_in_span(&rows, &target)? else {
        return Ok(None);
    };
    let terms = coeffs
        .into_iter()
        .zip(meta)
        .filter(|(c, _)| !c.is_zero())
        .map(|(coeff, (left, relation, right))| CertificateTerm {
            left,
            relation,
            right,
            coeff,
        })
        .collect();
    Ok(Some(Certificate { terms }))
}

pub fn homogeneous_dimension(
    p: &Presentation,
    n: usize,
    bound: usize,
) -> Result<usize, AlgebraError> {
    if n > bound {
        return Err(AlgebraError::DegreeExceedsBound { degree: n, bound });
    }
    GradedAlgebra::new(p, n)?.dimension(n)
}

/// `4^n - rank{u·r·w}` by direct elimination in the free algebra.
pub fn free_rank_dimension(p: &Presentation, n: usize) -> Result<usize, AlgebraError> {
    let rels = relation_terms(p);
    if p.is_rational() {
        free_span_dimension::<Rational>(&rels, n)
    } else {
        free_span_dimension::<TowerScalar>(&rels, n)
    }
}

pub fn is_central(p: &Presentation, z: &NcPoly, bound: usize) -> Result<bool, AlgebraError> {
    let d = z.homogeneous_degree()?.unwrap_or(0);
    if d + 1 > bound {
        return Err(AlgebraError::DegreeExceedsBound {
            degree: d + 1,
            bound,
        });
    }
    GradedAlgebra::new(p, d + 1)?.is_central(z)
}

pub fn central_subspace(
    p: &Presentation,
    d: usize,
    bound: usize,
) -> Result<Vec<NcPoly>, AlgebraError> {
    if d + 1 > bound {
        return Err(AlgebraError::DegreeExceedsBound {
            degree: d + 1,
            bound,
        });
    }
    GradedAlgebra::new(p, d + 1)?.central_subspace(d)
}

/// Hilbert data behind [`regular_sequence_check`].
#[derive(Clone, Debug, Serialize)]
pub struct RegularSequenceReport {
    pub holds: bool,
    /// Smallest degree where a predicted dimension is missed.
    pub first_failure: Option<usize>,
    pub base: Vec<usize>,
    pub modulo_first: Vec<usize>,
    pub modulo_both: Vec<usize>,
}

/// Compares the Hilbert functions of `p`, `p/(z1)` and `p/(z1, z2)` with
/// the factorization expected of a regular sequence of degree-2 central
/// elements.
pub fn regular_sequence_check(
    p: &Presentation,
    z1: &NcPoly,
    z2: &NcPoly,
    bound: usize,
) -> Result<RegularSequenceReport, AlgebraError> {
    let base_alg = GradedAlgebra::new(p, bound)?;
    for z in [z1, z2] {
        if z.homogeneous_degree()? != Some(2) {
            return Err(AlgebraError::NonCentral(format!("{z} is not of degree 2")));
        }
        if bound >= 3 && !base_alg.is_central(z)? {
            return Err(AlgebraError::NonCentral(z.to_string()));
        }
    }
    let base = base_alg.dimensions();
    let modulo_first =
        GradedAlgebra::new(&quotient(p, std::slice::from_ref(z1))?, bound)?.dimensions();
    let modulo_both =
        GradedAlgebra::new(&quotient(p, &[z1.clone(), z2.clone()])?, bound)?.dimensions();
    let h = |n: isize| if n < 0 { 0 } else { base[n as usize] as isize };
    let mut first_failure = None;
    for n in 0..=bound {
        let ni = n as isize;
        let one = h(ni) - h(ni - 2);
        let two = h(ni) - 2 * h(ni - 2) + h(ni - 4);
        if modulo_first[n] as isize != one || modulo_both[n] as isize != two {
            first_failure = Some(n);
            break;
        }
    }
    Ok(RegularSequenceReport {
        holds: first_failure.is_none(),
        first_failure,
        base,
        modulo_first,
        modulo_both,
    })
}
