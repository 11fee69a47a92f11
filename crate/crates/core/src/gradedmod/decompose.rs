use serde_json::json;

use super::fat::{double, fat_point};
use super::point_module::PointModuleData;
use super::slice::{basis_of, transpose, vec_mat, ModuleSlice};
use super::ModuleError;
use crate::cocycle::{g_translate, KleinElement};
use crate::field::TowerScalar;
use crate::linalg;
use crate::ncalg::{in_span, NcPoly, Presentation, Word};
use crate::pointscheme::{pairwise_distinct, Point};

/// Degree-1 elements `Σ c_i x_i` with `v · Σ c_i x_i = 0`, for a degree-0
/// vector `v`.
pub fn annihilator_degree1(m: &ModuleSlice, v: &[TowerScalar]) -> Result<Vec<NcPoly>, ModuleError> {
    if m.depth() == 0 {
        return Err(ModuleError::DegreeOutOfRange {
            degree: 1,
            depth: 0,
        });
    }
    let images = (0..m.generators())
        .map(|g| vec_mat(v, m.action(g, 0)))
        .collect::<Result<Vec<_>, _>>()?;
    let cols = transpose(&images, m.dims()[1]);
    let kernel = linalg::kernel(&cols, m.generators())?;
    kernel
        .into_iter()
        .map(|c| {
            let mut f = NcPoly::zero();
            for (i, x) in c.into_iter().enumerate() {
                f.add_term(Word::letter(i), x)?;
            }
            Ok(f)
        })
        .collect()
}

/// The point `p` whose degree-1 annihilator `span{p_0 x_j - p_j x_0}` is
/// the given subspace: the common zero of its linear forms.
pub fn identify_point(subspace: &[NcPoly]) -> Result<Point, ModuleError> {
    let rows: Vec<Vec<TowerScalar>> = subspace
        .iter()
        .map(|f| (0..4).map(|i| f.coeff(&Word::letter(i))).collect())
        .collect();
    let rank = basis_of(&rows, 4)?.len();
    if rank != 3 || subspace.iter().any(|f| f.degree().is_some_and(|d| d != 1)) {
        return Err(ModuleError::NotPointModule(rank));
    }
    let p = linalg::kernel(&rows, 4)?
        .pop()
        .expect("rank 3 leaves one vector");
    Ok(Point::new(p.try_into().expect("four coordinates"))?)
}

/// One cyclic summand: its degree-0 generator and the identified point.
#[derive(Clone, Debug)]
pub struct Summand {
    pub generator: Vec<TowerScalar>,
    pub point: Point,
}

#[derive(Clone, Debug)]
pub struct DecompositionReport {
    pub summands: Vec<Summand>,
    /// Dimension of the restricted module per degree.
    pub dims: Vec<usize>,
}

impl DecompositionReport {
    pub fn points(&self) -> Vec<Point> {
        self.summands.iter().map(|s| s.point.clone()).collect()
    }

    pub fn distinct(&self) -> Result<bool, ModuleError> {
        Ok(pairwise_distinct(&self.points())?)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "dims": self.dims,
            "summands": self.summands.iter().map(|s| json!({
                "generator": s.generator.iter().map(TowerScalar::to_exact_string).collect::<Vec<_>>(),
                "point": s.point.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Cyclic generators of the four summands, in the order that identifies
/// `p`, `p^{g1}`, `p^{g2}`, `p^{g1g2}`.
pub const SUMMAND_GENERATORS: [[i64; 4]; 4] =
    [[1, 0, 0, 1], [1, 0, 0, -1], [0, 1, 1, 0], [0, 1, -1, 0]];

/// Builds the fat point of `pm` over `acting`, restricts it back along the
/// 2×2 embedding to the algebra `pm` lives over (`base`), and splits the
/// 4-dimensional result into four cyclic point modules. Each summand must
/// be one-dimensional in every degree, and together they must fill the
/// module.
pub fn restrict_and_decompose(
    pm: &PointModuleData,
    acting: &Presentation,
    base: &Presentation,
    depth: usize,
) -> Result<DecompositionReport, ModuleError> {
    let fat = fat_point(pm, acting, depth)?;
    let restricted = double(&fat)?;
    if let Some(k) = restricted.check_relations(base)? {
        return Err(ModuleError::RelationFails(base.relations()[k].to_string()));
    }
    let mut summands = Vec::with_capacity(4);
    let mut layers_by_degree: Vec<Vec<Vec<TowerScalar>>> = vec![Vec::new(); depth + 1];
    for gen in SUMMAND_GENERATORS {
        let v: Vec<TowerScalar> = gen.iter().map(|&x| TowerScalar::from_int(x)).collect();
        let layers = restricted.generated(0, std::slice::from_ref(&v))?;
        if layers.iter().any(|b| b.len() != 1) {
            return Err(ModuleError::Decomposition(format!(
                "generator {gen:?} does not span a point module"
            )));
        }
        for (acc, b) in layers_by_degree.iter_mut().zip(layers) {
            acc.extend(b);
        }
        let point = identify_point(&annihilator_degree1(&restricted, &v)?)?;
        summands.push(Summand {
            generator: v,
            point,
        });
    }
    for (j, vs) in layers_by_degree.iter().enumerate() {
        if basis_of(vs, restricted.dims()[j])?.len() != restricted.dims()[j] {
            return Err(ModuleError::Decomposition(format!(
                "summands do not fill degree {j}"
            )));
        }
    }
    Ok(DecompositionReport {
        summands,
        dims: restricted.dims().to_vec(),
    })
}

/// Degree-`d` elements of the free algebra killing every basis vector of
/// every module in `modules`, as a basis of polynomials.
pub fn orbit_annihilator(
    modules: &[PointModuleData],
    d: usize,
) -> Result<Vec<NcPoly>, ModuleError> {
    let words: Vec<Word> = Word::all_of_length(d).collect();
    let mut rows = Vec::new();
    for pm in modules {
        for j in 0..=pm.depth().saturating_sub(d) {
            if j + d > pm.depth() {
                break;
            }
            let row = words
                .iter()
                .map(|w| {
                    let mut acc = TowerScalar::one();
                    for (t, &l) in w.letters().iter().enumerate() {
                        acc = acc.try_mul(&pm.rows[j + t][l as usize])?;
                    }
                    Ok(acc)
                })
                .collect::<Result<Vec<_>, ModuleError>>()?;
            rows.push(row);
        }
    }
    let kernel = linalg::kernel(&rows, words.len())?;
    kernel
        .into_iter()
        .map(|c| {
            let mut f = NcPoly::zero();
            for (w, x) in words.iter().zip(c) {
                f.add_term(w.clone(), x)?;
            }
            Ok(f)
        })
        .collect()
}

/// Whether the span of `basis` is stable under `x_i ↦ χ_g(|x_i|) x_i` for
/// every `g`.
pub fn subspace_is_g_invariant(
    basis: &[NcPoly],
    grading: &[KleinElement; 4],
) -> Result<bool, ModuleError> {
    for g in KleinElement::ALL {
        for f in basis {
            let moved = g_translate(f, g, grading)?;
            if !in_span(basis, &moved)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
