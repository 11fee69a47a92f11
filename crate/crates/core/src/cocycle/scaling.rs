use super::{twist_presentation, CocycleTable, GradingAssignment, Perm4};
use crate::field::{FieldError, TowerScalar};
use crate::ncalg::{span_equal, AlgebraError, ParamRadicals, Params, Presentation};

/// A grading of `A(α,β,γ)` together with a diagonal change of variables
/// carrying its twist onto the standard twist of another parameter triple.
#[derive(Clone, Debug)]
pub struct ScalingRow {
    pub grading: GradingAssignment,
    pub scale: [TowerScalar; 4],
    pub target: Params,
}

/// Twists `source` along `grading`, substitutes `v_i ↦ scale[i] v_i`, and
/// compares relation spans with `target`.
pub fn scaling_isomorphism_check(
    source: &Presentation,
    grading: &GradingAssignment,
    scale: &[TowerScalar; 4],
    target: &Presentation,
) -> Result<bool, AlgebraError> {
    for c in scale {
        c.invert()?;
    }
    let twisted = twist_presentation(source, grading, &CocycleTable::standard())?;
    let scaled = twisted
        .relations()
        .iter()
        .map(|r| {
            r.map_coeffs(|w| {
                w.letters().iter().try_fold(TowerScalar::one(), |acc, &l| {
                    acc.try_mul(&scale[l as usize])
                })
            })
        })
        .collect::<Result<Vec<_>, FieldError>>()?;
    span_equal(&scaled, target.relations())
}

/// The three gradings outside the identity class that land, after scaling,
/// in twists of reciprocal parameter triples.
pub fn scaling_table(params: &Params, r: &ParamRadicals) -> Result<Vec<ScalingRow>, AlgebraError> {
    let i = TowerScalar::i();
    let one = TowerScalar::one();
    let inv = |x: &TowerScalar| x.invert();
    let (sa, sb, sc) = (&r.sa, &r.sb, &r.sc);
    let (a, b, c) = (params.alpha(), params.beta(), params.gamma());

    let row1 = ScalingRow {
        grading: GradingAssignment::new(Perm4::new([1, 0, 2, 3]).expect("perm")),
        scale: [
            one.clone(),
            i.try_mul(&inv(&sb.try_mul(sc)?)?)?,
            inv(sc)?.negated(),
            i.try_mul(&inv(sb)?)?.negated(),
        ],
        target: Params::new(a.clone(), b.recip(), c.recip())?,
    };
    let row2 = ScalingRow {
        grading: GradingAssignment::new(Perm4::new([2, 1, 0, 3]).expect("perm")),
        scale: [
            one.clone(),
            i.try_mul(&inv(sc)?)?,
            i.try_mul(&inv(&sa.try_mul(sc)?)?)?,
            inv(sa)?,
        ],
        target: Params::new(a.recip(), b.clone(), c.recip())?,
    };
    let row3 = ScalingRow {
        grading: GradingAssignment::new(Perm4::new([3, 1, 2, 0]).expect("perm")),
        scale: [
            one,
            i.try_mul(&inv(sb)?)?,
            inv(sa)?,
            i.try_mul(&inv(&sa.try_mul(sb)?)?)?,
        ],
        target: Params::new(a.recip(), b.recip(), c.clone())?,
    };
    Ok(vec![row1, row2, row3])
}
