//! Named elements and presentations: the central quadrics, the twisted
//! relations written out by hand, and the degree-1 nilpotent.

use super::{quotient, sklyanin_presentation, AlgebraError, NcPoly, Params, Presentation};
use crate::cocycle::standard_grading;
use crate::field::{int, TowerScalar};

fn q(r: crate::field::Rational) -> TowerScalar {
    TowerScalar::from_rational(r)
}

/// `-x0^2 + x1^2 + x2^2 + x3^2`
pub fn omega1() -> NcPoly {
    NcPoly::diagonal_quadric(&[q(int(-1)), q(int(1)), q(int(1)), q(int(1))])
}

/// `x1^2 + (1+a)/(1-b) x2^2 + (1-a)/(1+c) x3^2`
pub fn omega2(params: &Params) -> NcPoly {
    let (c2, c3) = params.quadric_coefficients();
    NcPoly::diagonal_quadric(&[TowerScalar::zero(), q(int(1)), q(c2), q(c3)])
}

/// `-v0^2 + v1^2 + v2^2 - v3^2`
pub fn theta1() -> NcPoly {
    NcPoly::diagonal_quadric(&[q(int(-1)), q(int(1)), q(int(1)), q(int(-1))])
}

/// `v1^2 + (1+a)/(1-b) v2^2 - (1-a)/(1+c) v3^2`
pub fn theta2(params: &Params) -> NcPoly {
    let (c2, c3) = params.quadric_coefficients();
    NcPoly::diagonal_quadric(&[TowerScalar::zero(), q(int(1)), q(c2), q(-c3)])
}

/// The six relations of the twisted algebra as written in closed form:
/// `[v0,v1] - a[v2,v3]`, `[v0,v1]+ - [v2,v3]+`, `[v0,v2] - b[v3,v1]`,
/// `[v0,v2]+ - [v3,v1]+`, `[v0,v3] + c[v1,v2]`, `[v0,v3]+ + [v1,v2]+`.
///
/// Kept separate from the mechanical twist so the two can be compared.
pub fn twisted_relations(params: &Params) -> Vec<NcPoly> {
    let [a, b, c] = params.triple();
    vec![
        &NcPoly::commutator(0, 1) - &NcPoly::commutator(2, 3).scale(&a),
        &NcPoly::anticommutator(0, 1) - &NcPoly::anticommutator(2, 3),
        &NcPoly::commutator(0, 2) - &NcPoly::commutator(3, 1).scale(&b),
        &NcPoly::anticommutator(0, 2) - &NcPoly::anticommutator(3, 1),
        &NcPoly::commutator(0, 3) + &NcPoly::commutator(1, 2).scale(&c),
        &NcPoly::anticommutator(0, 3) + &NcPoly::anticommutator(1, 2),
    ]
}

/// The twisted algebra from the closed-form relations.
pub fn twisted_sklyanin_presentation(params: &Params) -> Result<Presentation, AlgebraError> {
    params.check()?;
    Presentation::new(
        "A^twist",
        standard_grading(),
        twisted_relations(params),
        Some(params.clone()),
    )
}

/// `A / (Ω1, Ω2)`
pub fn factor_ring(params: &Params) -> Result<Presentation, AlgebraError> {
    let a = sklyanin_presentation(params)?;
    Ok(quotient(&a, &[omega1(), omega2(params)])?.with_name("B"))
}

/// `A^twist / (Θ1, Θ2)`
pub fn twisted_factor_ring(params: &Params) -> Result<Presentation, AlgebraError> {
    let a = twisted_sklyanin_presentation(params)?;
    Ok(quotient(&a, &[theta1(), theta2(params)])?.with_name("B^twist"))
}

/// `v0 - i v1 - i v2 - v3`, which squares to zero in the twisted factor ring.
pub fn nilpotent_element() -> NcPoly {
    let i = TowerScalar::i();
    let mut v = NcPoly::gen(0);
    v = &v - &NcPoly::gen(1).scale(&i);
    v = &v - &NcPoly::gen(2).scale(&i);
    &v - &NcPoly::gen(3)
}
