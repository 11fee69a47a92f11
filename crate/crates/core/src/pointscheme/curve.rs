use super::{Point, PointError};
use crate::field::{Rational, TowerScalar};
use crate::ncalg::Params;

fn squares(p: &Point) -> Result<[TowerScalar; 4], PointError> {
    let c = p.coords();
    Ok([
        c[0].try_mul(&c[0])?,
        c[1].try_mul(&c[1])?,
        c[2].try_mul(&c[2])?,
        c[3].try_mul(&c[3])?,
    ])
}

/// Whether `p` lies on both quadrics cutting out the elliptic curve:
/// `y0² + y1² + y2² + y3² = 0` and `y3² + λ1 y1² + λ2 y2² = 0`.
pub fn curve_membership(p: &Point, params: &Params) -> Result<bool, PointError> {
    let (l1, l2) = params.curve_coefficients();
    let [s0, s1, s2, s3] = squares(p)?;
    let first = s0.try_add(&s1)?.try_add(&s2)?.try_add(&s3)?;
    let second = s3.try_add(&s1.scale(&l1))?.try_add(&s2.scale(&l2))?;
    Ok(first.is_zero() && second.is_zero())
}

/// A point of the curve with `p0 = 1` and `p1 = seed`. The two quadrics are
/// linear in `p2²` and `p3²`; their roots are looked up in, or adjoined to,
/// the tower of `seed`.
pub fn curve_point(params: &Params, seed: &TowerScalar) -> Result<Point, PointError> {
    let s2 = seed.try_mul(seed)?;
    let s2 = s2
        .as_rational()
        .ok_or_else(|| PointError::MissingRadical(format!("seed² = {s2} is not rational")))?;
    let (l1, l2) = params.curve_coefficients();
    let one = Rational::from_integer(1.into());
    let denom = &one - &l2;
    if denom == Rational::from_integer(0.into()) {
        return Err(PointError::DegenerateSeed("λ2 = 1".into()));
    }
    let x = (&l1 * &s2 - &s2 - &one) / &denom;
    let y = -(&l1 * &s2) - &l2 * &x;
    let zero = Rational::from_integer(0.into());
    if x == zero || y == zero {
        return Err(PointError::DegenerateSeed(format!(
            "p2² = {}, p3² = {}",
            crate::field::format_rational(&x),
            crate::field::format_rational(&y)
        )));
    }
    let (spec, r2) = seed.spec().sqrt_or_adjoin(&x)?;
    let (spec, r3) = spec.sqrt_or_adjoin(&y)?;
    let p = Point::new([
        TowerScalar::one().embed(&spec)?,
        seed.embed(&spec)?,
        r2.embed(&spec)?,
        r3,
    ])?;
    debug_assert!(curve_membership(&p, params).unwrap_or(false));
    Ok(p)
}
