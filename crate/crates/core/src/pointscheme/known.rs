use serde_json::json;

use super::{MultilinearSystem, Point, PointError};
use crate::cocycle::KleinElement;
use crate::field::{FieldSpec, TowerScalar};
use crate::ncalg::{ParamRadicals, Params};

/// The 16 non-coordinate points of the twisted point scheme, each paired
/// with its image under the shift. Radicals are read as products of the
/// chosen roots, e.g. `(βγ)^{1/2} = sb·sc`.
pub fn known_point_pairs(r: &ParamRadicals) -> Result<Vec<(Point, Point)>, PointError> {
    let one = TowerScalar::one();
    let i = TowerScalar::i();
    let inv = |x: &TowerScalar| x.invert();
    let ib = inv(&r.sb)?;
    let ic = inv(&r.sc)?;
    let ia = inv(&r.sa)?;
    let ibc = inv(&r.sb.try_mul(&r.sc)?)?;
    let iac = inv(&r.sa.try_mul(&r.sc)?)?;
    let iab = inv(&r.sa.try_mul(&r.sb)?)?;
    let n = |x: &TowerScalar| x.negated();
    let ti = |x: &TowerScalar| i.try_mul(x);

    let mut pairs = Vec::with_capacity(16);
    let mut push = |p: [TowerScalar; 4], q: [TowerScalar; 4]| -> Result<(), PointError> {
        pairs.push((Point::new(p)?, Point::new(q)?));
        Ok(())
    };
    for s in [one.clone(), n(&one)] {
        let si = s.try_mul(&i)?;
        // fixed points
        let p = [one.clone(), si.clone(), si.clone(), one.clone()];
        push(p.clone(), p)?;
        let p = [one.clone(), si.clone(), n(&si), n(&one)];
        push(p.clone(), p)?;

        let sc_ = s.try_mul(&ic)?;
        let sb_ = s.try_mul(&ib)?;
        push(
            [one.clone(), n(&ibc), n(&sc_), n(&sb_)],
            [one.clone(), n(&ibc), sc_.clone(), sb_.clone()],
        )?;
        push(
            [one.clone(), ibc.clone(), n(&sc_), sb_.clone()],
            [one.clone(), ibc.clone(), sc_.clone(), n(&sb_)],
        )?;

        let sic = s.try_mul(&ti(&ic)?)?;
        let sia = s.try_mul(&ti(&ia)?)?;
        push(
            [one.clone(), sic.clone(), iac.clone(), sia.clone()],
            [one.clone(), n(&sic), iac.clone(), n(&sia)],
        )?;
        push(
            [one.clone(), n(&sic), n(&iac), sia.clone()],
            [one.clone(), sic.clone(), n(&iac), n(&sia)],
        )?;

        let iiab = ti(&iab)?;
        push(
            [one.clone(), sb_.clone(), sia.clone(), iiab.clone()],
            [one.clone(), n(&sb_), n(&sia), iiab.clone()],
        )?;
        push(
            [one.clone(), sb_.clone(), n(&sia), n(&iiab)],
            [one.clone(), n(&sb_), sia.clone(), n(&iiab)],
        )?;
    }
    Ok(pairs)
}

/// `e0..e3` followed by the 16 points of [`known_point_pairs`].
pub fn known_points(params: &Params) -> Result<(ParamRadicals, Vec<Point>), PointError> {
    let r = params.radicals()?;
    let pts = known_points_in(&r)?;
    Ok((r, pts))
}

/// [`known_points`] over already chosen radicals.
pub fn known_points_in(r: &ParamRadicals) -> Result<Vec<Point>, PointError> {
    for (name, x) in [("sa", &r.sa), ("sb", &r.sb), ("sc", &r.sc)] {
        if !x.spec().is_prefix_of(&r.spec) {
            return Err(PointError::MissingRadical(name.into()));
        }
    }
    let mut out: Vec<Point> = (0..4).map(Point::basis).collect();
    out.extend(known_point_pairs(r)?.into_iter().map(|(p, _)| p));
    Ok(out)
}

/// Representatives of the four size-4 orbits, keyed by their shift label.
pub fn orbit_representatives(r: &ParamRadicals) -> Result<[(KleinElement, Point); 4], PointError> {
    let one = TowerScalar::one();
    let i = TowerScalar::i();
    let inv = |x: &TowerScalar| x.invert();
    Ok([
        (
            KleinElement::E,
            Point::new([one.clone(), i.clone(), i.clone(), one.clone()])?,
        ),
        (
            KleinElement::G1,
            Point::new([
                one.clone(),
                inv(&r.sb.try_mul(&r.sc)?)?,
                inv(&r.sc)?.negated(),
                inv(&r.sb)?,
            ])?,
        ),
        (
            KleinElement::G2,
            Point::new([
                one.clone(),
                i.try_mul(&inv(&r.sc)?)?,
                inv(&r.sa.try_mul(&r.sc)?)?,
                i.try_mul(&inv(&r.sa)?)?,
            ])?,
        ),
        (
            KleinElement::G1G2,
            Point::new([
                one,
                inv(&r.sb)?,
                i.try_mul(&inv(&r.sa)?)?,
                i.try_mul(&inv(&r.sa.try_mul(&r.sb)?)?)?,
            ])?,
        ),
    ])
}

/// Pairwise projective distinctness, checked by cross-products.
pub fn pairwise_distinct(points: &[Point]) -> Result<bool, PointError> {
    for (k, p) in points.iter().enumerate() {
        for q in &points[k + 1..] {
            if p.projectively_equal(q)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// One G-orbit and, for orbits of size 4, the element `h` with
/// `shift(p^g) = (p^g)^h` for every member.
#[derive(Clone, Debug)]
pub struct Orbit {
    pub points: Vec<Point>,
    pub label: Option<KleinElement>,
}

#[derive(Clone, Debug)]
pub struct OrbitReport {
    pub orbits: Vec<Orbit>,
    /// Points fixed by the shift.
    pub fixed_points: usize,
}

impl OrbitReport {
    pub fn sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.orbits.iter().map(|o| o.points.len()).collect();
        s.sort_unstable();
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "fixed_points": self.fixed_points,
            "orbits": self.orbits.iter().map(|o| json!({
                "label": o.label.map(KleinElement::name),
                "points": o.points.iter().map(Point::to_json).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
        })
    }
}

/// Partitions `points` into G-orbits and labels each orbit of size > 1 by
/// the group element through which the shift acts on it. Singleton orbits
/// carry no label.
pub fn orbit_report(points: &[Point], s: &MultilinearSystem) -> Result<OrbitReport, PointError> {
    let find = |q: &Point| points.iter().position(|p| p == q);
    let mut seen = vec![false; points.len()];
    let mut orbits = Vec::new();
    let mut fixed_points = 0;
    for (k, p) in points.iter().enumerate() {
        if s.successor(p)? == *p {
            fixed_points += 1;
        }
        if seen[k] {
            continue;
        }
        let mut members = Vec::new();
        for g in KleinElement::ALL {
            let q = p.act(g);
            let idx = find(&q).ok_or_else(|| PointError::NotActionClosed(q.to_string()))?;
            if !seen[idx] {
                seen[idx] = true;
                members.push(q);
            }
        }
        let label = if members.len() > 1 {
            let shifts = members
                .iter()
                .map(|m| s.successor(m))
                .collect::<Result<Vec<_>, _>>()?;
            KleinElement::ALL
                .into_iter()
                .find(|h| members.iter().zip(&shifts).all(|(m, sm)| m.act(*h) == *sm))
        } else {
            None
        };
        orbits.push(Orbit {
            points: members,
            label,
        });
    }
    Ok(OrbitReport {
        orbits,
        fixed_points,
    })
}

/// The tower the known points live in.
pub fn known_points_spec(params: &Params) -> Result<std::sync::Arc<FieldSpec>, PointError> {
    Ok(params.radicals()?.spec)
}
