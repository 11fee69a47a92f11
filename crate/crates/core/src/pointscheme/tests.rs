use super::*;
use crate::cocycle::KleinElement as K;
use crate::field::{rat, FieldSpec, TowerScalar};
use crate::ncalg::{sklyanin_presentation, twisted_sklyanin_presentation, NcPoly, Params};

fn twisted_system(p: &Params) -> MultilinearSystem {
    multilinearize(&twisted_sklyanin_presentation(p).unwrap()).unwrap()
}

fn ints(v: [i64; 4]) -> Vec<TowerScalar> {
    v.map(TowerScalar::from_int).to_vec()
}

#[test]
fn second_form_matches_the_multilinearization() {
    let s = twisted_system(&Params::defaults());
    let f = s.form(1);
    let one = TowerScalar::one();
    let m1 = TowerScalar::from_int(-1);
    // m2 = v01 v12 + v11 v02 - v21 v32 - v31 v22
    assert_eq!(f[0][1], one);
    assert_eq!(f[1][0], one);
    assert_eq!(f[2][3], m1);
    assert_eq!(f[3][2], m1);
    let e0 = Point::basis(0);
    let e1 = Point::basis(1);
    assert!(s.vanishes_at(&e0, &e0).unwrap());
    assert!(!s.vanishes_at(&e0, &e1).unwrap());
    assert_eq!(s.evaluate(0, e0.coords(), e1.coords()).unwrap(), one);
}

#[test]
fn rejects_non_quadratic() {
    let p = Params::defaults();
    let a = sklyanin_presentation(&p).unwrap();
    let cubic = NcPoly::gen(0).try_mul(&a.relations()[0]).unwrap();
    let bad = crate::ncalg::quotient(&a, &[cubic]).unwrap();
    assert!(matches!(
        multilinearize(&bad),
        Err(PointError::NotQuadratic(_))
    ));
}

#[test]
fn coefficient_matrix_at_e0() {
    let s = twisted_system(&Params::defaults());
    let m = coefficient_matrix(&s, &Point::basis(0)).unwrap();
    let expect = vec![
        ints([0, 1, 0, 0]),
        ints([0, 1, 0, 0]),
        ints([0, 0, 1, 0]),
        ints([0, 0, 1, 0]),
        ints([0, 0, 0, 1]),
        ints([0, 0, 0, 1]),
    ];
    assert_eq!(m, expect);
}

#[test]
fn rank_four_off_the_scheme() {
    let s = twisted_system(&Params::defaults());
    let p = Point::from_ints([1, 1, 0, 0]).unwrap();
    assert_eq!(s.rank_at(&p).unwrap(), 4);
    assert_eq!(s.successor(&p), Err(PointError::KernelDimZero));
}

#[test]
fn twenty_points_have_rank_three() {
    let p = Params::defaults();
    let s = twisted_system(&p);
    let (_, pts) = known_points(&p).unwrap();
    assert_eq!(pts.len(), 20);
    assert!(pairwise_distinct(&pts).unwrap());
    for q in &pts {
        assert_eq!(s.rank_at(q).unwrap(), 3, "{q}");
    }
}

#[test]
fn successor_pairs_match_the_display() {
    let p = Params::defaults();
    let s = twisted_system(&p);
    let r = p.radicals().unwrap();
    for (a, b) in known_point_pairs(&r).unwrap() {
        assert_eq!(s.successor(&a).unwrap(), b, "{a}");
        assert!(s.vanishes_at(&a, &b).unwrap());
    }
    for j in 0..4 {
        let e = Point::basis(j);
        assert_eq!(s.successor(&e).unwrap(), e);
    }
}

#[test]
fn shift_is_an_involution_with_eight_fixed_points() {
    let p = Params::defaults();
    let s = twisted_system(&p);
    let (_, pts) = known_points(&p).unwrap();
    let mut fixed = 0;
    for q in &pts {
        let q1 = s.successor(q).unwrap();
        assert_eq!(s.successor(&q1).unwrap(), *q);
        fixed += usize::from(q1 == *q);
    }
    assert_eq!(fixed, 8);
}

#[test]
fn orbits_and_labels() {
    let p = Params::defaults();
    let s = twisted_system(&p);
    let (r, pts) = known_points(&p).unwrap();
    let rep = orbit_report(&pts, &s).unwrap();
    assert_eq!(rep.sizes(), vec![1, 1, 1, 1, 4, 4, 4, 4]);
    assert_eq!(rep.fixed_points, 8);
    for (h, q) in orbit_representatives(&r).unwrap() {
        let orbit = rep
            .orbits
            .iter()
            .find(|o| o.points.contains(&q))
            .expect("representative is listed");
        assert_eq!(orbit.label, Some(h), "{q}");
        for m in &orbit.points {
            assert_eq!(s.successor(m).unwrap(), m.act(h));
        }
    }
    assert!(rep
        .orbits
        .iter()
        .filter(|o| o.points.len() == 1)
        .all(|o| o.label.is_none()));

    let missing = &pts[..5];
    assert!(matches!(
        orbit_report(missing, &s),
        Err(PointError::NotActionClosed(_))
    ));
}

#[test]
fn untwisted_system_fixes_coordinate_points() {
    let a = sklyanin_presentation(&Params::defaults()).unwrap();
    let s = multilinearize(&a).unwrap();
    for j in 0..4 {
        let e = Point::basis(j);
        assert_eq!(s.successor(&e).unwrap(), e);
    }
}

#[test]
fn missing_radical_is_reported() {
    let p = Params::defaults();
    let mut r = p.radicals().unwrap();
    r.spec = FieldSpec::gaussian();
    assert!(matches!(
        known_points_in(&r),
        Err(PointError::MissingRadical(_))
    ));
}

#[test]
fn curve_fixture() {
    let p = Params::defaults();
    let q = curve_point(&p, &TowerScalar::one()).unwrap();
    assert!(curve_membership(&q, &p).unwrap());
    assert_eq!(q.nonzero_count(), 4);
    // (√5, √5, 3i, i) normalized: p2 = 3i/√5, p3 = i/√5
    let spec = q.coords()[2].spec().clone();
    let s5 = TowerScalar::symbol(&spec, "s5").unwrap();
    let i = TowerScalar::i();
    let fixture = Point::new([s5.clone(), s5, i.scale(&rat(3, 1)), i]).unwrap();
    assert!(q.projectively_equal(&fixture).unwrap());
    assert_eq!(q, fixture);

    let mut orbit = Vec::new();
    for g in K::ALL {
        let t = q.act(g);
        assert!(curve_membership(&t, &p).unwrap());
        orbit.push(t);
    }
    assert!(pairwise_distinct(&orbit).unwrap());
    assert!(!curve_membership(&Point::basis(0), &p).unwrap());
}

#[test]
fn curve_point_seeds() {
    let p = Params::defaults();
    let q = curve_point(&p, &TowerScalar::from_int(2)).unwrap();
    assert!(curve_membership(&q, &p).unwrap());
    // seed² = -1/8 makes p2² vanish
    let r = p.radicals().unwrap();
    let seed = TowerScalar::i().try_mul(&r.sb).unwrap().scale(&rat(1, 4));
    assert!(matches!(
        curve_point(&p, &seed),
        Err(PointError::DegenerateSeed(_))
    ));
    let spec = FieldSpec::gaussian()
        .adjoin_sqrt(&TowerScalar::from_int(2), "t")
        .unwrap();
    let t = TowerScalar::symbol(&spec, "t").unwrap();
    let irrational = t.try_add(&TowerScalar::one()).unwrap();
    assert!(matches!(
        curve_point(&p, &irrational),
        Err(PointError::MissingRadical(_))
    ));
}

#[test]
fn exclusion_at_defaults() {
    let s = twisted_system(&Params::defaults());
    let rep = exclusion_report(&s).unwrap();
    assert_eq!(rep.patterns.len(), 6);
    assert!(rep.passes(), "{:?}", rep.to_json());
}

#[test]
fn exclusion_fails_at_degenerate_parameters() {
    // α = 2, β = -1, γ = 1 satisfies the constraint but β = -1
    let p = Params::new_unchecked(rat(2, 1), rat(-1, 1), rat(1, 1));
    let s = twisted_system_unchecked(&p);
    let rep = exclusion_report(&s).unwrap();
    assert!(!rep.pattern(0, 1).unwrap().passes());
    assert!(!two_zero_exclusion(&s).unwrap());
}

#[test]
fn beta_minus_one_alone_is_still_excluded() {
    // only the coefficient β is replaced; the γ rows still give a minor
    let p = Params::new_unchecked(rat(-5, 7), rat(-1, 1), rat(3, 1));
    let s = twisted_system_unchecked(&p);
    assert!(exclusion_report(&s)
        .unwrap()
        .pattern(0, 1)
        .unwrap()
        .passes());
}

fn twisted_system_unchecked(p: &Params) -> MultilinearSystem {
    let pres = crate::ncalg::Presentation::new(
        "raw",
        crate::cocycle::standard_grading(),
        crate::ncalg::twisted_relations(p),
        None,
    )
    .unwrap();
    multilinearize(&pres).unwrap()
}
