use super::*;
use crate::field::TowerScalar;

fn binom3(n: usize) -> usize {
    (n + 1) * (n + 2) * (n + 3) / 6
}

#[test]
fn hilbert_series_of_a_and_its_twist() {
    let p = Params::defaults();
    for pres in [
        sklyanin_presentation(&p).unwrap(),
        twisted_sklyanin_presentation(&p).unwrap(),
    ] {
        let alg = GradedAlgebra::new(&pres, 6).unwrap();
        let expect: Vec<usize> = (0..=6).map(binom3).collect();
        assert_eq!(alg.dimensions(), expect, "{}", pres.name());
    }
}

#[test]
fn quotient_engine_agrees_with_direct_rank() {
    let p = Params::defaults();
    for pres in [
        sklyanin_presentation(&p).unwrap(),
        twisted_factor_ring(&p).unwrap(),
    ] {
        let alg = GradedAlgebra::new(&pres, 4).unwrap();
        for n in 0..=4 {
            assert_eq!(
                alg.dimension(n).unwrap(),
                free_rank_dimension(&pres, n).unwrap(),
                "{} degree {n}",
                pres.name()
            );
        }
    }
}

#[test]
fn factor_ring_dimensions() {
    let p = Params::defaults();
    let b = factor_ring(&p).unwrap();
    assert_eq!(homogeneous_dimension(&b, 3, 6).unwrap(), 12);
    assert_eq!(homogeneous_dimension(&b, 0, 6).unwrap(), 1);
    assert!(matches!(
        homogeneous_dimension(&b, 7, 6),
        Err(AlgebraError::DegreeExceedsBound {
            degree: 7,
            bound: 6
        })
    ));
}

#[test]
fn normal_words_are_minimal_in_deglex() {
    let a = sklyanin_presentation(&Params::defaults()).unwrap();
    let alg = GradedAlgebra::new(&a, 2).unwrap();
    let words = alg.normal_words(2).unwrap();
    assert_eq!(words.len(), 10);
    // x0 x0 is the smallest word and no relation can have it as leading term
    assert_eq!(words[0], Word::new(vec![0, 0]));
    assert!(words.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn membership_with_certificates() {
    let p = Params::defaults();
    let a = sklyanin_presentation(&p).unwrap();
    let r0 = a.relations()[0].clone();
    let m = ideal_membership(&a, &r0, 6).unwrap();
    assert!(m.member);
    assert_eq!(m.certificate.unwrap().evaluate(&a).unwrap(), r0);

    let x00 = NcPoly::monomial(Word::new(vec![0, 0]), TowerScalar::one());
    assert!(!ideal_membership(&a, &x00, 6).unwrap().member);

    // a degree-3 consequence: x2 · r1 - r3 · x0
    let f = &NcPoly::gen(2).try_mul(&a.relations()[1]).unwrap()
        - &a.relations()[3].try_mul(&NcPoly::gen(0)).unwrap();
    let m = ideal_membership(&a, &f, 6).unwrap();
    assert!(m.member);
    assert_eq!(m.certificate.unwrap().evaluate(&a).unwrap(), f);
}

#[test]
fn centrality() {
    let p = Params::defaults();
    let a = sklyanin_presentation(&p).unwrap();
    let t = twisted_sklyanin_presentation(&p).unwrap();
    assert!(is_central(&a, &omega1(), 6).unwrap());
    assert!(is_central(&a, &omega2(&p), 6).unwrap());
    assert!(is_central(&t, &theta1(), 6).unwrap());
    assert!(is_central(&t, &theta2(&p), 6).unwrap());
    assert!(!is_central(&t, &NcPoly::gen(0), 6).unwrap());
    assert!(!is_central(&a, &theta1(), 6).unwrap());
}

#[test]
fn central_subspaces_of_the_twist() {
    let p = Params::defaults();
    let t = twisted_sklyanin_presentation(&p).unwrap();
    let alg = GradedAlgebra::new(&t, 5).unwrap();
    assert!(alg.central_subspace(1).unwrap().is_empty());
    let z2 = alg.central_subspace(2).unwrap();
    assert_eq!(z2.len(), 2);
    for th in [theta1(), theta2(&p)] {
        let mut set = z2.clone();
        set.push(alg.reduce(&th).unwrap());
        assert_eq!(span_rank(&set).unwrap(), 2);
    }
}

#[test]
fn regular_sequences() {
    let p = Params::defaults();
    let a = sklyanin_presentation(&p).unwrap();
    let rep = regular_sequence_check(&a, &omega1(), &omega2(&p), 6).unwrap();
    assert!(rep.holds);
    assert_eq!(rep.modulo_both, vec![1, 4, 8, 12, 16, 20, 24]);

    let rep = regular_sequence_check(&a, &omega1(), &omega1(), 6).unwrap();
    assert!(!rep.holds);
    assert_eq!(rep.first_failure, Some(2));

    assert!(matches!(
        regular_sequence_check(&a, &theta1(), &omega1(), 6),
        Err(AlgebraError::NonCentral(_))
    ));
}

#[test]
fn nilpotent_certificate_is_the_expected_combination() {
    let p = Params::defaults();
    let b = twisted_factor_ring(&p).unwrap();
    let v = nilpotent_element();
    let v2 = v.try_mul(&v).unwrap();
    let m = ideal_membership(&b, &v2, 6).unwrap();
    assert!(m.member);
    let cert = m.certificate.unwrap();
    let coeffs = cert.relation_coefficients(b.relations().len()).unwrap();
    let i = TowerScalar::i();
    let m1 = TowerScalar::from_int(-1);
    let z = TowerScalar::zero();
    // relations are f1..f6 followed by Θ1, Θ2
    let expect = vec![
        z.clone(),
        i.negated(),
        z.clone(),
        i.negated(),
        z.clone(),
        m1.clone(),
        m1,
        z,
    ];
    assert_eq!(coeffs, expect);
}

#[test]
fn scalar_coefficient_in_non_rational_tower() {
    // engine over the tower when a relation has an i coefficient
    let i = TowerScalar::i();
    let r = &NcPoly::commutator(0, 1) - &NcPoly::anticommutator(2, 3).scale(&i);
    let pres =
        Presentation::new("tower", crate::cocycle::standard_grading(), vec![r], None).unwrap();
    let alg = GradedAlgebra::new(&pres, 3).unwrap();
    assert_eq!(alg.dimension(2).unwrap(), 15);
    assert_eq!(
        alg.dimension(3).unwrap(),
        free_rank_dimension(&pres, 3).unwrap()
    );
}
