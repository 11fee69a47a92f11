use std::sync::Arc;

use proptest::prelude::*;

use super::*;

fn default_tower() -> Arc<FieldSpec> {
    let base = FieldSpec::gaussian();
    let s = base
        .adjoin_sqrt(&TowerScalar::from_rational(rat(-5, 7)), "sa")
        .unwrap();
    let s = s.adjoin_sqrt(&TowerScalar::from_int(2), "sb").unwrap();
    s.adjoin_sqrt(&TowerScalar::from_int(3), "sc").unwrap()
}

#[test]
fn gaussian_basics() {
    let i = TowerScalar::i();
    assert_eq!(&i * &i, TowerScalar::from_int(-1));
    let one_plus_i = &TowerScalar::one() + &i;
    assert_eq!(one_plus_i.to_exact_string(), "1/1 + 1/1·i");
    let inv = one_plus_i.invert().unwrap();
    let expect = (&TowerScalar::one() - &i).scale(&rat(1, 2));
    assert_eq!(inv, expect);
    assert_eq!(&one_plus_i + &one_plus_i.negated(), TowerScalar::zero());
}

#[test]
fn radicals_do_not_collapse() {
    let t = default_tower();
    let sb = TowerScalar::symbol(&t, "sb").unwrap();
    let sc = TowerScalar::symbol(&t, "sc").unwrap();
    let prod = &sb * &sc;
    assert_eq!(prod.coords().len(), 1);
    assert_eq!(prod.to_exact_string(), "1/1·sb·sc");
    assert_eq!(&prod * &prod, TowerScalar::from_int(6));
    let sa = TowerScalar::symbol(&t, "sa").unwrap();
    assert_eq!(&sa * &sa, TowerScalar::from_rational(rat(-5, 7)));
}

#[test]
fn invert_sqrt5_and_zero() {
    let s = FieldSpec::gaussian()
        .adjoin_sqrt(&TowerScalar::from_int(5), "s5")
        .unwrap();
    let r5 = TowerScalar::symbol(&s, "s5").unwrap();
    assert_eq!(r5.invert().unwrap(), r5.scale(&rat(1, 5)));
    assert_eq!(
        TowerScalar::zero().invert(),
        Err(FieldError::DivisionByZero)
    );
}

#[test]
fn general_inverse_round_trips() {
    let t = default_tower();
    let x = TowerScalar::parse("1/1 + 2/3·i·sb + -1/2·sa·sc + 5/1·i·sa·sb·sc", &t).unwrap();
    let inv = x.invert().unwrap();
    assert!((&x * &inv).is_one());
}

#[test]
fn zero_divisor_detected() {
    // adjoin sqrt(-1) again under another name: (i - j)(i + j) = 0
    let s = FieldSpec::gaussian()
        .adjoin_sqrt(&TowerScalar::from_int(-1), "j")
        .unwrap();
    let j = TowerScalar::symbol(&s, "j").unwrap();
    let z = &TowerScalar::i() - &j;
    assert_eq!(z.invert(), Err(FieldError::ZeroDivisor));
}

#[test]
fn duplicate_and_mismatch() {
    let t = default_tower();
    assert_eq!(
        t.adjoin_sqrt(&TowerScalar::from_int(2), "sb").unwrap_err(),
        FieldError::DuplicateSymbol("sb".into())
    );
    let two = FieldSpec::gaussian()
        .adjoin_sqrt(&TowerScalar::from_int(2), "s2")
        .unwrap();
    let six = FieldSpec::gaussian()
        .adjoin_sqrt(&TowerScalar::from_int(6), "s6")
        .unwrap();
    let a = TowerScalar::symbol(&two, "s2").unwrap();
    let b = TowerScalar::symbol(&six, "s6").unwrap();
    assert_eq!(a.try_add(&b), Err(FieldError::MismatchedSpec));
    // the shared base mixes with both
    assert!(a.try_add(&TowerScalar::i()).is_ok());
}

#[test]
fn nested_square_roots() {
    // w^2 = 1 + i, not a rational square
    let base = FieldSpec::gaussian();
    let val = &TowerScalar::one() + &TowerScalar::i();
    let s = base.adjoin_sqrt(&val, "w").unwrap();
    let w = TowerScalar::symbol(&s, "w").unwrap();
    assert_eq!(&w * &w, val);
    let x = &w + &TowerScalar::from_int(3);
    assert!((&x * &x.invert().unwrap()).is_one());
    assert_eq!(*FieldSpec::from_json(&s.to_json()).unwrap(), *s);
}

#[test]
fn sqrt_search_and_adjoin() {
    let t = default_tower();
    // sqrt(6) = sb·sc already present
    let r6 = t.sqrt_of_rational(&int(6)).unwrap();
    assert_eq!(&r6 * &r6, TowerScalar::from_int(6));
    // sqrt(-9/5) needs s5
    let (t2, root) = t.sqrt_or_adjoin(&rat(-9, 5)).unwrap();
    assert_eq!(t2.len(), 5);
    assert_eq!(&root * &root, TowerScalar::from_rational(rat(-9, 5)));
    assert_eq!(root.to_exact_string(), "3/5·i·s5");
}

#[test]
fn serialization_round_trip() {
    let t = default_tower();
    let x = TowerScalar::parse("-5/7 + 3/1*i*sc", &t).unwrap();
    assert_eq!(x.to_exact_string(), "-5/7 + 3/1·i·sc");
    assert_eq!(TowerScalar::parse(&x.to_exact_string(), &t).unwrap(), x);
    assert_eq!(TowerScalar::zero().to_exact_string(), "0/1");
    assert!(TowerScalar::parse("1/1·zz", &t).is_err());
}

fn arb_scalar() -> impl Strategy<Value = TowerScalar> {
    prop::collection::vec((0u64..16, -6i64..7, 1i64..5), 0..6).prop_map(|terms| {
        let t = default_tower();
        TowerScalar::from_parts(
            t,
            terms.into_iter().map(|(m, n, d)| (m, rat(n, d))).collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn field_axioms(a in arb_scalar(), b in arb_scalar(), c in arb_scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Ok(inv) = a.invert() {
            prop_assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn canonical_form_idempotent(a in arb_scalar()) {
        let again = TowerScalar::from_parts(a.spec().clone(), a.coords().to_vec());
        prop_assert_eq!(&again, &a);
        prop_assert_eq!(again.coords(), a.coords());
    }

    #[test]
    fn embedding_commutes(a in arb_scalar(), b in arb_scalar()) {
        let big = a.spec().adjoin_sqrt(&TowerScalar::from_int(5), "s5").unwrap();
        let (ea, eb) = (a.embed(&big).unwrap(), b.embed(&big).unwrap());
        let (big_prod, prod) = (&ea * &eb, &a * &b);
        prop_assert_eq!(big_prod.coords(), prod.coords());
        let (big_sum, sum) = (&ea + &eb, &a + &b);
        prop_assert_eq!(big_sum.coords(), sum.coords());
    }
}
