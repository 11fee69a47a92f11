//! End-to-end checks of the whole pipeline, one line each. Runs without the libtest
//! harness so the lines always reach the output.

use std::panic;
use std::process::ExitCode;
use std::time::Instant;

use sklyanin_core::cocycle::{
    coboundary_table, enumerate_gradings, g_translate, matrix_model, scaling_isomorphism_check,
    scaling_table, standard_grading, twist_presentation, CocycleTable, GradingAssignment,
};
use sklyanin_core::gradedmod::{
    cyclic_codimension_check, fat_point, generated_in_degree_zero, group_intertwiner_check,
    point_module, restrict_and_decompose, theta_kills,
};
use sklyanin_core::ncalg::{
    central_subspace, factor_ring, homogeneous_dimension, ideal_membership, is_central,
    nilpotent_element, omega1, omega2, sklyanin_presentation, span_equal, span_rank, theta1,
    theta2, twisted_factor_ring, twisted_relations, twisted_sklyanin_presentation, GradedAlgebra,
};
use sklyanin_core::pointscheme::{
    curve_membership, curve_point, known_point_pairs, known_points, multilinearize, orbit_report,
    orbit_representatives, pairwise_distinct, two_zero_exclusion, Point,
};
use sklyanin_core::{KleinElement, Params, TowerScalar};

const D: usize = 6;
const MODULE_DEPTH: usize = 5;

fn binom3(n: usize) -> usize {
    (n + 1) * (n + 2) * (n + 3) / 6
}

fn twisted_relation_identity() {
    let p = Params::defaults();
    let a = sklyanin_presentation(&p).unwrap();
    let t = twist_presentation(
        &a,
        &GradingAssignment::standard(),
        &CocycleTable::standard(),
    )
    .unwrap();
    assert!(span_equal(t.relations(), &twisted_relations(&p)).unwrap());
}

fn hilbert_series() {
    let p = Params::defaults();
    let expect: Vec<usize> = (0..=D).map(binom3).collect();
    for pres in [
        sklyanin_presentation(&p).unwrap(),
        twisted_sklyanin_presentation(&p).unwrap(),
    ] {
        let dims: Vec<usize> = (0..=D)
            .map(|n| homogeneous_dimension(&pres, n, D).unwrap())
            .collect();
        assert_eq!(dims, expect, "{}", pres.name());
    }
}

fn factor_hilbert() {
    let p = Params::defaults();
    let expect = [1, 4, 8, 12, 16, 20, 24];
    for pres in [factor_ring(&p).unwrap(), twisted_factor_ring(&p).unwrap()] {
        let alg = GradedAlgebra::new(&pres, D).unwrap();
        assert_eq!(alg.dimensions(), expect, "{}", pres.name());
    }
}

fn centrality() {
    let p = Params::defaults();
    let a = sklyanin_presentation(&p).unwrap();
    let t = twisted_sklyanin_presentation(&p).unwrap();
    assert!(is_central(&a, &omega1(), 3).unwrap());
    assert!(is_central(&a, &omega2(&p), 3).unwrap());
    let (th1, th2) = (theta1(), theta2(&p));
    assert!(is_central(&t, &th1, 3).unwrap());
    assert!(is_central(&t, &th2, 3).unwrap());
    assert_eq!(central_subspace(&t, 2, 3).unwrap().len(), 2);

    let alg = GradedAlgebra::new(&t, 5).unwrap();
    let z4 = alg.central_subspace(4).unwrap();
    let monomials: Vec<_> = [(&th1, &th1), (&th1, &th2), (&th2, &th2)]
        .iter()
        .map(|(x, y)| alg.reduce(&x.try_mul(y).unwrap()).unwrap())
        .collect();
    assert_eq!(span_rank(&monomials).unwrap(), 3);
    let mut with = z4.clone();
    with.extend(monomials);
    assert_eq!(span_rank(&with).unwrap(), z4.len());
    // equality is an assumption (infinite-order shift); measured here only
    println!(
        "    degree-4 central dimension: {} (assumption: exactly 3)",
        z4.len()
    );
}

fn nilpotency() {
    let p = Params::defaults();
    let b = twisted_factor_ring(&p).unwrap();
    let v = nilpotent_element();
    let m = ideal_membership(&b, &v.try_mul(&v).unwrap(), 2).unwrap();
    assert!(m.member);
    let cert = m.certificate.unwrap();
    assert_eq!(cert.evaluate(&b).unwrap(), v.try_mul(&v).unwrap());
    let i = TowerScalar::i();
    let (z, m1) = (TowerScalar::zero(), TowerScalar::from_int(-1));
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
    assert_eq!(cert.relation_coefficients(8).unwrap(), expect);
    for g in KleinElement::ALL {
        let vg = g_translate(&v, g, &standard_grading()).unwrap();
        assert!(
            ideal_membership(&b, &vg.try_mul(&vg).unwrap(), 2)
                .unwrap()
                .member,
            "{g}"
        );
    }
}

fn matrix_model_entries() {
    let p = Params::defaults();
    let a = sklyanin_presentation(&p).unwrap();
    for f in twisted_relations(&p) {
        for row in matrix_model(&f).unwrap() {
            for e in row {
                assert!(ideal_membership(&a, &e, 2).unwrap().member, "{e}");
            }
        }
    }
}

fn point_scheme() {
    let p = Params::defaults();
    let s = multilinearize(&twisted_sklyanin_presentation(&p).unwrap()).unwrap();
    let (r, pts) = known_points(&p).unwrap();
    assert_eq!(pts.len(), 20);
    assert!(pairwise_distinct(&pts).unwrap());
    let mut fixed = 0;
    for q in &pts {
        assert_eq!(s.rank_at(q).unwrap(), 3);
        let next = s.successor(q).unwrap();
        assert_eq!(s.successor(&next).unwrap(), *q);
        fixed += usize::from(next == *q);
    }
    assert_eq!(fixed, 8);
    for (x, y) in known_point_pairs(&r).unwrap() {
        assert_eq!(s.successor(&x).unwrap(), y);
    }
    let rep = orbit_report(&pts, &s).unwrap();
    assert_eq!(rep.sizes(), [1, 1, 1, 1, 4, 4, 4, 4]);
    let mut labels: Vec<KleinElement> = rep.orbits.iter().filter_map(|o| o.label).collect();
    labels.sort();
    assert_eq!(labels, KleinElement::ALL);
    for (h, q) in orbit_representatives(&r).unwrap() {
        for g in KleinElement::ALL {
            assert_eq!(s.successor(&q.act(g)).unwrap(), q.act(g).act(h));
        }
    }
}

fn exclusion() {
    let p = Params::defaults();
    let s = multilinearize(&twisted_sklyanin_presentation(&p).unwrap()).unwrap();
    assert!(two_zero_exclusion(&s).unwrap());
    println!("    exclusion to full classification: assumption (infinite-order shift)");
}

fn curve_fixture() -> (Params, Point) {
    let p = Params::defaults();
    let q = curve_point(&p, &TowerScalar::one()).unwrap();
    assert!(curve_membership(&q, &p).unwrap());
    (p, q)
}

fn fat_points() {
    let (p, q) = curve_fixture();
    let a = sklyanin_presentation(&p).unwrap();
    let t = twisted_sklyanin_presentation(&p).unwrap();
    let pm = point_module(&multilinearize(&a).unwrap(), &q, MODULE_DEPTH).unwrap();
    let fat = fat_point(&pm, &t, MODULE_DEPTH).unwrap();
    assert!(fat.satisfies(&t).unwrap());
    assert!(generated_in_degree_zero(&fat).unwrap());
    let one = TowerScalar::one;
    let zero = TowerScalar::zero;
    for v in [vec![one(), one()], vec![one(), zero()], vec![zero(), one()]] {
        for j in 0..MODULE_DEPTH {
            assert!(cyclic_codimension_check(&fat, j, &v).unwrap());
        }
    }
    for g in KleinElement::ALL {
        assert!(group_intertwiner_check(&pm, g, &t, MODULE_DEPTH).unwrap());
    }
}

fn duality_round_trip() {
    let (p, q) = curve_fixture();
    let a = sklyanin_presentation(&p).unwrap();
    let t = twisted_sklyanin_presentation(&p).unwrap();
    let pm = point_module(&multilinearize(&a).unwrap(), &q, MODULE_DEPTH).unwrap();
    let rep = restrict_and_decompose(&pm, &t, &a, MODULE_DEPTH).unwrap();
    let orbit: Vec<Point> = KleinElement::ALL.iter().map(|&g| q.act(g)).collect();
    assert_eq!(rep.points(), orbit);
    assert!(rep.distinct().unwrap());

    let st = multilinearize(&t).unwrap();
    let r = p.radicals().unwrap();
    for (_, x) in orbit_representatives(&r).unwrap() {
        let xm = point_module(&st, &x, MODULE_DEPTH).unwrap();
        let rep = restrict_and_decompose(&xm, &a, &t, MODULE_DEPTH).unwrap();
        assert!(rep.distinct().unwrap());
        for g in KleinElement::ALL {
            assert!(rep.points().contains(&x.act(g)));
        }
    }
}

fn no_point_modules() {
    let p = Params::defaults();
    let s = multilinearize(&twisted_sklyanin_presentation(&p).unwrap()).unwrap();
    let (_, pts) = known_points(&p).unwrap();
    let (th1, th2) = (theta1(), theta2(&p));
    for q in &pts {
        let pm = point_module(&s, q, MODULE_DEPTH).unwrap();
        assert!(
            !(theta_kills(&pm, &th1).unwrap() && theta_kills(&pm, &th2).unwrap()),
            "{q}"
        );
    }
}

fn isomorphism_tables() {
    let p = Params::defaults();
    let r = p.radicals().unwrap();
    let rows = coboundary_table();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|row| row.verify().unwrap()));
    let a = sklyanin_presentation(&p).unwrap();
    let table = scaling_table(&p, &r).unwrap();
    assert_eq!(table.len(), 3);
    for row in table {
        row.target.check().unwrap();
        let target = twisted_sklyanin_presentation(&row.target).unwrap();
        assert!(scaling_isomorphism_check(&a, &row.grading, &row.scale, &target).unwrap());
    }
    let classes = enumerate_gradings();
    assert_eq!(
        classes.iter().map(Vec::len).collect::<Vec<_>>(),
        [6, 6, 6, 6]
    );
}

fn main() -> ExitCode {
    let criteria: [(&str, fn()); 12] = [
        (
            "twisted relations equal the closed form",
            twisted_relation_identity,
        ),
        ("Hilbert series 1,4,10,20,35,56,84", hilbert_series),
        ("central quotients 1,4,8,12,16,20,24", factor_hilbert),
        ("central quadrics and degree-4 center", centrality),
        ("nilpotent element and its certificate", nilpotency),
        (
            "matrix model entries lie in the ideal",
            matrix_model_entries,
        ),
        ("point scheme: 20 points, involution, orbits", point_scheme),
        ("two-zero exclusion", exclusion),
        ("fat point on the curve", fat_points),
        ("restriction round trip", duality_round_trip),
        (
            "no point modules over the central quotient",
            no_point_modules,
        ),
        ("coboundary, scaling and grading tables", isomorphism_tables),
    ];
    panic::set_hook(Box::new(|info| println!("    {info}")));
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let ok = panic::catch_unwind(check).is_ok();
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {:<46} {} ({} ms)",
            k + 1,
            name,
            if ok { "pass" } else { "FAIL" },
            start.elapsed().as_millis()
        );
    }
    println!("acceptance: {} of 12 passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
