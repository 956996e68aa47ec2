use qgroup_core::coeffring::{MuMode, MuPoly, Rational};
use qgroup_core::controls::Mutation;
use qgroup_core::models::{
    build_poincare_qalgebra, iso11_table, schouten_check, wedge, weyl_table,
};
use qgroup_core::ncalg::Tensor2;
use qgroup_core::report::CheckReport;
use qgroup_core::rmatrix::*;

fn show(r: &CheckReport) -> String {
    let t: Vec<_> = r
        .failing_terms()
        .take(8)
        .map(|(i, t)| format!("{i}: {} [{}] {}", t.basis, t.order, t.coeff.to_pq()))
        .collect();
    format!("{}: {:#?}", r.name, t)
}

#[test]
fn poincare_r_is_quasitriangular_through_order_four() {
    let h = build_poincare_qalgebra(4);
    let r = build_r_poincare(&h);
    for rep in verify_quasitriangular(&r, &h) {
        assert!(rep.passed(), "{}", show(&rep));
    }
}

#[test]
fn poincare_r_low_orders() {
    let h = build_poincare_qalgebra(4);
    let a = &h.alg;
    let r = build_r_poincare(&h);
    let kp = wedge(&h.g("K"), &h.g("P+"));
    assert_eq!(r.tensor.order_part(0), Tensor2::one());
    assert_eq!(r.tensor.order_part(1), kp);
    // the exponent has no z² part, so the z² term is half the square
    assert_eq!(r.exponent.order_part(2), Tensor2::zero());
    assert_eq!(
        r.tensor.order_part(2),
        a.mul(&kp, &kp).order_part(0).scale(&Rational::new(1, 2))
    );
}

#[test]
fn poincare_classical_limit_solves_cybe() {
    let h = build_poincare_qalgebra(3);
    let r1 = classical_limit(&build_r_poincare(&h)).unwrap();
    let table = iso11_table();
    let biv = to_bivector(&table, &h.alg, &r1).unwrap();
    assert_eq!(biv, table.wedge_sum(&[("K", "P+", MuPoly::from_int(1))]));
    assert!(schouten_check(&table, &biv).passed());
}

#[test]
fn unit_r_has_zero_classical_limit() {
    let h = build_poincare_qalgebra(2);
    let r = RMatrix::from_exponent(&h.alg, Tensor2::zero(), Provenance::Poincare).unwrap();
    assert!(classical_limit(&r).unwrap().is_zero());
}

#[test]
fn non_skew_first_order_is_rejected() {
    let h = build_poincare_qalgebra(2);
    let e = qgroup_core::models::t2(&h.g("K"), &h.g("P+")).shift_order(1);
    let r = RMatrix::from_exponent(&h.alg, e, Provenance::Poincare).unwrap();
    assert_eq!(classical_limit(&r), Err(RMatrixError::NonSkewFirstOrder));
}

#[test]
fn ansatz_recurrence_holds_through_order_four() {
    let h = build_poincare_qalgebra(4);
    let rep = verify_ansatz_recurrence(&h, 3);
    assert!(rep.passed(), "{}", show(&rep));
    assert_eq!(rep.residuals.len(), 7 + 2 + 2 + 1);
}

#[test]
fn contracted_product_equals_closed_form_through_order_three() {
    for mode in [MuMode::Symbolic, MuMode::Minus, MuMode::Zero, MuMode::Plus] {
        let rep = compare_contracted(mode, 3).unwrap();
        assert!(rep.passed(), "{} {}", mode.label(), show(&rep));
    }
}

#[test]
fn closed_form_r_is_quasitriangular_through_order_three() {
    let (weyl, r) = build_r_contracted(MuMode::Symbolic, 3).unwrap();
    for rep in verify_quasitriangular(&r, &weyl) {
        assert!(rep.passed(), "{}", show(&rep));
    }
}

#[test]
fn closed_form_classical_limit_solves_cybe() {
    let (weyl, r) = build_r_contracted(MuMode::Symbolic, 2).unwrap();
    let table = weyl_table(MuMode::Symbolic);
    let biv = to_bivector(&table, &weyl.alg, &classical_limit(&r).unwrap()).unwrap();
    let one = MuPoly::from_int(1);
    assert_eq!(biv, table.wedge_sum(&[("J", "P1", one.clone()), ("D", "P2", one)]));
    assert!(schouten_check(&table, &biv).passed());
}

#[test]
fn negative_controls_fail_at_their_documented_orders() {
    for m in Mutation::ALL {
        let r = m.run(4);
        assert!(!r.passed(), "{}", m.label());
        assert_eq!(r.first_failing_order(), Some(m.expected_first_failing_order()), "{}", m.label());
    }
}
