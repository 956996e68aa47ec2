use qgroup_core::coeffring::MuMode;
use qgroup_core::hopf::{check_all, HopfPresentation};
use qgroup_core::models::{
    build_poincare_qalgebra, build_poincare_qgroup, build_qgroup_gmu, build_weyl, contracted_gmu,
};
use qgroup_core::ncalg::Truncation;

fn assert_hopf(h: &HopfPresentation) {
    for r in check_all(h) {
        let bad: Vec<_> = r.failing_terms().take(5).collect();
        assert!(r.passed(), "{} / {}: {:?}", h.id, r.name, bad);
    }
}

#[test]
fn poincare_algebra_is_hopf_through_order_four() {
    assert_hopf(&build_poincare_qalgebra(4));
}

#[test]
fn poincare_group_is_hopf_at_order_three_degree_four() {
    assert_hopf(&build_poincare_qgroup(Truncation::capped(3, 4)));
}

#[test]
fn weyl_algebras_are_hopf_through_order_four() {
    for mode in [MuMode::Symbolic, MuMode::Minus, MuMode::Zero, MuMode::Plus] {
        assert_hopf(&build_weyl(mode, 4));
    }
}

#[test]
fn coordinate_algebra_on_gmu_is_hopf_at_order_two_degree_three() {
    for mode in [MuMode::Symbolic, MuMode::Minus, MuMode::Zero, MuMode::Plus] {
        assert_hopf(&build_qgroup_gmu(mode, Truncation::capped(2, 3)));
    }
}

#[test]
fn contracted_gmu_is_hopf() {
    assert_hopf(&contracted_gmu(MuMode::Symbolic, 3).unwrap());
}
