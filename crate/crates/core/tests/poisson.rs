use qgroup_core::coeffring::MuMode;
use qgroup_core::cpoly::{CPoly, Coord};
use qgroup_core::models::build_qgroup_gmu;
use qgroup_core::ncalg::Truncation;
use qgroup_core::poisson::{
    classical_coproduct, invariant_fields, jacobiator, quantum_classical_link, sklyanin_bracket,
    verify_fields_commute, verify_jacobi, verify_poisson_hopf, verify_poisson_table, Side,
};
use qgroup_core::report::CheckReport;

fn assert_passed(r: &CheckReport) {
    assert!(r.passed(), "{}: {:#?}", r.name, r.failing_terms().collect::<Vec<_>>());
}

fn v(c: Coord) -> CPoly {
    CPoly::coord(c, 0)
}

#[test]
fn sample_brackets() {
    let w = CPoly::w();
    let es = v(Coord::E).mul(&v(Coord::S));
    assert_eq!(sklyanin_bracket(&v(Coord::D), &v(Coord::P1)), w.mul(&CPoly::mu()).mul(&es));
    assert!(sklyanin_bracket(&v(Coord::Theta), &v(Coord::D)).is_zero());
    assert_eq!(sklyanin_bracket(&v(Coord::P1), &v(Coord::C1)), w.mul(&CPoly::mu()).mul(&v(Coord::C2)));
    assert_eq!(sklyanin_bracket(&v(Coord::Theta), &v(Coord::P2)), w.mul(&es));
    assert_eq!(sklyanin_bracket(&v(Coord::P2), &v(Coord::C1)), -&w.mul(&v(Coord::C1)));
}

#[test]
fn invariant_field_samples() {
    let left = invariant_fields(Side::Left, 0);
    let right = invariant_fields(Side::Right, 0);
    // X^L_J = ∂_θ, X^R_{P₁} = ∂_{p₁}
    assert_eq!(left[0].apply(&v(Coord::Theta)), CPoly::one());
    assert_eq!(left[0].apply(&v(Coord::C)), CPoly::mu().mul(&v(Coord::S)));
    assert_eq!(right[2].apply(&v(Coord::P1)), CPoly::one());
    assert!(right[2].apply(&v(Coord::P2)).is_zero());
    assert_passed(&verify_fields_commute());
}

#[test]
fn table_matches_in_every_mode() {
    for mode in [MuMode::Symbolic, MuMode::Minus, MuMode::Zero, MuMode::Plus] {
        assert_passed(&verify_poisson_table(mode));
    }
}

#[test]
fn jacobi_and_poisson_hopf() {
    assert_passed(&verify_jacobi());
    let j = jacobiator(&v(Coord::D), &v(Coord::P1), &v(Coord::P2));
    assert!(j.is_zero());
    assert_passed(&verify_poisson_hopf());
}

#[test]
fn coproduct_preserves_the_trig_identity() {
    let delta = classical_coproduct();
    let c = v(Coord::C).substitute(&delta);
    let s = v(Coord::S).substitute(&delta);
    let e = v(Coord::E).substitute(&delta);
    let ei = v(Coord::Einv).substitute(&delta);
    assert_eq!(&c.mul(&c) - &CPoly::mu().mul(&s.mul(&s)), CPoly::one());
    assert_eq!(e.mul(&ei), CPoly::one());
}

#[test]
fn quantum_classical_link_all_modes() {
    for mode in [MuMode::Symbolic, MuMode::Minus, MuMode::Zero, MuMode::Plus] {
        let h = build_qgroup_gmu(mode, Truncation::capped(2, 3));
        assert_passed(&quantum_classical_link(&h, mode).unwrap());
    }
}

#[test]
fn link_sample_pair_is_nontrivial() {
    use qgroup_core::poisson::{taylor, transcribe};
    let h = build_qgroup_gmu(MuMode::Symbolic, Truncation::capped(2, 3));
    let a = &h.alg;
    let q = a.commutator(&a.g("d"), &a.g("p2")).order_part(1);
    let quantum = transcribe(a, &q).unwrap().truncate_coordinate_degree(3);
    let ec = &v(Coord::E).mul(&v(Coord::C)) - &CPoly::one();
    let expected = taylor(&ec, 3);
    assert!(!expected.is_zero());
    assert_eq!(quantum, expected);
    // d + θ²μ/2 + d²/2 + … : the linear part is d
    assert_eq!(expected.truncate_coordinate_degree(1), v(Coord::D));
}
