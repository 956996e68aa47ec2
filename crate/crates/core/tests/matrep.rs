use qgroup_core::coeffring::MuMode;
use qgroup_core::cpoly::{CPoly, Coord, PolyMatrix};
use qgroup_core::matrep::{
    build_rep, check_group_element, check_rep_brackets, check_rep_r, frt_rtt_check, group_element,
    rep_classical_r, rep_r, rep_r_closed_form, specialize_matrix, SignVerdict,
};
use qgroup_core::report::CheckReport;

fn assert_passed(r: &CheckReport) {
    assert!(r.passed(), "{}: {:#?}", r.name, r.failing_terms().collect::<Vec<_>>());
}

fn entry(m: &PolyMatrix, i: usize, j: usize) -> CPoly {
    m.get(i - 1, j - 1).clone()
}

#[test]
fn printed_j_and_reconstructed_entries() {
    let rep = build_rep().unwrap();
    let j = rep.get("J");
    assert_eq!(entry(j, 1, 2), -&CPoly::mu());
    assert_eq!(entry(j, 2, 1), CPoly::int(-1));
    assert_eq!(j.nonzero().count(), 2);
    let p2 = rep.get("P2");
    assert_eq!((entry(p2, 3, 1), entry(p2, 4, 1)), (CPoly::int(1), CPoly::int(1)));
    let c2 = rep.get("C2");
    assert_eq!((entry(c2, 3, 1), entry(c2, 4, 1)), (CPoly::int(-1), CPoly::int(1)));
    // [J, P₁] = P₂ and [D, J] = 0 as matrices
    assert_eq!(j.commutator(rep.get("P1")), *p2);
    assert!(rep.get("D").commutator(j).is_zero());
}

#[test]
fn brackets_hold_in_every_mode() {
    let rep = build_rep().unwrap();
    for mode in [MuMode::Symbolic, MuMode::Minus, MuMode::Zero, MuMode::Plus] {
        assert_passed(&check_rep_brackets(&rep, mode));
    }
    // sample entries: [D, P₁] = P₁, [J, C₂] = μC₁, [P₁, P₂] = 0
    assert_eq!(rep.get("D").commutator(rep.get("P1")), *rep.get("P1"));
    assert_eq!(rep.get("J").commutator(rep.get("C2")), rep.get("C1").scale(&CPoly::mu()));
    assert!(rep.get("P1").commutator(rep.get("P2")).is_zero());
}

#[test]
fn group_element_matches_closed_form() {
    let rep = build_rep().unwrap();
    assert_passed(&check_group_element(&rep).unwrap());
    let g = group_element(&rep).unwrap();
    let v = |c| CPoly::coord(c, 0);
    let t41 = &(&v(Coord::P2) + &v(Coord::C2)).mul(&v(Coord::C))
        - &(&v(Coord::P1) + &v(Coord::C1)).mul(&v(Coord::S));
    assert_eq!(entry(&g, 4, 1), t41);
    assert_eq!(entry(&g, 1, 2), -&CPoly::mu().mul(&v(Coord::S)));
}

#[test]
fn r_matrix_in_the_representation() {
    assert_passed(&check_rep_r(3).unwrap());
    let rep = build_rep().unwrap();
    let closed = rep_r_closed_form(&rep);
    // w = 0 gives the identity; μ = 0 loses the quadratic term
    let at_w0 = closed.map(|x| x.w_part(0));
    assert_eq!(at_w0, PolyMatrix::identity(16));
    let at_mu0 = specialize_matrix(&closed, MuMode::Zero);
    let linear = &PolyMatrix::identity(16) + &rep_classical_r(&rep).scale(&CPoly::w());
    assert_eq!(at_mu0, specialize_matrix(&linear, MuMode::Zero));
    let r = rep_r(3).unwrap();
    assert_eq!(r.map(|x| x.truncate_w(3)), closed);
}

#[test]
fn frt_sign_verdict() {
    for mode in [MuMode::Symbolic, MuMode::Plus] {
        let out = frt_rtt_check(mode, 2, 3).unwrap();
        // the printed relations follow from R_w itself under the stated
        // convention T₁ = T⊗I; R_{−w} is the transposed-factor reading
        assert_eq!(out.verdict, SignVerdict::Same, "mode {mode:?}");
        assert_passed(&out.plus);
        assert!(!out.minus.passed());
        assert!(out.plus.note.as_deref().unwrap().contains("R21 = R(-w)"));
        assert_passed(&out.hopf);
    }
}
