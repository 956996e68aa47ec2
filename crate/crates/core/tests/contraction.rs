use qgroup_core::coeffring::MuMode;
use qgroup_core::hopf::HopfPresentation;
use qgroup_core::models::{
    build_doubled, build_qgroup_gmu, build_qgroup_gmu_reconstructed, build_weyl,
    compare_presentations, contract_algebra, contracted_gmu, gmu_table, weyl_table, Contraction,
    LieTable,
};
use qgroup_core::ncalg::Truncation;

const MODES: [MuMode; 4] = [MuMode::Symbolic, MuMode::Minus, MuMode::Zero, MuMode::Plus];

fn assert_same(h: &HopfPresentation, full: &HopfPresentation) {
    let r = compare_presentations(h, full);
    let bad: Vec<_> = r.failing_terms().take(6).collect();
    assert!(r.passed(), "{}: {:?}", r.name, bad);
}

#[test]
fn contracted_tables_are_s_free_and_reduce_to_gmu() {
    for mode in MODES {
        let h = contracted_gmu(mode, 4).expect("contraction is s-even");
        let t = LieTable::from_algebra(&h.alg).expect("linear at order zero");
        assert_eq!(t, gmu_table(mode), "mu = {}", mode.label());
        assert!(t.jacobi().passed());
    }
}

#[test]
fn weyl_presentation_is_the_restricted_contraction() {
    for mode in MODES {
        let full = contracted_gmu(mode, 4).unwrap();
        let weyl = build_weyl(mode, 4);
        assert_same(&weyl, &full);
        let t = LieTable::from_algebra(&weyl.alg).unwrap();
        assert_eq!(t, weyl_table(mode));
    }
}

#[test]
fn specialising_mu_commutes_with_contraction_at_mu_one() {
    let doubled = build_doubled(4);
    let unit = Contraction::algebra(&doubled.alg, true);
    let direct = contract_algebra(&doubled, &unit, MuMode::Plus, "uw-g+1").unwrap();
    let via_s = contracted_gmu(MuMode::Plus, 4).unwrap();
    assert_same(&direct, &via_s);
    assert_same(&via_s, &direct);
}

#[test]
fn printed_coordinate_algebra_matches_the_reconstruction() {
    for mode in MODES {
        let trunc = Truncation::capped(2, 3);
        let printed = build_qgroup_gmu(mode, trunc);
        let rebuilt = build_qgroup_gmu_reconstructed(mode, trunc).expect("s-even");
        assert_same(&printed, &rebuilt);
    }
}
