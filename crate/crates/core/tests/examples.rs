//! Small worked cases with hand-derived expected values.

use qgroup_core::coeffring::{
    eliminate_s, evaluate_mu, series_invert, MuMode, MuPoly, Param, Rational, SPoly, ScalarSeries,
};
use qgroup_core::hopf::check_counit_antipode;
use qgroup_core::models::{
    build_poincare_qalgebra, build_qgroup_gmu, build_weyl, contracted_gmu, kinematical_relabel,
    mu_coeff, primitive, t2, ModelError,
};
use qgroup_core::ncalg::{embed, flip, AlgebraElement, Embedding, Morphism, Truncation};
use qgroup_core::report::CheckReport;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

#[test]
fn series_inverse_of_one_plus_w() {
    let u = ScalarSeries::from_rationals(Param::W, 2, &[q(1, 1), q(1, 1)]);
    let v = series_invert(&u).unwrap();
    assert_eq!(v, ScalarSeries::from_rationals(Param::W, 2, &[q(1, 1), q(-1, 1), q(1, 1)]));
    let w = ScalarSeries::from_rationals(Param::W, 2, &[q(0, 1), q(1, 1)]);
    assert!(series_invert(&w).is_err());
}

#[test]
fn s_elimination() {
    let even = ScalarSeries::term(Param::W, 2, 1, SPoly::monomial(2, q(1, 1)));
    assert_eq!(eliminate_s(&even).unwrap().coeff(1), MuPoly::mu());
    let odd = ScalarSeries::term(Param::W, 2, 1, SPoly::s());
    assert!(eliminate_s(&odd).is_err());
}

#[test]
fn mu_evaluation() {
    let one_plus_mu2 = MuPoly::from_terms([(0, q(1, 1)), (2, q(1, 1))]);
    assert_eq!(evaluate_mu(&one_plus_mu2, MuMode::Minus), Some(q(2, 1)));
    assert_eq!(evaluate_mu(&MuPoly::mu(), MuMode::Zero), Some(q(0, 1)));
    assert_eq!(evaluate_mu(&MuPoly::mu(), MuMode::Plus), Some(q(1, 1)));
}

#[test]
fn boost_with_minus_translation() {
    // [K, P₋] = −2P₋ cosh(zP₊) = −2P₋ − z²P₊²P₋ + O(z⁴)
    let h = build_poincare_qalgebra(3);
    let a = &h.alg;
    let pp = a.g("P+");
    let pm = a.g("P-");
    let expected = &pm.scale(&q(-2, 1)) - &a.mul(&a.pow(&pp, 2), &pm).shift_order(2);
    assert_eq!(a.commutator(&a.g("K"), &pm), expected);
    assert!(a.commutator(&pp, &pm).is_zero());
    assert_eq!(a.mul(&pp, &pm), a.mul(&pm, &pp));
}

#[test]
fn analytic_functions_truncate() {
    let h = build_poincare_qalgebra(3);
    let a = &h.alg;
    let p = a.g("P+");
    let zp = p.shift_order(1);
    let expected = &zp + &a.pow(&p, 3).shift_order(3).scale(&q(1, 6));
    assert_eq!(a.sinh(&zp).unwrap(), expected);
    assert_eq!(a.exp(&AlgebraElement::zero()).unwrap(), AlgebraElement::one());

    let weyl = build_weyl(MuMode::Symbolic, 2);
    let b = &weyl.alg;
    let half_wp1 = b.g("P1").shift_order(1).scale(&q(1, 2));
    let mu = mu_coeff(MuMode::Symbolic);
    let expected = &AlgebraElement::one()
        + &b.pow(&b.g("P1"), 2).scale_spoly(2, &mu).scale(&q(1, 8));
    assert_eq!(b.gen_cos(&mu, &half_wp1).unwrap(), expected);
}

#[test]
fn flip_and_embeddings() {
    let h = build_poincare_qalgebra(3);
    let a = &h.alg;
    let (k, pp, pm) = (a.g("K"), a.g("P+"), a.g("P-"));
    assert_eq!(flip(&t2(&k, &pp)), t2(&pp, &k));
    // σΔP₋ = e^{zP₊}⊗P₋ + P₋⊗e^{−zP₊}
    let ep = a.exp(&pp.shift_order(1)).unwrap();
    let em = a.exp(&-&pp.shift_order(1)).unwrap();
    let expected = &t2(&ep, &pm) + &t2(&pm, &em);
    assert_eq!(flip(&h.delta(&pm)), a.clamp(&expected));
    let one = AlgebraElement::one();
    let k13 = embed(&t2(&k, &pp), Embedding::S13);
    assert_eq!(k13, qgroup_core::ncalg::outer::<2, 1, 3>(&t2(&k, &one), &pp));
    assert_eq!(
        embed(&t2(&one, &one), Embedding::S23),
        qgroup_core::ncalg::Tensor3::one()
    );
}

#[test]
fn coproduct_in_a_slot_and_counit() {
    let h = build_poincare_qalgebra(3);
    let a = &h.alg;
    let (k, pp) = (a.g("K"), a.g("P+"));
    let lhs = h.delta_in_slot(&t2(&pp, &k), 0);
    let expected = qgroup_core::ncalg::outer::<2, 1, 3>(&primitive(&pp), &k);
    assert_eq!(lhs, expected);
    // (ε⊗id)ΔK = K
    let dk = h.delta(&k);
    let eps_id: AlgebraElement = h.counit.apply_in_slot::<2, 1>(a, &dk, 0);
    assert_eq!(eps_id, k);
}

#[test]
fn mutated_antipode_fails_at_order_zero() {
    let h = build_poincare_qalgebra(2);
    let mut images = h.antipode.images().to_vec();
    let i = h.id_of("P-").index();
    images[i] = -&images[i];
    let mutated = qgroup_core::hopf::HopfPresentation {
        antipode: Morphism::antihomomorphism(images),
        ..h.clone()
    };
    assert_eq!(check_counit_antipode(&mutated).first_failing_order(), Some(0));
    assert!(check_counit_antipode(&h).passed());
}

fn failing(r: &CheckReport) -> bool {
    !r.passed()
}

#[test]
fn printed_coordinate_antipode_sign_fails() {
    // the sine terms of the printed antipode of the coordinate algebra carry
    // a minus sign; with it the antipode axiom already fails at order zero
    let mode = MuMode::Symbolic;
    let h = build_qgroup_gmu(mode, Truncation::capped(2, 3));
    let a = &h.alg;
    let mu = mu_coeff(mode);
    let th = a.g("th");
    let (ep, em) = (a.exp(&a.g("d")).unwrap(), a.exp(&-&a.g("d")).unwrap());
    let (c, s) = (a.gen_cos(&mu, &th).unwrap(), a.gen_sin(&mu, &th).unwrap());
    let printed = |e: &AlgebraElement, x: &str, y: &str, mu_on_s: bool| {
        let es = a.mul(e, &s);
        let es = if mu_on_s { es.scale_spoly(0, &mu) } else { es };
        -&(&a.mul(&a.mul(e, &c), &a.g(x)) + &a.mul(&es, &a.g(y)))
    };
    let mut images = h.antipode.images().to_vec();
    for (name, img) in [
        ("p1", printed(&em, "p1", "p2", true)),
        ("p2", printed(&em, "p2", "p1", false)),
        ("c1", printed(&ep, "c1", "c2", true)),
        ("c2", printed(&ep, "c2", "c1", false)),
    ] {
        images[h.id_of(name).index()] = img;
    }
    let as_printed = qgroup_core::hopf::HopfPresentation {
        antipode: Morphism::antihomomorphism(images),
        ..h.clone()
    };
    let report = check_counit_antipode(&as_printed);
    assert!(failing(&report));
    assert_eq!(report.first_failing_order(), Some(0));
    assert!(check_counit_antipode(&h).passed());
}

#[test]
fn contracted_brackets_at_zeroth_order() {
    let h = contracted_gmu(MuMode::Symbolic, 2).unwrap();
    let a = &h.alg;
    let mu = mu_coeff(MuMode::Symbolic);
    let jp2 = a.commutator(&a.g("J"), &a.g("P2")).order_part(0);
    assert_eq!(jp2, a.g("P1").scale_spoly(0, &mu));
    for c in ["C1", "C2"] {
        assert_eq!(a.commutator(&a.g("D"), &a.g(c)).order_part(0), -&a.g(c));
    }
}

#[test]
fn coordinate_algebra_samples() {
    let h = build_qgroup_gmu(MuMode::Plus, Truncation::capped(2, 3));
    let a = &h.alg;
    let c2 = a.g("c2");
    assert_eq!(a.commutator(&a.g("p2"), &c2), -&c2.shift_order(1));
    assert_eq!(h.delta(&a.g("d")), primitive(&a.g("d")));
}

#[test]
fn newton_hooke_relabelling() {
    use qgroup_core::models::NamedVector;
    let (gens, coords) = kinematical_relabel(MuMode::Minus).unwrap();
    let d = NamedVector::from([("D".into(), q(1, 1))]);
    assert_eq!(gens.to_new(&d), NamedVector::from([("Ht".into(), q(-1, 1))]));
    // x₁ = 2(p₁ + c₁)
    let x1 = NamedVector::from([("x1".into(), q(1, 1))]);
    assert_eq!(
        coords.to_old(&x1),
        NamedVector::from([("p1".into(), q(2, 1)), ("c1".into(), q(2, 1))])
    );
    let v = NamedVector::from([("P2".into(), q(3, 1)), ("C1".into(), q(-1, 2)), ("J".into(), q(1, 1))]);
    assert_eq!(gens.to_old(&gens.to_new(&v)), v);
    assert_eq!(kinematical_relabel(MuMode::Plus), Err(ModelError::WrongMuMode("+1")));
}
