use proptest::prelude::*;

use qgroup_core::coeffring::{series_invert, Param, Rational, ScalarSeries};
use qgroup_core::cpoly::{CPoly, Coord};
use qgroup_core::models::{build_poincare_qalgebra, build_qgroup_gmu, t2};
use qgroup_core::ncalg::{flip, Algebra, AlgebraElement, Truncation};
use qgroup_core::coeffring::MuMode;
use qgroup_core::poisson::{jacobiator, sklyanin_bracket};

fn rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| Rational::new(n, d))
}

fn nonzero_rational() -> impl Strategy<Value = Rational> {
    rational().prop_filter("nonzero", |r| !r.is_zero())
}

/// A random element: a few words in the generators, each at some order.
fn element_spec(gens: usize, max_order: u8) -> impl Strategy<Value = Vec<(Vec<usize>, u8, Rational)>> {
    prop::collection::vec(
        (prop::collection::vec(0..gens, 0..=3), 0..=max_order, rational()),
        0..=4,
    )
}

fn build(alg: &Algebra, words: &[(Vec<usize>, u8, Rational)]) -> AlgebraElement {
    let names: Vec<String> = alg.system().names().to_vec();
    let mut out = AlgebraElement::zero();
    for (word, order, c) in words {
        let mut x = AlgebraElement::one();
        for g in word {
            x = alg.mul(&x, &alg.g(&names[*g]));
        }
        out = &out + &x.shift_order(*order as i32).scale(c);
    }
    alg.clamp(&out)
}

/// A random polynomial in the coordinates and transcendental symbols.
fn poly() -> impl Strategy<Value = CPoly> {
    let atoms = prop::collection::vec((0usize..10, 0u32..=2), 1..=3);
    prop::collection::vec((atoms, rational()), 1..=3).prop_map(|terms| {
        let mut out = CPoly::zero();
        for (atoms, c) in terms {
            let mut t = CPoly::constant(c);
            for (i, e) in atoms {
                t = t.mul(&CPoly::coord(Coord::ALL[i], 0).pow(e));
            }
            out = &out + &t;
        }
        out
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.recip(), Rational::one());
        }
    }

    #[test]
    fn unit_series_invert(c0 in nonzero_rational(), rest in prop::collection::vec(rational(), 0..=4)) {
        let mut coeffs = vec![c0];
        coeffs.extend(rest);
        let u = ScalarSeries::from_rationals(Param::W, 4, &coeffs);
        let v = series_invert(&u).unwrap();
        prop_assert_eq!(&u * &v, ScalarSeries::one(Param::W, 4));
    }

    #[test]
    fn normal_ordering_is_associative(
        a in element_spec(3, 2), b in element_spec(3, 2), c in element_spec(3, 2)
    ) {
        let alg = build_poincare_qalgebra(3).alg;
        let (a, b, c) = (build(&alg, &a), build(&alg, &b), build(&alg, &c));
        prop_assert_eq!(alg.mul(&alg.mul(&a, &b), &c), alg.mul(&a, &alg.mul(&b, &c)));
    }

    #[test]
    fn coordinate_algebra_is_associative_in_the_window(
        a in element_spec(6, 1), b in element_spec(6, 1), c in element_spec(6, 1)
    ) {
        let alg = build_qgroup_gmu(MuMode::Symbolic, Truncation::capped(2, 3)).alg;
        let (a, b, c) = (build(&alg, &a), build(&alg, &b), build(&alg, &c));
        let lhs = alg.mul(&alg.mul(&a, &b), &c);
        let rhs = alg.mul(&a, &alg.mul(&b, &c));
        let trunc = alg.truncation();
        let diff = (&lhs - &rhs).filter(|k| trunc.reported(k.order as u32, k.degree()));
        prop_assert!(diff.is_zero());
    }

    #[test]
    fn truncation_is_consistent(a in element_spec(3, 2), b in element_spec(3, 2)) {
        let hi = build_poincare_qalgebra(4).alg;
        let lo = build_poincare_qalgebra(2).alg;
        let (ah, bh) = (build(&hi, &a), build(&hi, &b));
        let (al, bl) = (build(&lo, &a), build(&lo, &b));
        prop_assert_eq!(hi.mul(&ah, &bh).truncate(2), lo.mul(&al, &bl));
    }

    #[test]
    fn exponential_inverse(a in element_spec(3, 2)) {
        let alg = build_poincare_qalgebra(3).alg;
        let x = build(&alg, &a).shift_order(1);
        let x = alg.clamp(&x);
        let e = alg.exp(&x).unwrap();
        let ei = alg.exp(&-&x).unwrap();
        prop_assert_eq!(alg.mul(&e, &ei), AlgebraElement::one());
    }

    #[test]
    fn flip_is_an_involution(a in element_spec(3, 2), b in element_spec(3, 2)) {
        let alg = build_poincare_qalgebra(3).alg;
        let t = t2(&build(&alg, &a), &build(&alg, &b));
        prop_assert_eq!(flip(&flip(&t)), t);
    }

    #[test]
    fn commutator_is_antisymmetric(a in element_spec(3, 2)) {
        let alg = build_poincare_qalgebra(3).alg;
        let x = build(&alg, &a);
        prop_assert!(alg.commutator(&x, &x).is_zero());
    }

    #[test]
    fn sklyanin_bracket_is_antisymmetric_and_leibniz(f in poly(), g in poly(), h in poly()) {
        prop_assert_eq!(sklyanin_bracket(&f, &g), -&sklyanin_bracket(&g, &f));
        let lhs = sklyanin_bracket(&f, &g.mul(&h));
        let rhs = &sklyanin_bracket(&f, &g).mul(&h) + &g.mul(&sklyanin_bracket(&f, &h));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sklyanin_bracket_satisfies_jacobi(f in poly(), g in poly(), h in poly()) {
        prop_assert!(jacobiator(&f, &g, &h).is_zero());
    }

    #[test]
    fn mu_specialisation_commutes_with_the_bracket(f in poly(), g in poly(), m in -2i64..=2) {
        let v = Rational::from_int(m);
        let lhs = sklyanin_bracket(&f, &g).specialize_mu(&v);
        let rhs = sklyanin_bracket(&f.specialize_mu(&v), &g.specialize_mu(&v)).specialize_mu(&v);
        prop_assert_eq!(lhs, rhs);
    }
}
