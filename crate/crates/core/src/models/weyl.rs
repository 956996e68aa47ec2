use super::uzalg::place;
use super::{mu_coeff, names, primitive, q, t2};
use crate::coeffring::{MuMode, Param, Rational, SPoly};
use crate::hopf::HopfPresentation;
use crate::ncalg::{Algebra, AlgebraElement, Morphism, RewriteSystem, Truncation};

/// `C₋μ(wP₁/2)`, `S₋μ(wP₁/2)`, `cosh(wP₂/2)`, `sinh(wP₂/2)` and
/// `e^{±wP₂/2}` in a given algebra.
pub(crate) struct HalfAngle {
    pub c1: AlgebraElement,
    pub s1: AlgebraElement,
    pub cosh2: AlgebraElement,
    pub sinh2: AlgebraElement,
    pub e_plus: AlgebraElement,
    pub e_minus: AlgebraElement,
}

impl HalfAngle {
    pub fn new(alg: &Algebra, mu: &SPoly, p1: &AlgebraElement, p2: &AlgebraElement) -> Self {
        let half = q(1, 2);
        let x1 = p1.shift_order(1).scale(&half);
        let x2 = p2.shift_order(1).scale(&half);
        let ok = "argument has positive order";
        HalfAngle {
            c1: alg.gen_cos(mu, &x1).expect(ok),
            s1: alg.gen_sin(mu, &x1).expect(ok),
            cosh2: alg.cosh(&x2).expect(ok),
            sinh2: alg.sinh(&x2).expect(ok),
            e_plus: alg.exp(&x2).expect(ok),
            e_minus: alg.exp(&-&x2).expect(ok),
        }
    }
}

/// The printed quantum Weyl algebra with generators `J < D < P₁ < P₂`,
/// parameter `w`, truncated at order `order`.
pub fn build_weyl(mode: MuMode, order: u32) -> HopfPresentation {
    let mu = mu_coeff(mode);
    let mut sys = RewriteSystem::new(&names::WEYL);
    {
        let hi = Algebra::commutative(&names::WEYL, Param::W, Truncation::order(order + 1));
        let h = HalfAngle::new(&hi, &mu, &hi.g("P1"), &hi.g("P2"));
        let two_over_w = |a: &AlgebraElement, b: &AlgebraElement| {
            hi.mul(a, b)
                .shift_order(-1)
                .scale(&Rational::from_int(2))
                .truncate(order)
        };
        let id = |n: &str| hi.id(n).expect("catalog name");
        sys.set_commutator(id("J"), id("P1"), two_over_w(&h.sinh2, &h.c1));
        sys.set_commutator(
            id("J"),
            id("P2"),
            two_over_w(&h.s1, &h.cosh2).scale_spoly(0, &mu),
        );
        sys.set_commutator(id("D"), id("P1"), two_over_w(&h.s1, &h.cosh2));
        sys.set_commutator(id("D"), id("P2"), two_over_w(&h.sinh2, &h.c1));
    }
    let alg = Algebra::new(sys, Param::W, Truncation::order(order)).expect("no degree cap");
    let (p1, p2) = (alg.g("P1"), alg.g("P2"));
    let h = HalfAngle::new(&alg, &mu, &p1, &p2);
    let left_c = alg.mul(&h.e_minus, &h.c1);
    let right_c = alg.mul(&h.c1, &h.e_plus);
    let left_s = alg.mul(&h.e_minus, &h.s1);
    let right_s = alg.mul(&h.s1, &h.e_plus);
    let j = alg.g("J");
    let d = alg.g("D");
    let mu_d = d.scale_spoly(0, &mu);
    let dj = &(&t2(&left_c, &j) + &t2(&j, &right_c)) + &(&t2(&mu_d, &right_s) - &t2(&left_s, &mu_d));
    let dd = &(&t2(&left_c, &d) + &t2(&d, &right_c)) + &(&t2(&j, &right_s) - &t2(&left_s, &j));
    let delta = [alg.clamp(&dj), alg.clamp(&dd), primitive(&p1), primitive(&p2)];
    let wp2 = p2.shift_order(1);
    let ep = alg.exp(&wp2).expect("positive order");
    let em = alg.exp(&-&wp2).expect("positive order");
    let conj = |x: &AlgebraElement| -&alg.product(&[&ep, x, &em]);
    let gamma = [conj(&j), conj(&d), conj(&p1), conj(&p2)];
    HopfPresentation::new(
        alloc::format!("uw-s{}", mode.label()),
        alg,
        Morphism::homomorphism(delta.to_vec()),
        Morphism::homomorphism(place(4, [])),
        Morphism::antihomomorphism(gamma.to_vec()),
    )
    .expect("four images")
}
