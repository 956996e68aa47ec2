use alloc::vec::Vec;

use super::{names, primitive, t2};
use crate::coeffring::{Param, Rational};
use crate::hopf::HopfPresentation;
use crate::ncalg::{
    Algebra, AlgebraElement, Element, GeneratorId, Morphism, RewriteSystem, Tensor2, Truncation,
};

/// Generators `(K, P₊, P₋)` of one copy of the deformed Poincaré algebra
/// inside a larger rewrite system, with the sign of its parameter.
#[derive(Clone, Copy, Debug)]
pub(crate) struct UzCopy {
    pub k: GeneratorId,
    pub p: GeneratorId,
    pub m: GeneratorId,
    pub sign: i64,
}

impl UzCopy {
    /// `[K,P₊] = 2 sinh(zP₊)/z`, `[K,P₋] = −2P₋ cosh(zP₊)`; both are even in
    /// `z`, so they do not depend on the sign of the copy.
    pub fn add_rules(&self, sys: &mut RewriteSystem, order: u32) {
        let hi = Algebra::commutative(&name_refs(sys), Param::Z, Truncation::order(order + 1));
        let p = hi.gen(self.p);
        let m = hi.gen(self.m);
        let zp = p.shift_order(1).scale(&Rational::from_int(self.sign));
        let two_sinh_over_z = hi
            .sinh(&zp)
            .expect("zP₊ has positive order")
            .shift_order(-1)
            .scale(&Rational::from_int(2 * self.sign));
        let cosh = hi.cosh(&zp).expect("zP₊ has positive order");
        let km = hi.mul(&m, &cosh).scale(&Rational::from_int(-2));
        sys.set_commutator(self.k, self.p, two_sinh_over_z.truncate(order));
        sys.set_commutator(self.k, self.m, km.truncate(order));
    }

    fn exp_p(&self, alg: &Algebra, sign: i64) -> AlgebraElement {
        let zp = alg
            .gen(self.p)
            .shift_order(1)
            .scale(&Rational::from_int(sign * self.sign));
        alg.exp(&zp).expect("zP₊ has positive order")
    }

    /// Coproduct images of `K, P₊, P₋`, in that order.
    pub fn coproduct(&self, alg: &Algebra) -> [Tensor2; 3] {
        let em = self.exp_p(alg, -1);
        let ep = self.exp_p(alg, 1);
        let k = alg.gen(self.k);
        let m = alg.gen(self.m);
        let dk = &t2(&em, &k) + &t2(&k, &ep);
        let dm = &t2(&em, &m) + &t2(&m, &ep);
        [alg.clamp(&dk), primitive(&alg.gen(self.p)), alg.clamp(&dm)]
    }

    /// `γ(X) = −e^{zP₊} X e^{−zP₊}`
    pub fn antipode(&self, alg: &Algebra) -> [AlgebraElement; 3] {
        let em = self.exp_p(alg, -1);
        let ep = self.exp_p(alg, 1);
        let conj = |x: AlgebraElement| -&alg.product(&[&ep, &x, &em]);
        [
            conj(alg.gen(self.k)),
            conj(alg.gen(self.p)),
            conj(alg.gen(self.m)),
        ]
    }
}

pub(crate) fn name_refs(sys: &RewriteSystem) -> Vec<&str> {
    sys.names().iter().map(|s| s.as_str()).collect()
}

/// Scatter per-copy images into a generator-indexed vector.
pub(crate) fn place<const K: usize>(
    n: usize,
    entries: impl IntoIterator<Item = (GeneratorId, Element<K>)>,
) -> Vec<Element<K>> {
    let mut out: Vec<Element<K>> = (0..n).map(|_| Element::zero()).collect();
    for (g, x) in entries {
        out[g.index()] = x;
    }
    out
}

/// The deformed (1+1) Poincaré algebra with generators `K < P₊ < P₋`,
/// truncated at order `order` in `z`.
pub fn build_poincare_qalgebra(order: u32) -> HopfPresentation {
    let mut sys = RewriteSystem::new(&names::UZ);
    let c = UzCopy {
        k: GeneratorId(0),
        p: GeneratorId(1),
        m: GeneratorId(2),
        sign: 1,
    };
    c.add_rules(&mut sys, order);
    let alg = Algebra::new(sys, Param::Z, Truncation::order(order)).expect("no degree cap");
    let delta = c.coproduct(&alg);
    let gamma = c.antipode(&alg);
    HopfPresentation::new(
        "uz-iso11",
        alg,
        Morphism::homomorphism(delta.to_vec()),
        Morphism::homomorphism(place(3, [])),
        Morphism::antihomomorphism(gamma.to_vec()),
    )
    .expect("three images")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::q;

    #[test]
    fn bracket_k_pplus_expands_sinh() {
        let h = build_poincare_qalgebra(3);
        let a = &h.alg;
        let p = a.g("P+");
        // P₊·K = K·P₊ − 2P₊ − (1/3)z²P₊³
        let lhs = a.mul(&p, &a.g("K"));
        let p3 = a.pow(&p, 3).shift_order(2).scale(&q(-1, 3));
        let expected = &(&a.mul(&a.g("K"), &p) - &p.scale(&q(2, 1))) + &p3;
        assert_eq!(lhs, expected);
    }
}
