use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Algebra, AlgebraElement, Element, Monomial, NcError, TermKey, Tensor2, Tensor3};

/// `σ(x⊗y) = y⊗x`
pub fn flip(t: &Tensor2) -> Tensor2 {
    t.map_keys(|k| {
        Some(TermKey {
            slots: [k.slots[1], k.slots[0]],
            ..*k
        })
    })
}

/// Placement of a rank-2 tensor inside rank 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Embedding {
    S12,
    S13,
    S23,
}

/// Insert the unit in the omitted slot.
pub fn embed(t: &Tensor2, at: Embedding) -> Tensor3 {
    let u = Monomial::UNIT;
    let mut out = Tensor3::zero();
    for (k, c) in t.terms() {
        let [a, b] = k.slots;
        let slots = match at {
            Embedding::S12 => [a, b, u],
            Embedding::S13 => [a, u, b],
            Embedding::S23 => [u, a, b],
        };
        out.add_term(
            TermKey {
                slots,
                order: k.order,
                spow: k.spow,
            },
            c,
        );
    }
    out
}

/// `a ⊗ b`; `C` must equal `A + B`.
pub fn outer<const A: usize, const B: usize, const C: usize>(
    a: &Element<A>,
    b: &Element<B>,
) -> Element<C> {
    assert_eq!(A + B, C, "rank mismatch in outer product");
    let mut out = Element::<C>::zero();
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            let mut slots = [Monomial::UNIT; C];
            slots[..A].copy_from_slice(&ka.slots);
            slots[A..].copy_from_slice(&kb.slots);
            out.add_term(
                TermKey {
                    slots,
                    order: ka.order + kb.order,
                    spow: ka.spow + kb.spow,
                },
                &(ca * cb),
            );
        }
    }
    out
}

/// Whether generator images extend multiplicatively or anti-multiplicatively.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MorphismKind {
    Homomorphism,
    Antihomomorphism,
}

/// A map out of an algebra given by the images of its generators in
/// `B^{⊗K}` for a target algebra `B`: `K = 2` for coproducts, `K = 0` for
/// counits, `K = 1` for antipodes and changes of basis.
#[derive(Clone, Debug)]
pub struct Morphism<const K: usize> {
    kind: MorphismKind,
    images: Vec<Element<K>>,
}

impl<const K: usize> Morphism<K> {
    pub fn new(kind: MorphismKind, images: Vec<Element<K>>) -> Self {
        Morphism { kind, images }
    }

    pub fn homomorphism(images: Vec<Element<K>>) -> Self {
        Morphism::new(MorphismKind::Homomorphism, images)
    }

    pub fn antihomomorphism(images: Vec<Element<K>>) -> Self {
        Morphism::new(MorphismKind::Antihomomorphism, images)
    }

    pub fn kind(&self) -> MorphismKind {
        self.kind
    }

    pub fn images(&self) -> &[Element<K>] {
        &self.images
    }

    pub fn image(&self, g: super::GeneratorId) -> &Element<K> {
        &self.images[g.index()]
    }

    /// Check that there is one image per generator of `source`.
    pub fn check_source(&self, source: &Algebra) -> Result<(), NcError> {
        if self.images.len() != source.system().len() {
            return Err(NcError::ImageCountMismatch {
                expected: source.system().len(),
                got: self.images.len(),
            });
        }
        Ok(())
    }

    fn monomial_image(
        &self,
        target: &Algebra,
        m: Monomial,
        memo: &mut BTreeMap<Monomial, Element<K>>,
    ) -> Element<K> {
        if m.is_unit() {
            return target.clamp(&Element::<K>::one());
        }
        if let Some(hit) = memo.get(&m) {
            return hit.clone();
        }
        let g = m.last().expect("non-unit");
        let rest = self.monomial_image(target, m.lower(g), memo);
        let img = &self.images[g.index()];
        let out = match self.kind {
            MorphismKind::Homomorphism => target.mul(&rest, img),
            MorphismKind::Antihomomorphism => target.mul(img, &rest),
        };
        memo.insert(m, out.clone());
        out
    }

    /// Extend to an algebra element.
    pub fn apply(&self, target: &Algebra, x: &AlgebraElement) -> Element<K> {
        self.apply_in_slot::<1, K>(target, x, 0)
    }

    /// Apply in tensor slot `slot` of a rank-`R` element, producing rank
    /// `S = R − 1 + K`; the other slots are carried along unchanged.
    pub fn apply_in_slot<const R: usize, const S: usize>(
        &self,
        target: &Algebra,
        x: &Element<R>,
        slot: usize,
    ) -> Element<S> {
        assert!(slot < R, "slot out of range");
        assert_eq!(R - 1 + K, S, "rank mismatch in morphism application");
        let mut memo = BTreeMap::new();
        let mut out = Element::<S>::zero();
        for (k, c) in x.terms() {
            let img = self.monomial_image(target, k.slots[slot], &mut memo);
            for (ik, ic) in img.terms() {
                let mut slots = [Monomial::UNIT; S];
                slots[..slot].copy_from_slice(&k.slots[..slot]);
                slots[slot..slot + K].copy_from_slice(&ik.slots);
                slots[slot + K..].copy_from_slice(&k.slots[slot + 1..]);
                let order = k.order as u32 + ik.order as u32;
                if order > target.order() {
                    continue;
                }
                out.add_term(
                    TermKey {
                        slots,
                        order: order as u8,
                        spow: k.spow + ik.spow,
                    },
                    &(c * ic),
                );
            }
        }
        target.clamp(&out)
    }
}

impl Algebra {
    /// The multiplication map `A⊗A → A`.
    pub fn multiply_slots(&self, t: &Tensor2) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (k, c) in t.terms() {
            let p = self.mono_mul(k.slots[0], k.slots[1]);
            for (pk, pc) in p.terms() {
                let order = pk.order as u32 + k.order as u32;
                if order > self.order() {
                    continue;
                }
                out.add_term(
                    TermKey {
                        slots: pk.slots,
                        order: order as u8,
                        spow: pk.spow + k.spow,
                    },
                    &(pc * c),
                );
            }
        }
        self.clamp(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::{Param, Rational};
    use crate::ncalg::{GeneratorId, RewriteSystem, Truncation};

    fn alg() -> Algebra {
        Algebra::commutative(&["a", "b"], Param::Z, Truncation::order(3))
    }

    #[test]
    fn flip_is_involutive() {
        let a = alg();
        let t: Tensor2 = outer(&a.g("a"), &a.g("b"));
        assert_ne!(flip(&t), t);
        assert_eq!(flip(&flip(&t)), t);
    }

    #[test]
    fn embed_inserts_unit() {
        let a = alg();
        let t: Tensor2 = outer(&a.g("a"), &a.g("b"));
        let e = embed(&t, Embedding::S13);
        let expected: Tensor3 = outer(&outer::<1, 1, 2>(&a.g("a"), &AlgebraElement::one()), &a.g("b"));
        assert_eq!(e, expected);
        assert_eq!(embed(&Tensor2::one(), Embedding::S23), Tensor3::one());
    }

    #[test]
    fn counit_morphism_kills_generators() {
        let a = alg();
        let eps = Morphism::<0>::homomorphism(vec![Element::zero(), Element::zero()]);
        let x = &a.g("a") + &AlgebraElement::scalar(0, 0, Rational::from_int(5));
        let v = eps.apply(&a, &x);
        assert_eq!(v, Element::<0>::scalar(0, 0, Rational::from_int(5)));
    }

    #[test]
    fn antihomomorphism_reverses_products() {
        let mut sys = RewriteSystem::new(&["x", "y"]);
        let x = AlgebraElement::basis([Monomial::gen(GeneratorId(0))]);
        sys.set_commutator(GeneratorId(1), GeneratorId(0), x.clone());
        let a = Algebra::new(sys, Param::Z, Truncation::order(2)).unwrap();
        // S(x) = x, S(y) = y as an antimorphism: S(xy) = yx = xy + x.
        let s = Morphism::antihomomorphism(vec![a.g("x"), a.g("y")]);
        let xy = a.mul(&a.g("x"), &a.g("y"));
        assert_eq!(s.apply(&a, &xy), &xy + &a.g("x"));
    }

    extern crate std;
    use alloc::vec;
}
