use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use super::Monomial;
use crate::coeffring::{Param, Rational, SPoly, ScalarSeries};

/// One basis key of a rank-`R` element: a PBW monomial per tensor slot,
/// the power of the deformation parameter, and the power of `s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TermKey<const R: usize> {
    pub slots: [Monomial; R],
    pub order: u8,
    pub spow: i16,
}

impl<const R: usize> TermKey<R> {
    pub fn degree(&self) -> u32 {
        self.slots.iter().map(Monomial::degree).sum()
    }
}

/// Element of `A^{⊗R}` with truncated-series coefficients, stored flat as
/// `(slots, order, s-power) → rational`. No zero coefficient is stored, so
/// structural equality is equality of elements.
///
/// `R = 1` is an algebra element, `R = 2, 3` the tensors carrying
/// coproducts and R-matrices, `R = 0` a bare scalar series.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Element<const R: usize> {
    terms: BTreeMap<TermKey<R>, Rational>,
}

pub type AlgebraElement = Element<1>;
pub type Tensor2 = Element<2>;
pub type Tensor3 = Element<3>;
pub type Scalar = Element<0>;

impl<const R: usize> Element<R> {
    pub fn zero() -> Self {
        Element {
            terms: BTreeMap::new(),
        }
    }

    /// The unit `1 ⊗ … ⊗ 1`.
    pub fn one() -> Self {
        Self::term([Monomial::UNIT; R], 0, 0, Rational::one())
    }

    pub fn term(slots: [Monomial; R], order: u8, spow: i16, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(TermKey { slots, order, spow }, &c);
        out
    }

    pub fn basis(slots: [Monomial; R]) -> Self {
        Self::term(slots, 0, 0, Rational::one())
    }

    /// `c · 1⊗…⊗1`
    pub fn scalar(order: u8, spow: i16, c: Rational) -> Self {
        Self::term([Monomial::UNIT; R], order, spow, c)
    }

    /// `c(s) · param^order · 1⊗…⊗1`
    pub fn spoly(order: u8, c: &SPoly) -> Self {
        let mut out = Self::zero();
        for (k, v) in c.terms() {
            out.add_term(
                TermKey {
                    slots: [Monomial::UNIT; R],
                    order,
                    spow: k as i16,
                },
                v,
            );
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TermKey<R>, &Rational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (TermKey<R>, Rational)> {
        self.terms.into_iter()
    }

    pub fn from_terms(it: impl IntoIterator<Item = (TermKey<R>, Rational)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in it {
            out.add_term(k, &c);
        }
        out
    }

    pub fn add_term(&mut self, key: TermKey<R>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c.clone());
            }
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(*k, c);
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (k, c) in &other.terms {
            self.add_term(*k, &-c);
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(*k, &(v * c));
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Element {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiply by `c(s) · param^order`.
    pub fn scale_spoly(&self, order: u8, c: &SPoly) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            for (e, cv) in c.terms() {
                let key = TermKey {
                    slots: k.slots,
                    order: k.order + order,
                    spow: k.spow + e as i16,
                };
                out.add_term(key, &(v * cv));
            }
        }
        out
    }

    /// Multiply by `s^k`.
    pub fn mul_s(&self, k: i16) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(key, v)| {
                    (
                        TermKey {
                            spow: key.spow + k,
                            ..*key
                        },
                        v.clone(),
                    )
                })
                .collect(),
        }
    }

    /// Multiply by `param^k` for `k ≥ 0`, or divide by `param^{-k}`; the
    /// division panics unless every term has order at least `-k`.
    pub fn shift_order(&self, k: i32) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .map(|(key, v)| {
                    let o = key.order as i32 + k;
                    assert!(o >= 0, "division by the deformation parameter is not exact");
                    (
                        TermKey {
                            order: o as u8,
                            ..*key
                        },
                        v.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn min_order(&self) -> Option<u8> {
        self.terms.keys().map(|k| k.order).min()
    }

    pub fn max_order(&self) -> Option<u8> {
        self.terms.keys().map(|k| k.order).max()
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.degree()).max()
    }

    /// Keep only the terms accepted by `keep`.
    pub fn filter(&self, mut keep: impl FnMut(&TermKey<R>) -> bool) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Drop all terms of order above `order`.
    pub fn truncate(&self, order: u32) -> Self {
        self.filter(|k| k.order as u32 <= order)
    }

    /// The coefficient of `param^k`, as an element of order zero.
    pub fn order_part(&self, k: u8) -> Self {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(key, _)| key.order == k)
                .map(|(key, v)| (TermKey { order: 0, ..*key }, v.clone()))
                .collect(),
        }
    }

    /// Coefficient of a basis tensor as a truncated series.
    pub fn coefficient(&self, slots: &[Monomial; R], param: Param, order: u32) -> ScalarSeries {
        let mut out = ScalarSeries::zero(param, order);
        for (k, v) in &self.terms {
            if &k.slots == slots {
                out.add_term(k.order as u32, &SPoly::monomial(k.spow as i32, v.clone()));
            }
        }
        out
    }

    /// Distinct basis tensors, in sorted order.
    pub fn basis_keys(&self) -> Vec<[Monomial; R]> {
        let mut out: Vec<[Monomial; R]> = Vec::new();
        for k in self.terms.keys() {
            if out.last() != Some(&k.slots) {
                out.push(k.slots);
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Re-key every term; terms mapped to `None` are dropped.
    pub fn map_keys(&self, mut f: impl FnMut(&TermKey<R>) -> Option<TermKey<R>>) -> Self {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            if let Some(nk) = f(k) {
                out.add_term(nk, v);
            }
        }
        out
    }

    /// Substitute `s² → value` in an element even in `s`; `None` when an
    /// odd or negative power of `s` is present.
    pub fn specialize_mu(&self, value: &Rational) -> Option<Self> {
        let mut out = Self::zero();
        for (k, v) in &self.terms {
            if k.spow < 0 || k.spow % 2 != 0 {
                return None;
            }
            let c = v * &value.pow((k.spow / 2) as u32);
            out.add_term(TermKey { spow: 0, ..*k }, &c);
        }
        Some(out)
    }

    /// First term with an odd or negative power of `s`.
    pub fn first_non_mu_term(&self) -> Option<(&TermKey<R>, &Rational)> {
        self.terms.iter().find(|(k, _)| k.spow < 0 || k.spow % 2 != 0)
    }

    /// Whether every monomial in every slot uses only the given generators.
    pub fn supported_in(&self, allowed: &[super::GeneratorId]) -> bool {
        self.terms
            .keys()
            .all(|k| k.slots.iter().all(|m| m.supported_in(allowed)))
    }
}

impl Element<0> {
    /// View a rank-0 element as a truncated series.
    pub fn to_series(&self, param: Param, order: u32) -> ScalarSeries {
        self.coefficient(&[], param, order)
    }
}

impl<const R: usize> Add<&Element<R>> for &Element<R> {
    type Output = Element<R>;
    fn add(self, rhs: &Element<R>) -> Element<R> {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl<const R: usize> Sub<&Element<R>> for &Element<R> {
    type Output = Element<R>;
    fn sub(self, rhs: &Element<R>) -> Element<R> {
        let mut out = self.clone();
        out.sub_assign(rhs);
        out
    }
}

impl<const R: usize> Neg for &Element<R> {
    type Output = Element<R>;
    fn neg(self) -> Element<R> {
        self.scale(&Rational::from_int(-1))
    }
}

impl<const R: usize> core::fmt::Debug for Element<R> {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
