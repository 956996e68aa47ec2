use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec::Vec;
use core::cell::RefCell;

use super::{
    AlgebraElement, Element, GeneratorId, Monomial, NcError, RewriteSystem, TermKey, Truncation,
};
use crate::coeffring::{taylor, Param, Rational, SPoly};

/// A noncommutative algebra ready for computation: a rewrite system, the
/// deformation parameter it is written in, and truncation caps.
///
/// Products of normal monomials are memoized; the cache is private to the
/// value, so an `Algebra` is not shared across threads (build one per
/// thread instead, builders are cheap).
pub struct Algebra {
    sys: RewriteSystem,
    param: Param,
    trunc: Truncation,
    gen_cache: RefCell<BTreeMap<(GeneratorId, Monomial), Rc<AlgebraElement>>>,
    mono_cache: RefCell<BTreeMap<(Monomial, Monomial), Rc<AlgebraElement>>>,
}

impl Clone for Algebra {
    fn clone(&self) -> Self {
        Algebra::from_parts(self.sys.clone(), self.param, self.trunc)
    }
}

impl core::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Algebra")
            .field("generators", &self.sys.names())
            .field("param", &self.param)
            .field("trunc", &self.trunc)
            .finish()
    }
}

impl Algebra {
    /// Wrap a rewrite system, checking that every rule is compatible with
    /// the truncation filtration.
    pub fn new(sys: RewriteSystem, param: Param, trunc: Truncation) -> Result<Self, NcError> {
        if trunc.degree.is_some() {
            for ((g, h), rhs) in sys.rules() {
                for (k, _) in rhs.terms() {
                    if k.order as u32 + k.degree() < 2 {
                        return Err(NcError::RuleBreaksFiltration {
                            left: sys.name(*g).into(),
                            right: sys.name(*h).into(),
                        });
                    }
                }
            }
        }
        Ok(Algebra::from_parts(sys, param, trunc))
    }

    fn from_parts(sys: RewriteSystem, param: Param, trunc: Truncation) -> Self {
        Algebra {
            sys,
            param,
            trunc,
            gen_cache: RefCell::new(BTreeMap::new()),
            mono_cache: RefCell::new(BTreeMap::new()),
        }
    }

    /// Commutative polynomial algebra on the given generators.
    pub fn commutative(names: &[&str], param: Param, trunc: Truncation) -> Self {
        Algebra::from_parts(RewriteSystem::new(names), param, trunc)
    }

    /// Same presentation at different caps. Rule right-hand sides are
    /// re-truncated; raising the order requires rebuilding from the model.
    pub fn with_truncation(&self, trunc: Truncation) -> Self {
        Algebra::from_parts(self.sys.clone(), self.param, trunc)
    }

    pub fn system(&self) -> &RewriteSystem {
        &self.sys
    }

    pub fn param(&self) -> Param {
        self.param
    }

    pub fn truncation(&self) -> Truncation {
        self.trunc
    }

    pub fn order(&self) -> u32 {
        self.trunc.order
    }

    pub fn id(&self, name: &str) -> Result<GeneratorId, NcError> {
        self.sys.id(name)
    }

    /// Generator by name; panics on unknown names (catalog use only).
    pub fn g(&self, name: &str) -> AlgebraElement {
        let id = self.sys.id(name).expect("unknown generator");
        AlgebraElement::basis([Monomial::gen(id)])
    }

    pub fn gen(&self, id: GeneratorId) -> AlgebraElement {
        AlgebraElement::basis([Monomial::gen(id)])
    }

    fn keeps<const R: usize>(&self, key: &TermKey<R>) -> bool {
        self.trunc.keeps(key.order as u32, key.degree())
    }

    /// Apply the truncation caps.
    pub fn clamp<const R: usize>(&self, x: &Element<R>) -> Element<R> {
        x.filter(|k| self.keeps(k))
    }

    /// `g · m` in normal form.
    fn gen_left_mul(&self, g: GeneratorId, m: Monomial) -> Rc<AlgebraElement> {
        let h = match m.first() {
            Some(h) if h < g => h,
            _ => {
                let mut out = AlgebraElement::zero();
                let prod = Monomial::gen(g).concat(&m);
                let key = TermKey {
                    slots: [prod],
                    order: 0,
                    spow: 0,
                };
                if self.keeps(&key) {
                    out.add_term(key, &Rational::one());
                }
                return Rc::new(out);
            }
        };
        if let Some(hit) = self.gen_cache.borrow().get(&(g, m)) {
            return hit.clone();
        }
        let rest = m.lower(h);
        let mut out = AlgebraElement::zero();
        // g h rest = h (g rest) + [g, h] rest
        let inner = self.gen_left_mul(g, rest);
        for (k, c) in inner.terms() {
            let moved = self.gen_left_mul(h, k.slots[0]);
            self.accumulate(&mut out, &moved, k.order, k.spow, c);
        }
        if let Some(rule) = self.sys.rule(g, h) {
            for (k, c) in rule.terms() {
                let tail = self.mono_mul(k.slots[0], rest);
                self.accumulate(&mut out, &tail, k.order, k.spow, c);
            }
        }
        let out = Rc::new(out);
        self.gen_cache.borrow_mut().insert((g, m), out.clone());
        out
    }

    fn accumulate(
        &self,
        out: &mut AlgebraElement,
        src: &AlgebraElement,
        order: u8,
        spow: i16,
        c: &Rational,
    ) {
        for (k, v) in src.terms() {
            let key = TermKey {
                slots: k.slots,
                order: k.order + order,
                spow: k.spow + spow,
            };
            if self.keeps(&key) {
                out.add_term(key, &(v * c));
            }
        }
    }

    /// Normal-ordered product of two PBW monomials.
    pub fn mono_mul(&self, a: Monomial, b: Monomial) -> Rc<AlgebraElement> {
        if a.ordered_before(&b) {
            let key = TermKey {
                slots: [a.concat(&b)],
                order: 0,
                spow: 0,
            };
            let mut out = AlgebraElement::zero();
            if self.keeps(&key) {
                out.add_term(key, &Rational::one());
            }
            return Rc::new(out);
        }
        if let Some(hit) = self.mono_cache.borrow().get(&(a, b)) {
            return hit.clone();
        }
        let g = a.last().expect("non-unit");
        let head = a.lower(g);
        let gb = self.gen_left_mul(g, b);
        let mut out = AlgebraElement::zero();
        for (k, c) in gb.terms() {
            let prod = self.mono_mul(head, k.slots[0]);
            self.accumulate(&mut out, &prod, k.order, k.spow, c);
        }
        let out = Rc::new(out);
        self.mono_cache.borrow_mut().insert((a, b), out.clone());
        out
    }

    /// Normal form of a word in the generators.
    pub fn normal_order(&self, word: &[GeneratorId]) -> AlgebraElement {
        let mut acc = AlgebraElement::one();
        for g in word {
            acc = self.mul(&acc, &self.gen(*g));
        }
        self.clamp(&acc)
    }

    /// Product in `A^{⊗R}`, each slot normal-ordered independently.
    pub fn mul<const R: usize>(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        let n = self.trunc.order;
        let mut out = Element::<R>::zero();
        let mut slot_products: Vec<Rc<AlgebraElement>> = Vec::with_capacity(R);
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let order = ka.order as u32 + kb.order as u32;
                if order > n {
                    continue;
                }
                slot_products.clear();
                let mut empty = false;
                for i in 0..R {
                    let p = self.mono_mul(ka.slots[i], kb.slots[i]);
                    if p.is_zero() {
                        empty = true;
                        break;
                    }
                    slot_products.push(p);
                }
                if empty {
                    continue;
                }
                let base = TermKey {
                    slots: [Monomial::UNIT; R],
                    order: order as u8,
                    spow: ka.spow + kb.spow,
                };
                let c = ca * cb;
                self.outer_into(&mut out, &slot_products, 0, base, &c);
            }
        }
        out
    }

    fn outer_into<const R: usize>(
        &self,
        out: &mut Element<R>,
        parts: &[Rc<AlgebraElement>],
        slot: usize,
        key: TermKey<R>,
        c: &Rational,
    ) {
        if slot == R {
            if self.keeps(&key) {
                out.add_term(key, c);
            }
            return;
        }
        for (k, v) in parts[slot].terms() {
            let order = key.order as u32 + k.order as u32;
            if order > self.trunc.order {
                continue;
            }
            let mut next = key;
            next.slots[slot] = k.slots[0];
            next.order = order as u8;
            next.spow += k.spow;
            if let Some(d) = self.trunc.degree {
                // partial weight already exceeds the cap
                let partial: u32 = next.slots[..=slot].iter().map(Monomial::degree).sum();
                if order + partial > self.trunc.order + d {
                    continue;
                }
            }
            self.outer_into(out, parts, slot + 1, next, &(c * v));
        }
    }

    /// `a b − b a`
    pub fn commutator<const R: usize>(&self, a: &Element<R>, b: &Element<R>) -> Element<R> {
        &self.mul(a, b) - &self.mul(b, a)
    }

    pub fn pow<const R: usize>(&self, x: &Element<R>, e: u32) -> Element<R> {
        let mut acc = self.clamp(&Element::<R>::one());
        for _ in 0..e {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Product of several elements, left to right.
    pub fn product<const R: usize>(&self, xs: &[&Element<R>]) -> Element<R> {
        let mut acc = self.clamp(&Element::<R>::one());
        for x in xs {
            acc = self.mul(&acc, x);
        }
        acc
    }

    /// Smallest filtration weight among the terms of `x`.
    pub fn min_weight<const R: usize>(&self, x: &Element<R>) -> Option<u32> {
        x.terms()
            .map(|(k, _)| self.trunc.weight(k.order as u32, k.degree()))
            .min()
    }

    /// `Σ coeffs[k] · x^k` through the truncation. Terminates because every
    /// term of `x` has positive filtration weight.
    pub fn apply_series<const R: usize>(
        &self,
        coeffs: &[SPoly],
        x: &Element<R>,
    ) -> Result<Element<R>, NcError> {
        let x = self.clamp(x);
        let mut out = Element::<R>::zero();
        if let Some(c0) = coeffs.first() {
            out.add_assign(&self.clamp(&Element::<R>::spoly(0, c0)));
        }
        if x.is_zero() {
            return Ok(out);
        }
        if self.min_weight(&x) == Some(0) {
            return Err(NcError::NonNilpotentArgument);
        }
        let mut power = x.clone();
        let mut k = 1usize;
        while !power.is_zero() {
            let c = coeffs.get(k).ok_or(NcError::SeriesTooShort { needed: k + 1 })?;
            if !c.is_zero() {
                out.add_assign(&power.scale_spoly(0, c));
            }
            k += 1;
            power = self.mul(&power, &x);
        }
        Ok(self.clamp(&out))
    }

    /// Series with rational coefficients.
    pub fn apply_rational_series<const R: usize>(
        &self,
        coeffs: &[Rational],
        x: &Element<R>,
    ) -> Result<Element<R>, NcError> {
        let c: Vec<SPoly> = coeffs.iter().cloned().map(SPoly::constant).collect();
        self.apply_series(&c, x)
    }

    fn series_len(&self) -> u32 {
        self.trunc.max_weight() + 1
    }

    pub fn exp<const R: usize>(&self, x: &Element<R>) -> Result<Element<R>, NcError> {
        self.apply_rational_series(&taylor::exp(self.series_len()), x)
    }

    pub fn sinh<const R: usize>(&self, x: &Element<R>) -> Result<Element<R>, NcError> {
        self.apply_rational_series(&taylor::sinh(self.series_len()), x)
    }

    pub fn cosh<const R: usize>(&self, x: &Element<R>) -> Result<Element<R>, NcError> {
        self.apply_rational_series(&taylor::cosh(self.series_len()), x)
    }

    /// `x / sinh x`
    pub fn x_over_sinh<const R: usize>(&self, x: &Element<R>) -> Result<Element<R>, NcError> {
        self.apply_rational_series(&taylor::x_over_sinh(self.series_len()), x)
    }

    /// `C₋μ(x) = cosh(√μ x)` with μ given as an `SPoly` (μ = s² when symbolic).
    pub fn gen_cos<const R: usize>(&self, mu: &SPoly, x: &Element<R>) -> Result<Element<R>, NcError> {
        self.apply_series(&gen_trig_coeffs(mu, self.series_len(), 0), x)
    }

    /// `S₋μ(x) = sinh(√μ x)/√μ`.
    pub fn gen_sin<const R: usize>(&self, mu: &SPoly, x: &Element<R>) -> Result<Element<R>, NcError> {
        self.apply_series(&gen_trig_coeffs(mu, self.series_len(), 1), x)
    }

    /// Human-readable rendering: terms sorted by basis tensor, then order.
    pub fn render<const R: usize>(&self, x: &Element<R>) -> String {
        if x.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in x.terms() {
            parts.push(self.render_term(k, c));
        }
        parts.join(" + ")
    }

    pub fn render_term<const R: usize>(&self, k: &TermKey<R>, c: &Rational) -> String {
        let mut s = format!("({c})");
        if k.spow != 0 {
            s.push_str(&format!("*s^{}", k.spow));
        }
        if k.order != 0 {
            s.push_str(&format!("*{}^{}", self.param.symbol(), k.order));
        }
        s.push_str("*[");
        s.push_str(&self.render_slots(&k.slots));
        s.push(']');
        s
    }

    pub fn render_slots<const R: usize>(&self, slots: &[Monomial; R]) -> String {
        let parts: Vec<String> = slots.iter().map(|m| self.render_monomial(m)).collect();
        parts.join(" ⊗ ")
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        if m.is_unit() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for g in self.sys.generators() {
            let e = m.exponent(g);
            match e {
                0 => {}
                1 => parts.push(String::from(self.sys.name(g))),
                _ => parts.push(format!("{}^{}", self.sys.name(g), e)),
            }
        }
        parts.join("·")
    }
}

/// Coefficients `μ^k/(2k+parity)!` at degree `2k+parity`, zero elsewhere.
pub fn gen_trig_coeffs(mu: &SPoly, len: u32, parity: u32) -> Vec<SPoly> {
    let mut out = Vec::with_capacity(len as usize);
    let mut mu_pow = SPoly::one();
    for n in 0..len {
        if n % 2 == parity {
            out.push(mu_pow.scale(&Rational::inv_factorial(n)));
            if parity == 1 {
                mu_pow = &mu_pow * mu;
            }
        } else {
            out.push(SPoly::zero());
            if parity == 0 {
                mu_pow = &mu_pow * mu;
            }
        }
    }
    out
}
