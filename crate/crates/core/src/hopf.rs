//! Hopf-algebra presentations and order-by-order verification of the Hopf
//! axioms and of the compatibility of the coproduct with the relations.

use alloc::format;
use alloc::string::String;

use crate::ncalg::{
    Algebra, AlgebraElement, GeneratorId, Morphism, NcError, Tensor2, Tensor3,
};
use crate::report::{CheckReport, Residual};

/// An algebra together with generator images of its coproduct, counit and
/// antipode. Δ and ε extend multiplicatively, γ anti-multiplicatively.
#[derive(Clone, Debug)]
pub struct HopfPresentation {
    pub id: String,
    pub alg: Algebra,
    pub coproduct: Morphism<2>,
    pub counit: Morphism<0>,
    pub antipode: Morphism<1>,
}

impl HopfPresentation {
    pub fn new(
        id: impl Into<String>,
        alg: Algebra,
        coproduct: Morphism<2>,
        counit: Morphism<0>,
        antipode: Morphism<1>,
    ) -> Result<Self, NcError> {
        coproduct.check_source(&alg)?;
        counit.check_source(&alg)?;
        antipode.check_source(&alg)?;
        Ok(HopfPresentation {
            id: id.into(),
            alg,
            coproduct,
            counit,
            antipode,
        })
    }

    pub fn g(&self, name: &str) -> AlgebraElement {
        self.alg.g(name)
    }

    pub fn id_of(&self, name: &str) -> GeneratorId {
        self.alg.id(name).expect("unknown generator")
    }

    pub fn delta(&self, x: &AlgebraElement) -> Tensor2 {
        self.coproduct.apply(&self.alg, x)
    }

    /// Δ of a rank-2 element in slot `slot` (0 or 1).
    pub fn delta_in_slot(&self, t: &Tensor2, slot: usize) -> Tensor3 {
        self.coproduct.apply_in_slot::<2, 3>(&self.alg, t, slot)
    }

    pub fn gamma(&self, x: &AlgebraElement) -> AlgebraElement {
        self.antipode.apply(&self.alg, x)
    }

    fn name(&self, g: GeneratorId) -> &str {
        self.alg.system().name(g)
    }

    fn generators(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        self.alg.system().generators()
    }
}

/// `[Δg, Δh] − Δ([g, h])` for every pair of generators (commuting pairs
/// included, since they are relations too).
pub fn check_coproduct_compatibility(h: &HopfPresentation) -> CheckReport {
    let mut report = CheckReport::new("coproduct-homomorphism", "coproduct respects the relations");
    let a = &h.alg;
    let gens: alloc::vec::Vec<_> = h.generators().collect();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[..i] {
            let lhs = a.commutator(h.coproduct.image(x), h.coproduct.image(y));
            let rhs = h.delta(&a.system().bracket(x, y));
            let item = format!("[{}, {}]", h.name(x), h.name(y));
            report.push(Residual::of(item, a, &(&lhs - &rhs)));
        }
    }
    report
}

/// `(Δ⊗id)Δg − (id⊗Δ)Δg` for every generator.
pub fn check_coassociativity(h: &HopfPresentation) -> CheckReport {
    let mut report = CheckReport::new("coassociativity", "(Δ⊗id)Δ = (id⊗Δ)Δ");
    for g in h.generators() {
        let d = h.coproduct.image(g);
        let left = h.delta_in_slot(d, 0);
        let right = h.delta_in_slot(d, 1);
        report.push(Residual::of(h.name(g), &h.alg, &(&left - &right)));
    }
    report
}

/// Counit and antipode axioms on every generator.
pub fn check_counit_antipode(h: &HopfPresentation) -> CheckReport {
    let mut report = CheckReport::new("counit-antipode", "ε and γ axioms");
    let a = &h.alg;
    for g in h.generators() {
        let d = h.coproduct.image(g);
        let x = a.gen(g);
        let eps_g = h.counit.image(g);
        let unit_eps = AlgebraElement::from_terms(eps_g.terms().map(|(k, c)| {
            (
                crate::ncalg::TermKey {
                    slots: [crate::ncalg::Monomial::UNIT],
                    order: k.order,
                    spow: k.spow,
                },
                c.clone(),
            )
        }));
        let left: AlgebraElement = h.counit.apply_in_slot::<2, 1>(a, d, 0);
        let right: AlgebraElement = h.counit.apply_in_slot::<2, 1>(a, d, 1);
        report.push(Residual::of(
            format!("(ε⊗id)Δ{}", h.name(g)),
            a,
            &(&left - &x),
        ));
        report.push(Residual::of(
            format!("(id⊗ε)Δ{}", h.name(g)),
            a,
            &(&right - &x),
        ));
        let sl: Tensor2 = h.antipode.apply_in_slot::<2, 2>(a, d, 0);
        let sr: Tensor2 = h.antipode.apply_in_slot::<2, 2>(a, d, 1);
        report.push(Residual::of(
            format!("m(γ⊗id)Δ{}", h.name(g)),
            a,
            &(&a.multiply_slots(&sl) - &unit_eps),
        ));
        report.push(Residual::of(
            format!("m(id⊗γ)Δ{}", h.name(g)),
            a,
            &(&a.multiply_slots(&sr) - &unit_eps),
        ));
    }
    report
}

/// ε and γ respect the relations: `ε([g,h]) = 0` and
/// `γ([g,h]) = [γh, γg]` for every pair.
pub fn check_antipode_relations(h: &HopfPresentation) -> CheckReport {
    let mut report = CheckReport::new("counit-antipode-relations", "ε and γ respect the relations");
    let a = &h.alg;
    let gens: alloc::vec::Vec<_> = h.generators().collect();
    for (i, &x) in gens.iter().enumerate() {
        for &y in &gens[..i] {
            let rel = a.system().bracket(x, y);
            let item = format!("[{}, {}]", h.name(x), h.name(y));
            let eps = h.counit.apply(a, &rel);
            report.push(Residual::of(format!("ε{item}"), a, &eps));
            let lhs = a.commutator(h.antipode.image(y), h.antipode.image(x));
            let rhs = h.gamma(&rel);
            report.push(Residual::of(format!("γ{item}"), a, &(&lhs - &rhs)));
        }
    }
    report
}

/// All Hopf checks, in a fixed order.
pub fn check_all(h: &HopfPresentation) -> [CheckReport; 4] {
    [
        check_coproduct_compatibility(h),
        check_coassociativity(h),
        check_counit_antipode(h),
        check_antipode_relations(h),
    ]
}
