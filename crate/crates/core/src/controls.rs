//! Negative controls: deliberately broken variants of the deformed Poincaré
//! structures, each of which must be caught by the corresponding check at a
//! known lowest order.

use crate::hopf::{check_coproduct_compatibility, check_counit_antipode, HopfPresentation};
use crate::models::{build_poincare_qalgebra, t2, wedge};
use crate::ncalg::{Morphism, Tensor2};
use crate::report::CheckReport;
use crate::rmatrix::{verify_qybe, Provenance, RMatrix};

/// A documented mutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// `ΔK = 1⊗K + K⊗e^{zP₊}`: the factor `e^{−zP₊}` is dropped.
    DroppedCoproductFactor,
    /// `γ(P₋) = +e^{zP₊}P₋e^{−zP₊}`.
    FlippedAntipodeSign,
    /// `R = exp(K∧sinh zP₊)`: the factor `zΔP₊/sinh zΔP₊` is dropped.
    DroppedRFactor,
}

impl Mutation {
    pub const ALL: [Mutation; 3] = [
        Mutation::DroppedCoproductFactor,
        Mutation::FlippedAntipodeSign,
        Mutation::DroppedRFactor,
    ];

    pub fn label(self) -> &'static str {
        match self {
            Mutation::DroppedCoproductFactor => "dropped-coproduct-factor",
            Mutation::FlippedAntipodeSign => "flipped-antipode-sign",
            Mutation::DroppedRFactor => "dropped-r-factor",
        }
    }

    /// The lowest order at which the mutation shows up (found by running the
    /// checks, then frozen). The dropped R factor is invisible to the
    /// Yang–Baxter check below order 4.
    pub fn expected_first_failing_order(self) -> u32 {
        match self {
            Mutation::DroppedCoproductFactor => 1,
            Mutation::FlippedAntipodeSign => 0,
            Mutation::DroppedRFactor => 4,
        }
    }

    /// Run the check that exposes the mutation.
    pub fn run(self, order: u32) -> CheckReport {
        let h = build_poincare_qalgebra(order);
        let report = match self {
            Mutation::DroppedCoproductFactor => {
                check_coproduct_compatibility(&mutate_coproduct(&h))
            }
            Mutation::FlippedAntipodeSign => check_counit_antipode(&mutate_antipode(&h)),
            Mutation::DroppedRFactor => {
                let a = &h.alg;
                let zp = h.g("P+").shift_order(1);
                let e = wedge(&h.g("K"), &a.sinh(&zp).expect("positive order"));
                let r = RMatrix::from_exponent(a, e, Provenance::Poincare).expect("positive order");
                verify_qybe(&r, a)
            }
        };
        let mut report = report;
        report.name = alloc::format!("{}: {}", self.label(), report.name);
        report
    }
}

fn mutate_coproduct(h: &HopfPresentation) -> HopfPresentation {
    let a = &h.alg;
    let k = h.g("K");
    let ep = a.exp(&h.g("P+").shift_order(1)).expect("positive order");
    let dk: Tensor2 = &t2(&crate::ncalg::AlgebraElement::one(), &k) + &t2(&k, &ep);
    let mut images = h.coproduct.images().to_vec();
    images[h.id_of("K").index()] = a.clamp(&dk);
    HopfPresentation {
        coproduct: Morphism::homomorphism(images),
        ..h.clone()
    }
}

fn mutate_antipode(h: &HopfPresentation) -> HopfPresentation {
    let mut images = h.antipode.images().to_vec();
    let i = h.id_of("P-").index();
    images[i] = -&images[i];
    HopfPresentation {
        antipode: Morphism::antihomomorphism(images),
        ..h.clone()
    }
}
