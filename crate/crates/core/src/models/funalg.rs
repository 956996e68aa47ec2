use super::uzalg::{name_refs, place};
use super::{mu_coeff, names, primitive, t2};
use crate::coeffring::{MuMode, Param, Rational, SPoly};
use crate::hopf::HopfPresentation;
use crate::ncalg::{
    Algebra, AlgebraElement, GeneratorId, Morphism, RewriteSystem, Tensor2, Truncation,
};

/// Coordinates `(χ̂, â₊, â₋)` of one copy of the deformed Poincaré group
/// inside a larger rewrite system, with the sign of its parameter.
#[derive(Clone, Copy, Debug)]
pub(crate) struct FunzCopy {
    pub chi: GeneratorId,
    pub ap: GeneratorId,
    pub am: GeneratorId,
    pub sign: i64,
}

impl FunzCopy {
    /// `[χ̂,â₊] = z(e^{2χ̂} − 1)`, `[â₊,â₋] = −2z â₋`.
    pub fn add_rules(&self, sys: &mut RewriteSystem, trunc: Truncation) {
        let scratch = Algebra::commutative(&name_refs(sys), Param::Z, trunc);
        let sign = Rational::from_int(self.sign);
        let e2 = exp_chi(&scratch, self.chi, 2);
        let chi_ap = (&e2 - &AlgebraElement::one()).shift_order(1).scale(&sign);
        let ap_am = scratch
            .gen(self.am)
            .shift_order(1)
            .scale(&Rational::from_int(-2 * self.sign));
        sys.set_commutator(self.chi, self.ap, scratch.clamp(&chi_ap));
        sys.set_commutator(self.ap, self.am, scratch.clamp(&ap_am));
    }

    /// Coproduct images of `χ̂, â₊, â₋`; independent of the parameter.
    pub fn coproduct(&self, alg: &Algebra) -> [Tensor2; 3] {
        let one = AlgebraElement::one();
        let dpm = |a: GeneratorId, k: i64| {
            let x = alg.gen(a);
            alg.clamp(&(&t2(&x, &one) + &t2(&exp_chi(alg, self.chi, k), &x)))
        };
        [
            primitive(&alg.gen(self.chi)),
            dpm(self.ap, 2),
            dpm(self.am, -2),
        ]
    }

    /// `γ(χ̂) = −χ̂`, `γ(â±) = −e^{∓2χ̂} â±`.
    pub fn antipode(&self, alg: &Algebra) -> [AlgebraElement; 3] {
        let g = |a: GeneratorId, k: i64| -&alg.mul(&exp_chi(alg, self.chi, k), &alg.gen(a));
        [-&alg.gen(self.chi), g(self.ap, -2), g(self.am, 2)]
    }
}

fn exp_chi(alg: &Algebra, chi: GeneratorId, k: i64) -> AlgebraElement {
    let x = alg.gen(chi).scale(&Rational::from_int(k));
    alg.exp(&x).expect("coordinates have positive weight")
}

/// The deformed (1+1) Poincaré group, coordinates `χ̂ < â₊ < â₋`.
pub fn build_poincare_qgroup(trunc: Truncation) -> HopfPresentation {
    let mut sys = RewriteSystem::new(&names::FUNZ);
    let c = FunzCopy {
        chi: GeneratorId(0),
        ap: GeneratorId(1),
        am: GeneratorId(2),
        sign: 1,
    };
    c.add_rules(&mut sys, trunc);
    let alg = Algebra::new(sys, Param::Z, trunc).expect("rules respect the filtration");
    let delta = c.coproduct(&alg);
    let gamma = c.antipode(&alg);
    HopfPresentation::new(
        "funz-iso11",
        alg,
        Morphism::homomorphism(delta.to_vec()),
        Morphism::homomorphism(place(3, [])),
        Morphism::antihomomorphism(gamma.to_vec()),
    )
    .expect("three images")
}

/// Functions of `d̂, θ̂` that recur in the group-coordinate tables.
pub(crate) struct GroupFunctions {
    pub e_plus_c: AlgebraElement,
    pub e_plus_s: AlgebraElement,
    pub e_minus_c: AlgebraElement,
    pub e_minus_s: AlgebraElement,
}

impl GroupFunctions {
    pub fn new(alg: &Algebra, mu: &SPoly) -> Self {
        let d = alg.g("d");
        let th = alg.g("th");
        let ep = alg.exp(&d).expect("positive weight");
        let em = alg.exp(&-&d).expect("positive weight");
        let c = alg.gen_cos(mu, &th).expect("positive weight");
        let s = alg.gen_sin(mu, &th).expect("positive weight");
        GroupFunctions {
            e_plus_c: alg.mul(&ep, &c),
            e_plus_s: alg.mul(&ep, &s),
            e_minus_c: alg.mul(&em, &c),
            e_minus_s: alg.mul(&em, &s),
        }
    }
}

/// The printed deformed function algebra on `G_μ`, coordinates
/// `d̂ < θ̂ < p̂₁ < p̂₂ < ĉ₁ < ĉ₂`, parameter `w`.
pub fn build_qgroup_gmu(mode: MuMode, trunc: Truncation) -> HopfPresentation {
    let mu = mu_coeff(mode);
    let mut sys = RewriteSystem::new(&names::FUNW);
    {
        let scratch = Algebra::commutative(&names::FUNW, Param::W, trunc);
        let f = GroupFunctions::new(&scratch, &mu);
        let w = |x: &AlgebraElement| scratch.clamp(&x.shift_order(1));
        let one = AlgebraElement::one();
        let g = |n: &str| scratch.g(n);
        let id = |n: &str| scratch.id(n).expect("catalog name");
        let rules = [
            ("d", "p1", w(&f.e_plus_s.scale_spoly(0, &mu))),
            ("d", "p2", w(&(&f.e_plus_c - &one))),
            ("th", "p1", w(&(&f.e_plus_c - &one))),
            ("th", "p2", w(&f.e_plus_s)),
            ("p1", "c1", w(&g("c2").scale_spoly(0, &mu))),
            ("p1", "c2", w(&g("c1"))),
            ("p2", "c1", w(&-&g("c1"))),
            ("p2", "c2", w(&-&g("c2"))),
        ];
        for (a, b, v) in rules {
            sys.set_commutator(id(a), id(b), v);
        }
    }
    let alg = Algebra::new(sys, Param::W, trunc).expect("rules respect the filtration");
    let f = GroupFunctions::new(&alg, &mu);
    let one = AlgebraElement::one();
    let g = |n: &str| alg.g(n);
    let lin = |x: &str, c: &AlgebraElement, y: &str, s: &AlgebraElement, z: &str, mu_on_s: bool| {
        let s = if mu_on_s { s.scale_spoly(0, &mu) } else { s.clone() };
        let out = &(&t2(&g(x), &one) + &t2(c, &g(y))) + &t2(&s, &g(z));
        alg.clamp(&out)
    };
    let delta = [
        primitive(&g("d")),
        primitive(&g("th")),
        lin("p1", &f.e_plus_c, "p1", &f.e_plus_s, "p2", true),
        lin("p2", &f.e_plus_c, "p2", &f.e_plus_s, "p1", false),
        lin("c1", &f.e_minus_c, "c1", &f.e_minus_s, "c2", true),
        lin("c2", &f.e_minus_c, "c2", &f.e_minus_s, "c1", false),
    ];
    // γ is the inverse rotation: the sine term enters with a plus sign, so
    // that m(γ⊗id)Δ = ε already at order zero.
    let anti = |c: &AlgebraElement, x: &str, s: &AlgebraElement, y: &str, mu_on_s: bool| {
        let s = if mu_on_s { s.scale_spoly(0, &mu) } else { s.clone() };
        &alg.mul(&s, &g(y)) - &alg.mul(c, &g(x))
    };
    let gamma = [
        -&g("d"),
        -&g("th"),
        anti(&f.e_minus_c, "p1", &f.e_minus_s, "p2", true),
        anti(&f.e_minus_c, "p2", &f.e_minus_s, "p1", false),
        anti(&f.e_plus_c, "c1", &f.e_plus_s, "c2", true),
        anti(&f.e_plus_c, "c2", &f.e_plus_s, "c1", false),
    ];
    HopfPresentation::new(
        alloc::format!("funw-g{}", mode.label()),
        alg,
        Morphism::homomorphism(delta.to_vec()),
        Morphism::homomorphism(place(6, [])),
        Morphism::antihomomorphism(gamma.to_vec()),
    )
    .expect("six images")
}
