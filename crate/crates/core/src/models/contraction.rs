use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::funalg::FunzCopy;
use super::uzalg::{place, UzCopy};
use super::{names, ModelError};
use crate::coeffring::{MuMode, Param, Rational};
use crate::hopf::HopfPresentation;
use crate::ncalg::{
    Algebra, AlgebraElement, Element, GeneratorId, Monomial, Morphism, RewriteSystem, TermKey,
    Truncation,
};
use crate::report::{CheckReport, Residual};

/// Two commuting copies of the deformed Poincaré algebra with parameters
/// `+z` and `−z`, generators `K¹ < K² < P¹₊ < P²₊ < P¹₋ < P²₋`.
pub fn build_doubled(order: u32) -> HopfPresentation {
    let mut sys = RewriteSystem::new(&names::DOUBLED);
    let copies = [
        UzCopy {
            k: GeneratorId(0),
            p: GeneratorId(2),
            m: GeneratorId(4),
            sign: 1,
        },
        UzCopy {
            k: GeneratorId(1),
            p: GeneratorId(3),
            m: GeneratorId(5),
            sign: -1,
        },
    ];
    for c in &copies {
        c.add_rules(&mut sys, order);
    }
    let alg = Algebra::new(sys, Param::Z, Truncation::order(order)).expect("no degree cap");
    let mut delta = Vec::new();
    let mut gamma = Vec::new();
    for c in &copies {
        let [dk, dp, dm] = c.coproduct(&alg);
        let [gk, gp, gm] = c.antipode(&alg);
        delta.extend([(c.k, dk), (c.p, dp), (c.m, dm)]);
        gamma.extend([(c.k, gk), (c.p, gp), (c.m, gm)]);
    }
    HopfPresentation::new(
        "doubled",
        alg,
        Morphism::homomorphism(place(6, delta)),
        Morphism::homomorphism(place(6, [])),
        Morphism::antihomomorphism(place(6, gamma)),
    )
    .expect("six images")
}

/// Two commuting copies of the deformed Poincaré group with parameters
/// `+z` and `−z`, coordinates `χ̂¹ < χ̂² < â¹₊ < â²₊ < â¹₋ < â²₋`.
pub fn build_doubled_qgroup(trunc: Truncation) -> HopfPresentation {
    let mut sys = RewriteSystem::new(&names::DOUBLED_FUN);
    let copies = [
        FunzCopy {
            chi: GeneratorId(0),
            ap: GeneratorId(2),
            am: GeneratorId(4),
            sign: 1,
        },
        FunzCopy {
            chi: GeneratorId(1),
            ap: GeneratorId(3),
            am: GeneratorId(5),
            sign: -1,
        },
    ];
    for c in &copies {
        c.add_rules(&mut sys, trunc);
    }
    let alg = Algebra::new(sys, Param::Z, trunc).expect("rules respect the filtration");
    let mut delta = Vec::new();
    let mut gamma = Vec::new();
    for c in &copies {
        let [dc, dp, dm] = c.coproduct(&alg);
        let [gc, gp, gm] = c.antipode(&alg);
        delta.extend([(c.chi, dc), (c.ap, dp), (c.am, dm)]);
        gamma.extend([(c.chi, gc), (c.ap, gp), (c.am, gm)]);
    }
    HopfPresentation::new(
        "doubled-fun",
        alg,
        Morphism::homomorphism(place(6, delta)),
        Morphism::homomorphism(place(6, [])),
        Morphism::antihomomorphism(place(6, gamma)),
    )
    .expect("six images")
}

/// A graded contraction of a doubled presentation: the contracted
/// generators written in the doubled ones (`forward`), and the inverse
/// change of basis (`backward`) into a commutative algebra on the
/// contracted names. The doubled PBW order is block-compatible with the
/// contracted one, so a doubled normal monomial maps to a product of
/// commuting blocks that is already contracted-normal.
#[derive(Clone, Debug)]
pub struct Contraction {
    pub target_names: Vec<String>,
    pub forward: Vec<AlgebraElement>,
    backward: Morphism<1>,
    /// Evaluate `s = 1` up front instead of keeping it symbolic.
    unit_s: bool,
}

/// `Σ c · s^k · g`
fn lin(alg: &Algebra, terms: &[(&str, i16, Rational)]) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (name, spow, c) in terms {
        let g = alg.id(name).expect("catalog name");
        out.add_term(
            TermKey {
                slots: [Monomial::gen(g)],
                order: 0,
                spow: *spow,
            },
            c,
        );
    }
    out
}

impl Contraction {
    /// `(J,P₁,P₂,C₁,C₂,D) = (sN₃/2, J₊, sN₊, −J₋, sN₋, J₃/2)` with
    /// `J₃ = K¹+K²`, `N₃ = K¹−K²`, `J± = P¹±+P²±`, `N± = P¹±−P²±`.
    pub fn algebra(doubled: &Algebra, unit_s: bool) -> Self {
        let h = Rational::new(1, 2);
        let one = Rational::one();
        let m = -&one;
        let mh = -&h;
        let f = |t: &[(&str, i16, Rational)]| lin(doubled, t);
        let forward = Vec::from([
            f(&[("K1", 1, h.clone()), ("K2", 1, mh.clone())]),
            f(&[("K1", 0, h.clone()), ("K2", 0, h.clone())]),
            f(&[("P1+", 0, one.clone()), ("P2+", 0, one.clone())]),
            f(&[("P1+", 1, one.clone()), ("P2+", 1, m.clone())]),
            f(&[("P1-", 0, m.clone()), ("P2-", 0, m.clone())]),
            f(&[("P1-", 1, one.clone()), ("P2-", 1, m.clone())]),
        ]);
        let target = Algebra::commutative(&names::GMU, Param::W, doubled.truncation());
        let b = |t: &[(&str, i16, Rational)]| lin(&target, t);
        let backward = Morphism::homomorphism(Vec::from([
            b(&[("D", 0, one.clone()), ("J", -1, one.clone())]),
            b(&[("D", 0, one.clone()), ("J", -1, m.clone())]),
            b(&[("P1", 0, h.clone()), ("P2", -1, h.clone())]),
            b(&[("P1", 0, h.clone()), ("P2", -1, mh.clone())]),
            b(&[("C1", 0, mh.clone()), ("C2", -1, h.clone())]),
            b(&[("C1", 0, mh.clone()), ("C2", -1, mh.clone())]),
        ]));
        Contraction::finish_new(&names::GMU, forward, backward, unit_s)
    }

    /// `(θ̂,p̂₁,p̂₂,ĉ₁,ĉ₂,d̂) = (2b̂/s, â₊, b̂₊/s, −â₋, b̂₋/s, 2â)` with
    /// `â = (χ̂¹+χ̂²)/2`, `b̂ = (χ̂¹−χ̂²)/2`, `â± = (â¹±+â²±)/2`,
    /// `b̂± = (â¹±−â²±)/2`.
    pub fn group(doubled: &Algebra, unit_s: bool) -> Self {
        let h = Rational::new(1, 2);
        let one = Rational::one();
        let m = -&one;
        let mh = -&h;
        let f = |t: &[(&str, i16, Rational)]| lin(doubled, t);
        let forward = Vec::from([
            f(&[("chi1", 0, one.clone()), ("chi2", 0, one.clone())]),
            f(&[("chi1", -1, one.clone()), ("chi2", -1, m.clone())]),
            f(&[("a1+", 0, h.clone()), ("a2+", 0, h.clone())]),
            f(&[("a1+", -1, h.clone()), ("a2+", -1, mh.clone())]),
            f(&[("a1-", 0, mh.clone()), ("a2-", 0, mh.clone())]),
            f(&[("a1-", -1, h.clone()), ("a2-", -1, mh.clone())]),
        ]);
        let target = Algebra::commutative(&names::FUNW, Param::W, doubled.truncation());
        let b = |t: &[(&str, i16, Rational)]| lin(&target, t);
        let backward = Morphism::homomorphism(Vec::from([
            b(&[("d", 0, h.clone()), ("th", 1, h.clone())]),
            b(&[("d", 0, h.clone()), ("th", 1, mh.clone())]),
            b(&[("p1", 0, one.clone()), ("p2", 1, one.clone())]),
            b(&[("p1", 0, one.clone()), ("p2", 1, m.clone())]),
            b(&[("c1", 0, m.clone()), ("c2", 1, one.clone())]),
            b(&[("c1", 0, m.clone()), ("c2", 1, m.clone())]),
        ]));
        Contraction::finish_new(&names::FUNW, forward, backward, unit_s)
    }

    fn finish_new(
        target: &[&str],
        forward: Vec<AlgebraElement>,
        backward: Morphism<1>,
        unit_s: bool,
    ) -> Self {
        let mut c = Contraction {
            target_names: target.iter().map(|s| String::from(*s)).collect(),
            forward,
            backward,
            unit_s,
        };
        if unit_s {
            c.forward = c.forward.iter().map(drop_s).collect();
            c.backward = Morphism::homomorphism(c.backward.images().iter().map(drop_s).collect());
        }
        c
    }

    fn target(&self, trunc: Truncation) -> Algebra {
        let names: Vec<&str> = self.target_names.iter().map(|s| s.as_str()).collect();
        Algebra::commutative(&names, Param::W, trunc)
    }

    /// Re-express a doubled element in the contracted generators and put
    /// `z = s·w`. The result may still carry odd powers of `s`.
    pub fn contract<const R: usize>(&self, trunc: Truncation, x: &Element<R>) -> Element<R> {
        let target = self.target(trunc);
        let mut y = x.clone();
        for slot in 0..R {
            y = self.backward.apply_in_slot::<R, R>(&target, &y, slot);
        }
        if self.unit_s {
            y
        } else {
            y.map_keys(|k| {
                Some(TermKey {
                    spow: k.spow + k.order as i16,
                    ..*k
                })
            })
        }
    }

    /// Contract, require evenness in `s`, and specialize μ if numeric.
    pub fn contract_checked<const R: usize>(
        &self,
        item: &str,
        trunc: Truncation,
        mode: MuMode,
        x: &Element<R>,
    ) -> Result<Element<R>, ModelError> {
        let y = self.contract(trunc, x);
        if let Some((k, _)) = y.first_non_mu_term() {
            return Err(ModelError::OddSPowerResidue {
                item: item.into(),
                order: k.order as u32,
                s_power: k.spow as i32,
            });
        }
        Ok(match mode.value() {
            Some(v) => y.specialize_mu(&v).expect("checked even"),
            None => y,
        })
    }
}

fn drop_s(x: &AlgebraElement) -> AlgebraElement {
    x.map_keys(|k| Some(TermKey { spow: 0, ..*k }))
}

/// Brackets, coproduct and antipode of the contracted generators,
/// computed inside the doubled presentation and re-expressed.
pub fn contract_algebra(
    doubled: &HopfPresentation,
    map: &Contraction,
    mode: MuMode,
    id: impl Into<String>,
) -> Result<HopfPresentation, ModelError> {
    let a = &doubled.alg;
    let trunc = a.truncation();
    let names: Vec<&str> = map.target_names.iter().map(|s| s.as_str()).collect();
    let mut sys = RewriteSystem::new(&names);
    for i in 0..names.len() {
        for j in 0..i {
            let br = a.commutator(&map.forward[i], &map.forward[j]);
            let item = format!("[{}, {}]", names[i], names[j]);
            let v = map.contract_checked(&item, trunc, mode, &br)?;
            sys.set_commutator(GeneratorId(i as u8), GeneratorId(j as u8), v);
        }
    }
    let alg = Algebra::new(sys, Param::W, trunc)?;
    let mut delta = Vec::new();
    let mut gamma = Vec::new();
    for (i, x) in map.forward.iter().enumerate() {
        let d = doubled.delta(x);
        delta.push(map.contract_checked(&format!("Δ{}", names[i]), trunc, mode, &d)?);
        let g = doubled.gamma(x);
        gamma.push(map.contract_checked(&format!("γ{}", names[i]), trunc, mode, &g)?);
    }
    Ok(HopfPresentation::new(
        id,
        alg,
        Morphism::homomorphism(delta),
        Morphism::homomorphism(place(names.len(), [])),
        Morphism::antihomomorphism(gamma),
    )?)
}

/// The contracted quantum algebra `U_w g_μ`, computed from the doubled
/// algebra.
pub fn contracted_gmu(mode: MuMode, order: u32) -> Result<HopfPresentation, ModelError> {
    let doubled = build_doubled(order);
    let map = Contraction::algebra(&doubled.alg, false);
    contract_algebra(&doubled, &map, mode, format!("uw-g{}", mode.label()))
}

/// The deformed function algebra on `G_μ`, obtained by doubling the
/// deformed Poincaré group and contracting.
pub fn build_qgroup_gmu_reconstructed(
    mode: MuMode,
    trunc: Truncation,
) -> Result<HopfPresentation, ModelError> {
    let doubled = build_doubled_qgroup(trunc);
    let map = Contraction::group(&doubled.alg, false);
    contract_algebra(&doubled, &map, mode, format!("funw-g{}-reconstructed", mode.label()))
}

/// Rewrite an element of `from^{⊗R}` in the generator ids of `to`, by
/// name. `None` when a generator of `from` has no counterpart.
pub fn remap_named<const R: usize>(from: &Algebra, to: &Algebra, x: &Element<R>) -> Option<Element<R>> {
    let table: Vec<Option<GeneratorId>> = from
        .system()
        .names()
        .iter()
        .map(|n| to.id(n).ok())
        .collect();
    let mut out = Element::<R>::zero();
    for (k, c) in x.terms() {
        let mut slots = [Monomial::UNIT; R];
        for (i, m) in k.slots.iter().enumerate() {
            for g in from.system().generators() {
                let e = m.exponent(g);
                if e > 0 {
                    slots[i] = slots[i].with(table[g.index()]?, e);
                }
            }
        }
        out.add_term(TermKey { slots, ..*k }, c);
    }
    Some(out)
}

/// Compare `sub` against the restriction of `full` to the generators of
/// `sub`: brackets, coproduct, counit and antipode images must agree
/// coefficient-exactly, and the images in `full` must not leave the
/// subalgebra.
pub fn compare_presentations(sub: &HopfPresentation, full: &HopfPresentation) -> CheckReport {
    let mut report = CheckReport::new(
        format!("{} = {}|restricted", sub.id, full.id),
        "presentation comparison",
    );
    let (sa, fa) = (&sub.alg, &full.alg);
    let names: Vec<String> = sa.system().names().to_vec();
    for (i, a) in names.iter().enumerate() {
        let Ok(x) = fa.id(a) else {
            report.fail(a.clone(), "generator missing from the full presentation");
            continue;
        };
        let g = GeneratorId(i as u8);
        for (j, b) in names[..i].iter().enumerate() {
            let Ok(y) = fa.id(b) else { continue };
            let mine = sa.system().bracket(g, GeneratorId(j as u8));
            let theirs = fa.system().bracket(x, y);
            compare_one(&mut report, format!("[{a}, {b}]"), sa, fa, &mine, &theirs);
        }
        let (mine, theirs) = (sub.coproduct.image(g), full.coproduct.image(x));
        compare_one(&mut report, format!("Δ{a}"), sa, fa, mine, theirs);
        let (mine, theirs) = (sub.antipode.image(g), full.antipode.image(x));
        compare_one(&mut report, format!("γ{a}"), sa, fa, mine, theirs);
        let (mine, theirs) = (sub.counit.image(g), full.counit.image(x));
        compare_one(&mut report, format!("ε{a}"), sa, fa, mine, theirs);
    }
    report
}

fn compare_one<const R: usize>(
    report: &mut CheckReport,
    item: String,
    sa: &Algebra,
    fa: &Algebra,
    mine: &Element<R>,
    theirs: &Element<R>,
) {
    match remap_named(fa, sa, theirs) {
        Some(t) => report.push(Residual::of(item, sa, &(mine - &t))),
        None => report.fail(item, "image leaves the subalgebra"),
    }
}
