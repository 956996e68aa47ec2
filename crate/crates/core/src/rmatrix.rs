//! Universal R-matrices built from their exponents, and order-by-order
//! verification of quasitriangularity, the quantum Yang–Baxter equation and
//! the recurrence that produces the Poincaré R-matrix.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::coeffring::{MuMode, Param, Rational};
use crate::hopf::HopfPresentation;
use crate::models::{
    build_doubled, build_weyl, mu_coeff, primitive, wedge, Bivector, Contraction, LieTable,
    ModelError,
};
use crate::ncalg::{
    embed, flip, Algebra, AlgebraElement, Embedding, GeneratorId, Monomial, NcError,
    TermKey, Tensor2, Tensor3,
};
use crate::report::{CheckReport, Residual};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RMatrixError {
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("first-order term of the R-matrix is not antisymmetric")]
    NonSkewFirstOrder,
    #[error("closed-form exponent is not divisible by the denominator at order {order}")]
    NotDivisible { order: u32 },
    #[error("{0} leaves the Weyl subalgebra")]
    LeavesSubalgebra(String),
}

/// How an R-matrix was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    Poincare,
    DoubledProduct,
    ContractedClosedForm,
}

impl Provenance {
    pub fn label(self) -> &'static str {
        match self {
            Provenance::Poincare => "poincare",
            Provenance::DoubledProduct => "doubled-product",
            Provenance::ContractedClosedForm => "contracted-closed-form",
        }
    }
}

/// `R = exp(E)` together with its exponent `E`.
#[derive(Clone, Debug)]
pub struct RMatrix {
    pub tensor: Tensor2,
    pub exponent: Tensor2,
    pub provenance: Provenance,
    pub order: u32,
}

impl RMatrix {
    pub fn from_exponent(
        alg: &Algebra,
        exponent: Tensor2,
        provenance: Provenance,
    ) -> Result<Self, NcError> {
        let tensor = alg.exp(&exponent)?;
        Ok(RMatrix {
            tensor,
            exponent,
            provenance,
            order: alg.order(),
        })
    }

    /// `R⁻¹ = exp(−E)`
    pub fn inverse(&self, alg: &Algebra) -> Tensor2 {
        alg.exp(&-&self.exponent).expect("exponent has positive order")
    }

    pub fn at(&self, slots: Embedding) -> Tensor3 {
        embed(&self.tensor, slots)
    }
}

/// `K∧sinh(±zP₊) · zΔP₊/sinh(zΔP₊)` for one copy of the deformed Poincaré
/// algebra with parameter `±z`.
pub fn poincare_type_exponent(alg: &Algebra, k: GeneratorId, p: GeneratorId, sign: i64) -> Tensor2 {
    let zp = alg.gen(p).shift_order(1).scale(&Rational::from_int(sign));
    let sinh = alg.sinh(&zp).expect("zP₊ has positive order");
    let f = wedge(&alg.gen(k), &sinh);
    let zdp = primitive(&alg.gen(p)).shift_order(1);
    let g = alg.x_over_sinh(&zdp).expect("zΔP₊ has positive order");
    alg.mul(&f, &g)
}

/// The R-matrix of the deformed Poincaré algebra.
pub fn build_r_poincare(h: &HopfPresentation) -> RMatrix {
    let e = poincare_type_exponent(&h.alg, h.id_of("K"), h.id_of("P+"), 1);
    RMatrix::from_exponent(&h.alg, e, Provenance::Poincare).expect("positive order")
}

/// `R·ΔX − (σ∘Δ)X·R` for one generator.
pub fn verify_intertwining(r: &RMatrix, h: &HopfPresentation, gen: GeneratorId) -> Residual {
    let a = &h.alg;
    let d = h.coproduct.image(gen);
    let lhs = a.mul(&r.tensor, d);
    let rhs = a.mul(&flip(d), &r.tensor);
    Residual::of(
        format!("RΔ{0} − σΔ{0}R", a.system().name(gen)),
        a,
        &(&lhs - &rhs),
    )
}

/// Intertwining for every generator.
pub fn verify_intertwining_all(r: &RMatrix, h: &HopfPresentation) -> CheckReport {
    let mut report = CheckReport::new("intertwining", "R Δ(X) R⁻¹ = σ∘Δ(X)");
    for g in h.alg.system().generators() {
        report.push(verify_intertwining(r, h, g));
    }
    report
}

/// `(Δ⊗id)R = R₁₃R₂₃` and `(id⊗Δ)R = R₁₃R₁₂`.
pub fn verify_coproduct_factorization(r: &RMatrix, h: &HopfPresentation) -> CheckReport {
    let a = &h.alg;
    let mut report = CheckReport::new("factorization", "(Δ⊗id)R = R₁₃R₂₃, (id⊗Δ)R = R₁₃R₁₂");
    let (r12, r13, r23) = (
        r.at(Embedding::S12),
        r.at(Embedding::S13),
        r.at(Embedding::S23),
    );
    let left = h.delta_in_slot(&r.tensor, 0);
    report.push(Residual::of("(Δ⊗id)R − R₁₃R₂₃", a, &(&left - &a.mul(&r13, &r23))));
    let right = h.delta_in_slot(&r.tensor, 1);
    report.push(Residual::of("(id⊗Δ)R − R₁₃R₁₂", a, &(&right - &a.mul(&r13, &r12))));
    report
}

/// `R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂`
pub fn verify_qybe(r: &RMatrix, alg: &Algebra) -> CheckReport {
    let mut report = CheckReport::new("qybe", "R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂");
    let (r12, r13, r23) = (
        r.at(Embedding::S12),
        r.at(Embedding::S13),
        r.at(Embedding::S23),
    );
    let lhs = alg.product(&[&r12, &r13, &r23]);
    let rhs = alg.product(&[&r23, &r13, &r12]);
    report.push(Residual::of("R₁₂R₁₃R₂₃ − R₂₃R₁₃R₁₂", alg, &(&lhs - &rhs)));
    report
}

/// `R·exp(−E) = 1⊗1`
pub fn verify_inverse(r: &RMatrix, alg: &Algebra) -> CheckReport {
    let mut report = CheckReport::new("inverse", "R·exp(−E) = 1⊗1");
    let prod = alg.mul(&r.tensor, &r.inverse(alg));
    report.push(Residual::of("R R⁻¹ − 1⊗1", alg, &(&prod - &Tensor2::one())));
    report
}

/// Intertwining, both factorizations, the Yang–Baxter equation and the
/// inverse, in that order.
pub fn verify_quasitriangular(r: &RMatrix, h: &HopfPresentation) -> [CheckReport; 4] {
    [
        verify_intertwining_all(r, h),
        verify_coproduct_factorization(r, h),
        verify_qybe(r, &h.alg),
        verify_inverse(r, &h.alg),
    ]
}

/// The first-order coefficient of `R` (the classical r-matrix divided by
/// the deformation parameter), which must be antisymmetric.
pub fn classical_limit(r: &RMatrix) -> Result<Tensor2, RMatrixError> {
    let r1 = r.tensor.order_part(1);
    if flip(&r1) != -&r1 {
        return Err(RMatrixError::NonSkewFirstOrder);
    }
    Ok(r1)
}

/// Read a rank-2 element that is linear in each slot as a bivector over a
/// Lie table with the same generator names (`s²` read as μ).
pub fn to_bivector(table: &LieTable, alg: &Algebra, t: &Tensor2) -> Option<Bivector> {
    let mut out = Bivector::new();
    for (k, c) in t.terms() {
        let [a, b] = k.slots;
        if a.degree() != 1 || b.degree() != 1 || k.order != 0 || k.spow < 0 || k.spow % 2 != 0 {
            return None;
        }
        let name = |m: Monomial| alg.system().name(m.first().expect("degree one"));
        let (i, j) = (table.index(name(a)), table.index(name(b)));
        let entry = out.entry((i, j)).or_default();
        let add = crate::coeffring::MuPoly::from_terms([((k.spow / 2) as u32, c.clone())]);
        *entry = &*entry + &add;
    }
    out.retain(|_, c| !c.is_zero());
    Some(out)
}

/// The recurrence behind the Poincaré R-matrix: with `f = K∧sinh zP₊`,
/// `A = 2e^{−zΔP₊}(sinh zP₊⊗P₋) − 2e^{zΔP₊}(P₋⊗sinh zP₊)` and `B` the same
/// with a plus sign,
///   `[f,ΔP₋] = A`, `[f,[f,ΔP₋]] = B·2sinh zΔP₊`,
///   `ad_f^{2n} ΔP₋ = B (2sinh zΔP₊)^{2n−1}`, `ad_f^{2n+1} ΔP₋ = A (2sinh zΔP₊)^{2n}`
/// for `n ≤ n_max`, and the matching condition
/// `exp(±2z sinh(zΔP₊) g) = exp(±2zΔP₊)` for `g = ΔP₊/sinh zΔP₊`.
pub fn verify_ansatz_recurrence(h: &HopfPresentation, n_max: u32) -> CheckReport {
    let a = &h.alg;
    let mut report = CheckReport::new("recurrence", "nested commutators of the Ansatz");
    let (k, p, m) = (h.g("K"), h.g("P+"), h.g("P-"));
    let two = Rational::from_int(2);
    let s = a.sinh(&p.shift_order(1)).expect("positive order");
    let f = wedge(&k, &s);
    let dp = primitive(&p);
    let zdp = dp.shift_order(1);
    let e_minus = a.exp(&-&zdp).expect("positive order");
    let e_plus = a.exp(&zdp).expect("positive order");
    let sm = crate::models::t2(&s, &m);
    let ms = crate::models::t2(&m, &s);
    let first = a.mul(&e_minus, &sm).scale(&two);
    let second = a.mul(&e_plus, &ms).scale(&two);
    let big_a = &first - &second;
    let big_b = &first + &second;
    let two_sinh = a.sinh(&zdp).expect("positive order").scale(&two);

    let mut iterate = h.delta(&m);
    let mut sinh_power = Tensor2::one();
    for n in 1..=(2 * n_max + 1) {
        iterate = a.commutator(&f, &iterate);
        // (2 sinh zΔP₊)^{n−1}
        if n > 1 {
            sinh_power = a.mul(&sinh_power, &two_sinh);
        }
        let closed = if n % 2 == 1 { &big_a } else { &big_b };
        let expected = a.mul(closed, &sinh_power);
        report.push(Residual::of(
            format!("ad_f^{n} ΔP₋"),
            a,
            &(&iterate - &expected),
        ));
    }

    report.push(Residual::of(
        "[f, sinh zΔP₊]",
        a,
        &a.commutator(&f, &two_sinh),
    ));
    report.push(Residual::of(
        "[f, B] − A·2sinh zΔP₊",
        a,
        &(&a.commutator(&f, &big_b) - &a.mul(&big_a, &two_sinh)),
    ));

    // z·g = zΔP₊/sinh zΔP₊
    let zg = a.x_over_sinh(&zdp).expect("positive order");
    let lhs_arg = a.mul(&two_sinh, &zg);
    for (label, sign) in [("+", 1), ("−", -1)] {
        let sgn = Rational::from_int(sign);
        let lhs = a.exp(&lhs_arg.scale(&sgn)).expect("positive order");
        let rhs = a.exp(&zdp.scale(&two).scale(&sgn)).expect("positive order");
        report.push(Residual::of(
            format!("exp({label}2z sinh(zΔP₊) g) − exp({label}2zΔP₊)"),
            a,
            &(&lhs - &rhs),
        ));
    }

    // Summed series: ΔP₋ + A·C + B·D = σ∘ΔP₋ with
    // C = Σ_l (zg)^{2l+1}(2sinh zΔP₊)^{2l}/(2l+1)!,
    // D = Σ_{l≥1} (zg)^{2l}(2sinh zΔP₊)^{2l−1}/(2l)!.
    let mut c = Tensor2::zero();
    let mut d = Tensor2::zero();
    let mut zg_pow = Tensor2::one();
    let mut sinh_pow = Tensor2::one();
    let max = a.order() + 1;
    for n in 1..=max {
        zg_pow = a.mul(&zg_pow, &zg);
        if n > 1 {
            sinh_pow = a.mul(&sinh_pow, &two_sinh);
        }
        let term = a.mul(&zg_pow, &sinh_pow).scale(&Rational::inv_factorial(n));
        if n % 2 == 1 {
            c.add_assign(&term);
        } else {
            d.add_assign(&term);
        }
    }
    let lhs = &(&h.delta(&m) + &a.mul(&big_a, &c)) + &a.mul(&big_b, &d);
    let rhs = flip(&h.delta(&m));
    report.push(Residual::of("ΔP₋ + AC + BD − σ∘ΔP₋", a, &(&lhs - &rhs)));
    report
}

/// `R¹_z R²_{−z}` in the doubled algebra.
pub fn doubled_product(doubled: &HopfPresentation) -> RMatrix {
    let a = &doubled.alg;
    let id = |n: &str| doubled.id_of(n);
    let e1 = poincare_type_exponent(a, id("K1"), id("P1+"), 1);
    let e2 = poincare_type_exponent(a, id("K2"), id("P2+"), -1);
    let r1 = a.exp(&e1).expect("positive order");
    let r2 = a.exp(&e2).expect("positive order");
    // the copies commute, so the exponents add
    RMatrix {
        tensor: a.mul(&r1, &r2),
        exponent: &e1 + &e2,
        provenance: Provenance::DoubledProduct,
        order: a.order(),
    }
}

/// The doubled product, contracted and re-expressed in the Weyl algebra
/// `weyl` (which must carry the generators `J, D, P₁, P₂`).
pub fn contracted_product(
    mode: MuMode,
    weyl: &HopfPresentation,
) -> Result<RMatrix, RMatrixError> {
    let doubled = build_doubled(weyl.alg.order());
    let map = Contraction::algebra(&doubled.alg, false);
    let prod = doubled_product(&doubled);
    let trunc = weyl.alg.truncation();
    let tensor = map.contract_checked("R", trunc, mode, &prod.tensor)?;
    let exponent = map.contract_checked("log R", trunc, mode, &prod.exponent)?;
    let target = Algebra::commutative(
        &map.target_names.iter().map(|s| s.as_str()).collect::<Vec<_>>(),
        Param::W,
        trunc,
    );
    let to_weyl = |x: &Tensor2, what: &str| {
        crate::models::remap_named(&target, &weyl.alg, x)
            .ok_or_else(|| RMatrixError::LeavesSubalgebra(what.into()))
    };
    Ok(RMatrix {
        tensor: to_weyl(&tensor, "R")?,
        exponent: to_weyl(&exponent, "log R")?,
        provenance: Provenance::DoubledProduct,
        order: weyl.alg.order(),
    })
}

/// The closed-form exponent `(M₁N₁ + M₂N₂)L` with
/// `L = 2w / (C₋μ(wΔP₁) − cosh(wΔP₂))`, in the Weyl algebra `weyl`.
///
/// The denominator starts at order `w²` with the non-invertible leading
/// coefficient `q₀ = (μΔP₁² − ΔP₂²)/2`, so `L` is not a power series on its
/// own; the exponent is obtained by exact division of the numerator,
/// order by order in `w`.
pub fn closed_form_exponent(mode: MuMode, weyl: &HopfPresentation) -> Result<Tensor2, RMatrixError> {
    let n = weyl.alg.order();
    // Two extra orders: the numerator is divided by w³ and the denominator
    // by w². The scratch algebra needs its own rules at that order.
    let scratch = build_weyl(mode, n + 2);
    let hi = &scratch.alg;
    let mu = mu_coeff(mode);
    let g = |x: &str| hi.g(x);
    let half_w = |x: &AlgebraElement| x.shift_order(1).scale(&Rational::new(1, 2));
    let (p1, p2) = (g("P1"), g("P2"));
    let c1 = hi.gen_cos(&mu, &half_w(&p1))?;
    let s1 = hi.gen_sin(&mu, &half_w(&p1))?;
    let ch2 = hi.cosh(&half_w(&p2))?;
    let sh2 = hi.sinh(&half_w(&p2))?;
    let (j, d) = (g("J"), g("D"));
    let m1 = &wedge(&d, &hi.mul(&c1, &sh2)) + &wedge(&j, &hi.mul(&s1, &ch2));
    let m2 = &wedge(&d, &hi.mul(&s1, &ch2).scale_spoly(0, &mu)) + &wedge(&j, &hi.mul(&c1, &sh2));

    let (dp1, dp2) = (primitive(&p1), primitive(&p2));
    let half_wt = |x: &Tensor2| x.shift_order(1).scale(&Rational::new(1, 2));
    let dc1 = hi.gen_cos(&mu, &half_wt(&dp1))?;
    let ds1 = hi.gen_sin(&mu, &half_wt(&dp1))?;
    let dch2 = hi.cosh(&half_wt(&dp2))?;
    let dsh2 = hi.sinh(&half_wt(&dp2))?;
    let n1 = &hi.product(&[&dp1, &ds1, &dch2]).scale_spoly(0, &mu) - &hi.product(&[&dp2, &dc1, &dsh2]);
    let n2 = &hi.product(&[&dp2, &ds1, &dch2]) - &hi.product(&[&dp1, &dc1, &dsh2]);

    // 2(M₁N₁ + M₂N₂), starting at order 2
    let num = (&hi.mul(&m1, &n1) + &hi.mul(&m2, &n2)).scale(&Rational::from_int(2));
    // (C₋μ(wΔP₁) − cosh(wΔP₂)) / w²
    let den = &hi.gen_cos(&mu, &dp1.shift_order(1))? - &hi.cosh(&dp2.shift_order(1))?;
    let num = num.shift_order(-1);
    let den = den.shift_order(-2);
    // E = 2w(M₁N₁ + M₂N₂)/(w²·den) solves E·den = num through order n
    let q: Vec<Tensor2> = (0..=n).map(|k| den.order_part(k as u8)).collect();
    let p2_left = weyl.id_of("P2");
    let mut e_parts: Vec<Tensor2> = Vec::new();
    for k in 0..=n {
        let mut rhs = num.order_part(k as u8);
        for (jdx, qj) in q.iter().enumerate().skip(1) {
            if jdx > k as usize {
                break;
            }
            let prev = &e_parts[k as usize - jdx];
            rhs.sub_assign(&weyl.alg.mul(prev, qj));
        }
        let part = divide_exact(&weyl.alg, &rhs, &q[0], p2_left)
            .ok_or(RMatrixError::NotDivisible { order: k })?;
        e_parts.push(part);
    }
    let mut e = Tensor2::zero();
    for (k, part) in e_parts.iter().enumerate() {
        e.add_assign(&part.shift_order(k as i32));
    }
    Ok(weyl.alg.clamp(&e))
}

/// Exact right division `x / q` of rank-2 elements, where `q` is a
/// polynomial in commuting generators that sit last in the PBW order and
/// its leading term in `u = var⊗1` is `c·u²` with rational `c`. Returns
/// `None` if the remainder is nonzero.
fn divide_exact(alg: &Algebra, x: &Tensor2, q: &Tensor2, var: GeneratorId) -> Option<Tensor2> {
    let u_deg = |k: &TermKey<2>| k.slots[0].exponent(var);
    let lead_deg = q.terms().map(|(k, _)| u_deg(k)).max()?;
    let lead: Vec<_> = q
        .terms()
        .filter(|(k, _)| u_deg(k) == lead_deg)
        .collect();
    // the leading coefficient must be a bare rational times u^lead_deg
    if lead.len() != 1 {
        return None;
    }
    let (lk, lc) = lead[0];
    if lk.slots[1] != Monomial::UNIT || lk.slots[0] != Monomial::UNIT.with(var, lead_deg) || lk.spow != 0 {
        return None;
    }
    let lc_inv = lc.recip();
    let mut rest = x.clone();
    let mut quotient = Tensor2::zero();
    loop {
        let top = rest
            .terms()
            .filter(|(k, _)| u_deg(k) >= lead_deg)
            .max_by_key(|(k, _)| u_deg(k))
            .map(|(k, c)| (*k, c.clone()));
        let Some((k, c)) = top else { break };
        let mut slots = k.slots;
        slots[0] = slots[0].with(var, u_deg(&k) - lead_deg);
        let t = Tensor2::term(slots, k.order, k.spow, &c * &lc_inv);
        rest.sub_assign(&alg.mul(&t, q));
        quotient.add_assign(&t);
    }
    if rest.is_zero() {
        Some(quotient)
    } else {
        None
    }
}

/// The closed-form R-matrix of the Weyl algebra.
pub fn build_r_contracted(mode: MuMode, order: u32) -> Result<(HopfPresentation, RMatrix), RMatrixError> {
    let weyl = build_weyl(mode, order);
    let e = closed_form_exponent(mode, &weyl)?;
    let r = RMatrix::from_exponent(&weyl.alg, e, Provenance::ContractedClosedForm)?;
    Ok((weyl, r))
}

/// Compare the contracted doubled product with the closed form.
pub fn compare_contracted(mode: MuMode, order: u32) -> Result<CheckReport, RMatrixError> {
    let (weyl, closed) = build_r_contracted(mode, order)?;
    let product = contracted_product(mode, &weyl)?;
    let mut report = CheckReport::new("closed-form", "contracted product = closed form");
    report.push(Residual::of(
        "R(product) − R(closed form)",
        &weyl.alg,
        &(&product.tensor - &closed.tensor),
    ));
    report.push(Residual::of(
        "E(product) − E(closed form)",
        &weyl.alg,
        &(&product.exponent - &closed.exponent),
    ));
    Ok(report)
}
