//! The classical layer on `G_μ`: functions, left and right invariant vector
//! fields, the Sklyanin bracket of `r = w(J∧P₁ + D∧P₂)`, its Poisson–Hopf
//! property, and the bridge to the order-`w` part of the deformed
//! coordinate algebra.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::coeffring::{MuMode, Rational};
use crate::cpoly::{Coord, CPoly};
use crate::hopf::HopfPresentation;
use crate::matrep::{matrix_residual, scalar_poly, MatRepError};
use crate::cpoly::PolyMatrix;
use crate::ncalg::{Algebra, AlgebraElement};
use crate::report::{CheckReport, Residual};

/// A smooth function on the group (or on `G_μ × G_μ`), restricted to
/// polynomials in the coordinates, `e^{±d}`, `C₋μ(θ)`, `S₋μ(θ)`.
pub type GroupFunction = CPoly;

/// The six coordinates in their fixed order `θ, d, p₁, p₂, c₁, c₂`.
pub const COORDS: [Coord; 6] = Coord::COORDINATES;

/// The generator names of `g_μ` labelling the invariant fields.
pub const GENERATORS: [&str; 6] = ["J", "D", "P1", "P2", "C1", "C2"];

/// `∂_x` on functions of copy `copy`, with the chain rule through
/// `E = e^d`, `E⁻¹`, `C`, `S`: `∂_d E = E`, `∂_θ C = μS`, `∂_θ S = C`.
pub fn coordinate_derivative(f: &CPoly, x: Coord, copy: usize) -> CPoly {
    let v = |c: Coord| CPoly::coord(c, copy);
    let d = |c: Coord| f.partial(c.var(copy));
    match x {
        Coord::Theta => {
            let dc = CPoly::mu().mul(&v(Coord::S)).mul(&d(Coord::C));
            let ds = v(Coord::C).mul(&d(Coord::S));
            &(&d(Coord::Theta) + &dc) + &ds
        }
        Coord::D => {
            let de = v(Coord::E).mul(&d(Coord::E));
            let dei = v(Coord::Einv).mul(&d(Coord::Einv));
            &(&d(Coord::D) + &de) - &dei
        }
        Coord::P1 | Coord::P2 | Coord::C1 | Coord::C2 => d(x),
        Coord::E | Coord::Einv | Coord::C | Coord::S => {
            panic!("{} is not a coordinate", x.name())
        }
    }
}

/// `Σ a_x ∂_x` over the six coordinates of one copy.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorField {
    pub copy: usize,
    pub coeffs: [CPoly; 6],
}

impl VectorField {
    fn new(copy: usize, parts: &[(Coord, CPoly)]) -> Self {
        let mut coeffs: [CPoly; 6] = Default::default();
        for (c, a) in parts {
            let i = COORDS.iter().position(|x| x == c).expect("coordinate");
            coeffs[i] = &coeffs[i] + a;
        }
        VectorField { copy, coeffs }
    }

    /// Action as a derivation.
    pub fn apply(&self, f: &CPoly) -> CPoly {
        let mut out = CPoly::zero();
        for (a, x) in self.coeffs.iter().zip(COORDS) {
            if !a.is_zero() {
                out = &out + &a.mul(&coordinate_derivative(f, x, self.copy));
            }
        }
        out
    }
}

/// Which translations a field generates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// Left invariant: `X g = g·X` in the matrix realization.
    Left,
    /// Right invariant: `X g = X·g`.
    Right,
}

/// The invariant fields of the six generators, in the order of
/// [`GENERATORS`].
pub fn invariant_fields(side: Side, copy: usize) -> [VectorField; 6] {
    let v = |c: Coord| CPoly::coord(c, copy);
    let mu = CPoly::mu();
    let one = CPoly::one();
    let f = |parts: &[(Coord, CPoly)]| VectorField::new(copy, parts);
    match side {
        Side::Left => {
            let ec = v(Coord::E).mul(&v(Coord::C));
            let es = v(Coord::E).mul(&v(Coord::S));
            let eic = v(Coord::Einv).mul(&v(Coord::C));
            let eis = v(Coord::Einv).mul(&v(Coord::S));
            [
                f(&[(Coord::Theta, one.clone())]),
                f(&[(Coord::D, one)]),
                f(&[(Coord::P1, ec.clone()), (Coord::P2, es.clone())]),
                f(&[(Coord::P2, ec), (Coord::P1, mu.mul(&es))]),
                f(&[(Coord::C1, eic.clone()), (Coord::C2, eis.clone())]),
                f(&[(Coord::C2, eic), (Coord::C1, mu.mul(&eis))]),
            ]
        }
        Side::Right => [
            f(&[
                (Coord::Theta, one.clone()),
                (Coord::P1, mu.mul(&v(Coord::P2))),
                (Coord::P2, v(Coord::P1)),
                (Coord::C1, mu.mul(&v(Coord::C2))),
                (Coord::C2, v(Coord::C1)),
            ]),
            f(&[
                (Coord::D, one.clone()),
                (Coord::P1, v(Coord::P1)),
                (Coord::P2, v(Coord::P2)),
                (Coord::C1, -&v(Coord::C1)),
                (Coord::C2, -&v(Coord::C2)),
            ]),
            f(&[(Coord::P1, one.clone())]),
            f(&[(Coord::P2, one.clone())]),
            f(&[(Coord::C1, one.clone())]),
            f(&[(Coord::C2, one)]),
        ],
    }
}

/// Nonzero coefficients `r^{αβ}` of `r = w(J∧P₁ + D∧P₂)`, as indices into
/// [`GENERATORS`].
pub fn classical_r() -> Vec<(usize, usize, CPoly)> {
    let w = CPoly::w();
    let (j, d, p1, p2) = (0, 1, 2, 3);
    alloc::vec![
        (j, p1, w.clone()),
        (p1, j, -&w),
        (d, p2, w.clone()),
        (p2, d, -&w),
    ]
}

/// The Sklyanin bracket on `G_μ × G_μ` (the product structure: one
/// Sklyanin bracket per copy). On functions of one copy it is the bracket
/// of `G_μ`.
pub fn sklyanin_bracket(f: &GroupFunction, g: &GroupFunction) -> GroupFunction {
    let r = classical_r();
    let mut out = CPoly::zero();
    for copy in 0..2 {
        let left = invariant_fields(Side::Left, copy);
        let right = invariant_fields(Side::Right, copy);
        let lf: Vec<CPoly> = left.iter().map(|x| x.apply(f)).collect();
        let lg: Vec<CPoly> = left.iter().map(|x| x.apply(g)).collect();
        let rf: Vec<CPoly> = right.iter().map(|x| x.apply(f)).collect();
        let rg: Vec<CPoly> = right.iter().map(|x| x.apply(g)).collect();
        for (a, b, c) in &r {
            let term = &lf[*a].mul(&lg[*b]) - &rf[*a].mul(&rg[*b]);
            out = &out + &c.mul(&term);
        }
    }
    out
}

fn coord(c: Coord) -> CPoly {
    CPoly::coord(c, 0)
}

/// The printed fundamental brackets `{x, y}` for `x` before `y` in
/// [`COORDS`]; absent pairs commute.
pub fn printed_brackets() -> BTreeMap<(Coord, Coord), GroupFunction> {
    let w = CPoly::w();
    let mu = CPoly::mu();
    let es = coord(Coord::E).mul(&coord(Coord::S));
    let ec1 = &coord(Coord::E).mul(&coord(Coord::C)) - &CPoly::one();
    BTreeMap::from([
        ((Coord::D, Coord::P1), w.mul(&mu).mul(&es)),
        ((Coord::D, Coord::P2), w.mul(&ec1)),
        ((Coord::Theta, Coord::P1), w.mul(&ec1)),
        ((Coord::Theta, Coord::P2), w.mul(&es)),
        ((Coord::P1, Coord::C1), w.mul(&mu).mul(&coord(Coord::C2))),
        ((Coord::P1, Coord::C2), w.mul(&coord(Coord::C1))),
        ((Coord::P2, Coord::C1), -&w.mul(&coord(Coord::C1))),
        ((Coord::P2, Coord::C2), -&w.mul(&coord(Coord::C2))),
    ])
}

/// The 15 unordered coordinate pairs.
pub fn coordinate_pairs() -> Vec<(Coord, Coord)> {
    let mut out = Vec::new();
    for (i, &a) in COORDS.iter().enumerate() {
        for &b in &COORDS[i + 1..] {
            out.push((a, b));
        }
    }
    out
}

fn specialize(p: &CPoly, mode: MuMode) -> CPoly {
    match mode.value() {
        Some(v) => p.specialize_mu(&v),
        None => p.clone(),
    }
}

/// Residual of a polynomial identity.
pub fn poly_residual(item: impl Into<String>, p: &CPoly) -> Residual {
    let mut m = PolyMatrix::zero(1);
    m.set(0, 0, p.clone());
    let mut r = matrix_residual(item, &m);
    for t in &mut r.terms {
        t.basis = String::from(t.basis.trim_start_matches("(1, 1) "));
    }
    r
}

fn pair_label(a: Coord, b: Coord) -> String {
    format!("{{{}, {}}}", a.name(), b.name())
}

/// All 15 Sklyanin brackets of coordinates against the printed table
/// (exact, no truncation).
pub fn verify_poisson_table(mode: MuMode) -> CheckReport {
    let printed = printed_brackets();
    let mut report = CheckReport::new("poisson-table", "fundamental Poisson brackets");
    for (a, b) in coordinate_pairs() {
        let lhs = sklyanin_bracket(&coord(a), &coord(b));
        let rhs = printed.get(&(a, b)).cloned().unwrap_or_default();
        report.push(poly_residual(pair_label(a, b), &specialize(&(&lhs - &rhs), mode)));
    }
    report
}

/// `{f,{g,h}} + {g,{h,f}} + {h,{f,g}}`.
pub fn jacobiator(f: &CPoly, g: &CPoly, h: &CPoly) -> CPoly {
    let a = sklyanin_bracket(f, &sklyanin_bracket(g, h));
    let b = sklyanin_bracket(g, &sklyanin_bracket(h, f));
    let c = sklyanin_bracket(h, &sklyanin_bracket(f, g));
    &(&a + &b) + &c
}

/// Jacobi on every coordinate triple and on a fixed set of composite
/// functions.
pub fn verify_jacobi() -> CheckReport {
    let mut report = CheckReport::new("jacobi", "Jacobi identity of the Sklyanin bracket");
    for (i, &a) in COORDS.iter().enumerate() {
        for (j, &b) in COORDS.iter().enumerate().skip(i + 1) {
            for &c in &COORDS[j + 1..] {
                let item = format!("({}, {}, {})", a.name(), b.name(), c.name());
                report.push(poly_residual(item, &jacobiator(&coord(a), &coord(b), &coord(c))));
            }
        }
    }
    for (name, [f, g, h]) in sample_triples() {
        report.push(poly_residual(name, &jacobiator(&f, &g, &h)));
    }
    report
}

fn sample_triples() -> Vec<(String, [CPoly; 3])> {
    let v = coord;
    let e_p1 = v(Coord::E).mul(&v(Coord::P1));
    let trig = &v(Coord::C).mul(&v(Coord::C2)) + &v(Coord::S);
    let mixed = &v(Coord::D).mul(&v(Coord::Theta)).mul(&v(Coord::P2)) - &v(Coord::Einv).mul(&v(Coord::C1));
    let quad = &v(Coord::P1).mul(&v(Coord::C1)) + &CPoly::mu().mul(&v(Coord::P2).mul(&v(Coord::C2)));
    alloc::vec![
        ("(E p1, C c2 + S, d θ p2 − E⁻¹ c1)".into(), [e_p1.clone(), trig.clone(), mixed.clone()]),
        ("(p1 c1 + μ p2 c2, E p1, C c2 + S)".into(), [quad, e_p1, trig]),
    ]
}

/// `[X^L_a, X^R_b] = 0` on every coordinate, for all 36 pairs.
pub fn verify_fields_commute() -> CheckReport {
    let left = invariant_fields(Side::Left, 0);
    let right = invariant_fields(Side::Right, 0);
    let mut report = CheckReport::new("invariant-fields", "left and right invariant fields commute");
    for (a, xl) in GENERATORS.iter().zip(&left) {
        for (b, xr) in GENERATORS.iter().zip(&right) {
            let mut total = CPoly::zero();
            let mut res = Residual::empty(format!("[X^L_{a}, X^R_{b}]"));
            for x in COORDS {
                let f = coord(x);
                let c = &xl.apply(&xr.apply(&f)) - &xr.apply(&xl.apply(&f));
                total = &total + &c;
                res.terms.extend(poly_residual(x.name(), &c).terms.into_iter().map(|mut t| {
                    t.basis = format!("on {}: {}", x.name(), t.basis);
                    t
                }));
            }
            report.push(res);
        }
    }
    report
}

/// The classical coproduct (group law) as a substitution into two copies.
pub fn classical_coproduct() -> BTreeMap<crate::cpoly::Var, CPoly> {
    let a = |c: Coord| CPoly::coord(c, 0);
    let b = |c: Coord| CPoly::coord(c, 1);
    let mu = CPoly::mu();
    let lin = |x: Coord, ef: Coord, y: Coord, z: Coord, mu_on_s: bool| {
        let c = a(ef).mul(&a(Coord::C));
        let mut s = a(ef).mul(&a(Coord::S));
        if mu_on_s {
            s = mu.mul(&s);
        }
        &(&a(x) + &c.mul(&b(y))) + &s.mul(&b(z))
    };
    BTreeMap::from([
        (Coord::Theta.var(0), &a(Coord::Theta) + &b(Coord::Theta)),
        (Coord::D.var(0), &a(Coord::D) + &b(Coord::D)),
        (Coord::P1.var(0), lin(Coord::P1, Coord::E, Coord::P1, Coord::P2, true)),
        (Coord::P2.var(0), lin(Coord::P2, Coord::E, Coord::P2, Coord::P1, false)),
        (Coord::C1.var(0), lin(Coord::C1, Coord::Einv, Coord::C1, Coord::C2, true)),
        (Coord::C2.var(0), lin(Coord::C2, Coord::Einv, Coord::C2, Coord::C1, false)),
        (Coord::E.var(0), a(Coord::E).mul(&b(Coord::E))),
        (Coord::Einv.var(0), a(Coord::Einv).mul(&b(Coord::Einv))),
        (
            Coord::C.var(0),
            &a(Coord::C).mul(&b(Coord::C)) + &mu.mul(&a(Coord::S).mul(&b(Coord::S))),
        ),
        (
            Coord::S.var(0),
            &a(Coord::S).mul(&b(Coord::C)) + &a(Coord::C).mul(&b(Coord::S)),
        ),
    ])
}

/// `Δ{x, y} = {Δx, Δy}` under the product Poisson structure, for every
/// coordinate pair.
pub fn verify_poisson_hopf() -> CheckReport {
    let delta = classical_coproduct();
    let mut report = CheckReport::new("poisson-hopf", "coproduct is a Poisson map");
    for (a, b) in coordinate_pairs() {
        let lhs = sklyanin_bracket(&coord(a), &coord(b)).substitute(&delta);
        let rhs = sklyanin_bracket(&coord(a).substitute(&delta), &coord(b).substitute(&delta));
        report.push(poly_residual(pair_label(a, b), &(&lhs - &rhs)));
    }
    report
}

/// Transcribe an element of the deformed coordinate algebra to a
/// commutative polynomial in the classical coordinates, `w` and μ.
pub fn transcribe(alg: &Algebra, x: &AlgebraElement) -> Result<CPoly, MatRepError> {
    let coords: Vec<CPoly> = alg
        .system()
        .names()
        .iter()
        .map(|n| {
            let c = COORDS
                .iter()
                .find(|c| c.name() == n.as_str())
                .expect("coordinate name");
            coord(*c)
        })
        .collect();
    let mut out = CPoly::zero();
    for (k, c) in x.terms() {
        let mut term = scalar_poly(k.order, k.spow, c)?;
        for (g, e) in k.slots[0].exponents().iter().enumerate().take(coords.len()) {
            if *e > 0 {
                term = term.mul(&coords[g].pow(*e as u32));
            }
        }
        out = &out + &term;
    }
    Ok(out)
}

/// Replace `E, E⁻¹, C, S` by their Taylor series in `d, θ`, keeping total
/// coordinate degree at most `degree`.
pub fn taylor(f: &CPoly, degree: u32) -> CPoly {
    let d = coord(Coord::D);
    let th = coord(Coord::Theta);
    let mu = CPoly::mu();
    let series = |x: &CPoly, coeff: &dyn Fn(u32) -> CPoly, step: u32, start: u32| {
        let mut out = CPoly::zero();
        let mut k = start;
        while k <= degree {
            out = &out + &x.pow(k).mul(&coeff(k));
            k += step;
        }
        out
    };
    let inv_fact = |k: u32| CPoly::constant(Rational::inv_factorial(k));
    let exp_d = series(&d, &inv_fact, 1, 0);
    let exp_md = series(&-&d, &inv_fact, 1, 0);
    let cos = series(&th, &|k| mu.pow(k / 2).mul(&inv_fact(k)), 2, 0);
    let sin = series(&th, &|k| mu.pow(k / 2).mul(&inv_fact(k)), 2, 1);
    let images = BTreeMap::from([
        (Coord::E.var(0), exp_d),
        (Coord::Einv.var(0), exp_md),
        (Coord::C.var(0), cos),
        (Coord::S.var(0), sin),
    ]);
    f.substitute(&images).truncate_coordinate_degree(degree)
}

/// For every coordinate pair, the order-`w` coefficient of `[x̂, ŷ]` in the
/// deformed algebra equals the order-`w` coefficient of `{x, y}`, both
/// expanded in the coordinates through the algebra's degree cap.
pub fn quantum_classical_link(h: &HopfPresentation, mode: MuMode) -> Result<CheckReport, MatRepError> {
    let alg = &h.alg;
    let degree = alg
        .truncation()
        .degree
        .expect("coordinate algebras carry a degree cap");
    let mut report = CheckReport::new("quantum-classical", "order-w part of the deformed brackets");
    for (a, b) in coordinate_pairs() {
        let q = alg.commutator(&alg.g(a.name()), &alg.g(b.name())).order_part(1);
        let quantum = transcribe(alg, &q)?.truncate_coordinate_degree(degree);
        let classical = taylor(&sklyanin_bracket(&coord(a), &coord(b)).w_part(1), degree);
        let diff = &quantum - &specialize(&classical, mode);
        report.push(poly_residual(pair_label(a, b), &diff));
    }
    Ok(report)
}
