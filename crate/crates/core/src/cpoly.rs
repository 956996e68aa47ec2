//! Commutative polynomials over the rationals in the group parameters of
//! `G_μ` (two copies, for functions on `G_μ × G_μ`), the contraction
//! parameter μ and the deformation parameter `w`.
//!
//! Per copy the variables are `θ, d, p₁, p₂, c₁, c₂, E = e^d, E⁻¹, C, S`
//! where `C = C₋μ(θ)`, `S = S₋μ(θ)`. Every product is reduced by
//! `E·E⁻¹ = 1` and `C² = 1 + μS²`, which makes the representation
//! canonical.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::ops::{Add, Neg, Sub};

use crate::coeffring::{MuPoly, Rational};

pub const NVARS: usize = 22;
const PER_COPY: usize = 10;

/// A polynomial variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var(pub u8);

/// Coordinates and transcendental symbols of one copy of the group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Coord {
    Theta,
    D,
    P1,
    P2,
    C1,
    C2,
    /// `e^d`
    E,
    /// `e^{−d}`
    Einv,
    /// `C₋μ(θ)`
    C,
    /// `S₋μ(θ)`
    S,
}

impl Coord {
    pub const ALL: [Coord; 10] = [
        Coord::Theta,
        Coord::D,
        Coord::P1,
        Coord::P2,
        Coord::C1,
        Coord::C2,
        Coord::E,
        Coord::Einv,
        Coord::C,
        Coord::S,
    ];

    /// The six group coordinates, in the order `θ, d, p₁, p₂, c₁, c₂`.
    pub const COORDINATES: [Coord; 6] = [
        Coord::Theta,
        Coord::D,
        Coord::P1,
        Coord::P2,
        Coord::C1,
        Coord::C2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Coord::Theta => "th",
            Coord::D => "d",
            Coord::P1 => "p1",
            Coord::P2 => "p2",
            Coord::C1 => "c1",
            Coord::C2 => "c2",
            Coord::E => "E",
            Coord::Einv => "Ei",
            Coord::C => "C",
            Coord::S => "S",
        }
    }

    /// Variable of this coordinate in copy `copy` (0 or 1).
    pub fn var(self, copy: usize) -> Var {
        Var((2 + PER_COPY * copy + self as usize) as u8)
    }
}

pub const MU: Var = Var(0);
pub const W: Var = Var(1);

fn var_name(v: Var) -> String {
    match v.0 {
        0 => "μ".into(),
        1 => "w".into(),
        i => {
            let i = i as usize - 2;
            let c = Coord::ALL[i % PER_COPY];
            if i / PER_COPY == 0 {
                c.name().into()
            } else {
                format!("{}'", c.name())
            }
        }
    }
}

/// Exponents of every variable, indexed by [`Var`].
pub type Exps = [u8; NVARS];

/// A reduced commutative polynomial.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CPoly {
    terms: BTreeMap<Exps, Rational>,
}

impl CPoly {
    pub fn zero() -> Self {
        CPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = CPoly::zero();
        p.add_term([0; NVARS], &c);
        p
    }

    pub fn int(n: i64) -> Self {
        CPoly::constant(Rational::from_int(n))
    }

    pub fn one() -> Self {
        CPoly::int(1)
    }

    pub fn var(v: Var) -> Self {
        let mut e = [0; NVARS];
        e[v.0 as usize] = 1;
        let mut p = CPoly::zero();
        p.add_term(e, &Rational::one());
        p
    }

    pub fn coord(c: Coord, copy: usize) -> Self {
        CPoly::var(c.var(copy))
    }

    pub fn mu() -> Self {
        CPoly::var(MU)
    }

    pub fn w() -> Self {
        CPoly::var(W)
    }

    pub fn from_mupoly(m: &MuPoly) -> Self {
        let mut p = CPoly::zero();
        for (k, c) in m.terms() {
            let mut e = [0; NVARS];
            e[0] = k as u8;
            p.add_term(e, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &Rational)> {
        self.terms.iter()
    }

    fn add_term(&mut self, e: Exps, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = CPoly::zero();
        for (e, v) in &self.terms {
            out.add_term(*e, &(v * c));
        }
        out
    }

    /// Reduce one exponent vector; returns a polynomial.
    fn reduce_monomial(e: Exps, c: &Rational) -> CPoly {
        let mut e = e;
        for copy in 0..2 {
            let (ei, ii) = (
                Coord::E.var(copy).0 as usize,
                Coord::Einv.var(copy).0 as usize,
            );
            let k = e[ei].min(e[ii]);
            e[ei] -= k;
            e[ii] -= k;
        }
        // C² = 1 + μS², applied until every C exponent is at most one
        let mut out = CPoly::zero();
        let mut stack = alloc::vec![(e, c.clone())];
        while let Some((e, c)) = stack.pop() {
            let hit = (0..2).find(|&copy| e[Coord::C.var(copy).0 as usize] >= 2);
            match hit {
                None => out.add_term(e, &c),
                Some(copy) => {
                    let (ci, si) = (Coord::C.var(copy).0 as usize, Coord::S.var(copy).0 as usize);
                    let mut a = e;
                    a[ci] -= 2;
                    let mut b = a;
                    b[si] += 2;
                    b[0] += 1;
                    stack.push((a, c.clone()));
                    stack.push((b, c));
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &CPoly) -> CPoly {
        let mut raw: BTreeMap<Exps, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let mut e = *ea;
                for (x, y) in e.iter_mut().zip(eb.iter()) {
                    *x += *y;
                }
                let slot = raw.entry(e).or_insert_with(Rational::zero);
                *slot += &(ca * cb);
            }
        }
        let mut out = CPoly::zero();
        for (e, c) in raw {
            if c.is_zero() {
                continue;
            }
            for (e2, c2) in CPoly::reduce_monomial(e, &c).terms {
                out.add_term(e2, &c2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> CPoly {
        let mut out = CPoly::one();
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// `∂/∂v` of the polynomial, treating every variable as independent.
    pub fn partial(&self, v: Var) -> CPoly {
        let i = v.0 as usize;
        let mut out = CPoly::zero();
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = *e;
            e2[i] -= 1;
            out.add_term(e2, &(c * &Rational::from_int(e[i] as i64)));
        }
        out
    }

    /// Substitute polynomials for variables (a ring homomorphism).
    pub fn substitute(&self, images: &BTreeMap<Var, CPoly>) -> CPoly {
        let mut out = CPoly::zero();
        for (e, c) in &self.terms {
            let mut t = CPoly::constant(c.clone());
            let mut rest = [0u8; NVARS];
            for (i, k) in e.iter().enumerate() {
                if *k == 0 {
                    continue;
                }
                match images.get(&Var(i as u8)) {
                    Some(img) => t = t.mul(&img.pow(*k as u32)),
                    None => rest[i] = *k,
                }
            }
            let mut m = CPoly::zero();
            m.add_term(rest, &Rational::one());
            out = &out + &t.mul(&m);
        }
        out
    }

    /// Set μ to a number.
    pub fn specialize_mu(&self, value: &Rational) -> CPoly {
        let mut out = CPoly::zero();
        for (e, c) in &self.terms {
            let mut e2 = *e;
            let k = e2[0];
            e2[0] = 0;
            out.add_term(e2, &(c * &value.pow(k as u32)));
        }
        // re-reduce, since C² = 1 + μS² changes meaning with μ fixed
        let mut red = CPoly::zero();
        for (e, c) in out.terms {
            for (e2, c2) in CPoly::reduce_monomial(e, &c).terms {
                red.add_term(e2, &c2);
            }
        }
        red
    }

    /// Coefficient of `w^k`.
    pub fn w_part(&self, k: u8) -> CPoly {
        let mut out = CPoly::zero();
        for (e, c) in &self.terms {
            if e[W.0 as usize] == k {
                let mut e2 = *e;
                e2[W.0 as usize] = 0;
                out.add_term(e2, c);
            }
        }
        out
    }

    /// Keep terms of degree at most `order` in `w`.
    pub fn truncate_w(&self, order: u8) -> CPoly {
        let mut out = CPoly::zero();
        for (e, c) in &self.terms {
            if e[W.0 as usize] <= order {
                out.add_term(*e, c);
            }
        }
        out
    }

    /// Divide by μ, if every term carries it.
    pub fn div_mu(&self) -> Option<CPoly> {
        let mut out = CPoly::zero();
        for (e, c) in &self.terms {
            if e[0] == 0 {
                return None;
            }
            let mut e2 = *e;
            e2[0] -= 1;
            out.add_term(e2, c);
        }
        Some(out)
    }

    /// Highest power of `w` present.
    pub fn w_degree(&self) -> Option<u8> {
        self.terms.keys().map(|e| e[W.0 as usize]).max()
    }

    /// Keep terms whose total degree in the group coordinates `θ, d, p, c`
    /// (not the transcendental symbols, μ or w) is at most `degree`.
    pub fn truncate_coordinate_degree(&self, degree: u32) -> CPoly {
        let coord_vars: Vec<usize> = (0..2)
            .flat_map(|copy| Coord::COORDINATES.iter().map(move |c| c.var(copy).0 as usize))
            .collect();
        let mut out = CPoly::zero();
        for (e, c) in &self.terms {
            let deg: u32 = coord_vars.iter().map(|i| e[*i] as u32).sum();
            if deg <= degree {
                out.add_term(*e, c);
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in &self.terms {
            parts.push(render_term(e, c));
        }
        parts.join(" + ")
    }

    /// Monomials rendered without coefficients, paired with coefficients.
    pub fn rendered_terms(&self) -> Vec<(String, Rational)> {
        self.terms
            .iter()
            .map(|(e, c)| (render_exps(e), c.clone()))
            .collect()
    }
}

/// Render an exponent vector as a product of variables.
pub fn render_exps(e: &Exps) -> String {
    let mut parts = Vec::new();
    for (i, k) in e.iter().enumerate() {
        match *k {
            0 => {}
            1 => parts.push(var_name(Var(i as u8))),
            k => parts.push(format!("{}^{}", var_name(Var(i as u8)), k)),
        }
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("·")
    }
}

fn render_term(e: &Exps, c: &Rational) -> String {
    format!("{}·{}", c.to_pq(), render_exps(e))
}

impl core::fmt::Debug for CPoly {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add<&CPoly> for &CPoly {
    type Output = CPoly;
    fn add(self, rhs: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub<&CPoly> for &CPoly {
    type Output = CPoly;
    fn sub(self, rhs: &CPoly) -> CPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Neg for &CPoly {
    type Output = CPoly;
    fn neg(self) -> CPoly {
        self.scale(&Rational::from_int(-1))
    }
}

/// A square matrix of polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<CPoly>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> Self {
        PolyMatrix {
            n,
            entries: alloc::vec![CPoly::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zero(n);
        for i in 0..n {
            m.set(i, i, CPoly::one());
        }
        m
    }

    /// From integer entries, row-major, each multiplied by `scale`.
    pub fn from_rows(rows: &[&[CPoly]]) -> Self {
        let n = rows.len();
        let mut m = PolyMatrix::zero(n);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n, "square matrix");
            for (j, x) in r.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &CPoly {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: CPoly) {
        self.entries[i * self.n + j] = x;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CPoly::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = PolyMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(i, j) + &a.mul(b);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &CPoly) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(|x| x.mul(c)).collect(),
        }
    }

    pub fn commutator(&self, other: &PolyMatrix) -> PolyMatrix {
        &self.mul(other) - &other.mul(self)
    }

    /// `A ⊗ B` (Kronecker product), indices `(i·m + k, j·m + l)`.
    pub fn kron(&self, other: &PolyMatrix) -> PolyMatrix {
        let (n, m) = (self.n, other.n);
        let mut out = PolyMatrix::zero(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        let b = other.get(k, l);
                        if !b.is_zero() {
                            out.set(i * m + k, j * m + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&CPoly) -> CPoly) -> PolyMatrix {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Nonzero entries as `(row, column, entry)`, 0-based.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &CPoly)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(move |(k, x)| (k / self.n, k % self.n, x))
    }

    /// Row-major text rendering.
    pub fn render(&self) -> String {
        let mut rows = Vec::new();
        for i in 0..self.n {
            let r: Vec<String> = (0..self.n).map(|j| self.get(i, j).render()).collect();
            rows.push(format!("[{}]", r.join(", ")));
        }
        rows.join("\n")
    }
}

impl core::fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, rhs.n);
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&PolyMatrix> for &PolyMatrix {
    type Output = PolyMatrix;
    fn sub(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, rhs.n);
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponentials_cancel() {
        let e = CPoly::coord(Coord::E, 0);
        let ei = CPoly::coord(Coord::Einv, 0);
        assert_eq!(e.mul(&ei), CPoly::one());
    }

    #[test]
    fn trig_identity_is_applied() {
        let c = CPoly::coord(Coord::C, 1);
        let s = CPoly::coord(Coord::S, 1);
        let lhs = &c.mul(&c) - &CPoly::mu().mul(&s.mul(&s));
        assert_eq!(lhs, CPoly::one());
    }

    #[test]
    fn partial_derivative_of_square() {
        let x = CPoly::coord(Coord::P1, 0);
        assert_eq!(x.mul(&x).partial(Coord::P1.var(0)), x.scale(&Rational::from_int(2)));
    }
}
