use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::Rational;

/// Polynomial in the contraction parameter μ with rational coefficients.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MuPoly {
    terms: BTreeMap<u32, Rational>,
}

/// The three real forms singled out by the contraction parameter, plus the
/// symbolic case.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MuMode {
    Minus,
    Zero,
    Plus,
    Symbolic,
}

impl MuMode {
    pub const NUMERIC: [MuMode; 3] = [MuMode::Minus, MuMode::Zero, MuMode::Plus];

    pub fn value(self) -> Option<Rational> {
        match self {
            MuMode::Minus => Some(Rational::from_int(-1)),
            MuMode::Zero => Some(Rational::zero()),
            MuMode::Plus => Some(Rational::one()),
            MuMode::Symbolic => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MuMode::Minus => "-1",
            MuMode::Zero => "0",
            MuMode::Plus => "+1",
            MuMode::Symbolic => "sym",
        }
    }

    pub fn parse(s: &str) -> Option<MuMode> {
        match s {
            "-1" => Some(MuMode::Minus),
            "0" => Some(MuMode::Zero),
            "+1" | "1" => Some(MuMode::Plus),
            "sym" => Some(MuMode::Symbolic),
            _ => None,
        }
    }
}

impl MuPoly {
    pub fn zero() -> Self {
        MuPoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        MuPoly::from_terms(core::iter::once((0, c)))
    }

    pub fn mu() -> Self {
        MuPoly::from_terms(core::iter::once((1, Rational::one())))
    }

    pub fn from_int(n: i64) -> Self {
        MuPoly::constant(Rational::from_int(n))
    }

    /// The value of μ for a numeric mode, or the symbol itself.
    pub fn for_mode(mode: MuMode) -> Self {
        match mode.value() {
            Some(v) => MuPoly::constant(v),
            None => MuPoly::mu(),
        }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (u32, Rational)>) -> Self {
        let mut out = MuPoly::zero();
        for (k, c) in it {
            out.add_term(k, &c);
        }
        out
    }

    pub fn add_term(&mut self, k: u32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn coeff(&self, k: u32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn scale(&self, c: &Rational) -> MuPoly {
        MuPoly::from_terms(self.terms.iter().map(|(k, v)| (*k, v * c)))
    }

    /// Exact evaluation at a rational μ.
    pub fn eval(&self, value: &Rational) -> Rational {
        let mut out = Rational::zero();
        for (k, c) in &self.terms {
            out += &(c * &value.pow(*k));
        }
        out
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }
}

/// Exact evaluation of a μ-polynomial at μ ∈ {−1, 0, +1}.
pub fn evaluate_mu(x: &MuPoly, mode: MuMode) -> Option<Rational> {
    mode.value().map(|v| x.eval(&v))
}

impl Add<&MuPoly> for &MuPoly {
    type Output = MuPoly;
    fn add(self, rhs: &MuPoly) -> MuPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub<&MuPoly> for &MuPoly {
    type Output = MuPoly;
    fn sub(self, rhs: &MuPoly) -> MuPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul<&MuPoly> for &MuPoly {
    type Output = MuPoly;
    fn mul(self, rhs: &MuPoly) -> MuPoly {
        let mut out = MuPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &MuPoly {
    type Output = MuPoly;
    fn neg(self) -> MuPoly {
        self.scale(&Rational::from_int(-1))
    }
}

impl fmt::Display for MuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*mu")?,
                _ => write!(f, "{c}*mu^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MuPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
