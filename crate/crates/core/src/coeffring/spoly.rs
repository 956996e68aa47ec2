use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{MuPoly, Rational};

/// Laurent polynomial in the central symbol `s`, where `s` stands for the
/// square root of the contraction parameter (`s² = μ`).
///
/// Negative powers occur transiently while re-expressing doubled generators
/// in contracted ones; contracted structures must come out even and
/// non-negative in `s`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SPoly {
    terms: BTreeMap<i32, Rational>,
}

impl SPoly {
    pub fn zero() -> Self {
        SPoly::default()
    }

    pub fn one() -> Self {
        SPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        SPoly::monomial(0, c)
    }

    /// `c · s^k`
    pub fn monomial(k: i32, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(k, c);
        }
        SPoly { terms }
    }

    /// The symbol `s` itself.
    pub fn s() -> Self {
        SPoly::monomial(1, Rational::one())
    }

    /// `μ = s²`.
    pub fn mu() -> Self {
        SPoly::monomial(2, Rational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: i32) -> Rational {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &Rational)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, k: i32, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// The rational value when the polynomial has no `s` dependence.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Rational) -> SPoly {
        if c.is_zero() {
            return SPoly::zero();
        }
        SPoly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiply by `s^k`.
    pub fn shift(&self, k: i32) -> SPoly {
        SPoly {
            terms: self.terms.iter().map(|(e, v)| (e + k, v.clone())).collect(),
        }
    }

    /// First term with an odd or negative power of `s`, if any.
    pub fn first_non_mu_term(&self) -> Option<(i32, Rational)> {
        self.terms
            .iter()
            .find(|(k, _)| **k < 0 || **k % 2 != 0)
            .map(|(k, c)| (*k, c.clone()))
    }

    /// Substitute `s² → μ`; `None` if an odd or negative power is present.
    pub fn to_mu(&self) -> Option<MuPoly> {
        if self.first_non_mu_term().is_some() {
            return None;
        }
        Some(MuPoly::from_terms(
            self.terms.iter().map(|(k, c)| ((*k / 2) as u32, c.clone())),
        ))
    }

    /// Substitute `s² → value`, for polynomials even in `s`.
    pub fn eval_mu(&self, value: &Rational) -> Option<Rational> {
        self.to_mu().map(|m| m.eval(value))
    }
}

impl From<&MuPoly> for SPoly {
    fn from(m: &MuPoly) -> Self {
        let mut out = SPoly::zero();
        for (k, c) in m.terms() {
            out.add_term(2 * k as i32, c);
        }
        out
    }
}

impl Add<&SPoly> for &SPoly {
    type Output = SPoly;
    fn add(self, rhs: &SPoly) -> SPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub<&SPoly> for &SPoly {
    type Output = SPoly;
    fn sub(self, rhs: &SPoly) -> SPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, &-c);
        }
        out
    }
}

impl Mul<&SPoly> for &SPoly {
    type Output = SPoly;
    fn mul(self, rhs: &SPoly) -> SPoly {
        let mut out = SPoly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(a + b, &(ca * cb));
            }
        }
        out
    }
}

impl Neg for &SPoly {
    type Output = SPoly;
    fn neg(self) -> SPoly {
        self.scale(&Rational::from_int(-1))
    }
}

impl fmt::Display for SPoly {
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
                1 => write!(f, "{c}*s")?,
                _ => write!(f, "{c}*s^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for SPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
