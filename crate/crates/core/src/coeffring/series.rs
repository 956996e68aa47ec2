use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use super::{CoeffError, MuPoly, Rational, SPoly};

/// Which deformation parameter a series is written in: `z` before the
/// contraction, `w = z/s` after it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    Z,
    W,
}

impl Param {
    pub fn symbol(self) -> &'static str {
        match self {
            Param::Z => "z",
            Param::W => "w",
        }
    }
}

/// Truncated power series in the deformation parameter with `SPoly`
/// coefficients. No term of order above `order` is ever stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarSeries {
    param: Param,
    order: u32,
    coeffs: BTreeMap<u32, SPoly>,
}

/// A series whose coefficients have been reduced to polynomials in μ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MuSeries {
    pub param: Param,
    pub order: u32,
    pub coeffs: BTreeMap<u32, MuPoly>,
}

impl ScalarSeries {
    pub fn zero(param: Param, order: u32) -> Self {
        ScalarSeries {
            param,
            order,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(param: Param, order: u32) -> Self {
        ScalarSeries::constant(param, order, SPoly::one())
    }

    pub fn constant(param: Param, order: u32, c: SPoly) -> Self {
        ScalarSeries::term(param, order, 0, c)
    }

    /// `c · param^k`, empty when `k` exceeds the truncation order.
    pub fn term(param: Param, order: u32, k: u32, c: SPoly) -> Self {
        let mut out = ScalarSeries::zero(param, order);
        out.add_term(k, &c);
        out
    }

    /// Build from a dense list of rational coefficients.
    pub fn from_rationals(param: Param, order: u32, coeffs: &[Rational]) -> Self {
        let mut out = ScalarSeries::zero(param, order);
        for (k, c) in coeffs.iter().enumerate() {
            out.add_term(k as u32, &SPoly::constant(c.clone()));
        }
        out
    }

    pub fn param(&self) -> Param {
        self.param
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, k: u32) -> SPoly {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (u32, &SPoly)> {
        self.coeffs.iter().map(|(k, c)| (*k, c))
    }

    pub fn add_term(&mut self, k: u32, c: &SPoly) {
        if k > self.order || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(k).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.coeffs.remove(&k);
        }
    }

    /// Lowest order with a nonzero coefficient.
    pub fn valuation(&self) -> Option<u32> {
        self.coeffs.keys().next().copied()
    }

    /// Re-truncate at a lower (or equal) order.
    pub fn truncate(&self, order: u32) -> ScalarSeries {
        ScalarSeries {
            param: self.param,
            order,
            coeffs: self
                .coeffs
                .iter()
                .filter(|(k, _)| **k <= order)
                .map(|(k, c)| (*k, c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &SPoly) -> ScalarSeries {
        let mut out = ScalarSeries::zero(self.param, self.order);
        for (k, v) in &self.coeffs {
            out.add_term(*k, &(v * c));
        }
        out
    }
}

/// Multiplicative inverse of a series whose constant term is a nonzero
/// rational, solved order by order.
pub fn series_invert(u: &ScalarSeries) -> Result<ScalarSeries, CoeffError> {
    let c0 = u
        .coeff(0)
        .as_rational()
        .filter(|c| !c.is_zero())
        .ok_or(CoeffError::NonUnitConstantTerm)?;
    let inv0 = c0.recip();
    let mut out = ScalarSeries::zero(u.param, u.order);
    out.add_term(0, &SPoly::constant(inv0.clone()));
    for n in 1..=u.order {
        // u0 v_n = -Σ_{k=1..n} u_k v_{n-k}
        let mut acc = SPoly::zero();
        for k in 1..=n {
            let uk = u.coeff(k);
            if uk.is_zero() {
                continue;
            }
            acc = &acc + &(&uk * &out.coeff(n - k));
        }
        out.add_term(n, &(-&acc).scale(&inv0));
    }
    Ok(out)
}

/// Replace `s² → μ` in every coefficient; fails on the first odd (or
/// negative) power of `s`.
pub fn eliminate_s(x: &ScalarSeries) -> Result<MuSeries, CoeffError> {
    let mut coeffs = BTreeMap::new();
    for (k, c) in &x.coeffs {
        if let Some((spow, coeff)) = c.first_non_mu_term() {
            return Err(CoeffError::OddSPowerResidue {
                order: *k,
                s_power: spow,
                coeff,
            });
        }
        coeffs.insert(*k, c.to_mu().expect("checked even"));
    }
    Ok(MuSeries {
        param: x.param,
        order: x.order,
        coeffs,
    })
}

impl MuSeries {
    pub fn coeff(&self, k: u32) -> MuPoly {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }
}

fn check_compatible(a: &ScalarSeries, b: &ScalarSeries) -> (Param, u32) {
    assert_eq!(a.param, b.param, "series in different parameters");
    (a.param, a.order.min(b.order))
}

impl Add<&ScalarSeries> for &ScalarSeries {
    type Output = ScalarSeries;
    fn add(self, rhs: &ScalarSeries) -> ScalarSeries {
        let (param, order) = check_compatible(self, rhs);
        let mut out = self.truncate(order);
        out.param = param;
        for (k, c) in &rhs.coeffs {
            out.add_term(*k, c);
        }
        out
    }
}

impl Sub<&ScalarSeries> for &ScalarSeries {
    type Output = ScalarSeries;
    fn sub(self, rhs: &ScalarSeries) -> ScalarSeries {
        self + &(-rhs)
    }
}

impl Mul<&ScalarSeries> for &ScalarSeries {
    type Output = ScalarSeries;
    fn mul(self, rhs: &ScalarSeries) -> ScalarSeries {
        let (param, order) = check_compatible(self, rhs);
        let mut out = ScalarSeries::zero(param, order);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &rhs.coeffs {
                if a + b <= order {
                    out.add_term(a + b, &(ca * cb));
                }
            }
        }
        out
    }
}

impl Neg for &ScalarSeries {
    type Output = ScalarSeries;
    fn neg(self) -> ScalarSeries {
        self.scale(&SPoly::constant(Rational::from_int(-1)))
    }
}

impl fmt::Display for ScalarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let p = self.param.symbol();
        for (i, (k, c)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*{p}")?,
                _ => write!(f, "({c})*{p}^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for ScalarSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn invert_identity() {
        let one = ScalarSeries::one(Param::W, 4);
        assert_eq!(series_invert(&one).unwrap(), one);
    }

    #[test]
    fn invert_one_plus_w() {
        // (1 + w)(1 - w + w^2) = 1 + w^3, which vanishes at N = 2.
        let u = ScalarSeries::from_rationals(Param::W, 2, &[q(1, 1), q(1, 1)]);
        let expected = ScalarSeries::from_rationals(Param::W, 2, &[q(1, 1), q(-1, 1), q(1, 1)]);
        assert_eq!(series_invert(&u).unwrap(), expected);
    }

    #[test]
    fn invert_rejects_zero_constant() {
        let u = ScalarSeries::term(Param::W, 3, 1, SPoly::one());
        assert_eq!(series_invert(&u), Err(CoeffError::NonUnitConstantTerm));
    }

    #[test]
    fn invert_rejects_s_in_constant() {
        let u = ScalarSeries::constant(Param::W, 3, SPoly::s());
        assert_eq!(series_invert(&u), Err(CoeffError::NonUnitConstantTerm));
    }

    #[test]
    fn eliminate_even_powers() {
        let x = ScalarSeries::term(Param::W, 3, 1, SPoly::mu());
        let m = eliminate_s(&x).unwrap();
        assert_eq!(m.coeff(1), MuPoly::mu());
        assert!(m.coeff(0).is_zero());
    }

    #[test]
    fn eliminate_rejects_odd_power() {
        let x = ScalarSeries::term(Param::W, 3, 1, SPoly::s());
        match eliminate_s(&x) {
            Err(CoeffError::OddSPowerResidue { order, s_power, .. }) => {
                assert_eq!((order, s_power), (1, 1));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn truncation_on_multiply() {
        let u = ScalarSeries::from_rationals(Param::Z, 2, &[q(0, 1), q(1, 1)]);
        let sq = &u * &u;
        assert_eq!(sq.coeff(2), SPoly::one());
        let cube = &sq * &u;
        assert!(cube.is_zero());
    }
}
