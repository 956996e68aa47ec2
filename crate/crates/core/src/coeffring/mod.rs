//! Exact scalar arithmetic: rationals, Laurent polynomials in the formal
//! square root `s` of the contraction parameter, polynomials in μ, and
//! truncated power series in the deformation parameter.

mod mupoly;
mod rational;
mod series;
mod spoly;

pub use mupoly::{evaluate_mu, MuMode, MuPoly};
pub use rational::Rational;
pub use series::{eliminate_s, series_invert, MuSeries, Param, ScalarSeries};
pub use spoly::SPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoeffError {
    #[error("constant term is zero or not a rational number")]
    NonUnitConstantTerm,
    #[error("odd or negative power s^{s_power} (coefficient {coeff}) at order {order}")]
    OddSPowerResidue {
        order: u32,
        s_power: i32,
        coeff: Rational,
    },
}

/// Taylor coefficients of the analytic functions used by the models.
pub mod taylor {
    use super::{series_invert, Param, Rational, ScalarSeries, SPoly};
    use alloc::vec::Vec;

    pub fn exp(n: u32) -> Vec<Rational> {
        (0..=n).map(Rational::inv_factorial).collect()
    }

    pub fn exp_neg(n: u32) -> Vec<Rational> {
        (0..=n)
            .map(|k| {
                let c = Rational::inv_factorial(k);
                if k % 2 == 1 {
                    -c
                } else {
                    c
                }
            })
            .collect()
    }

    pub fn sinh(n: u32) -> Vec<Rational> {
        (0..=n)
            .map(|k| {
                if k % 2 == 1 {
                    Rational::inv_factorial(k)
                } else {
                    Rational::zero()
                }
            })
            .collect()
    }

    pub fn cosh(n: u32) -> Vec<Rational> {
        (0..=n)
            .map(|k| {
                if k % 2 == 0 {
                    Rational::inv_factorial(k)
                } else {
                    Rational::zero()
                }
            })
            .collect()
    }

    /// `sinh(x)/x`
    pub fn sinhc(n: u32) -> Vec<Rational> {
        (0..=n)
            .map(|k| {
                if k % 2 == 0 {
                    Rational::inv_factorial(k + 1)
                } else {
                    Rational::zero()
                }
            })
            .collect()
    }

    /// `x/sinh(x)`, the reciprocal of [`sinhc`] computed by series inversion.
    pub fn x_over_sinh(n: u32) -> Vec<Rational> {
        let u = ScalarSeries::from_rationals(Param::Z, n, &sinhc(n));
        let inv = series_invert(&u).expect("sinh(x)/x has unit constant term");
        (0..=n)
            .map(|k| inv.coeff(k).as_rational().expect("rational"))
            .collect()
    }

    /// Coefficients of a series multiplied by a μ-power per term: the
    /// generalized cosine `C₋μ(x) = Σ μ^k x^{2k}/(2k)!` as (μ-power, coeff).
    pub fn gen_cos(n: u32) -> Vec<(u32, Rational)> {
        (0..=n)
            .map(|k| {
                if k % 2 == 0 {
                    (k / 2, Rational::inv_factorial(k))
                } else {
                    (0, Rational::zero())
                }
            })
            .collect()
    }

    /// Generalized sine `S₋μ(x) = Σ μ^k x^{2k+1}/(2k+1)!`.
    pub fn gen_sin(n: u32) -> Vec<(u32, Rational)> {
        (0..=n)
            .map(|k| {
                if k % 2 == 1 {
                    (k / 2, Rational::inv_factorial(k))
                } else {
                    (0, Rational::zero())
                }
            })
            .collect()
    }

    /// Convert (μ-power, coeff) pairs into `SPoly` coefficients (μ = s²).
    pub fn mu_weighted(c: &[(u32, Rational)]) -> Vec<SPoly> {
        c.iter()
            .map(|(p, r)| SPoly::monomial(2 * *p as i32, r.clone()))
            .collect()
    }

    #[cfg(test)]
    mod tests {
        use super::*;

        #[test]
        fn x_over_sinh_known_terms() {
            // x/sinh x = 1 - x^2/6 + 7x^4/360 - 31x^6/15120 + ...
            let c = x_over_sinh(6);
            assert_eq!(c[0], Rational::one());
            assert_eq!(c[2], Rational::new(-1, 6));
            assert_eq!(c[4], Rational::new(7, 360));
            assert_eq!(c[6], Rational::new(-31, 15120));
            assert!(c[1].is_zero() && c[3].is_zero());
        }
    }
}
