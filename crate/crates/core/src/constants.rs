//! Frozen constants of the equianharmonic case `g₂ = 0, g₃ = 1`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::quad::{self, Estimate};
use crate::Complex;

/// Γ(1/3), 40 digits. Oracle: mpmath `gamma(mpf(1)/3)` at 40 decimal digits.
pub const GAMMA_ONE_THIRD: f64 = 2.678938534707747633655692940974677644129;

/// Γ(2/3), 40 digits. Oracle: mpmath `gamma(mpf(2)/3)` at 40 decimal digits.
pub const GAMMA_TWO_THIRDS: f64 = 1.354117939426400416945288028154513785519;

/// Γ(1/3) - GAMMA_ONE_THIRD, from the same mpmath value.
const GAMMA_ONE_THIRD_LO: f64 = 1.794_779_864_822_524_4e-16;
/// 2π - TAU in f64.
const TAU_LO: f64 = 2.449_293_598_294_706_4e-16;

pub const SQRT3: f64 = 1.732_050_807_568_877_2;

/// Real period `Γ(1/3)³ / (2π)` of the lattice, evaluated in double-double
/// so the result is the correctly rounded f64.
pub fn varpi_from_gamma() -> f64 {
    let (g, g_lo) = (GAMMA_ONE_THIRD, GAMMA_ONE_THIRD_LO);
    let sq = g * g;
    let sq_lo = g.mul_add(g, -sq) + 2.0 * g * g_lo;
    let cube = sq * g;
    let cube_lo = sq.mul_add(g, -cube) + sq_lo * g + sq * g_lo;
    let tau = 2.0 * PI;
    let q = cube / tau;
    let rem = (-q).mul_add(tau, cube) + cube_lo - q * TAU_LO;
    q + rem / tau
}

fn check_tol(tol: f64) -> Result<()> {
    if (1e-13..=1e-6).contains(&tol) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "quadrature tolerance {tol:e} outside [1e-13, 1e-6]"
        )))
    }
}

/// Real period from the Beta-type integral `(2^{1/3}/3) ∫₀¹ ξ^{-5/6} (1-ξ)^{-1/2} dξ`.
///
/// The interval is split at ½. On the left `ξ = u⁶` gives `6/√(1-u⁶)`, on the
/// right `1-ξ = v²` gives `2(1-v²)^{-5/6}`; both are smooth.
pub fn varpi_from_quadrature(tol: f64) -> Result<Estimate> {
    check_tol(tol)?;
    let prefactor = 2f64.cbrt() / 3.0;
    let inner = tol / (2.0 * prefactor);
    let left = quad::integrate(|u| 6.0 / (1.0 - u.powi(6)).sqrt(), 0.0, 0.5f64.powf(1.0 / 6.0), inner)?;
    let right = quad::integrate(|v| 2.0 * (1.0 - v * v).powf(-5.0 / 6.0), 0.0, 0.5f64.sqrt(), inner)?;
    Ok((left + right) * prefactor)
}

/// Real period from `∫_{e₁}^∞ dx/√(x³ - 1/4)`.
///
/// `x = e₁/t²` maps the range to `t ∈ (0, 1]` with integrand `4e₁/√(1-t⁶)`.
/// Split at ½; on the right `t = 1 - v²` gives `8e₁/√P(v²)` where
/// `P(w) = (1 - (1-w)⁶)/w = 6 - 15w + 20w² - 15w³ + 6w⁴ - w⁵`.
pub fn varpi_from_improper_integral(tol: f64) -> Result<Estimate> {
    check_tol(tol)?;
    let e1 = 0.25f64.cbrt();
    let p = |w: f64| 6.0 + w * (-15.0 + w * (20.0 + w * (-15.0 + w * (6.0 - w))));
    let inner = tol / (8.0 * e1);
    let left = quad::integrate(|t| 1.0 / (1.0 - t.powi(6)).sqrt(), 0.0, 0.5, inner)?;
    let right = quad::integrate(|v| 2.0 / p(v * v).sqrt(), 0.0, 0.5f64.sqrt(), inner)?;
    Ok((left + right) * (4.0 * e1))
}

/// Named constants of the hexagonal-lattice ℘.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Constants {
    /// Real period ϖ.
    pub varpi: f64,
    /// Quasi-period of ζ along ϖ.
    pub eta1: f64,
    /// Quasi-period of ζ along `e^{iπ/3}ϖ`.
    pub eta2: Complex,
    pub e1: Complex,
    pub e2: Complex,
    pub e3: Complex,
    /// `(1 + e^{iπ/3})/3`, the scale factor whose lattice has the zeros of ℘ as extra points.
    pub r: Complex,
    pub g2: f64,
    pub g3: f64,
    pub gamma_third: f64,
}

impl Constants {
    fn compute() -> Self {
        let varpi = varpi_from_gamma();
        let eta1 = 2.0 * PI / (SQRT3 * varpi);
        let e1 = 0.25f64.cbrt();
        Self {
            varpi,
            eta1,
            eta2: Complex::from_polar(eta1, -PI / 3.0),
            e1: Complex::new(e1, 0.0),
            e2: Complex::from_polar(e1, -2.0 * PI / 3.0),
            e3: Complex::from_polar(e1, 2.0 * PI / 3.0),
            r: Complex::new(0.5, 0.5 / SQRT3),
            g2: 0.0,
            g3: 1.0,
            gamma_third: GAMMA_ONE_THIRD,
        }
    }

    /// Process-wide instance.
    pub fn get() -> &'static Constants {
        static CONSTANTS: OnceLock<Constants> = OnceLock::new();
        CONSTANTS.get_or_init(Self::compute)
    }

    /// `e^{iπ/3}·ϖ`, the second primitive period.
    pub fn omega2(&self) -> Complex {
        rho() * self.varpi
    }

    /// Legendre's relation residual `η₁e^{iπ/3}ϖ - η₂ϖ - 2πi`.
    pub fn legendre_residual(&self) -> Complex {
        self.eta1 * self.omega2() - self.eta2 * self.varpi - Complex::new(0.0, 2.0 * PI)
    }
}

/// `e^{iπ/3}`.
pub fn rho() -> Complex {
    Complex::new(0.5, 0.5 * SQRT3)
}

/// `2π/(√3 ϖ)`.
pub fn eta() -> f64 {
    Constants::get().eta1
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    // mpmath, 40 digits
    const VARPI_ORACLE: f64 = 3.059_908_074_114_385_749_826;
    const ETA_ORACLE: f64 = 1.185_525_395_078_528_261_02;

    #[test]
    fn varpi_gamma() {
        assert_eq!(varpi_from_gamma(), VARPI_ORACLE);
        assert_abs_diff_eq!(varpi_from_gamma(), 3.0599080739, epsilon = 1e-9);
        assert_abs_diff_eq!(varpi_from_gamma() / 3.0, 1.0199693580, epsilon = 1e-9);
        assert_abs_diff_eq!(
            GAMMA_ONE_THIRD * GAMMA_TWO_THIRDS,
            2.0 * PI / 3f64.sqrt(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn varpi_quadrature() {
        let q = varpi_from_quadrature(1e-10).unwrap();
        assert!(q.error <= 1e-10);
        assert_abs_diff_eq!(q.value, varpi_from_gamma(), epsilon = 1e-10);
        let q6 = varpi_from_quadrature(1e-6).unwrap();
        assert_abs_diff_eq!(q6.value, 3.059908, epsilon = 1e-6);
        let q13 = varpi_from_quadrature(1e-13).unwrap();
        assert_abs_diff_eq!(q13.value, VARPI_ORACLE, epsilon = 1e-13);
    }

    #[test]
    fn improper_form_matches_beta_form() {
        for tol in [1e-6, 1e-10, 1e-13] {
            let a = varpi_from_improper_integral(tol).unwrap();
            let b = varpi_from_quadrature(tol).unwrap();
            assert!((a.value - b.value).abs() <= 2.0 * tol, "tol {tol}");
        }
    }

    #[test]
    fn tolerance_range_enforced() {
        assert!(varpi_from_quadrature(1e-3).is_err());
        assert!(varpi_from_quadrature(1e-15).is_err());
    }

    #[test]
    fn constant_invariants() {
        let c = Constants::get();
        assert_abs_diff_eq!(c.e1.re, 0.629_960_524_947_436_6, epsilon = 1e-15);
        assert!((c.e1 + c.e2 + c.e3).norm() <= 1e-15);
        assert!((4.0 * c.e1.powi(3) - 1.0).norm() <= 1e-15);
        for e in [c.e2, c.e3] {
            assert!((4.0 * e.powi(3) - 1.0).norm() <= 1e-15);
        }
        assert_abs_diff_eq!(c.eta1 * c.varpi, 2.0 * PI / 3f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(c.eta1 * c.varpi, 3.6275987285, epsilon = 1e-10);
        assert_abs_diff_eq!(eta(), ETA_ORACLE, epsilon = 1e-14);
        assert_abs_diff_eq!(eta(), 1.1855254, epsilon = 1e-6);
        assert!((c.eta2 - Complex::from_polar(1.0, -PI / 3.0) * c.eta1).norm() <= 1e-15);
        assert!(c.legendre_residual().norm() <= 1e-12);
        assert_eq!(c.r, Complex::new(0.5, 1.0 / (2.0 * 3f64.sqrt())));
        assert_abs_diff_eq!(c.r.norm(), 1.0 / 3f64.sqrt(), epsilon = 1e-15);
        let rinv = c.r.inv();
        assert!((rinv - Complex::from_polar(3f64.sqrt(), -PI / 6.0)).norm() <= 1e-15);
        assert!((rinv - (Complex::from_polar(1.0, -PI / 3.0) + 1.0)).norm() <= 1e-15);
        assert_eq!((c.g2, c.g3), (0.0, 1.0));
    }
}
