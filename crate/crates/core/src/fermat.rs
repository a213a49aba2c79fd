//! Uniformization of the Fermat cubic `X³ + Y³ = 1` by
//! `f(z) = (℘′(z) + √3)/(2√3 ℘(z))`, `Y = f(-z)`.

use crate::constants::SQRT3;
use crate::error::{Error, Result};
use crate::lattice::CellCoords;
use crate::wfun::Evaluator;
use crate::Complex;

/// |℘(z)| below this is treated as a pole of f.
pub const F_POLE_GUARD: f64 = 1e-8;
/// |℘′(z) + √3| below this is treated as a zero denominator.
pub const DENOMINATOR_GUARD: f64 = 1e-8;

/// A point `(x, y)` that should lie on `x³ + y³ = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint {
    pub x: Complex,
    pub y: Complex,
}

impl CurvePoint {
    /// `|x³ + y³ - 1|`.
    pub fn residual(&self) -> f64 {
        (self.x.powi(3) + self.y.powi(3) - 1.0).norm()
    }
}

fn checked_pair(ev: &Evaluator, z: Complex) -> Result<(Complex, Complex)> {
    let (w, dw) = ev.p_pair(z)?;
    if w.norm() < F_POLE_GUARD {
        return Err(Error::NearPoleOfF { z, value: w.norm() });
    }
    Ok((w, dw))
}

impl Evaluator {
    pub fn f(&self, z: Complex) -> Result<Complex> {
        let (w, dw) = checked_pair(self, z)?;
        Ok((dw + SQRT3) / (2.0 * SQRT3 * w))
    }

    /// `f′ = [℘″℘ - ℘′(℘′ + √3)] / (2√3 ℘²)` with `℘″ = 6℘²`.
    pub fn f_prime(&self, z: Complex) -> Result<Complex> {
        let (w, dw) = checked_pair(self, z)?;
        let ddw = 6.0 * w * w;
        Ok((ddw * w - dw * (dw + SQRT3)) / (2.0 * SQRT3 * w * w))
    }

    pub fn uniformize(&self, z: Complex) -> Result<CurvePoint> {
        Ok(CurvePoint {
            x: self.f(z)?,
            y: self.f(-z)?,
        })
    }

    /// `(2√3℘/(℘′+√3), (℘′-√3)/(℘′+√3))`, a second parametrization of the curve.
    pub fn baker_pair(&self, z: Complex) -> Result<CurvePoint> {
        let (w, dw) = self.p_pair(z)?;
        let den = dw + SQRT3;
        if den.norm() < DENOMINATOR_GUARD {
            return Err(Error::NearZeroDenominator { z, value: den.norm() });
        }
        Ok(CurvePoint {
            x: 2.0 * SQRT3 * w / den,
            y: (dw - SQRT3) / den,
        })
    }
}

pub fn f(z: Complex) -> Result<Complex> {
    Evaluator::global().f(z)
}

pub fn f_prime(z: Complex) -> Result<Complex> {
    Evaluator::global().f_prime(z)
}

pub fn uniformize(z: Complex) -> Result<CurvePoint> {
    Evaluator::global().uniformize(z)
}

pub fn baker_pair(z: Complex) -> Result<CurvePoint> {
    Evaluator::global().baker_pair(z)
}

/// Grid points of the fundamental cell (n×n in cell coordinates) where
/// `|f| > threshold` or f cannot be evaluated because of a pole.
pub fn large_value_sites(n: usize, threshold: f64) -> Vec<Complex> {
    let ev = Evaluator::global();
    let scale = ev.lattice().scale;
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let cell = CellCoords {
                s: i as f64 / n as f64,
                t: j as f64 / n as f64,
            };
            let z = cell.to_complex(scale);
            match ev.f(z) {
                Ok(v) if v.norm() <= threshold => {}
                _ => out.push(z),
            }
        }
    }
    out
}
