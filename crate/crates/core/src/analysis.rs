//! Zero locations, the Eisenstein lattice sum, definite integrals and the
//! half-argument formula.

use std::f64::consts::PI;

use crate::constants::{rho, Constants, SQRT3};
use crate::error::{Error, Result};
use crate::lattice::{shells, EisensteinPair, HexLattice};
use crate::quad::{self, Estimate};
use crate::wfun::Evaluator;
use crate::Complex;

/// Function whose zeros are located by [`newton_refine`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RootTarget {
    /// ℘(z)
    P,
    /// ℘′(z) + √3
    DpPlusSqrt3,
    /// ℘′(z) - √3
    DpMinusSqrt3,
}

impl RootTarget {
    pub const ALL: [RootTarget; 3] = [RootTarget::P, RootTarget::DpPlusSqrt3, RootTarget::DpMinusSqrt3];

    pub fn name(self) -> &'static str {
        match self {
            RootTarget::P => "p",
            RootTarget::DpPlusSqrt3 => "dp-plus",
            RootTarget::DpMinusSqrt3 => "dp-minus",
        }
    }

    /// Closed-form zeros (cell representatives).
    pub fn closed_forms(self) -> Vec<Complex> {
        match self {
            RootTarget::P => zeros_of_p().to_vec(),
            RootTarget::DpPlusSqrt3 => zeros_of_dp_shifted(1).to_vec(),
            RootTarget::DpMinusSqrt3 => zeros_of_dp_shifted(-1).to_vec(),
        }
    }

    /// Target value and its derivative at `z`.
    fn value_and_slope(self, ev: &Evaluator, z: Complex) -> Result<(Complex, Complex)> {
        let (w, dw) = ev.p_pair(z)?;
        Ok(match self {
            RootTarget::P => (w, dw),
            RootTarget::DpPlusSqrt3 => (dw + SQRT3, 6.0 * w * w),
            RootTarget::DpMinusSqrt3 => (dw - SQRT3, 6.0 * w * w),
        })
    }
}

impl std::str::FromStr for RootTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RootTarget::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown root target `{s}`")))
    }
}

/// The two zeros of ℘ in the fundamental cell: `rϖ` and `2rϖ`, the centres
/// of the two equilateral triangles that make up the cell.
pub fn zeros_of_p() -> [Complex; 2] {
    let c = Constants::get();
    [c.r * c.varpi, 2.0 * c.r * c.varpi]
}

/// Zeros of `℘′ + √3` (`sign = +1`) or `℘′ - √3` (`sign = -1`).
pub fn zeros_of_dp_shifted(sign: i32) -> [Complex; 3] {
    let v = Constants::get().varpi;
    let (a, b) = if sign >= 0 { (1.0, 2.0) } else { (2.0, 1.0) };
    let rho2 = rho() * rho();
    [
        Complex::new(a * v / 3.0, 0.0),
        rho() * (b * v / 3.0),
        rho2 * (a * v / 3.0),
    ]
}

/// Whether `z` lies strictly inside the triangle `a, b, c`.
pub fn strictly_inside_triangle(z: Complex, a: Complex, b: Complex, c: Complex) -> bool {
    let cross = |p: Complex, q: Complex, x: Complex| (q - p).re * (x - p).im - (q - p).im * (x - p).re;
    let (d1, d2, d3) = (cross(a, b, z), cross(b, c, z), cross(c, a, z));
    (d1 > 0.0 && d2 > 0.0 && d3 > 0.0) || (d1 < 0.0 && d2 < 0.0 && d3 < 0.0)
}

/// Outcome of a Newton refinement.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    pub target: RootTarget,
    /// Closed-form zero (translated by a period) nearest to the refined root.
    pub closed_form: Complex,
    pub refined: Complex,
    pub iterations: usize,
    pub converged: bool,
}

/// Closed-form zero of `target`, shifted by the period that brings it closest to `z`.
pub fn nearest_closed_form(target: RootTarget, z: Complex) -> Complex {
    let lat = HexLattice::new(Constants::get().varpi);
    target
        .closed_forms()
        .into_iter()
        .map(|a| {
            let (p, _) = lat.nearest(z - a);
            a + p.to_complex(lat.scale)
        })
        .min_by(|x, y| (x - z).norm().total_cmp(&(y - z).norm()))
        .expect("closed forms are nonempty")
}

/// Complex Newton iteration `z ← z - F(z)/F′(z)`, stopping once `|step| ≤ tol`.
pub fn newton_refine(target: RootTarget, seed: Complex, tol: f64, max_iter: usize) -> Result<RootResult> {
    let ev = Evaluator::global();
    let mut z = seed;
    for iteration in 1..=max_iter {
        let (value, slope) = target.value_and_slope(ev, z)?;
        if slope.norm() < 1e-14 {
            return Err(Error::DerivativeVanishes { at: z });
        }
        let step = value / slope;
        z -= step;
        if step.norm() <= tol {
            return Ok(RootResult {
                target,
                closed_form: nearest_closed_form(target, z),
                refined: z,
                iterations: iteration,
                converged: true,
            });
        }
    }
    Err(Error::NoConvergence {
        last: z,
        iterations: max_iter,
    })
}

/// The `count` seeds `a + offset·e^{2πik/count}`.
pub fn perturbed_seeds(a: Complex, offset: f64, count: usize) -> Vec<Complex> {
    (0..count)
        .map(|k| a + Complex::from_polar(offset, 2.0 * PI * k as f64 / count as f64))
        .collect()
}

/// Truncated Eisenstein-integer sum of `1/((1-2κ)κ²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SumResult {
    pub radius: f64,
    pub partial_sum: Complex,
    /// `2π/√3 - 4`.
    pub target: Complex,
    pub abs_error: f64,
}

/// Contribution of one shell to the Eisenstein sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShellTerm {
    pub norm: i64,
    pub count: usize,
    pub shell_sum: Complex,
    pub cumulative: Complex,
}

fn eisenstein_term(p: EisensteinPair) -> Complex {
    let k = p.to_complex(1.0);
    ((1.0 - 2.0 * k) * k * k).inv()
}

pub fn eisenstein_target() -> f64 {
    2.0 * PI / SQRT3 - 4.0
}

/// Per-shell contributions for `|κ| ≤ radius`, in increasing modulus.
pub fn lattice_sum_shells(radius: f64) -> Vec<ShellTerm> {
    let mut cumulative = Complex::new(0.0, 0.0);
    shells(radius)
        .into_iter()
        .map(|s| {
            let shell_sum: Complex = s.points.iter().map(|&p| eisenstein_term(p)).sum();
            cumulative += shell_sum;
            ShellTerm {
                norm: s.norm,
                count: s.points.len(),
                shell_sum,
                cumulative,
            }
        })
        .collect()
}

/// Sum over complete shells of `1/((1-2κ)κ²)`, `0 < |κ| ≤ radius`.
///
/// Rotating a complete shell by 60° permutes it, so shell sums of `κ^{-p}`
/// vanish unless 6 divides p; the first surviving tail term is `κ^{-6}` and
/// the truncation error falls like `radius^{-4}`.
pub fn lattice_sum_bz6(radius: f64) -> Result<SumResult> {
    if !(radius >= 2.0) {
        return Err(Error::InvalidArgument(format!("lattice sum radius {radius} < 2")));
    }
    let partial_sum = lattice_sum_shells(radius)
        .last()
        .map(|t| t.cumulative)
        .unwrap_or_default();
    let target = Complex::new(eisenstein_target(), 0.0);
    Ok(SumResult {
        radius,
        partial_sum,
        target,
        abs_error: (partial_sum - target).norm(),
    })
}

/// Least-squares slope of `ln(abs_error)` against `ln(radius)`.
pub fn tail_exponent(radii: &[f64]) -> Result<f64> {
    let pts = radii
        .iter()
        .map(|&r| lattice_sum_bz6(r).map(|s| (r.ln(), s.abs_error.ln())))
        .collect::<Result<Vec<_>>>()?;
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Ok(sxy / sxx)
}

/// `∫₁^∞ dx/√(4x³-1)`.
///
/// Substituting `x = 1/t²` gives `∫₀¹ 2/√(4 - t⁶) dt`, whose integrand is
/// smooth on the closed interval.
pub fn integral_c22(tol: f64) -> Result<Estimate> {
    if !(1e-12..=1e-6).contains(&tol) {
        return Err(Error::InvalidArgument(format!(
            "integral tolerance {tol:e} outside [1e-12, 1e-6]"
        )));
    }
    quad::integrate(|t| 2.0 / (4.0 - t.powi(6)).sqrt(), 0.0, 1.0, tol)
}

/// All eight sign choices of
/// `℘(z) ± √((℘-e₁)(℘-e₂)) ± √((℘-e₂)(℘-e₃)) ± √((℘-e₃)(℘-e₁))`.
pub fn half_argument_candidates(z: Complex) -> Result<[Complex; 8]> {
    let ev = Evaluator::global();
    let w = ev.p(z)?;
    // z/2 must not be pole-adjacent either.
    ev.p(0.5 * z)?;
    let c = Constants::get();
    let roots = [
        ((w - c.e1) * (w - c.e2)).sqrt(),
        ((w - c.e2) * (w - c.e3)).sqrt(),
        ((w - c.e3) * (w - c.e1)).sqrt(),
    ];
    let mut out = [Complex::new(0.0, 0.0); 8];
    for (mask, slot) in out.iter_mut().enumerate() {
        let mut v = w;
        for (bit, r) in roots.iter().enumerate() {
            if mask & (1 << bit) == 0 {
                v += r;
            } else {
                v -= r;
            }
        }
        *slot = v;
    }
    Ok(out)
}

/// `0, ϖ/2, e^{iπ/3}ϖ/2, (1+e^{iπ/3})ϖ/2`.
pub fn half_period_shifts() -> [Complex; 4] {
    let v = Constants::get().varpi;
    [
        Complex::new(0.0, 0.0),
        Complex::new(v / 2.0, 0.0),
        rho() * (v / 2.0),
        (1.0 + rho()) * (v / 2.0),
    ]
}
