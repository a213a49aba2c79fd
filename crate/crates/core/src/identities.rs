//! Seeded verification of the identities satisfied by the hexagonal-lattice
//! functions. Each check samples the fundamental cell, evaluates both sides
//! of one identity and records residual statistics; suites bundle checks
//! into a [`CheckReport`].
//!
//! Relative residuals are `|lhs - rhs| / (1 + |lhs| + |rhs|)`.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::analysis::{
    self, half_argument_candidates, half_period_shifts, lattice_sum_bz6, newton_refine, perturbed_seeds,
    strictly_inside_triangle, tail_exponent, zeros_of_dp_shifted, zeros_of_p, RootTarget,
};
use crate::constants::{self, rho, Constants, SQRT3};
use crate::error::{Error, Result};
use crate::fermat::{self, CurvePoint};
use crate::lattice::{union_translates_equals_scaled, HexLattice};
use crate::wfun::{EvalOptions, Evaluator, LatticeSums};
use crate::Complex;

/// Name of the sample generator, for reading reports.
pub const GENERATOR: &str = "ChaCha8Rng";

/// Radius, in units of ϖ, kept clear of check-specific singular sets.
pub const EXCLUSION_MARGIN: f64 = 0.02;

/// Newton seeds sit this far (in units of ϖ) from the closed-form zero.
pub const SEED_OFFSET: f64 = 0.05;
pub const NEWTON_MAX_ITER: usize = 25;
const NEWTON_STEP_TOL: f64 = 1e-13;

/// Gates of the analysis-backed checks. These do not scale with the suite tolerance.
pub const SUM_RADIUS: f64 = 30.0;
pub const SUM_GATE: f64 = 1e-4;
pub const SUM_FIT_RADII: [f64; 3] = [10.0, 20.0, 40.0];
pub const SUM_SLOPE_GATE: f64 = -3.0;
pub const ORACLE_RADII: [f64; 3] = [25.0, 50.0, 100.0];
pub const ORACLE_GATE: f64 = 5e-3;
pub const ORACLE_MAX_SAMPLES: usize = 100;
pub const POLE_GRID: usize = 400;
pub const POLE_GRID_THRESHOLD: f64 = 1e2;

pub const SUITES: [&str; 6] = ["all", "core", "identities", "zeros", "sums", "uniformization"];

/// `|a - b| / (1 + |a| + |b|)`.
pub fn relative_residual(a: Complex, b: Complex) -> f64 {
    (a - b).norm() / (1.0 + a.norm() + b.norm())
}

/// Formats a float with 17 significant digits and a lowercase exponent.
pub fn format_number(x: f64) -> String {
    format!("{x:.16e}")
}

/// `{"re":…,"im":…}` with the same number format as reports.
pub fn complex_json(z: Complex) -> String {
    serde_json::to_string(&Point(z)).expect("point serializes")
}

/// Result of one check.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckEntry {
    pub name: String,
    pub samples: usize,
    pub max_abs_residual: f64,
    pub max_rel_residual: f64,
    /// Where `max_rel_residual` was attained.
    pub worst_point: Complex,
    pub pass: bool,
}

/// Aggregated outcome of a suite.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub suite: String,
    pub seed: u64,
    pub tolerance: f64,
    pub checks: Vec<CheckEntry>,
    pub pass: bool,
}

impl CheckReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn get(&self, name: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Num(f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let raw =
                serde_json::value::RawValue::from_string(format_number(self.0)).map_err(serde::ser::Error::custom)?;
            raw.serialize(s)
        } else {
            s.serialize_none()
        }
    }
}

struct Point(Complex);

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Point", 2)?;
        st.serialize_field("re", &Num(self.0.re))?;
        st.serialize_field("im", &Num(self.0.im))?;
        st.end()
    }
}

impl Serialize for CheckEntry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckEntry", 6)?;
        st.serialize_field("name", &self.name)?;
        st.serialize_field("samples", &self.samples)?;
        st.serialize_field("max_abs_residual", &Num(self.max_abs_residual))?;
        st.serialize_field("max_rel_residual", &Num(self.max_rel_residual))?;
        st.serialize_field("worst_point", &Point(self.worst_point))?;
        st.serialize_field("pass", &self.pass)?;
        st.end()
    }
}

impl Serialize for CheckReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("CheckReport", 5)?;
        st.serialize_field("suite", &self.suite)?;
        st.serialize_field("seed", &self.seed)?;
        st.serialize_field("tolerance", &Num(self.tolerance))?;
        st.serialize_field("checks", &self.checks)?;
        st.serialize_field("pass", &self.pass)?;
        st.end()
    }
}

/// Uniform sampler over the fundamental cell with rejection of
/// pole-adjacent points and of neighbourhoods of extra singular sets.
pub struct Sampler {
    rng: ChaCha8Rng,
    lattice: HexLattice,
    pole_margin: f64,
    exclusions: Vec<(Complex, f64)>,
}

fn fnv1a(s: &str) -> u64 {
    s.bytes().fold(0xcbf2_9ce4_8422_2325, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

impl Sampler {
    /// Stream determined by `(seed, name)` only.
    pub fn new(seed: u64, name: &str) -> Self {
        let c = Constants::get();
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed ^ fnv1a(name)),
            lattice: HexLattice::new(c.varpi),
            pole_margin: EvalOptions::default().pole_margin,
            exclusions: Vec::new(),
        }
    }

    /// Also reject points within `margin` of `points + 𝕋`.
    pub fn exclude(mut self, points: &[Complex], margin: f64) -> Self {
        self.exclusions.extend(points.iter().map(|&p| (p, margin)));
        self
    }

    fn accepts(&self, z: Complex) -> bool {
        self.lattice.dist_to_lattice(z) >= self.pole_margin
            && self
                .exclusions
                .iter()
                .all(|&(a, m)| self.lattice.dist_to_lattice(z - a) >= m)
    }

    /// Up to `n` accepted points, giving up after `10·n` draws.
    pub fn draw(&mut self, n: usize) -> Vec<Complex> {
        let mut out = Vec::with_capacity(n);
        for _ in 0..10 * n {
            if out.len() == n {
                break;
            }
            let (s, t): (f64, f64) = (self.rng.random(), self.rng.random());
            let z = (s + t * rho()) * self.lattice.scale;
            if self.accepts(z) {
                out.push(z);
            }
        }
        out
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }
}

/// Running residual maxima for one check.
struct Residuals {
    name: &'static str,
    samples: usize,
    max_abs: f64,
    max_rel: f64,
    worst: Complex,
    broken: bool,
}

impl Residuals {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            samples: 0,
            max_abs: 0.0,
            max_rel: 0.0,
            worst: Complex::new(0.0, 0.0),
            broken: false,
        }
    }

    fn raw(&mut self, z: Complex, abs: f64, rel: f64) {
        if !(abs.is_finite() && rel.is_finite()) {
            self.fail(z);
            return;
        }
        self.max_abs = self.max_abs.max(abs);
        if rel > self.max_rel {
            self.max_rel = rel;
            self.worst = z;
        }
    }

    fn compare(&mut self, z: Complex, lhs: Complex, rhs: Complex) {
        self.raw(z, (lhs - rhs).norm(), relative_residual(lhs, rhs));
    }

    /// Records the outcome of a fallible evaluation of `(lhs, rhs)`.
    fn compare_with(&mut self, z: Complex, pair: Result<(Complex, Complex)>) {
        match pair {
            Ok((l, r)) => self.compare(z, l, r),
            Err(_) => self.fail(z),
        }
    }

    fn fail(&mut self, z: Complex) {
        if !self.broken {
            self.worst = z;
        }
        self.broken = true;
        self.max_abs = f64::INFINITY;
        self.max_rel = f64::INFINITY;
    }

    fn samples(mut self, n: usize) -> Self {
        self.samples = n;
        self
    }

    fn finish(self, tol: f64) -> CheckEntry {
        self.finish_with(|r| r.max_rel <= tol)
    }

    fn finish_with(self, gate: impl Fn(&Self) -> bool) -> CheckEntry {
        let pass = !self.broken && gate(&self);
        CheckEntry {
            name: self.name.to_string(),
            samples: self.samples,
            max_abs_residual: self.max_abs,
            max_rel_residual: self.max_rel,
            worst_point: self.worst,
            pass,
        }
    }
}

fn ev() -> &'static Evaluator {
    Evaluator::global()
}

fn varpi() -> f64 {
    Constants::get().varpi
}

fn re(x: f64) -> Complex {
    Complex::new(x, 0.0)
}

/// Derivative of an analytic function by the trapezoid rule on a circle:
/// `f′(z) ≈ (1/N) Σ f(z + ρe^{iθ_k}) e^{-iθ_k} / ρ`.
pub fn cauchy_derivative(
    f: impl Fn(Complex) -> Result<Complex>,
    z: Complex,
    radius: f64,
    nodes: usize,
) -> Result<Complex> {
    let mut acc = Complex::new(0.0, 0.0);
    for k in 0..nodes {
        let u = Complex::from_polar(1.0, 2.0 * PI * k as f64 / nodes as f64);
        acc += f(z + radius * u)? / u;
    }
    Ok(acc / (nodes as f64 * radius))
}

// ----- core -----------------------------------------------------------------

pub fn check_special_values(_n: usize, _seed: u64, tol: f64) -> CheckEntry {
    let c = Constants::get();
    let v = c.varpi;
    let mut r = Residuals::new("special_values");
    let cases: Vec<(Complex, Result<Complex>, Complex)> = vec![
        (re(v / 2.0), ev().p(re(v / 2.0)), c.e1),
        (rho() * v / 2.0, ev().p(rho() * v / 2.0), c.e2),
        ((1.0 + rho()) * v / 2.0, ev().p((1.0 + rho()) * v / 2.0), c.e3),
        (re(v / 3.0), ev().p(re(v / 3.0)), re(1.0)),
        (re(-v / 3.0), ev().p(re(-v / 3.0)), re(1.0)),
        (c.r * v, ev().p(c.r * v), re(0.0)),
        (re(v / 2.0), ev().p_prime(re(v / 2.0)), re(0.0)),
        (rho() * v / 2.0, ev().p_prime(rho() * v / 2.0), re(0.0)),
        ((1.0 + rho()) * v / 2.0, ev().p_prime((1.0 + rho()) * v / 2.0), re(0.0)),
        (re(v / 3.0), ev().p_prime(re(v / 3.0)), re(-SQRT3)),
        (re(2.0 * v / 3.0), ev().p_prime(re(2.0 * v / 3.0)), re(SQRT3)),
        (re(v / 2.0), ev().zeta(re(v / 2.0)), re(c.eta1 / 2.0)),
        (re(0.0), ev().sigma(re(0.0)), re(0.0)),
        (re(0.0), cauchy_derivative(|z| ev().sigma(z), re(0.0), 0.5, 64), re(1.0)),
    ];
    for (z, lhs, rhs) in cases {
        r.compare_with(z, lhs.map(|l| (l, rhs)));
    }
    r.samples(14).finish(tol)
}

pub fn check_ode(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "ode").draw(n);
    let mut r = Residuals::new("ode");
    for &z in &pts {
        match ev().p_pair(z) {
            Ok((w, dw)) => {
                let abs = (dw * dw - 4.0 * w * w * w + 1.0).norm();
                r.raw(z, abs, abs / (1.0 + w.norm().powi(3)));
            }
            Err(_) => r.fail(z),
        }
    }
    r.samples(pts.len()).finish(tol)
}

/// `k²℘(kz)` satisfies `w′² = 4w³ - k⁶` for any nonzero k.
pub fn check_scaling(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let mut sampler = Sampler::new(seed, "scaling");
    let pts = sampler.draw(n);
    let mut r = Residuals::new("scaling");
    for &u in &pts {
        let k = Complex::from_polar(
            sampler.rng().random_range(0.5..2.0),
            sampler.rng().random_range(0.0..2.0 * PI),
        );
        let z = u / k;
        match ev().p_pair(k * z) {
            Ok((w, dw)) => {
                let (wk, dwk) = (k * k * w, k * k * k * dw);
                let k6 = k.powi(6);
                let abs = (dwk * dwk - 4.0 * wk.powi(3) + k6).norm();
                r.raw(z, abs, abs / (1.0 + wk.norm().powi(3) + k6.norm()));
            }
            Err(_) => r.fail(z),
        }
    }
    r.samples(pts.len()).finish(tol)
}

pub fn check_rotation(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "rotation").draw(n);
    let mut r = Residuals::new("rotation");
    let w = rho();
    let w2 = w * w;
    for &z in &pts {
        let rz = w * z;
        r.compare_with(z, ev().p(rz).and_then(|a| Ok((a, w2.conj() * ev().p(z)?))));
        r.compare_with(z, ev().p_prime(rz).and_then(|a| Ok((a, -ev().p_prime(z)?))));
        r.compare_with(z, ev().sigma(rz).and_then(|a| Ok((a, w * ev().sigma(z)?))));
        r.compare_with(z, ev().zeta(rz).and_then(|a| Ok((a, w.conj() * ev().zeta(z)?))));
    }
    r.samples(pts.len()).finish(tol)
}

pub fn check_parity(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "parity").draw(n);
    let mut r = Residuals::new("parity");
    for &z in &pts {
        r.compare_with(z, ev().p(-z).and_then(|a| Ok((a, ev().p(z)?))));
        r.compare_with(z, ev().p_prime(-z).and_then(|a| Ok((a, -ev().p_prime(z)?))));
        r.compare_with(z, ev().sigma(-z).and_then(|a| Ok((a, -ev().sigma(z)?))));
        r.compare_with(z, ev().zeta(-z).and_then(|a| Ok((a, -ev().zeta(z)?))));
    }
    r.samples(pts.len()).finish(tol)
}

pub fn check_conjugation(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "conjugation").draw(n);
    let mut r = Residuals::new("conjugation");
    for &z in &pts {
        let zc = z.conj();
        r.compare_with(z, ev().p(zc).and_then(|a| Ok((a, ev().p(z)?.conj()))));
        r.compare_with(z, ev().p_prime(zc).and_then(|a| Ok((a, ev().p_prime(z)?.conj()))));
        r.compare_with(z, ev().sigma(zc).and_then(|a| Ok((a, ev().sigma(z)?.conj()))));
        r.compare_with(z, ev().zeta(zc).and_then(|a| Ok((a, ev().zeta(z)?.conj()))));
    }
    r.samples(pts.len()).finish(tol)
}

pub fn check_periodicity(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "periodicity").draw(n);
    let mut r = Residuals::new("periodicity");
    let c = Constants::get();
    for &z in &pts {
        for period in [re(c.varpi), c.omega2()] {
            r.compare_with(z, ev().p(z + period).and_then(|a| Ok((a, ev().p(z)?))));
            r.compare_with(z, ev().p_prime(z + period).and_then(|a| Ok((a, ev().p_prime(z)?))));
        }
    }
    r.samples(pts.len()).finish(tol)
}

/// ζ(z + ω) - ζ(z) is the constant η₁ (resp. η₂) for the two primitive periods.
pub fn check_zeta_quasiperiodicity(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "zeta_quasiperiodicity").draw(n);
    let mut r = Residuals::new("zeta_quasiperiodicity");
    let c = Constants::get();
    for &z in &pts {
        for (period, eta) in [(re(c.varpi), re(c.eta1)), (c.omega2(), c.eta2)] {
            r.compare_with(z, ev().zeta(z + period).and_then(|a| Ok((a - ev().zeta(z)?, eta))));
        }
    }
    r.samples(pts.len()).finish(tol)
}

/// η₁ = 2ζ(ϖ/2) and η₂ = 2ζ(e^{iπ/3}ϖ/2) from the evaluator, then Legendre's relation.
pub fn check_legendre(tol: f64) -> CheckEntry {
    let c = Constants::get();
    let v = c.varpi;
    let mut r = Residuals::new("legendre");
    let at = re(v / 2.0);
    match (ev().zeta(re(v / 2.0)), ev().zeta(rho() * v / 2.0)) {
        (Ok(z1), Ok(z2)) => {
            let (eta1, eta2) = (2.0 * z1, 2.0 * z2);
            r.compare(at, eta1 * rho() * v - eta2 * v, Complex::new(0.0, 2.0 * PI));
            r.compare(at, eta2 / eta1, rho().conj());
            r.compare(at, eta1 * v, re(2.0 * PI / SQRT3));
            r.compare(at, eta1, re(c.eta1));
            r.compare(at, eta2, c.eta2);
        }
        _ => r.fail(at),
    }
    r.samples(1).finish(tol)
}

/// σ′/σ = ζ, -ζ′ = ℘, d℘/dz = ℘′ and d℘′/dz = 6℘², derivatives taken by
/// Cauchy's integral on a circle of half the distance to the nearest pole.
pub fn check_derivative_chain(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "derivative_chain").draw(n);
    let mut r = Residuals::new("derivative_chain");
    let loose = Evaluator::new(EvalOptions {
        pole_margin: 1e-3 * varpi(),
        ..EvalOptions::default()
    })
    .expect("valid options");
    const NODES: usize = 64;
    for &z in &pts {
        let rad = (0.5 * ev().dist_to_lattice(z)).min(0.25 * varpi());
        let pair = |d: Result<Complex>, f: Result<Complex>| -> Result<(Complex, Complex)> { Ok((d?, f?)) };
        r.compare_with(
            z,
            pair(
                cauchy_derivative(|u| loose.sigma(u), z, rad, NODES),
                ev().sigma(z).and_then(|s| Ok(s * ev().zeta(z)?)),
            ),
        );
        r.compare_with(
            z,
            pair(
                cauchy_derivative(|u| loose.zeta(u).map(|x| -x), z, rad, NODES),
                ev().p(z),
            ),
        );
        r.compare_with(
            z,
            pair(cauchy_derivative(|u| loose.p(u), z, rad, NODES), ev().p_prime(z)),
        );
        r.compare_with(
            z,
            pair(
                cauchy_derivative(|u| loose.p_prime(u), z, rad, NODES),
                ev().p_doubleprime(z),
            ),
        );
    }
    r.samples(pts.len()).finish(tol)
}

/// On (0, ϖ): ℘ convex with minimum e₁ at ϖ/2, ℘′ increasing; ζ decreasing on
/// each sampled interval (nϖ, (n+1)ϖ). The residual counts violations.
pub fn check_real_line_shape(_tol: f64) -> CheckEntry {
    let c = Constants::get();
    let v = c.varpi;
    let mut r = Residuals::new("real_line_shape");
    let xs: Vec<f64> = (1..=200).map(|i| v * i as f64 / 201.0).collect();
    let eval = |f: &dyn Fn(Complex) -> Result<Complex>, shift: f64| -> Vec<(f64, f64)> {
        xs.iter()
            .filter_map(|&x| f(re(x + shift)).ok().map(|w| (x + shift, w.re)))
            .collect()
    };
    let mut violations = 0usize;
    let mut mark = |ok: bool, x: f64, r: &mut Residuals| {
        if !ok {
            violations += 1;
            r.raw(re(x), violations as f64, violations as f64);
        }
    };
    let ps = eval(&|z| ev().p(z), 0.0);
    for w in ps.windows(3) {
        mark(w[0].1 + w[2].1 - 2.0 * w[1].1 > 0.0, w[1].0, &mut r);
    }
    for &(x, y) in &ps {
        mark(y >= c.e1.re - 1e-12, x, &mut r);
    }
    let dps = eval(&|z| ev().p_prime(z), 0.0);
    for w in dps.windows(2) {
        mark(w[1].1 > w[0].1, w[1].0, &mut r);
    }
    let mut samples = ps.len() + dps.len();
    for n in [-2i32, -1, 0, 1, 3] {
        let zs = eval(&|z| ev().zeta(z), n as f64 * v);
        for w in zs.windows(2) {
            mark(w[1].1 < w[0].1, w[1].0, &mut r);
        }
        samples += zs.len();
    }
    mark(
        ev().p(re(v / 2.0)).map(|w| (w - c.e1).norm() <= 1e-12).unwrap_or(false),
        v / 2.0,
        &mut r,
    );
    r.samples(samples).finish_with(|r| r.max_abs == 0.0)
}

// ----- identities -----------------------------------------------------------

pub fn check_sigma_quasiperiodicity(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "sigma_quasiperiodicity").draw(n);
    let mut r = Residuals::new("sigma_quasiperiodicity");
    let c = Constants::get();
    let k = (PI / SQRT3).exp();
    for &z in &pts {
        r.compare_with(
            z,
            ev().sigma(z + c.varpi)
                .and_then(|a| Ok((a, -k * (c.eta1 * z).exp() * ev().sigma(z)?))),
        );
        r.compare_with(
            z,
            ev().sigma(z + c.omega2())
                .and_then(|a| Ok((a, -k * (rho().conj() * c.eta1 * z).exp() * ev().sigma(z)?))),
        );
    }
    r.samples(pts.len()).finish(tol)
}

/// ℘ as a σ-quotient three ways: from its zeros and poles, through σ of the
/// scaled lattice `r𝕋`, and ℘′ = -σ(2z)/σ(z)⁴.
pub fn check_sigma_representations(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "sigma_representations").draw(n);
    let mut r = Residuals::new("sigma_representations");
    let c = Constants::get();
    let rw = c.r * c.varpi;
    let s = |z: Complex| ev().sigma(z);
    for &z in &pts {
        r.compare_with(
            z,
            (|| {
                let q = -s(z - rw)? * s(z + rw)? / (s(rw)?.powi(2) * s(z)?.powi(2));
                Ok((q, ev().p(z)?))
            })(),
        );
        r.compare_with(z, (|| Ok((c.r * s(z / c.r)? / s(z)?.powi(3), ev().p(z)?)))());
        r.compare_with(z, (|| Ok((-s(2.0 * z)? / s(z)?.powi(4), ev().p_prime(z)?)))());
    }
    r.samples(pts.len()).finish(tol)
}

/// Every shifted half-argument value ℘(z/2 + h) appears among the eight
/// sign choices of the half-argument formula.
pub fn check_half_argument(n: usize, seed: u64, tol: f64) -> CheckEntry {
    // z/2 + h stays clear of the pole margin only if z is twice as far from 𝕋
    let pts = Sampler::new(seed, "half_argument")
        .exclude(&[re(0.0)], 2.0 * EvalOptions::default().pole_margin)
        .draw(n);
    let mut r = Residuals::new("half_argument");
    for &z in &pts {
        let cands = match half_argument_candidates(z) {
            Ok(c) => c,
            Err(_) => {
                r.fail(z);
                continue;
            }
        };
        for h in half_period_shifts() {
            match ev().p(0.5 * z + h) {
                Ok(target) => {
                    let best = cands
                        .iter()
                        .copied()
                        .min_by(|a, b| (a - target).norm().total_cmp(&(b - target).norm()))
                        .expect("eight candidates");
                    r.compare(z, best, target);
                }
                Err(_) => r.fail(z),
            }
        }
    }
    r.samples(pts.len()).finish(tol)
}

/// 𝕋 ∪ (𝕋 + rϖ) ∪ (𝕋 - rϖ) = r𝕋, exact integer comparison at several radii.
pub fn check_lattice_union(_tol: f64) -> CheckEntry {
    let mut r = Residuals::new("lattice_union");
    let radii = [0.1, 3.0, 10.0, 25.0];
    for (i, &rad) in radii.iter().enumerate() {
        if !union_translates_equals_scaled(rad) {
            r.raw(re(rad), (i + 1) as f64, 1.0);
        }
    }
    r.samples(radii.len()).finish_with(|r| r.max_abs == 0.0)
}

// ----- zeros ----------------------------------------------------------------

fn newton_check(name: &'static str, target: RootTarget, tol: f64) -> CheckEntry {
    let mut r = Residuals::new(name);
    let mut samples = 0;
    for a in target.closed_forms() {
        for seed in perturbed_seeds(a, SEED_OFFSET * varpi(), 8) {
            samples += 1;
            match newton_refine(target, seed, NEWTON_STEP_TOL, NEWTON_MAX_ITER) {
                Ok(res) if res.converged => r.compare(seed, res.refined, a),
                _ => r.fail(seed),
            }
        }
    }
    r.samples(samples).finish_with(|r| r.max_abs <= tol)
}

pub fn check_zeros_p(tol: f64) -> CheckEntry {
    newton_check("zeros_p", RootTarget::P, tol)
}

pub fn check_zeros_dp_plus(tol: f64) -> CheckEntry {
    newton_check("zeros_dp_plus", RootTarget::DpPlusSqrt3, tol)
}

pub fn check_zeros_dp_minus(tol: f64) -> CheckEntry {
    newton_check("zeros_dp_minus", RootTarget::DpMinusSqrt3, tol)
}

/// The six rotates e^{ℓπi/3}rϖ are zeros of ℘ on the circle |z| = ϖ/√3 at
/// arguments π/6 + ℓπ/3, and the cell zeros sit inside the two triangles.
pub fn check_zero_hexagon(tol: f64) -> CheckEntry {
    let mut r = Residuals::new("zero_hexagon");
    let v = varpi();
    let rw = zeros_of_p()[0];
    for l in 0..6 {
        let expected = Complex::from_polar(v / SQRT3, PI / 6.0 + l as f64 * PI / 3.0);
        let seed = rho().powi(l) * rw + Complex::from_polar(SEED_OFFSET * v, 0.7);
        match newton_refine(RootTarget::P, seed, NEWTON_STEP_TOL, NEWTON_MAX_ITER) {
            Ok(res) => {
                r.compare(expected, res.refined, expected);
                r.raw(expected, (res.refined.norm() - v / SQRT3).abs(), 0.0);
            }
            Err(_) => r.fail(expected),
        }
    }
    let [z1, z2] = zeros_of_p();
    let (o, w1, w2) = (re(0.0), re(v), rho() * v);
    if !strictly_inside_triangle(z1, o, w1, w2) {
        r.fail(z1);
    }
    if !strictly_inside_triangle(z2, w1, w2, w1 + w2) {
        r.fail(z2);
    }
    r.samples(6).finish_with(|r| r.max_abs <= tol)
}

/// Neighbouring zeros x₊ and e^{iπ/3}x₋ of ℘′ ± √3 are ϖ/√3 apart.
pub fn check_zero_spacing(tol: f64) -> CheckEntry {
    let mut r = Residuals::new("zero_spacing");
    let v = varpi();
    for (sign, target) in [(1, RootTarget::DpPlusSqrt3), (-1, RootTarget::DpMinusSqrt3)] {
        let zs = zeros_of_dp_shifted(sign);
        let refine = |a: Complex| {
            newton_refine(
                target,
                a + Complex::from_polar(SEED_OFFSET * v, 1.1),
                NEWTON_STEP_TOL,
                NEWTON_MAX_ITER,
            )
        };
        match (refine(zs[0]), refine(zs[1])) {
            (Ok(a), Ok(b)) => r.compare(zs[0], re((a.refined - b.refined).norm()), re(v / SQRT3)),
            _ => r.fail(zs[0]),
        }
    }
    r.samples(2).finish_with(|r| r.max_abs <= tol)
}

// ----- sums -----------------------------------------------------------------

pub fn check_eisenstein_sum(_tol: f64) -> CheckEntry {
    let mut r = Residuals::new("eisenstein_sum");
    match lattice_sum_bz6(SUM_RADIUS) {
        Ok(s) => {
            r.compare(re(SUM_RADIUS), 4.0 + s.partial_sum, re(2.0 * PI / SQRT3));
            if s.partial_sum.im.abs() > 1e-12 {
                r.fail(re(SUM_RADIUS));
            }
        }
        Err(_) => r.fail(re(SUM_RADIUS)),
    }
    r.samples(1).finish_with(|r| r.max_abs <= SUM_GATE)
}

/// Least-squares slope of log error against log radius; the residual is its
/// distance from the predicted -4.
pub fn check_eisenstein_tail(_tol: f64) -> CheckEntry {
    let mut r = Residuals::new("eisenstein_tail_exponent");
    let errs: Vec<f64> = SUM_FIT_RADII
        .iter()
        .map(|&rad| lattice_sum_bz6(rad).map(|s| s.abs_error).unwrap_or(f64::INFINITY))
        .collect();
    let monotone = errs.windows(2).all(|w| w[1] <= w[0]);
    match tail_exponent(&SUM_FIT_RADII) {
        Ok(slope) => {
            let d = (slope + 4.0).abs();
            r.raw(re(slope), d, d);
            if !(monotone && slope <= SUM_SLOPE_GATE) {
                r.fail(re(slope));
            }
        }
        Err(_) => r.fail(re(0.0)),
    }
    r.samples(SUM_FIT_RADII.len()).finish_with(|_| true)
}

fn quad_tol(tol: f64) -> f64 {
    tol.clamp(1e-12, 1e-6)
}

/// ϖ three ways: Γ(1/3)³/(2π), the Beta-form integral and the improper integral.
pub fn check_period_quadrature(tol: f64) -> CheckEntry {
    let q = quad_tol(tol);
    let mut r = Residuals::new("period_quadrature");
    let g = constants::varpi_from_gamma();
    match (
        constants::varpi_from_quadrature(q),
        constants::varpi_from_improper_integral(q),
    ) {
        (Ok(a), Ok(b)) => {
            r.compare(re(g), re(a.value), re(g));
            r.compare(re(g), re(b.value), re(a.value));
        }
        _ => r.fail(re(g)),
    }
    r.compare(
        re(g),
        re(constants::GAMMA_ONE_THIRD * constants::GAMMA_TWO_THIRDS),
        re(2.0 * PI / SQRT3),
    );
    r.samples(3).finish_with(|r| r.max_abs <= 2.0 * q)
}

pub fn check_c22_integral(tol: f64) -> CheckEntry {
    let q = quad_tol(tol);
    let mut r = Residuals::new("c22_integral");
    let third = varpi() / 3.0;
    match (analysis::integral_c22(q), constants::varpi_from_quadrature(q)) {
        (Ok(a), Ok(b)) => {
            r.compare(re(third), re(a.value), re(third));
            r.compare(re(third), re(a.value), re(b.value / 3.0));
        }
        _ => r.fail(re(third)),
    }
    r.samples(2).finish_with(|r| r.max_abs <= q)
}

/// Fast evaluators against truncated lattice sums at increasing radii.
/// Absolute error for ℘, ℘′, ζ and relative error for σ; the maximum must
/// not grow with the radius and must meet [`ORACLE_GATE`] at the largest.
pub fn check_oracle_agreement(n: usize, seed: u64, _tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "oracle_agreement").draw(n.min(ORACLE_MAX_SAMPLES));
    let mut r = Residuals::new("oracle_agreement");
    let mut per_radius = Vec::new();
    for &rad in &ORACLE_RADII {
        let sums = match LatticeSums::new(rad) {
            Ok(s) => s,
            Err(_) => {
                r.fail(re(rad));
                continue;
            }
        };
        let mut worst = [0.0f64; 4];
        for &z in &pts {
            let errs = (|| -> Result<[f64; 4]> {
                let sf = ev().sigma(z)?;
                let so = sums.sigma(z)?;
                Ok([
                    (ev().p(z)? - sums.p(z)?).norm(),
                    (ev().p_prime(z)? - sums.p_prime(z)?).norm(),
                    (ev().zeta(z)? - sums.zeta(z)?).norm(),
                    (sf - so).norm() / so.norm(),
                ])
            })();
            match errs {
                Ok(e) => {
                    for (w, x) in worst.iter_mut().zip(e) {
                        *w = w.max(x);
                    }
                    if rad == ORACLE_RADII[ORACLE_RADII.len() - 1] {
                        let m = e.iter().cloned().fold(0.0, f64::max);
                        r.raw(z, m, m);
                    }
                }
                Err(_) => r.fail(z),
            }
        }
        per_radius.push(worst);
    }
    let monotone = per_radius.windows(2).all(|w| (0..4).all(|k| w[1][k] <= w[0][k]));
    r.samples(pts.len())
        .finish_with(|r| monotone && r.max_abs <= ORACLE_GATE)
}

// ----- uniformization -------------------------------------------------------

fn curve_check(name: &'static str, pts: &[Complex], tol: f64, f: impl Fn(Complex) -> Result<CurvePoint>) -> CheckEntry {
    let mut r = Residuals::new(name);
    for &z in pts {
        match f(z) {
            Ok(p) => r.compare(z, p.x.powi(3) + p.y.powi(3), re(1.0)),
            Err(_) => r.fail(z),
        }
    }
    r.samples(pts.len()).finish(tol)
}

pub fn check_uniformization(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "uniformization")
        .exclude(&zeros_of_p(), EXCLUSION_MARGIN * varpi())
        .draw(n);
    curve_check("uniformization", &pts, tol, fermat::uniformize)
}

pub fn check_baker_pair(n: usize, seed: u64, tol: f64) -> CheckEntry {
    let pts = Sampler::new(seed, "baker_pair")
        .exclude(&zeros_of_dp_shifted(1), EXCLUSION_MARGIN * varpi())
        .draw(n);
    curve_check("baker_pair", &pts, tol, fermat::baker_pair)
}

/// f takes a cube root of unity with vanishing derivative at -ϖ/3 and its
/// images under rotation by e^{2πi/3}.
pub fn check_triple_zeros(tol: f64) -> CheckEntry {
    let mut r = Residuals::new("triple_zeros");
    let w = Complex::from_polar(1.0, 2.0 * PI / 3.0);
    for k in 0..3 {
        let z = -varpi() / 3.0 * w.powi(k);
        match (fermat::f(z), fermat::f_prime(z)) {
            (Ok(value), Ok(slope)) => {
                let root = (0..3)
                    .map(|j| w.powi(j))
                    .min_by(|a, b| (a - value).norm().total_cmp(&(b - value).norm()))
                    .expect("three roots");
                r.compare(z, value, root);
                r.compare(z, slope, re(0.0));
            }
            _ => r.fail(z),
        }
    }
    r.samples(3).finish_with(|r| r.max_abs <= tol)
}

pub fn check_fermat_special_values(tol: f64) -> CheckEntry {
    let v = varpi();
    let mut r = Residuals::new("fermat_special_values");
    let e1 = Constants::get().e1;
    let cases: Vec<(Complex, Result<Complex>, Complex)> = vec![
        (re(v / 3.0), fermat::f(re(v / 3.0)), re(0.0)),
        (re(-v / 3.0), fermat::f(re(-v / 3.0)), re(1.0)),
        (re(v / 2.0), fermat::f(re(v / 2.0)), re(4f64.cbrt() / 2.0)),
        (re(v / 2.0), fermat::baker_pair(re(v / 2.0)).map(|p| p.x), 2.0 * e1),
        (re(v / 2.0), fermat::baker_pair(re(v / 2.0)).map(|p| p.y), re(-1.0)),
    ];
    for (z, lhs, rhs) in cases {
        r.compare_with(z, lhs.map(|l| (l, rhs)));
    }
    r.samples(5).finish(tol)
}

/// On a grid over the cell, large |f| only occurs next to the lattice corners
/// and the two zeros of ℘, and each of the three sites shows up.
pub fn check_f_pole_sites(_tol: f64) -> CheckEntry {
    let mut r = Residuals::new("f_pole_sites");
    let v = varpi();
    let [z1, z2] = zeros_of_p();
    let sites = [re(0.0), z1, z2];
    let lat = HexLattice::new(v);
    let hits = fermat::large_value_sites(POLE_GRID, POLE_GRID_THRESHOLD);
    let mut seen = [false; 3];
    for &z in &hits {
        match sites.iter().position(|&a| lat.dist_to_lattice(z - a) <= 0.05 * v) {
            Some(k) => seen[k] = true,
            None => r.fail(z),
        }
    }
    for (k, s) in seen.iter().enumerate() {
        if !s {
            r.fail(sites[k]);
        }
    }
    r.samples(POLE_GRID * POLE_GRID).finish_with(|_| true)
}

// ----- suites ---------------------------------------------------------------

type CheckFn = fn(usize, u64, f64) -> CheckEntry;

/// Every check in registry order, with the suite it belongs to.
pub const CHECKS: &[(&str, &str, CheckFn)] = &[
    ("core", "special_values", check_special_values),
    ("core", "ode", check_ode),
    ("core", "scaling", check_scaling),
    ("core", "rotation", check_rotation),
    ("core", "parity", check_parity),
    ("core", "conjugation", check_conjugation),
    ("core", "periodicity", check_periodicity),
    ("core", "zeta_quasiperiodicity", check_zeta_quasiperiodicity),
    ("core", "legendre", |_, _, t| check_legendre(t)),
    ("core", "derivative_chain", check_derivative_chain),
    ("core", "real_line_shape", |_, _, t| check_real_line_shape(t)),
    ("identities", "sigma_quasiperiodicity", check_sigma_quasiperiodicity),
    ("identities", "sigma_representations", check_sigma_representations),
    ("identities", "half_argument", check_half_argument),
    ("identities", "lattice_union", |_, _, t| check_lattice_union(t)),
    ("zeros", "zeros_p", |_, _, t| check_zeros_p(t)),
    ("zeros", "zeros_dp_plus", |_, _, t| check_zeros_dp_plus(t)),
    ("zeros", "zeros_dp_minus", |_, _, t| check_zeros_dp_minus(t)),
    ("zeros", "zero_hexagon", |_, _, t| check_zero_hexagon(t)),
    ("zeros", "zero_spacing", |_, _, t| check_zero_spacing(t)),
    ("sums", "eisenstein_sum", |_, _, t| check_eisenstein_sum(t)),
    ("sums", "eisenstein_tail_exponent", |_, _, t| check_eisenstein_tail(t)),
    ("sums", "period_quadrature", |_, _, t| check_period_quadrature(t)),
    ("sums", "c22_integral", |_, _, t| check_c22_integral(t)),
    ("sums", "oracle_agreement", check_oracle_agreement),
    ("uniformization", "uniformization", check_uniformization),
    ("uniformization", "baker_pair", check_baker_pair),
    ("uniformization", "triple_zeros", |_, _, t| check_triple_zeros(t)),
    ("uniformization", "fermat_special_values", |_, _, t| {
        check_fermat_special_values(t)
    }),
    ("uniformization", "f_pole_sites", |_, _, t| check_f_pole_sites(t)),
];

/// Which check covers each result about the hexagonal-lattice functions.
pub const COVERAGE: &[(&str, &str)] = &[
    ("differential equation wp'^2 = 4 wp^3 - 1 and roots e1, e2, e3", "ode"),
    ("scaling k^2 wp(kz) solves w'^2 = 4w^3 - k^6", "scaling"),
    ("rotation symmetry of wp, wp', sigma, zeta", "rotation"),
    ("parity: wp even; wp', sigma, zeta odd", "parity"),
    (
        "conjugation symmetry of the lattice and of wp, sigma, zeta",
        "conjugation",
    ),
    ("periods varpi and e^{i pi/3} varpi", "periodicity"),
    (
        "period as Gamma(1/3)^3/(2 pi) and as two integrals",
        "period_quadrature",
    ),
    ("half-period values of wp and zeros of wp'", "special_values"),
    ("sigma(0) = 0, sigma'(0) = 1", "special_values"),
    (
        "zeta(x) decreasing on (n varpi, (n+1) varpi); wp convex, wp' increasing",
        "real_line_shape",
    ),
    ("wp = -zeta', zeta = sigma'/sigma, wp'' = 6 wp^2", "derivative_chain"),
    (
        "lattice-sum representations of wp, wp', zeta, sigma",
        "oracle_agreement",
    ),
    (
        "zeta quasi-periods eta1, eta2 independent of z",
        "zeta_quasiperiodicity",
    ),
    (
        "eta1 = 2 zeta(varpi/2), eta2 = e^{-i pi/3} eta1, Legendre relation, eta1 varpi = 2 pi/sqrt3",
        "legendre",
    ),
    (
        "Eisenstein-integer sum 4 + sum 1/((1-2k)k^2) = 2 pi/sqrt3",
        "eisenstein_sum",
    ),
    (
        "complete-shell truncation error decays like R^-4",
        "eisenstein_tail_exponent",
    ),
    (
        "sigma quasi-periodicity along both primitive periods",
        "sigma_quasiperiodicity",
    ),
    ("zeros of wp at +-r varpi + lattice, all simple", "zeros_p"),
    (
        "zeros of wp form hexagons centred on lattice points; one per triangle",
        "zero_hexagon",
    ),
    (
        "lattice union with translates by +-r varpi equals r times the lattice",
        "lattice_union",
    ),
    (
        "wp from sigma via zeros and poles; wp = r sigma(z/r)/sigma(z)^3; wp' = -sigma(2z)/sigma(z)^4",
        "sigma_representations",
    ),
    ("curve X^3 + Y^3 = 1 parametrized by f(z), f(-z)", "uniformization"),
    (
        "second solution 2 sqrt3 wp/(wp'+sqrt3), (wp'-sqrt3)/(wp'+sqrt3)",
        "baker_pair",
    ),
    ("f takes cube roots of unity with triple multiplicity", "triple_zeros"),
    ("f has three simple poles per cell", "f_pole_sites"),
    ("f at one third and half periods", "fermat_special_values"),
    ("zeros of wp' + sqrt3", "zeros_dp_plus"),
    ("zeros of wp' - sqrt3", "zeros_dp_minus"),
    (
        "neighbouring zeros of wp' +- sqrt3 are varpi/sqrt3 apart",
        "zero_spacing",
    ),
    (
        "wp(+-varpi/3) = 1 and the integral from 1 to infinity equals varpi/3",
        "c22_integral",
    ),
    ("half-argument formula for wp(z/2)", "half_argument"),
];

fn members(suite: &str) -> Result<Vec<&'static (&'static str, &'static str, CheckFn)>> {
    if !SUITES.contains(&suite) {
        return Err(Error::UnknownSuite(suite.to_string()));
    }
    Ok(CHECKS.iter().filter(|c| suite == "all" || c.0 == suite).collect())
}

/// Runs every check of `suite`. Checks run in parallel; the report keeps
/// registry order and is identical for identical inputs.
pub fn run_suite(suite: &str, seed: u64, tol: f64, n: usize) -> Result<CheckReport> {
    let checks = members(suite)?;
    if !(tol > 0.0) {
        return Err(Error::InvalidArgument(format!("tolerance {tol} must be positive")));
    }
    if n == 0 {
        return Err(Error::InvalidArgument("sample count must be at least 1".into()));
    }
    let entries: Vec<CheckEntry> = checks.par_iter().map(|(_, _, f)| f(n, seed, tol)).collect();
    let pass = entries.iter().all(|e| e.pass);
    Ok(CheckReport {
        suite: suite.to_string(),
        seed,
        tolerance: tol,
        checks: entries,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    #[test]
    fn number_format() {
        assert_eq!(format_number(0.5), "5.0000000000000000e-1");
        assert_eq!(format_number(-1234.5), "-1.2345000000000000e3");
        assert_eq!(format_number(0.0), "0.0000000000000000e0");
        assert_eq!(
            complex_json(Complex::new(0.25, f64::NAN)),
            r#"{"re":2.5000000000000000e-1,"im":null}"#
        );
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite("bogus", 1, 1e-8, 10), Err(Error::UnknownSuite(_))));
        assert!(run_suite("core", 1, 0.0, 10).is_err());
    }

    #[test]
    fn check_names_unique_and_covered() {
        let names: Vec<_> = CHECKS.iter().map(|c| c.1).collect();
        let set: BTreeSet<_> = names.iter().collect();
        assert_eq!(set.len(), names.len());
        for (what, check) in COVERAGE {
            assert!(names.contains(check), "{what} -> {check}");
        }
        for name in &names {
            assert!(COVERAGE.iter().any(|c| c.1 == *name), "{name} covers nothing");
        }
        for (suite, _, _) in CHECKS {
            assert!(SUITES.contains(suite));
        }
    }

    #[test]
    fn zero_residual_points() {
        let v = varpi();
        let (w, dw) = ev().p_pair(re(v / 2.0)).unwrap();
        assert!((dw * dw - 4.0 * w.powi(3) + 1.0).norm() < 1e-12);
        let (w, dw) = ev().p_pair(re(v / 3.0)).unwrap();
        assert!((dw * dw - 3.0 - 4.0 * (w.powi(3) - 1.0)).norm() < 1e-9);
        // rotation residual at ϖ/2 and σ parity at 0
        let lhs = ev().p(rho() * v / 2.0).unwrap();
        let rhs = (rho() * rho()).conj() * ev().p(re(v / 2.0)).unwrap();
        assert!((lhs - rhs).norm() <= 1e-12);
        assert_eq!(ev().sigma(re(0.0)).unwrap(), -ev().sigma(re(-0.0)).unwrap());
        let z = Complex::new(0.7, 0.2);
        assert!(relative_residual(ev().zeta(z.conj()).unwrap(), ev().zeta(z).unwrap().conj()) <= 1e-10);
    }

    #[test]
    fn sigma_translation_at_minus_half_period() {
        let c = Constants::get();
        let z = re(-c.varpi / 2.0);
        let lhs = ev().sigma(z + c.varpi).unwrap();
        let rhs = -(PI / SQRT3).exp() * (c.eta1 * z).exp() * ev().sigma(z).unwrap();
        assert!((lhs - rhs).norm() <= 1e-12);
        assert!(ev().sigma(c.omega2()).unwrap().norm() <= 1e-12);
    }

    #[test]
    fn c9_at_half_period() {
        let c = Constants::get();
        let z = re(c.varpi / 2.0);
        let q = c.r * ev().sigma(z / c.r).unwrap() / ev().sigma(z).unwrap().powi(3);
        assert!((q - c.e1).norm() <= 1e-8);
        assert!(ev().sigma(2.0 * z).unwrap().norm() <= 1e-12);
    }

    #[test]
    fn sampler_respects_exclusions() {
        let zs = zeros_of_p();
        let pts = Sampler::new(3, "x").exclude(&zs, 0.3).draw(500);
        assert_eq!(pts.len(), 500);
        let lat = HexLattice::new(varpi());
        for z in pts {
            assert!(lat.dist_to_lattice(z) >= 0.05 * varpi());
            assert!(zs.iter().all(|&a| lat.dist_to_lattice(z - a) >= 0.3));
        }
    }

    #[test]
    fn report_pass_is_conjunction() {
        let rep = run_suite("zeros", 5, 1e-9, 10).unwrap();
        assert_eq!(rep.pass, rep.checks.iter().all(|c| c.pass));
        let strict = run_suite("zeros", 5, 1e-300, 10).unwrap();
        assert!(!strict.pass);
        assert_eq!(strict.pass, strict.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn failed_evaluations_fail_the_check() {
        let mut r = Residuals::new("x");
        r.compare_with(re(0.0), Err(Error::InvalidArgument("boom".into())));
        r.compare(re(1.0), re(1.0), re(1.0));
        let e = r.samples(2).finish(1.0);
        assert!(!e.pass);
        assert_eq!(e.worst_point, re(0.0));
        let json = serde_json::to_string(&e).unwrap();
        assert!(json.contains("\"max_rel_residual\":null"));
    }
}
