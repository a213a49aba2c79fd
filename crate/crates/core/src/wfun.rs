//! Evaluators for ℘, ℘′, ℘″, σ and ζ of the hexagonal lattice.
//!
//! The fast path reduces the argument to the lattice point nearest to it,
//! evaluates the Laurent expansion at the origin (for ℘ after halving the
//! argument until it is small) and undoes the halving with the duplication
//! map `w ↦ w(w³+2)/(4w³-1)`. σ and ζ use their exact translation laws.
//! [`LatticeSums`] provides slow, independent truncated-lattice-sum versions
//! of every function.

use std::sync::OnceLock;

use crate::constants::{rho, Constants};
use crate::error::{Error, Result};
use crate::lattice::{shells, EisensteinPair, HexLattice};
use crate::Complex;

/// `ln(f64::MAX)`.
const LOG_MAX: f64 = 709.78;

/// Laurent coefficients of ℘ at the origin: `℘(z) = 1/z² + Σ_{k≥2} c_k z^{2k-2}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentTable {
    order: usize,
    /// `c[k]` for `k = 0..=order`; entries 0 and 1 are unused zeros.
    c: Vec<f64>,
}

impl LaurentTable {
    /// Builds `c_2..c_order` from `c_2 = g₂/20`, `c_3 = g₃/28` and
    /// `c_k = 3/((2k+1)(k-3)) Σ_{m=2}^{k-2} c_m c_{k-m}`.
    pub fn new(order: usize, g2: f64, g3: f64) -> Self {
        assert!(order >= 3, "Laurent order must be at least 3");
        let mut c = vec![0.0; order + 1];
        c[2] = g2 / 20.0;
        c[3] = g3 / 28.0;
        for k in 4..=order {
            let s: f64 = (2..=k - 2).map(|m| c[m] * c[k - m]).sum();
            c[k] = 3.0 / (((2 * k + 1) * (k - 3)) as f64) * s;
        }
        Self { order, c }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `c_k`, zero for `k < 2` or beyond the table.
    pub fn coefficient(&self, k: usize) -> f64 {
        self.c.get(k).copied().unwrap_or(0.0)
    }

    /// `(℘(u), ℘′(u))` from the truncated series.
    pub fn p_pair(&self, u: Complex) -> (Complex, Complex) {
        let u2 = u * u;
        // Σ c_k u^{2k-4} and Σ (2k-2) c_k u^{2k-4}, Horner in u².
        let mut a = Complex::new(0.0, 0.0);
        let mut b = Complex::new(0.0, 0.0);
        for k in (2..=self.order).rev() {
            a = a * u2 + self.c[k];
            b = b * u2 + (2 * k - 2) as f64 * self.c[k];
        }
        let inv2 = u2.inv();
        (inv2 + a * u2, -2.0 * inv2 / u + b * u2 / u)
    }

    /// `ζ(u) = 1/u - Σ c_k u^{2k-1}/(2k-1)`.
    pub fn zeta(&self, u: Complex) -> Complex {
        let u2 = u * u;
        let mut a = Complex::new(0.0, 0.0);
        for k in (2..=self.order).rev() {
            a = a * u2 + self.c[k] / (2 * k - 1) as f64;
        }
        u.inv() - a * u2 * u
    }

    /// `ln(σ(u)/u) = -Σ c_k u^{2k}/((2k)(2k-1))`.
    pub fn log_sigma_ratio(&self, u: Complex) -> Complex {
        let u2 = u * u;
        let mut a = Complex::new(0.0, 0.0);
        for k in (2..=self.order).rev() {
            a = a * u2 + self.c[k] / ((2 * k) * (2 * k - 1)) as f64;
        }
        -a * u2 * u2
    }
}

/// Tunables for the fast evaluators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions {
    pub series_order: usize,
    /// Arguments are halved until their modulus is at most this.
    pub halving_threshold: f64,
    /// Minimum distance to the lattice for functions with poles there.
    pub pole_margin: f64,
    /// Shell radius of the lattice-sum oracles, in units of ϖ.
    pub oracle_radius: f64,
}

impl Default for EvalOptions {
    fn default() -> Self {
        Self {
            series_order: 40,
            halving_threshold: 0.45,
            pole_margin: 0.05 * Constants::get().varpi,
            oracle_radius: 100.0,
        }
    }
}

impl EvalOptions {
    pub fn validate(&self) -> Result<()> {
        if self.series_order < 12 {
            return Err(Error::InvalidArgument(format!(
                "series_order {} < 12",
                self.series_order
            )));
        }
        if !(self.halving_threshold > 0.0 && self.halving_threshold < 1.0) {
            return Err(Error::InvalidArgument(format!(
                "halving_threshold {} not in (0, 1)",
                self.halving_threshold
            )));
        }
        if !(self.pole_margin > 0.0) {
            return Err(Error::InvalidArgument("pole_margin must be positive".into()));
        }
        Ok(())
    }
}

/// `g(w) = w(w³+2)/(4w³-1)`, the value of ℘(2u) in terms of w = ℘(u).
pub fn duplication(w: Complex) -> Complex {
    let w3 = w * w * w;
    w * (w3 + 2.0) / (4.0 * w3 - 1.0)
}

/// `g′(w) = 2(2w⁶ - 10w³ - 1)/(4w³-1)²`.
pub fn duplication_derivative(w: Complex) -> Complex {
    let w3 = w * w * w;
    let d = 4.0 * w3 - 1.0;
    2.0 * (2.0 * w3 * w3 - 10.0 * w3 - 1.0) / (d * d)
}

/// Sign in `σ(z+ω) = ε·exp(η_ω(z + ω/2))·σ(z)` for `ω = mϖ + n e^{iπ/3}ϖ`:
/// `-1` unless `ω/2` is itself a period.
pub fn sigma_translation_sign(p: EisensteinPair) -> f64 {
    if (p.m + p.n + p.m * p.n).rem_euclid(2) == 0 {
        1.0
    } else {
        -1.0
    }
}

/// `η_ω = m·η₁ + n·η₂`.
pub fn quasi_period(p: EisensteinPair) -> Complex {
    let c = Constants::get();
    p.m as f64 * c.eta1 + p.n as f64 * c.eta2
}

/// Fast evaluator for the hexagonal-lattice Weierstrass functions.
#[derive(Debug, Clone)]
pub struct Evaluator {
    opts: EvalOptions,
    table: LaurentTable,
    lattice: HexLattice,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new(EvalOptions::default()).expect("default options are valid")
    }
}

impl Evaluator {
    pub fn new(opts: EvalOptions) -> Result<Self> {
        opts.validate()?;
        let c = Constants::get();
        Ok(Self {
            opts,
            table: LaurentTable::new(opts.series_order, c.g2, c.g3),
            lattice: HexLattice::new(c.varpi),
        })
    }

    /// Shared instance with default options.
    pub fn global() -> &'static Evaluator {
        static EVAL: OnceLock<Evaluator> = OnceLock::new();
        EVAL.get_or_init(Evaluator::default)
    }

    pub fn options(&self) -> &EvalOptions {
        &self.opts
    }

    pub fn table(&self) -> &LaurentTable {
        &self.table
    }

    pub fn lattice(&self) -> &HexLattice {
        &self.lattice
    }

    pub fn dist_to_lattice(&self, z: Complex) -> f64 {
        self.lattice.dist_to_lattice(z)
    }

    fn guard(&self, z: Complex) -> Result<()> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidArgument(format!("non-finite argument {z}")));
        }
        let distance = self.lattice.dist_to_lattice(z);
        if distance < self.opts.pole_margin {
            return Err(Error::PoleProximity {
                z,
                distance,
                margin: self.opts.pole_margin,
            });
        }
        Ok(())
    }

    /// `(℘(z), ℘′(z))`, propagated together through the doubling steps.
    pub fn p_pair(&self, z: Complex) -> Result<(Complex, Complex)> {
        self.guard(z)?;
        let (_, mut u) = self.lattice.nearest(z);
        let mut halvings = 0;
        while u.norm() > self.opts.halving_threshold {
            u *= 0.5;
            halvings += 1;
        }
        let (mut w, mut dw) = self.table.p_pair(u);
        for _ in 0..halvings {
            let next = duplication(w);
            dw = duplication_derivative(w) * dw * 0.5;
            w = next;
        }
        Ok((w, dw))
    }

    pub fn p(&self, z: Complex) -> Result<Complex> {
        self.p_pair(z).map(|(w, _)| w)
    }

    pub fn p_prime(&self, z: Complex) -> Result<Complex> {
        self.p_pair(z).map(|(_, dw)| dw)
    }

    /// `℘″ = 6℘²`.
    pub fn p_doubleprime(&self, z: Complex) -> Result<Complex> {
        self.p(z).map(|w| 6.0 * w * w)
    }

    /// ln σ(z) up to a multiple of 2πi, with the reduced point and the translation.
    fn log_sigma(&self, z: Complex) -> Option<Complex> {
        let (p, u) = self.lattice.nearest(z);
        if u == Complex::new(0.0, 0.0) {
            return None;
        }
        let omega = p.to_complex(self.lattice.scale);
        let mut log = quasi_period(p) * (u + 0.5 * omega) + u.ln() + self.table.log_sigma_ratio(u);
        if sigma_translation_sign(p) < 0.0 {
            log += Complex::new(0.0, std::f64::consts::PI);
        }
        Some(log)
    }

    /// Weierstrass σ. Fails with [`Error::Overflow`] when |σ(z)| exceeds the f64 range.
    pub fn sigma(&self, z: Complex) -> Result<Complex> {
        if !(z.re.is_finite() && z.im.is_finite()) {
            return Err(Error::InvalidArgument(format!("non-finite argument {z}")));
        }
        let Some(log) = self.log_sigma(z) else {
            return Ok(Complex::new(0.0, 0.0));
        };
        if log.re > LOG_MAX {
            return Err(Error::Overflow {
                z,
                log_magnitude: log.re,
            });
        }
        Ok(log.exp())
    }

    /// Weierstrass ζ: `ζ(u) + η_ω` for `z = u + ω`.
    pub fn zeta(&self, z: Complex) -> Result<Complex> {
        self.guard(z)?;
        let (p, u) = self.lattice.nearest(z);
        Ok(self.table.zeta(u) + quasi_period(p))
    }
}

pub fn p(z: Complex) -> Result<Complex> {
    Evaluator::global().p(z)
}

pub fn p_prime(z: Complex) -> Result<Complex> {
    Evaluator::global().p_prime(z)
}

pub fn p_doubleprime(z: Complex) -> Result<Complex> {
    Evaluator::global().p_doubleprime(z)
}

pub fn sigma(z: Complex) -> Result<Complex> {
    Evaluator::global().sigma(z)
}

pub fn zeta(z: Complex) -> Result<Complex> {
    Evaluator::global().zeta(z)
}

/// Direct truncated sums and products over complete shells `|ω| ≤ radius·ϖ`.
#[derive(Debug, Clone)]
pub struct LatticeSums {
    radius: f64,
    points: Vec<Complex>,
    lattice: HexLattice,
    pole_margin: f64,
}

impl LatticeSums {
    pub fn new(radius: f64) -> Result<Self> {
        if !(radius >= 5.0) {
            return Err(Error::InvalidArgument(format!("oracle radius {radius} < 5")));
        }
        let c = Constants::get();
        let points = shells(radius)
            .into_iter()
            .flat_map(|s| s.points)
            .map(|p| p.to_complex(c.varpi))
            .collect();
        Ok(Self {
            radius,
            points,
            lattice: HexLattice::new(c.varpi),
            pole_margin: EvalOptions::default().pole_margin,
        })
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    /// Number of nonzero lattice points summed over.
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    fn guard(&self, z: Complex) -> Result<()> {
        let distance = self.lattice.dist_to_lattice(z);
        if distance < self.pole_margin {
            return Err(Error::PoleProximity {
                z,
                distance,
                margin: self.pole_margin,
            });
        }
        Ok(())
    }

    /// `1/z² + Σ [1/(z-ω)² - 1/ω²]`.
    pub fn p(&self, z: Complex) -> Result<Complex> {
        self.guard(z)?;
        let tail: Complex = self
            .points
            .iter()
            .map(|&w| ((z - w) * (z - w)).inv() - (w * w).inv())
            .sum();
        Ok((z * z).inv() + tail)
    }

    /// `-Σ 2/(z-ω)³` including ω = 0.
    pub fn p_prime(&self, z: Complex) -> Result<Complex> {
        self.guard(z)?;
        let sum: Complex = self.points.iter().map(|&w| ((z - w).powi(3)).inv()).sum();
        Ok(-2.0 * ((z.powi(3)).inv() + sum))
    }

    /// `1/z + Σ [1/(z-ω) + 1/ω + z/ω²]`.
    pub fn zeta(&self, z: Complex) -> Result<Complex> {
        self.guard(z)?;
        let tail: Complex = self.points.iter().map(|&w| (z - w).inv() + w.inv() + z / (w * w)).sum();
        Ok(z.inv() + tail)
    }

    /// `z Π (1 - z/ω) exp(z/ω + (z/ω)²/2)`, accumulated in log space.
    pub fn sigma(&self, z: Complex) -> Result<Complex> {
        if z == Complex::new(0.0, 0.0) {
            return Ok(z);
        }
        let log: Complex = self.points.iter().map(|&w| weierstrass_factor_log(z / w)).sum();
        Ok(z * log.exp())
    }
}

/// `ln(1-x) + x + x²/2`, by its series `-Σ_{j≥3} x^j/j` when `x` is small.
fn weierstrass_factor_log(x: Complex) -> Complex {
    if x.norm() < 0.1 {
        let mut term = x * x * x;
        let mut acc = Complex::new(0.0, 0.0);
        let mut j = 3.0;
        while term.norm() > 1e-18 * (1.0 + acc.norm()) {
            acc -= term / j;
            term *= x;
            j += 1.0;
        }
        acc
    } else {
        (1.0 - x).ln() + x + 0.5 * x * x
    }
}

/// Point `e^{iπ/3}·z`.
pub fn rotate60(z: Complex) -> Complex {
    rho() * z
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn c() -> &'static Constants {
        Constants::get()
    }

    fn re(x: f64) -> Complex {
        Complex::new(x, 0.0)
    }

    fn rel(a: Complex, b: Complex) -> f64 {
        (a - b).norm() / (1.0 + a.norm() + b.norm())
    }

    fn cell_samples(n: usize, seed: u64) -> Vec<Complex> {
        let ev = Evaluator::global();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        while out.len() < n {
            let z = (rng.random::<f64>() + rng.random::<f64>() * rho()) * c().varpi;
            if ev.dist_to_lattice(z) >= ev.options().pole_margin {
                out.push(z);
            }
        }
        out
    }

    /// Independent oracle: c_k from the Eisenstein series of the lattice,
    /// c_k = (2k-1) G_{2k}, G_{2k} = Σ ω^{-2k}. Only checked for c_3 because
    /// the higher sums converge too fast to be interesting.
    #[test]
    fn laurent_coefficients() {
        let t = LaurentTable::new(40, 0.0, 1.0);
        assert_eq!(t.coefficient(2), 0.0);
        assert_eq!(t.coefficient(3), 1.0 / 28.0);
        for k in 4..=40 {
            if k % 3 != 0 {
                assert_eq!(t.coefficient(k), 0.0, "c_{k}");
            } else {
                assert!(t.coefficient(k) != 0.0);
            }
        }
        // c_6 = 3/(13·3)·c_3² by hand
        assert_abs_diff_eq!(t.coefficient(6), 1.0 / (13.0 * 784.0), epsilon = 1e-18);

        let sums = LatticeSums::new(60.0).unwrap();
        let g6: Complex = sums.points.iter().map(|w| w.powi(-6)).sum();
        assert_abs_diff_eq!((5.0 * g6).re, 1.0 / 28.0, epsilon = 1e-10);
        let g12: Complex = sums.points.iter().map(|w| w.powi(-12)).sum();
        assert_abs_diff_eq!((11.0 * g12).re, t.coefficient(6), epsilon = 1e-14);
    }

    #[test]
    fn series_order_converged() {
        let a = LaurentTable::new(40, 0.0, 1.0);
        let b = LaurentTable::new(60, 0.0, 1.0);
        let u = Complex::from_polar(0.45, 0.3);
        let (pa, da) = a.p_pair(u);
        let (pb, db) = b.p_pair(u);
        assert!((pa - pb).norm() <= 1e-15 * pa.norm());
        assert!((da - db).norm() <= 1e-15 * da.norm());
    }

    /// Duplication map checked against the lattice-sum oracle before trusting it.
    #[test]
    fn duplication_against_oracle() {
        let sums = LatticeSums::new(40.0).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let u = Complex::new(rng.random_range(0.2..1.3), rng.random_range(0.1..1.2));
            let w = sums.p(u).unwrap();
            let dw = sums.p_prime(u).unwrap();
            let lhs = sums.p(2.0 * u).unwrap();
            let dlhs = sums.p_prime(2.0 * u).unwrap();
            assert!(rel(duplication(w), lhs) < 1e-8, "{u}");
            assert!(rel(duplication_derivative(w) * dw * 0.5, dlhs) < 1e-8, "{u}");
        }
    }

    #[test]
    fn duplication_on_fast_path() {
        for z in cell_samples(200, 11) {
            let u = z * 0.5;
            if let (Ok(w2), Ok(w)) = (p(2.0 * u), p(u)) {
                assert!(rel(w2, duplication(w)) < 1e-9);
            }
        }
    }

    #[test]
    fn p_special_values() {
        let v = c().varpi;
        assert_abs_diff_eq!(p(re(v / 2.0)).unwrap().re, 0.25f64.cbrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(p(re(v / 2.0)).unwrap().im, 0.0, epsilon = 1e-12);
        assert!((p(re(v / 3.0)).unwrap() - 1.0).norm() <= 1e-10);
        assert!(p(c().r * v).unwrap().norm() <= 1e-10);
        let e2 = Complex::from_polar(0.25f64.cbrt(), -2.0 * PI / 3.0);
        assert!((p(rho() * v / 2.0).unwrap() - e2).norm() <= 1e-12);
    }

    #[test]
    fn p_prime_special_values() {
        let v = c().varpi;
        let s3 = 3f64.sqrt();
        assert!(p_prime(re(v / 2.0)).unwrap().norm() <= 1e-10);
        assert!((p_prime(re(v / 3.0)).unwrap() + s3).norm() <= 1e-10);
        assert!((p_prime(re(2.0 * v / 3.0)).unwrap() - s3).norm() <= 1e-10);
    }

    #[test]
    fn p_doubleprime_values() {
        let v = c().varpi;
        assert!((p_doubleprime(re(v / 2.0)).unwrap() - 6.0 * 4f64.powf(-2.0 / 3.0)).norm() <= 1e-10);
        assert!((p_doubleprime(re(v / 3.0)).unwrap() - 6.0).norm() <= 1e-9);
        assert!(p_doubleprime(c().r * v).unwrap().norm() <= 1e-9);
    }

    #[test]
    fn pole_proximity() {
        let v = c().varpi;
        assert!(matches!(p(re(0.01)), Err(Error::PoleProximity { .. })));
        assert!(matches!(p_prime(re(v + 0.01)), Err(Error::PoleProximity { .. })));
        assert!(matches!(zeta(rho() * v), Err(Error::PoleProximity { .. })));
        assert!(p(re(0.2)).is_ok());
    }

    #[test]
    fn ode_residual() {
        for z in cell_samples(1000, 5) {
            let (w, dw) = Evaluator::global().p_pair(z).unwrap();
            let res = (dw * dw - 4.0 * w * w * w + 1.0).norm() / (1.0 + w.norm().powi(3));
            assert!(res <= 1e-9, "{z}: {res}");
        }
    }

    #[test]
    fn halving_threshold_consistency() {
        let coarse = Evaluator::new(EvalOptions {
            halving_threshold: 0.30,
            ..EvalOptions::default()
        })
        .unwrap();
        for z in cell_samples(300, 9) {
            let a = Evaluator::global().p(z).unwrap();
            let b = coarse.p(z).unwrap();
            assert!((a - b).norm() <= 1e-11 * (1.0 + a.norm()), "{z}");
        }
    }

    #[test]
    fn sigma_basics() {
        assert_eq!(sigma(re(0.0)).unwrap(), re(0.0));
        let h = 1e-6;
        let d = (sigma(re(h)).unwrap() - sigma(re(-h)).unwrap()) / (2.0 * h);
        assert!((d - 1.0).norm() < 1e-10);
        let s = sigma(re(0.7)).unwrap();
        assert!(s.im.abs() <= 1e-15 * s.re.abs());
        for z in cell_samples(100, 21) {
            let lhs = sigma(z + c().varpi).unwrap();
            let rhs = -(PI / 3f64.sqrt()).exp() * (c().eta1 * z).exp() * sigma(z).unwrap();
            assert!(rel(lhs, rhs) <= 1e-9);
            assert!(rel(sigma(rho() * z).unwrap(), rho() * sigma(z).unwrap()) <= 1e-10);
        }
    }

    /// Literal m- and n-fold application of the two one-step translation laws.
    fn sigma_by_steps(z: Complex, m: i64, n: i64) -> Complex {
        let v = c().varpi;
        let w2 = c().omega2();
        let k = (PI / 3f64.sqrt()).exp();
        let mut x = z;
        let mut s = sigma(z).unwrap();
        for _ in 0..m.abs() {
            if m > 0 {
                s = -k * (c().eta1 * x).exp() * s;
                x += v;
            } else {
                x -= v;
                s /= -k * (c().eta1 * x).exp();
            }
        }
        for _ in 0..n.abs() {
            if n > 0 {
                s = -k * (c().eta2 * x).exp() * s;
                x += w2;
            } else {
                x -= w2;
                s /= -k * (c().eta2 * x).exp();
            }
        }
        s
    }

    #[test]
    fn sigma_translation_rule_matches_iteration() {
        let zs = cell_samples(5, 31);
        for m in -3..=3 {
            for n in -3..=3 {
                for &z0 in &zs {
                    let z = z0 * 0.3;
                    let p = EisensteinPair::new(m, n);
                    let omega = p.to_complex(c().varpi);
                    let rule =
                        sigma_translation_sign(p) * (quasi_period(p) * (z + 0.5 * omega)).exp() * sigma(z).unwrap();
                    let steps = sigma_by_steps(z, m, n);
                    assert!((rule - steps).norm() <= 1e-9 * rule.norm(), "m={m} n={n}");
                    assert!(
                        (sigma(z + omega).unwrap() - steps).norm() <= 1e-9 * rule.norm(),
                        "m={m} n={n}"
                    );
                }
            }
        }
    }

    #[test]
    fn sigma_overflow_is_an_error() {
        assert!(matches!(sigma(re(1e4)), Err(Error::Overflow { .. })));
    }

    #[test]
    fn zeta_values() {
        let v = c().varpi;
        assert_abs_diff_eq!(zeta(re(v / 2.0)).unwrap().re, c().eta1 / 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(zeta(re(v / 2.0)).unwrap().re, 0.5927627, epsilon = 1e-7);
        assert_abs_diff_eq!(zeta(re(-v / 2.0)).unwrap().re, -c().eta1 / 2.0, epsilon = 1e-12);
        for z in cell_samples(100, 41) {
            let lhs = zeta(rho() * z).unwrap();
            let rhs = rho().conj() * zeta(z).unwrap();
            assert!(rel(lhs, rhs) <= 1e-10);
            assert!(rel(zeta(z + v).unwrap() - zeta(z).unwrap(), re(c().eta1)) <= 1e-10);
        }
    }

    #[test]
    fn oracle_examples() {
        let v = c().varpi;
        let s50 = LatticeSums::new(50.0).unwrap();
        assert_abs_diff_eq!(s50.p(re(v / 2.0)).unwrap().re, 0.6300, epsilon = 1e-2);
        let s100 = LatticeSums::new(100.0).unwrap();
        assert_abs_diff_eq!(s100.zeta(re(v / 2.0)).unwrap().re, 0.593, epsilon = 5e-3);
        assert!(LatticeSums::new(4.0).is_err());
        assert!(matches!(s50.p(re(0.0)), Err(Error::PoleProximity { .. })));
    }

    #[test]
    fn real_line_shape() {
        let v = c().varpi;
        let xs: Vec<f64> = (1..=200).map(|i| v * i as f64 / 201.0).collect();
        let ps: Vec<f64> = xs.iter().filter_map(|&x| p(re(x)).ok()).map(|w| w.re).collect();
        let dps: Vec<f64> = xs.iter().filter_map(|&x| p_prime(re(x)).ok()).map(|w| w.re).collect();
        assert!(ps.len() > 150);
        for w in ps.windows(3) {
            assert!(w[0] + w[2] - 2.0 * w[1] > 0.0);
        }
        assert!(dps.windows(2).all(|w| w[1] > w[0]));
        let min = ps.iter().cloned().fold(f64::INFINITY, f64::min);
        assert!(min >= 0.25f64.cbrt() - 1e-12);
        for n in [-2i32, 0, 3] {
            let zs: Vec<f64> = xs
                .iter()
                .filter_map(|&x| zeta(re(x + n as f64 * v)).ok())
                .map(|w| w.re)
                .collect();
            assert!(zs.windows(2).all(|w| w[1] < w[0]), "interval {n}");
        }
    }
}
