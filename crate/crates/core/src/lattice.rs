//! The hexagonal lattice spanned by `1` and `e^{iπ/3}` (scaled), its
//! Eisenstein-integer coordinates, cell reduction and shell enumeration.

use std::collections::BTreeSet;

use crate::Complex;

const HALF_SQRT3: f64 = 0.866_025_403_784_438_6;

/// Cell coordinates within one unit of 1.0 are wrapped to 0.
const WRAP_EPS: f64 = 1e-14;

/// Integer coordinates `(m, n)` of the lattice point `m + n·e^{iπ/3}` (times the lattice scale).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EisensteinPair {
    pub m: i64,
    pub n: i64,
}

impl EisensteinPair {
    pub const ORIGIN: Self = Self { m: 0, n: 0 };

    pub const fn new(m: i64, n: i64) -> Self {
        Self { m, n }
    }

    /// Squared modulus on the unit lattice, `m² + mn + n²`. Exact.
    pub fn norm(self) -> i64 {
        self.m * self.m + self.m * self.n + self.n * self.n
    }

    /// Multiplication by `e^{iπ/3}`.
    pub fn rotate60(self) -> Self {
        Self::new(-self.n, self.m + self.n)
    }

    /// Complex conjugate, using `conj(e^{iπ/3}) = 1 - e^{iπ/3}`.
    pub fn conj(self) -> Self {
        Self::new(self.m + self.n, -self.n)
    }

    pub fn to_complex(self, scale: f64) -> Complex {
        to_complex(self, scale)
    }
}

pub fn to_complex(p: EisensteinPair, scale: f64) -> Complex {
    let (m, n) = (p.m as f64, p.n as f64);
    Complex::new(scale * (m + 0.5 * n), scale * n * HALF_SQRT3)
}

/// Position inside the fundamental cell, `s, t ∈ [0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CellCoords {
    pub s: f64,
    pub t: f64,
}

impl CellCoords {
    pub fn to_complex(self, scale: f64) -> Complex {
        Complex::new(scale * (self.s + 0.5 * self.t), scale * self.t * HALF_SQRT3)
    }
}

/// One group of lattice points sharing the same modulus.
#[derive(Debug, Clone, PartialEq)]
pub struct Shell {
    /// `m² + mn + n²` for every member.
    pub norm: i64,
    pub points: Vec<EisensteinPair>,
}

/// A hexagonal lattice `scale · ℤ[e^{iπ/3}]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HexLattice {
    pub scale: f64,
}

impl HexLattice {
    pub fn new(scale: f64) -> Self {
        assert!(scale > 0.0, "lattice scale must be positive");
        Self { scale }
    }

    /// The Eisenstein integers themselves.
    pub fn unit() -> Self {
        Self { scale: 1.0 }
    }

    /// Skew coordinates `(s, t)` with `z = scale·(s + t·e^{iπ/3})`, unreduced.
    fn skew(&self, z: Complex) -> (f64, f64) {
        let t = z.im / (self.scale * HALF_SQRT3);
        let s = z.re / self.scale - 0.5 * t;
        (s, t)
    }

    /// Splits `z` into a cell position and the lattice translation that carries it there.
    pub fn reduce_to_cell(&self, z: Complex) -> (CellCoords, EisensteinPair) {
        let (s, t) = self.skew(z);
        let (s, m) = wrap_unit(s);
        let (t, n) = wrap_unit(t);
        (CellCoords { s, t }, EisensteinPair::new(m, n))
    }

    /// Closest lattice point to `z` and the offset `z - ω`.
    pub fn nearest(&self, z: Complex) -> (EisensteinPair, Complex) {
        let (cell, base) = self.reduce_to_cell(z);
        let local = cell.to_complex(self.scale);
        let mut best = (EisensteinPair::ORIGIN, local);
        for (dm, dn) in [(1, 0), (0, 1), (1, 1)] {
            let corner = EisensteinPair::new(dm, dn);
            let offset = local - corner.to_complex(self.scale);
            if offset.norm() < best.1.norm() {
                best = (corner, offset);
            }
        }
        let p = EisensteinPair::new(base.m + best.0.m, base.n + best.0.n);
        let offset = z - p.to_complex(self.scale);
        (p, offset)
    }

    /// Distance from `z` to the closest lattice point.
    ///
    /// The cell splits into two equilateral triangles whose vertices are
    /// the four corners, and the nearest lattice point of any point in a
    /// triangle is one of its vertices.
    pub fn dist_to_lattice(&self, z: Complex) -> f64 {
        let (cell, _) = self.reduce_to_cell(z);
        let local = cell.to_complex(self.scale);
        [(0, 0), (1, 0), (0, 1), (1, 1)]
            .into_iter()
            .map(|(m, n)| (local - EisensteinPair::new(m, n).to_complex(self.scale)).norm())
            .fold(f64::INFINITY, f64::min)
    }

    /// All nonzero points with `|ω| ≤ radius·scale`, grouped into complete
    /// shells of equal modulus in increasing order.
    pub fn shells(&self, radius: f64) -> Vec<Shell> {
        shells(radius)
    }

    /// Flattened [`HexLattice::shells`].
    pub fn shell_points(&self, radius: f64) -> Vec<EisensteinPair> {
        shells(radius).into_iter().flat_map(|s| s.points).collect()
    }
}

fn wrap_unit(x: f64) -> (f64, i64) {
    let k = x.floor();
    let mut frac = x - k;
    let mut k = k as i64;
    if frac >= 1.0 - WRAP_EPS {
        frac = 0.0;
        k += 1;
    }
    if frac < 0.0 {
        frac = 0.0;
    }
    (frac, k)
}

/// Shell enumeration on the unit lattice; shells depend only on `m² + mn + n²`,
/// so membership is decided in exact integer arithmetic.
pub fn shells(radius: f64) -> Vec<Shell> {
    if !(radius > 0.0) {
        return Vec::new();
    }
    // Tiny relative slack so radii that hit a shell exactly (1, √3, 2, ...) include it.
    let max_norm = (radius * radius * (1.0 + 1e-12)).floor() as i64;
    if max_norm < 1 {
        return Vec::new();
    }
    // m² + mn + n² ≥ ¾·max(m², n²)
    let bound = ((4.0 * max_norm as f64 / 3.0).sqrt().ceil() as i64) + 1;
    let mut pts: Vec<EisensteinPair> = Vec::new();
    for m in -bound..=bound {
        for n in -bound..=bound {
            let p = EisensteinPair::new(m, n);
            let nm = p.norm();
            if nm >= 1 && nm <= max_norm {
                pts.push(p);
            }
        }
    }
    pts.sort_by_key(|p| (p.norm(), p.m, p.n));
    let mut out: Vec<Shell> = Vec::new();
    for p in pts {
        match out.last_mut() {
            Some(shell) if shell.norm == p.norm() => shell.points.push(p),
            _ => out.push(Shell {
                norm: p.norm(),
                points: vec![p],
            }),
        }
    }
    out
}

/// Checks, within modulus `radius` (lattice units), that the lattice together
/// with its two translates by `±r` equals the lattice scaled by
/// `r = (1 + e^{iπ/3})/3`.
///
/// Points are compared in the basis `{1, e^{iπ/3}}` with coordinates
/// multiplied by 3, so all memberships are integer tests. In those
/// coordinates `r ↦ (1, 1)` and `r·(m + n·e^{iπ/3}) ↦ (m - n, m + 2n)`.
pub fn union_translates_equals_scaled(radius: f64) -> bool {
    let limit = 9.0 * radius * radius;
    let inside = |x: i64, y: i64| ((x * x + x * y + y * y) as f64) <= limit;
    // |x|, |y| ≤ 2·(3R)/√3 for any point inside the disk.
    let bound = (2.0 * 3.0 * radius / 3f64.sqrt()).ceil() as i64 + 3;

    let mut union = BTreeSet::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for shift in [-1, 0, 1] {
                let (x, y) = (3 * a + shift, 3 * b + shift);
                if inside(x, y) {
                    union.insert((x, y));
                }
            }
        }
    }
    let mut scaled = BTreeSet::new();
    for m in -3 * bound..=3 * bound {
        for n in -3 * bound..=3 * bound {
            let (x, y) = (m - n, m + 2 * n);
            if inside(x, y) {
                scaled.insert((x, y));
            }
        }
    }
    union == scaled
}
