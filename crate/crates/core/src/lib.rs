//! Weierstrass ℘, ℘′, σ and ζ of the hexagonal lattice (`g₂ = 0`, `g₃ = 1`),
//! with lattice-sum oracles and verification suites for their identities.

pub mod analysis;
pub mod constants;
pub mod error;
pub mod fermat;
pub mod identities;
pub mod lattice;
pub mod quad;
pub mod wfun;

pub use num_complex::Complex64 as Complex;

pub use constants::Constants;
pub use error::{Error, Result};
pub use lattice::{EisensteinPair, HexLattice};
pub use wfun::{EvalOptions, Evaluator, LatticeSums};
