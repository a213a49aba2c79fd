use thiserror::Error;

use crate::Complex;

/// Errors raised by evaluators and numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {z} lies within {margin:e} of a lattice pole (distance {distance:e})")]
    PoleProximity { z: Complex, distance: f64, margin: f64 },
    #[error("sigma({z}) overflows f64 (log-magnitude {log_magnitude:.3})")]
    Overflow { z: Complex, log_magnitude: f64 },
    #[error("|wp(z)| = {value:e} at {z}: too close to a pole of f")]
    NearPoleOfF { z: Complex, value: f64 },
    #[error("|wp'(z) + sqrt(3)| = {value:e} at {z}: denominator too close to zero")]
    NearZeroDenominator { z: Complex, value: f64 },
    #[error("quadrature did not converge: error estimate {estimate:e} exceeds tolerance {tol:e}")]
    NonConvergence { estimate: f64, tol: f64 },
    #[error("Newton iteration did not converge after {iterations} steps (last iterate {last})")]
    NoConvergence { last: Complex, iterations: usize },
    #[error("derivative vanishes at Newton iterate {at}")]
    DerivativeVanishes { at: Complex },
    #[error("unknown suite `{0}` (expected one of all, core, identities, zeros, sums, uniformization)")]
    UnknownSuite(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
