//! Heat-trace asymptotics and spectral invariants of closed 2-orbifolds.
//!
//! The crate covers the full path from a Conway-style orbifold symbol to the
//! small-time expansion of its Laplace heat trace:
//!
//! * [`signature`] holds the topological data (handles, crosscaps, cone
//!   points, mirror boundaries with corner reflectors) and the exact orbifold
//!   Euler characteristic.
//! * [`notation`] parses and renders the comma-separated orbifold notation,
//!   e.g. `"2,3,5"`, `"*2,3,6"`, `"2,2×"`.
//! * [`trig`] has the closed forms of the finite cosecant power sums.
//! * [`heat`] assembles the coefficients of `t^-1, t^-1/2, t^0, t^1/2, t^1`.
//! * [`flat`] computes exact heat traces of five flat quotients of the unit
//!   square torus and fits their asymptotics numerically.
//! * [`classify`] runs the distinguishability procedures built on the
//!   invariant `c = 12 · (degree-zero coefficient)`.
//! * [`tables`] holds reference values for the χ ≥ 0 expansions and the
//!   triangular pillows, and recomputes them.

pub mod classify;
pub mod flat;
pub mod heat;
pub mod notation;
pub mod rational;
pub mod signature;
pub mod tables;
pub mod trig;

pub use heat::{HeatExpansion, MetricData};
pub use notation::{parse, render};
pub use rational::Rational;
pub use signature::{GeometryType, OrbifoldSignature};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("invalid signature: {0}")]
    InvalidSignature(String),
    #[error(transparent)]
    Parse(#[from] notation::ParseError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("invalid metric: {0}")]
    InvalidMetric(String),
    #[error("Gauss-Bonnet violation: area {area} but 2πχ/K = {expected}")]
    GaussBonnetViolation { area: f64, expected: f64 },
    #[error("least-squares basis is ill-conditioned (condition number {0:e})")]
    IllConditioned(f64),
    #[error("need at least {needed} samples, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("invalid samples: {0}")]
    InvalidSamples(String),
    #[error("curvature sign is ambiguous: both the degree-1 remainder and χ vanish")]
    AmbiguousZero,
    #[error("no built-in mirror-length data for {0}")]
    UnsupportedFamily(String),
}

pub type Result<T> = std::result::Result<T, Error>;
