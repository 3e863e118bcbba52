//! Error type shared by all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("temperature must be positive and finite, got {0}")]
    InvalidTemperature(f64),

    #[error("squeezing parameter must be nonnegative and finite, got {0}")]
    InvalidSqueeze(f64),

    #[error("quadrature temperatures must satisfy t1 >= t2 > 0, got t1 = {t1}, t2 = {t2}")]
    InvalidQuadratures { t1: f64, t2: f64 },

    #[error(
        "omega_c must be < omega_h and both positive, got omega_c = {omega_c}, omega_h = {omega_h}"
    )]
    InvalidFrequencies { omega_c: f64, omega_h: f64 },

    #[error("omega must be positive and finite, got {0}")]
    InvalidOmega(f64),

    #[error("temperature ratio {tau} outside the domain {domain}")]
    TauOutOfDomain { tau: f64, domain: &'static str },

    /// Neither mode has an operating window: the cold effective weight
    /// `b = T_c cosh(2r_c)` is not below the hot one `a = T_h cosh(2r_h)`.
    #[error("no operating window: T_c cosh(2r_c) >= T_h cosh(2r_h) (b/a = {b_over_a})")]
    NoOperatingWindow { b_over_a: f64 },

    #[error("invalid bracket: lo = {lo} must be finite and < hi = {hi}")]
    InvalidBracket { lo: f64, hi: f64 },

    #[error("objective returned a non-finite value at x = {x}")]
    NonFiniteObjective { x: f64 },

    #[error("bracket width {width} above tolerance {tol} after {iterations} iterations")]
    NoConvergence {
        width: f64,
        tol: f64,
        iterations: u32,
    },

    #[error("invalid maximizer settings: {reason}")]
    InvalidSettings { reason: &'static str },

    /// Below this floor the standard-error estimate is unreliable.
    #[error("sample count {n} below the floor of {floor}")]
    SampleCountTooSmall { n: u64, floor: u64 },
}
