//! Quantum Otto cycle operating between two squeezed thermal reservoirs.
//!
//! A harmonic oscillator is alternately coupled to a cold reservoir
//! `(T_c, r_c)` and a hot reservoir `(T_h, r_h)` while its frequency is
//! modulated between `omega_c` and `omega_h`. Every per-cycle quantity is
//! closed-form in the effective thermal weights `T cosh(2r)`, which makes
//! the compression ratio `x = omega_c/omega_h` the single control variable.
//!
//! The crate provides:
//!
//! - [`reservoir`]: squeezed reservoirs and their quadrature temperatures;
//! - [`cycle`]: state energies, heats, work, efficiency, COP, chi, and the
//!   operating windows of the engine and refrigerator modes;
//! - [`optimum`]: maximum-work and maximum-chi operating points, both in
//!   closed form and by golden-section search, plus Curzon-Ahlborn
//!   reference values and enhancement classification;
//! - [`mc`]: a seeded Monte Carlo sampler of the Gaussian phase-space
//!   distributions that independently verifies the internal-energy law.
//!
//! Units are natural throughout: `k_B = hbar = 1`, so temperatures are
//! energies and frequencies are inverse times.

pub mod cycle;
pub mod error;
pub mod mc;
pub mod optimum;
pub mod reservoir;
pub mod tolerances;

pub use cycle::{
    CycleConfig, CycleStates, EngineMetrics, FridgeMetrics, HeatConvention, Mode, OperatingWindow,
};
pub use error::{Error, Result};
pub use mc::{McEstimate, PhaseSamplePair};
pub use optimum::{Enhancement, MaximizerSettings, OptimumResult, SolveMethod};
pub use reservoir::{QuadratureTemps, SqueezedReservoir};
