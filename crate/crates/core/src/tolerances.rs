//! Named tolerance constants used by the library and its test suites.

/// First-law residual `|w - (q_h - q_c)|` as a fraction of
/// `max(|q_h|, |q_c|, 1)`. The identity is a single subtraction, so this
/// is essentially machine precision.
pub const FIRST_LAW_REL: f64 = 1e-14;

/// Absolute band for the engine efficiency identity
/// `eta = 1 - omega_c/omega_h` (temperature- and squeeze-independent).
pub const ETA_IDENTITY_ABS: f64 = 1e-15;

/// Relative band for the fridge COP identity
/// `eps = omega_c/(omega_h - omega_c)`.
pub const COP_IDENTITY_REL: f64 = 1e-12;

/// Half-width of the ratio band excluded around window edges in the
/// sign-scan tests; inside the band rounding may flip the sign of a
/// quantity that is exactly zero on the edge.
pub const WINDOW_BOUNDARY_BAND: f64 = 1e-9;

/// Reservoir <-> quadrature round trip, relative, per field.
pub const ROUND_TRIP_REL: f64 = 1e-12;

/// State-energy ratio identity `u_b/u_a = u_c/u_d = omega_h/omega_c`,
/// relative.
pub const STATE_RATIO_REL: f64 = 1e-12;

/// Closed-form vs numeric optimizer: `ratio_star` agreement, absolute.
pub const OPTIMUM_RATIO_AGREEMENT: f64 = 1e-8;

/// Closed-form vs numeric optimizer: merit agreement, absolute.
pub const OPTIMUM_MERIT_AGREEMENT: f64 = 1e-7;

/// Symmetric-squeeze (`r_c = r_h`) recovery of the Curzon-Ahlborn
/// reference values, absolute. The cosh factors cancel exactly, so only
/// rounding in sqrt and division remains.
pub const SYMMETRIC_CA_ABS: f64 = 1e-12;

/// Equality band used by enhancement classification; symmetric inputs
/// must classify as CA-equal despite rounding.
pub const CA_EQUAL_BAND: f64 = 1e-12;

/// |z|-score at which a Monte Carlo estimate fails verification.
pub const MC_Z_PASS: f64 = 4.0;

/// Maximum admissible pairwise Pearson correlation between the sample
/// streams of the four cycle states (expected magnitude `1/sqrt(n)`).
pub const SUBSEED_CORRELATION_MAX: f64 = 0.01;
