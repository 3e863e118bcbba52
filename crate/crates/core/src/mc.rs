//! Seeded Monte Carlo sampling of the Gaussian quadrature distributions,
//! an independent check on the internal-energy law `U = T cosh(2r)` and,
//! by composition over the four cycle states, on the per-cycle work.
//!
//! Determinism contract:
//!
//! - every estimate is a pure function of its inputs and seed;
//! - samples are generated in fixed-size shards, shard `k` drawing from
//!   ChaCha stream `k` of the seeded cipher, so the result is independent
//!   of how many worker threads evaluate the shards;
//! - Gaussian deviates come from a Box-Muller transform consuming exactly
//!   two 64-bit draws per phase-space pair — no rejection loops, so the
//!   draw schedule is platform-independent;
//! - the four cycle states of a work estimate use sub-seeds
//!   `seed ^ STATE_SALTS[state]`.
//!
//! The reported standard error always comes from the sample variance, not
//! the analytic variance, so the estimate stays honest if the sampler is
//! wrong.

use crate::cycle::CycleConfig;
use crate::error::{Error, Result};
use crate::reservoir::SqueezedReservoir;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use rayon::prelude::*;

/// Below this sample count the normal approximation behind the 4-sigma
/// acceptance band is unreliable.
pub const MIN_SAMPLES: u64 = 1000;

/// Samples per shard; fixes the shard schedule for a given `n`.
const SHARD_SIZE: u64 = 1 << 16;

/// Per-state XOR salts deriving the four sub-seeds of a cycle-work run.
const STATE_SALTS: [u64; 4] = [
    0x9e37_79b9_7f4a_7c15,
    0xbf58_476d_1ce4_e5b9,
    0x94d0_49bb_1331_11eb,
    0xd6e8_feb8_6659_fd93,
];

/// One draw from the phase-space distribution of an oscillator coupled to
/// a squeezed reservoir.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSamplePair {
    /// Position quadrature (anti-squeezed, the hotter one).
    pub x0: f64,
    /// Momentum quadrature (squeezed).
    pub p0: f64,
}

/// A Monte Carlo estimate with its standard error of the mean.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct McEstimate {
    pub mean: f64,
    /// `sample_std / sqrt(n)`.
    pub std_error: f64,
    pub n: u64,
    pub seed: u64,
}

/// The four states visited by the cycle, in cycle order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    /// Cold-equilibrated at `omega_c`.
    A,
    /// Isentropically compressed to `omega_h`.
    B,
    /// Hot-equilibrated at `omega_h`.
    C,
    /// Isentropically expanded to `omega_c`.
    D,
}

impl Corner {
    pub const ALL: [Corner; 4] = [Corner::A, Corner::B, Corner::C, Corner::D];
}

/// Sub-seed of one cycle state: `seed ^ STATE_SALTS[corner]`.
pub fn corner_sub_seed(seed: u64, corner: Corner) -> u64 {
    seed ^ STATE_SALTS[corner as usize]
}

/// The squeezed thermal state and frequency of one cycle corner. The
/// isentropes scale temperature with frequency at constant `T/omega`, so
/// `B = (T_c omega_h/omega_c, r_c)` at `omega_h` and
/// `D = (T_h omega_c/omega_h, r_h)` at `omega_c`.
pub fn corner_state(cfg: &CycleConfig, corner: Corner) -> (SqueezedReservoir, f64) {
    let (omega_c, omega_h) = (cfg.omega_c(), cfg.omega_h());
    let (temperature, squeeze, omega) = match corner {
        Corner::A => (cfg.cold().temperature(), cfg.cold().squeeze(), omega_c),
        Corner::B => (
            cfg.cold().temperature() * omega_h / omega_c,
            cfg.cold().squeeze(),
            omega_h,
        ),
        Corner::C => (cfg.hot().temperature(), cfg.hot().squeeze(), omega_h),
        Corner::D => (
            cfg.hot().temperature() * omega_c / omega_h,
            cfg.hot().squeeze(),
            omega_c,
        ),
    };
    let res = SqueezedReservoir::new(temperature, squeeze)
        .expect("scaled corner temperature stays positive");
    (res, omega)
}

/// `[0, 1)` from the top 53 bits of one `u64` draw.
fn unit_uniform(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// One standard-normal pair by Box-Muller; consumes exactly two draws.
fn standard_normal_pair(rng: &mut impl RngCore) -> (f64, f64) {
    let u1 = 1.0 - unit_uniform(rng); // (0, 1]: keeps the log finite
    let u2 = unit_uniform(rng);
    let radius = (-2.0 * u1.ln()).sqrt();
    let (sin, cos) = (std::f64::consts::TAU * u2).sin_cos();
    (radius * cos, radius * sin)
}

/// Draw one phase-space pair: `x0 ~ N(0, T e^{2r}/omega)`,
/// `p0 ~ N(0, T e^{-2r}/omega)`.
pub fn sample_pair(res: &SqueezedReservoir, omega: f64, rng: &mut impl RngCore) -> PhaseSamplePair {
    debug_assert!(omega > 0.0);
    let q = res.quadratures();
    let (z_x, z_p) = standard_normal_pair(rng);
    PhaseSamplePair {
        x0: z_x * (q.t1() / omega).sqrt(),
        p0: z_p * (q.t2() / omega).sqrt(),
    }
}

/// Running mean and second central moment (Welford), mergeable across
/// shards (Chan). Merging is done in fixed shard order.
#[derive(Debug, Clone, Copy)]
struct Moments {
    n: u64,
    mean: f64,
    m2: f64,
}

impl Moments {
    fn empty() -> Self {
        Self {
            n: 0,
            mean: 0.0,
            m2: 0.0,
        }
    }

    fn push(&mut self, x: f64) {
        self.n += 1;
        let delta = x - self.mean;
        self.mean += delta / self.n as f64;
        self.m2 += delta * (x - self.mean);
    }

    fn merge(self, other: Moments) -> Moments {
        if self.n == 0 {
            return other;
        }
        if other.n == 0 {
            return self;
        }
        let n = self.n + other.n;
        let delta = other.mean - self.mean;
        let weight = other.n as f64 / n as f64;
        Moments {
            n,
            mean: self.mean + delta * weight,
            m2: self.m2 + other.m2 + delta * delta * (self.n as f64 * weight),
        }
    }

    fn sample_variance(&self) -> f64 {
        self.m2 / (self.n - 1) as f64
    }
}

fn shard_rng(seed: u64, shard: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    rng
}

/// Fixed shard plan for `n` samples: `(shard index, samples in shard)`.
fn shard_plan(n: u64) -> Vec<(u64, u64)> {
    let full = n / SHARD_SIZE;
    let rest = n % SHARD_SIZE;
    let mut plan: Vec<(u64, u64)> = (0..full).map(|k| (k, SHARD_SIZE)).collect();
    if rest > 0 {
        plan.push((full, rest));
    }
    plan
}

/// Estimate the internal energy `(omega/2) E[x0^2 + p0^2]` of an
/// oscillator equilibrated with `res`; the analytic target is
/// `T cosh(2r)` independent of `omega`.
pub fn mc_internal_energy(
    res: &SqueezedReservoir,
    omega: f64,
    n: u64,
    seed: u64,
) -> Result<McEstimate> {
    if n < MIN_SAMPLES {
        return Err(Error::SampleCountTooSmall {
            n,
            floor: MIN_SAMPLES,
        });
    }
    if !omega.is_finite() || omega <= 0.0 {
        return Err(Error::InvalidOmega(omega));
    }

    let summaries: Vec<Moments> = shard_plan(n)
        .into_par_iter()
        .map(|(shard, count)| {
            let mut rng = shard_rng(seed, shard);
            let mut m = Moments::empty();
            for _ in 0..count {
                let s = sample_pair(res, omega, &mut rng);
                m.push(0.5 * omega * (s.x0 * s.x0 + s.p0 * s.p0));
            }
            m
        })
        .collect();

    let total = summaries.into_iter().fold(Moments::empty(), Moments::merge);
    Ok(McEstimate {
        mean: total.mean,
        std_error: (total.sample_variance() / total.n as f64).sqrt(),
        n,
        seed,
    })
}

/// Estimate the per-cycle work `U_C - U_D - U_B + U_A` by estimating each
/// state energy with `n` samples under its own sub-seed; errors combine
/// in quadrature.
pub fn mc_cycle_work(cfg: &CycleConfig, n: u64, seed: u64) -> Result<McEstimate> {
    let mut means = [0.0f64; 4];
    let mut variances = [0.0f64; 4];
    for corner in Corner::ALL {
        let (res, omega) = corner_state(cfg, corner);
        let est = mc_internal_energy(&res, omega, n, corner_sub_seed(seed, corner))?;
        means[corner as usize] = est.mean;
        variances[corner as usize] = est.std_error * est.std_error;
    }
    let [a, b, c, d] = means;
    Ok(McEstimate {
        mean: c - d - b + a,
        std_error: variances.iter().sum::<f64>().sqrt(),
        n,
        seed,
    })
}
