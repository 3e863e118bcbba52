//! The four-stroke cycle: state energies, per-cycle heats, work,
//! efficiency, COP, chi, and the operating windows of both modes.
//!
//! The cycle visits four states. With `a = T_h cosh(2r_h)`,
//! `b = T_c cosh(2r_c)` and `x = omega_c/omega_h`:
//!
//! - `A`: cold-equilibrated at `omega_c`, energy `b`;
//! - `B`: after isentropic compression to `omega_h`, energy `b/x`;
//! - `C`: hot-equilibrated at `omega_h`, energy `a`;
//! - `D`: after isentropic expansion to `omega_c`, energy `a x`.
//!
//! All per-cycle quantities are algebraic in `(a, b, x)`; both operating
//! windows live in ratio space and are governed solely by `b/a`.

use crate::error::{Error, Result};
use crate::reservoir::SqueezedReservoir;

/// Operating mode of the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Engine,
    Fridge,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Mode::Engine => f.write_str("engine"),
            Mode::Fridge => f.write_str("fridge"),
        }
    }
}

/// Sign convention for the refrigeration heats.
///
/// `PositiveCooling` takes the cooling heat as `q_c = U_A - U_D`, which is
/// positive exactly on the refrigeration window `x < b/a`. `EngineSigned`
/// keeps the heats with their engine-cycle signs, `q_c = U_D - U_A` and
/// `q_h = U_C - U_B`. The COP is identical under both conventions — the
/// shared factor `(b/x - a)` cancels — while the heats, the input work,
/// and chi flip sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HeatConvention {
    PositiveCooling,
    EngineSigned,
}

/// Full cycle specification: two reservoirs and the frequency pair.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleConfig {
    cold: SqueezedReservoir,
    hot: SqueezedReservoir,
    omega_c: f64,
    omega_h: f64,
}

/// Internal energies of the four cycle states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CycleStates {
    pub u_a: f64,
    pub u_b: f64,
    pub u_c: f64,
    pub u_d: f64,
}

/// Per-cycle energetics in engine convention: `q_h` absorbed from the hot
/// bath, `q_c` released to the cold bath, `w_total = q_h - q_c` delivered.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EngineMetrics {
    pub w_total: f64,
    pub q_h: f64,
    pub q_c: f64,
    /// Otto efficiency `1 - omega_c/omega_h`, reported regardless of the
    /// sign of `q_h`.
    pub eta: f64,
}

/// Per-cycle energetics of the reversed (refrigeration) cycle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FridgeMetrics {
    /// Heat absorbed from the cold bath (sign per `convention`).
    pub q_c: f64,
    /// Heat rejected to the hot bath (sign per `convention`).
    pub q_h: f64,
    pub w_in: f64,
    /// COP `omega_c/(omega_h - omega_c)`; convention-independent.
    pub eps: f64,
    /// Figure of merit `eps * q_c`.
    pub chi: f64,
    pub convention: HeatConvention,
}

/// Compression-ratio interval on which a mode delivers its intended
/// effect (positive work, or positive cooling heat).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatingWindow {
    pub mode: Mode,
    pub lo: f64,
    pub hi: f64,
    pub feasible: bool,
}

impl OperatingWindow {
    /// Whether `x` lies strictly inside the open interval `(lo, hi)`.
    pub fn contains(&self, x: f64) -> bool {
        self.feasible && self.lo < x && x < self.hi
    }
}

impl CycleConfig {
    pub fn new(
        cold: SqueezedReservoir,
        hot: SqueezedReservoir,
        omega_c: f64,
        omega_h: f64,
    ) -> Result<Self> {
        if !omega_c.is_finite() || !omega_h.is_finite() || omega_c <= 0.0 || omega_c >= omega_h {
            return Err(Error::InvalidFrequencies { omega_c, omega_h });
        }
        Ok(Self {
            cold,
            hot,
            omega_c,
            omega_h,
        })
    }

    pub fn cold(&self) -> &SqueezedReservoir {
        &self.cold
    }

    pub fn hot(&self) -> &SqueezedReservoir {
        &self.hot
    }

    pub fn omega_c(&self) -> f64 {
        self.omega_c
    }

    pub fn omega_h(&self) -> f64 {
        self.omega_h
    }

    /// Compression ratio `x = omega_c/omega_h` in (0, 1).
    pub fn ratio(&self) -> f64 {
        self.omega_c / self.omega_h
    }

    /// Feasibility ratio `b/a = T_c cosh(2r_c) / (T_h cosh(2r_h))`; both
    /// modes require `b/a < 1`, and it is the sole parameter of both
    /// optimum formulas.
    pub fn feasibility_ratio(&self) -> f64 {
        self.cold.effective_weight() / self.hot.effective_weight()
    }

    /// Same reservoirs, frequency pair rescaled so that
    /// `omega_c/omega_h = x`. Requires `x` in (0, 1).
    pub fn with_ratio(&self, x: f64) -> Result<Self> {
        Self::new(self.cold, self.hot, x * self.omega_h, self.omega_h)
    }

    /// Internal energies of the four cycle states.
    pub fn state_energies(&self) -> CycleStates {
        let b = self.cold.effective_weight();
        let a = self.hot.effective_weight();
        CycleStates {
            u_a: b,
            u_b: b * (self.omega_h / self.omega_c),
            u_c: a,
            u_d: a * (self.omega_c / self.omega_h),
        }
    }

    /// Engine energetics. No feasibility requirement: negative `w_total`
    /// is a legal diagnostic output.
    pub fn engine_metrics(&self) -> EngineMetrics {
        let s = self.state_energies();
        let q_h = s.u_c - s.u_b;
        let q_c = s.u_d - s.u_a;
        EngineMetrics {
            w_total: q_h - q_c,
            q_h,
            q_c,
            eta: 1.0 - self.ratio(),
        }
    }

    /// Refrigerator energetics under the positive-cooling convention.
    /// Negative `q_c` is a legal diagnostic output outside the window.
    pub fn fridge_metrics(&self) -> FridgeMetrics {
        self.fridge_metrics_with(HeatConvention::PositiveCooling)
    }

    /// Refrigerator energetics under an explicit sign convention.
    pub fn fridge_metrics_with(&self, convention: HeatConvention) -> FridgeMetrics {
        let s = self.state_energies();
        let (q_c, q_h) = match convention {
            HeatConvention::PositiveCooling => (s.u_a - s.u_d, s.u_b - s.u_c),
            HeatConvention::EngineSigned => (s.u_d - s.u_a, s.u_c - s.u_b),
        };
        let eps = self.omega_c / (self.omega_h - self.omega_c);
        FridgeMetrics {
            q_c,
            q_h,
            w_in: q_h - q_c,
            eps,
            chi: eps * q_c,
            convention,
        }
    }

    /// Operating window of the given mode in ratio space. The frequency
    /// fields play no role here; infeasibility is encoded in the result,
    /// never an error.
    pub fn operating_window(&self, mode: Mode) -> OperatingWindow {
        let boa = self.feasibility_ratio();
        match mode {
            Mode::Engine => OperatingWindow {
                mode,
                lo: boa.min(1.0),
                hi: 1.0,
                feasible: boa < 1.0,
            },
            Mode::Fridge => OperatingWindow {
                mode,
                lo: 0.0,
                hi: boa.min(1.0),
                feasible: boa > 0.0 && boa < 1.0,
            },
        }
    }
}
