//! Optimal compression ratios: maximum work for the engine, maximum chi
//! for the refrigerator.
//!
//! Both optima are closed-form in the feasibility ratio `b/a`:
//! the work-optimal ratio is `sqrt(b/a)` and the chi-optimal ratio is
//! `1 - sqrt(1 - b/a)`. A golden-section maximizer provides an
//! implementation-independent numeric cross-check of both. With equal
//! squeezes the optima reduce to the Curzon-Ahlborn values in the bare
//! temperature ratio.

use crate::cycle::{CycleConfig, Mode};
use crate::error::{Error, Result};
use crate::tolerances::CA_EQUAL_BAND;

/// How an optimum was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SolveMethod {
    ClosedForm,
    Numeric,
}

/// An optimal operating point of one mode.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OptimumResult {
    /// Optimal compression ratio `omega_c/omega_h`, strictly inside the
    /// mode's operating window.
    pub ratio_star: f64,
    /// Objective at the optimum: `W_total` for the engine, chi for the
    /// fridge (positive-cooling convention).
    pub objective: f64,
    /// Figure of merit at the optimum: efficiency at maximum power for
    /// the engine, COP at maximum chi for the fridge.
    pub merit: f64,
    pub method: SolveMethod,
    /// Golden-section iterations; 0 for closed form.
    pub iterations: u32,
}

/// Settings for the bracketed scalar maximizer.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MaximizerSettings {
    /// Absolute tolerance on the location of the maximum.
    pub tol: f64,
    pub max_iters: u32,
    /// Offset from the bracket endpoints, keeping evaluations strictly
    /// inside (0, 1) where the ratio-space objectives are defined.
    pub bracket_margin: f64,
}

impl Default for MaximizerSettings {
    fn default() -> Self {
        Self {
            tol: 1e-10,
            max_iters: 200,
            bracket_margin: 1e-9,
        }
    }
}

impl MaximizerSettings {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidSettings {
                reason: "tol must be positive",
            });
        }
        if self.max_iters == 0 {
            return Err(Error::InvalidSettings {
                reason: "max_iters must be positive",
            });
        }
        if !(self.bracket_margin > 0.0 && self.bracket_margin < 0.5) {
            return Err(Error::InvalidSettings {
                reason: "bracket_margin must lie in (0, 0.5)",
            });
        }
        Ok(())
    }
}

/// Outcome of a golden-section maximization.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GoldenSection {
    pub x_star: f64,
    pub f_star: f64,
    pub iterations: u32,
}

/// Relative quality classification of an optimum against its
/// Curzon-Ahlborn reference at the same temperature ratio.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Enhancement {
    Enhanced,
    CAEqual,
    Suppressed,
    Infeasible,
}

impl std::fmt::Display for Enhancement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Enhancement::Enhanced => "Enhanced",
            Enhancement::CAEqual => "CAEqual",
            Enhancement::Suppressed => "Suppressed",
            Enhancement::Infeasible => "Infeasible",
        };
        f.write_str(s)
    }
}

/// Curzon-Ahlborn efficiency `1 - sqrt(tau)` for `tau = T_c/T_h` in (0, 1].
pub fn ca_efficiency(tau: f64) -> Result<f64> {
    if !(tau.is_finite() && tau > 0.0 && tau <= 1.0) {
        return Err(Error::TauOutOfDomain {
            tau,
            domain: "(0, 1]",
        });
    }
    Ok(1.0 - tau.sqrt())
}

/// Curzon-Ahlborn COP `1/sqrt(1 - tau) - 1` for `tau = T_c/T_h` in (0, 1).
pub fn ca_cop(tau: f64) -> Result<f64> {
    if !(tau.is_finite() && tau > 0.0 && tau < 1.0) {
        return Err(Error::TauOutOfDomain {
            tau,
            domain: "(0, 1)",
        });
    }
    Ok(1.0 / (1.0 - tau).sqrt() - 1.0)
}

/// Feasibility gate shared by both modes: strict `b/a < 1`. At `b = a`
/// the engine optimum degenerates to zero work and the fridge optimum to
/// a COP pole, so equality is rejected as well.
fn feasible_ratio(cfg: &CycleConfig) -> Result<f64> {
    let boa = cfg.feasibility_ratio();
    if boa >= 1.0 {
        return Err(Error::NoOperatingWindow { b_over_a: boa });
    }
    Ok(boa)
}

/// Work-optimal ratio `sqrt(b/a)` and efficiency at maximum power
/// `1 - sqrt(b/a)`; the per-cycle work at the optimum is evaluated
/// through the cycle energetics.
pub fn engine_optimum_closed(cfg: &CycleConfig) -> Result<OptimumResult> {
    let boa = feasible_ratio(cfg)?;
    let ratio_star = boa.sqrt();
    let objective = cfg.with_ratio(ratio_star)?.engine_metrics().w_total;
    Ok(OptimumResult {
        ratio_star,
        objective,
        merit: 1.0 - ratio_star,
        method: SolveMethod::ClosedForm,
        iterations: 0,
    })
}

/// Chi-optimal ratio `1 - sqrt(1 - b/a)` and COP at maximum chi
/// `1/sqrt(1 - b/a) - 1`; chi at the optimum is evaluated through the
/// cycle energetics (positive-cooling convention).
pub fn fridge_optimum_closed(cfg: &CycleConfig) -> Result<OptimumResult> {
    let boa = feasible_ratio(cfg)?;
    let root = (1.0 - boa).sqrt();
    let ratio_star = 1.0 - root;
    let objective = cfg.with_ratio(ratio_star)?.fridge_metrics().chi;
    Ok(OptimumResult {
        ratio_star,
        objective,
        merit: 1.0 / root - 1.0,
        method: SolveMethod::ClosedForm,
        iterations: 0,
    })
}

/// Golden-section search for the maximum of a unimodal `f` on `[lo, hi]`,
/// finished by a Richardson-extrapolated parabolic-vertex refinement.
///
/// Comparison-driven contraction stalls once the function differences at
/// the probe points fall below rounding (about `sqrt(eps)` in `x`); the
/// vertex fit through well-separated points recovers the remaining
/// digits, so `|x_star - argmax f| <= tol` holds down to the objective's
/// rounding floor. Errors if the iteration budget is exhausted before the
/// bracket reaches `tol`, or if `f` returns a non-finite value.
pub fn golden_section_maximize<F>(
    f: F,
    lo: f64,
    hi: f64,
    settings: &MaximizerSettings,
) -> Result<GoldenSection>
where
    F: Fn(f64) -> f64,
{
    settings.validate()?;
    if !(lo.is_finite() && hi.is_finite() && lo < hi) {
        return Err(Error::InvalidBracket { lo, hi });
    }

    // (sqrt(5) - 1) / 2; each iteration contracts the bracket by this factor
    const INV_PHI: f64 = 0.618_033_988_749_894_9;

    let eval = |x: f64| -> Result<f64> {
        let y = f(x);
        if y.is_finite() {
            Ok(y)
        } else {
            Err(Error::NonFiniteObjective { x })
        }
    };

    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = eval(x1)?;
    let mut f2 = eval(x2)?;
    let mut converged = None;

    for iter in 1..=settings.max_iters {
        if f1 > f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = eval(x1)?;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = eval(x2)?;
        }
        if b - a <= settings.tol {
            converged = Some(iter);
            break;
        }
    }

    let Some(iterations) = converged else {
        return Err(Error::NoConvergence {
            width: b - a,
            tol: settings.tol,
            iterations: settings.max_iters,
        });
    };

    let mut x_star = if f1 > f2 { x1 } else { x2 };
    if let Some(v) = refined_vertex(&eval, x_star, 1e-5 * (hi - lo), lo, hi)? {
        x_star = v;
    }
    Ok(GoldenSection {
        x_star,
        f_star: eval(x_star)?,
        iterations,
    })
}

/// Parabolic vertices fitted at spacings `h` and `2h`, combined by
/// Richardson extrapolation `(4 v_h - v_2h)/3` to cancel the O(h^2) fit
/// bias. Returns `None` when the probes would leave the bracket, a fit
/// shows no concavity, or a vertex falls outside its probed interval.
fn refined_vertex<E>(eval: &E, x: f64, h: f64, lo: f64, hi: f64) -> Result<Option<f64>>
where
    E: Fn(f64) -> Result<f64>,
{
    if x - 2.0 * h < lo || x + 2.0 * h > hi {
        return Ok(None);
    }
    let f_center = eval(x)?;
    let vertex_at = |spacing: f64| -> Result<Option<f64>> {
        let f_minus = eval(x - spacing)?;
        let f_plus = eval(x + spacing)?;
        let curvature = f_plus - 2.0 * f_center + f_minus;
        if !curvature.is_finite() || curvature >= 0.0 {
            return Ok(None);
        }
        let vertex = x - 0.5 * spacing * (f_plus - f_minus) / curvature;
        Ok(((vertex - x).abs() <= spacing).then_some(vertex))
    };
    let (Some(v1), Some(v2)) = (vertex_at(h)?, vertex_at(2.0 * h)?) else {
        return Ok(None);
    };
    let combined = (4.0 * v1 - v2) / 3.0;
    Ok(((combined - x).abs() <= 2.0 * h).then_some(combined))
}

/// Numeric cross-check of [`engine_optimum_closed`]: maximizes the
/// per-cycle work over ratio space by golden-section search.
///
/// The bracket is the full `(margin, 1 - margin)` interval rather than
/// the operating window: the work is strictly concave on (0, 1), and the
/// wide bracket avoids endpoint evaluation when `b/a` is close to 0 or 1.
pub fn engine_optimum_numeric(
    cfg: &CycleConfig,
    settings: &MaximizerSettings,
) -> Result<OptimumResult> {
    feasible_ratio(cfg)?;
    let work = |x: f64| match cfg.with_ratio(x) {
        Ok(c) => c.engine_metrics().w_total,
        Err(_) => f64::NAN,
    };
    let gs = golden_section_maximize(
        work,
        settings.bracket_margin,
        1.0 - settings.bracket_margin,
        settings,
    )?;
    Ok(OptimumResult {
        ratio_star: gs.x_star,
        objective: gs.f_star,
        merit: 1.0 - gs.x_star,
        method: SolveMethod::Numeric,
        iterations: gs.iterations,
    })
}

/// Numeric cross-check of [`fridge_optimum_closed`]: maximizes
/// `chi(x) = [x/(1-x)] (b - a x)` over ratio space. Chi is unimodal on
/// (0, 1) — its stationary points solve `x^2 - 2x + b/a = 0`, and only
/// one root lies inside.
pub fn fridge_optimum_numeric(
    cfg: &CycleConfig,
    settings: &MaximizerSettings,
) -> Result<OptimumResult> {
    feasible_ratio(cfg)?;
    let chi = |x: f64| match cfg.with_ratio(x) {
        Ok(c) => c.fridge_metrics().chi,
        Err(_) => f64::NAN,
    };
    let gs = golden_section_maximize(
        chi,
        settings.bracket_margin,
        1.0 - settings.bracket_margin,
        settings,
    )?;
    Ok(OptimumResult {
        ratio_star: gs.x_star,
        objective: gs.f_star,
        merit: gs.x_star / (1.0 - gs.x_star),
        method: SolveMethod::Numeric,
        iterations: gs.iterations,
    })
}

/// Compare a mode's optimal merit to its Curzon-Ahlborn reference at the
/// same bare temperature ratio.
///
/// The references are evaluated as extended formulas so that every
/// feasible config classifies: for the engine `1 - sqrt(tau)` at any
/// `tau > 0` (negative above `tau = 1`), and for the fridge an infinite
/// reference at `tau >= 1` (the CA COP pole), which classifies any finite
/// merit as suppressed.
pub fn classify_enhancement(cfg: &CycleConfig, mode: Mode) -> Enhancement {
    let boa = cfg.feasibility_ratio();
    if boa >= 1.0 {
        return Enhancement::Infeasible;
    }
    let tau = cfg.cold().temperature() / cfg.hot().temperature();
    let (merit, reference) = match mode {
        Mode::Engine => (1.0 - boa.sqrt(), 1.0 - tau.sqrt()),
        Mode::Fridge => {
            let merit = 1.0 / (1.0 - boa).sqrt() - 1.0;
            let reference = if tau < 1.0 {
                1.0 / (1.0 - tau).sqrt() - 1.0
            } else {
                f64::INFINITY
            };
            (merit, reference)
        }
    };
    if (merit - reference).abs() <= CA_EQUAL_BAND {
        Enhancement::CAEqual
    } else if merit > reference {
        Enhancement::Enhanced
    } else {
        Enhancement::Suppressed
    }
}
