//! Squeezed thermal reservoirs and their quadrature-temperature form.
//!
//! A reservoir is described by an effective temperature `T > 0` and a
//! squeezing parameter `r >= 0`. Its two phase-space quadratures fluctuate
//! at temperatures `T exp(+2r)` (anti-squeezed) and `T exp(-2r)`
//! (squeezed); the oscillator equilibrated with it carries internal energy
//! `T cosh(2r)` regardless of its frequency.

use crate::error::{Error, Result};

/// A squeezed thermal reservoir `(T, r)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezedReservoir {
    temperature: f64,
    squeeze: f64,
}

impl SqueezedReservoir {
    /// Negative `r` is rejected rather than canonicalized so caller sign
    /// bugs surface; callers wanting |r| semantics take the absolute
    /// value themselves.
    pub fn new(temperature: f64, squeeze: f64) -> Result<Self> {
        if !temperature.is_finite() || temperature <= 0.0 {
            return Err(Error::InvalidTemperature(temperature));
        }
        if !squeeze.is_finite() || squeeze < 0.0 {
            return Err(Error::InvalidSqueeze(squeeze));
        }
        Ok(Self {
            temperature,
            squeeze,
        })
    }

    pub fn temperature(&self) -> f64 {
        self.temperature
    }

    pub fn squeeze(&self) -> f64 {
        self.squeeze
    }

    /// Internal energy `T cosh(2r)` of an oscillator equilibrated with
    /// this reservoir; independent of the oscillator frequency. This is
    /// the quantity that replaces temperature in every optimum formula.
    pub fn effective_weight(&self) -> f64 {
        self.temperature * (2.0 * self.squeeze).cosh()
    }

    /// Recover `(T, r)` from the quadrature temperatures:
    /// `T = sqrt(t1 t2)`, `r = ln(t1/t2)/4`.
    pub fn from_quadratures(q: &QuadratureTemps) -> Self {
        Self {
            temperature: (q.t1 * q.t2).sqrt(),
            squeeze: 0.25 * (q.t1 / q.t2).ln(),
        }
    }

    /// Quadrature temperatures `(T e^{2r}, T e^{-2r})`.
    pub fn quadratures(&self) -> QuadratureTemps {
        QuadratureTemps {
            t1: self.temperature * (2.0 * self.squeeze).exp(),
            t2: self.temperature * (-2.0 * self.squeeze).exp(),
        }
    }
}

/// The two quadrature temperatures of a squeezed reservoir,
/// `t1 >= t2 > 0` (the anti-squeezed quadrature is the hotter one).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureTemps {
    t1: f64,
    t2: f64,
}

impl QuadratureTemps {
    pub fn new(t1: f64, t2: f64) -> Result<Self> {
        if !t1.is_finite() || !t2.is_finite() || t2 <= 0.0 || t1 < t2 {
            return Err(Error::InvalidQuadratures { t1, t2 });
        }
        Ok(Self { t1, t2 })
    }

    /// Anti-squeezed (hotter) quadrature temperature.
    pub fn t1(&self) -> f64 {
        self.t1
    }

    /// Squeezed (colder) quadrature temperature.
    pub fn t2(&self) -> f64 {
        self.t2
    }
}
