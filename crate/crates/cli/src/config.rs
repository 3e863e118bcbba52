//! JSON config files: optional per-field defaults for the flags.
//!
//! Schema (all keys optional, unknown keys rejected):
//! `tc, th, rc, rh, wc, wh, mode, figure, tau_lo, tau_hi, steps, r_max,
//! grid_steps, tol, samples, seed, jobs`.

use crate::args::{Figure, ModeArg};
use crate::CliError;
use serde::Deserialize;
use std::path::Path;

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub tc: Option<f64>,
    pub th: Option<f64>,
    pub rc: Option<f64>,
    pub rh: Option<f64>,
    pub wc: Option<f64>,
    pub wh: Option<f64>,
    pub mode: Option<ConfigMode>,
    pub figure: Option<ConfigFigure>,
    pub tau_lo: Option<f64>,
    pub tau_hi: Option<f64>,
    pub steps: Option<u32>,
    pub r_max: Option<f64>,
    pub grid_steps: Option<u32>,
    pub tol: Option<f64>,
    pub samples: Option<u64>,
    pub seed: Option<u64>,
    pub jobs: Option<usize>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConfigMode {
    Engine,
    Fridge,
}

impl From<ConfigMode> for ModeArg {
    fn from(m: ConfigMode) -> ModeArg {
        match m {
            ConfigMode::Engine => ModeArg::Engine,
            ConfigMode::Fridge => ModeArg::Fridge,
        }
    }
}

/// Accepts `"3"`, `3`, or `"custom"`.
#[derive(Debug, Clone, Copy)]
pub struct ConfigFigure(pub Figure);

impl<'de> Deserialize<'de> for ConfigFigure {
    fn deserialize<D>(deserializer: D) -> Result<Self, D::Error>
    where
        D: serde::Deserializer<'de>,
    {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(u64),
            Text(String),
        }
        let raw = Raw::deserialize(deserializer)?;
        let s = match &raw {
            Raw::Number(n) => n.to_string(),
            Raw::Text(t) => t.clone(),
        };
        crate::args::parse_figure(&s)
            .map(ConfigFigure)
            .map_err(serde::de::Error::custom)
    }
}

pub fn load(path: &Path) -> Result<FileConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Validation(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Validation(format!("invalid config {}: {e}", path.display())))
}

/// Flag wins, then the config file, then the built-in default.
pub fn pick<T: Copy>(flag: Option<T>, file: Option<T>, default: T) -> T {
    flag.or(file).unwrap_or(default)
}

/// Seed resolution order: flag, config file, `OTTO_SEED`, built-in.
pub fn resolve_seed(flag: Option<u64>, file: Option<u64>) -> Result<u64, CliError> {
    if let Some(seed) = flag.or(file) {
        return Ok(seed);
    }
    match std::env::var("OTTO_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Validation(format!("OTTO_SEED must be an unsigned integer, got {v:?}"))
        }),
        Err(_) => Ok(crate::args::DEFAULT_SEED),
    }
}
