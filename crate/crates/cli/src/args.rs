//! Command-line definitions and built-in defaults.
//!
//! Every value flag is optional: a config file (`--config`) supplies
//! per-field defaults, and built-ins fill whatever remains. Flags always
//! win over the file; the file wins over built-ins. The seed additionally
//! falls back to the `OTTO_SEED` environment variable before its
//! built-in.

use clap::{Args, Parser, Subcommand, ValueEnum};
use otto_core::Mode;
use std::path::PathBuf;

pub const DEFAULT_TC: f64 = 0.25;
pub const DEFAULT_TH: f64 = 1.0;
pub const DEFAULT_RC: f64 = 0.0;
pub const DEFAULT_RH: f64 = 0.0;
pub const DEFAULT_WC: f64 = 1.0;
pub const DEFAULT_WH: f64 = 2.0;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_SAMPLES: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_MC_T: f64 = 1.0;
pub const DEFAULT_MC_R: f64 = 0.0;
pub const DEFAULT_MC_OMEGA: f64 = 1.0;

#[derive(Parser, Debug)]
#[command(
    name = "otto",
    version,
    about = "Quantum Otto cycle between squeezed thermal reservoirs: \
             closed-form metrics, optimal operating points, figure sweeps, \
             and Monte Carlo verification"
)]
pub struct Cli {
    /// Output format (default: text; sweep defaults to csv).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// JSON config file supplying flag defaults.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Output path (default: standard output).
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// RNG seed (fallbacks: config file, OTTO_SEED, then 42).
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Worker threads for sweep and Monte Carlo evaluation
    /// (default: all cores). Output is identical for any value.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Evaluate one cycle: state energies, heats, work, efficiency, COP,
    /// chi, and both operating windows.
    Point(PointArgs),
    /// Find the maximum-work (engine) or maximum-chi (fridge) ratio.
    Optimize(OptimizeArgs),
    /// Emit figure-reproduction sweep data.
    Sweep(SweepArgs),
    /// Check the internal-energy law U = T cosh(2r) by Monte Carlo
    /// sampling of the phase-space distributions.
    McVerify(McVerifyArgs),
}

/// The six numbers specifying a cycle.
#[derive(Args, Debug, Clone, Copy)]
pub struct CfgFlags {
    /// Cold reservoir temperature T_c.
    #[arg(long)]
    pub tc: Option<f64>,
    /// Hot reservoir temperature T_h.
    #[arg(long)]
    pub th: Option<f64>,
    /// Cold reservoir squeezing parameter r_c.
    #[arg(long)]
    pub rc: Option<f64>,
    /// Hot reservoir squeezing parameter r_h.
    #[arg(long)]
    pub rh: Option<f64>,
    /// Low angular frequency omega_c.
    #[arg(long)]
    pub wc: Option<f64>,
    /// High angular frequency omega_h.
    #[arg(long)]
    pub wh: Option<f64>,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    #[command(flatten)]
    pub cfg: CfgFlags,
    /// Also report the refrigeration heats with their engine-cycle signs
    /// (q_c = U_D - U_A, negative on the cooling window).
    #[arg(long)]
    pub engine_signs: bool,
}

#[derive(Args, Debug)]
pub struct OptimizeArgs {
    /// Operating mode.
    #[arg(value_enum)]
    pub mode: ModeArg,
    #[command(flatten)]
    pub cfg: CfgFlags,
    /// Also run the golden-section path and report the discrepancy.
    #[arg(long)]
    pub numeric: bool,
    /// Absolute tolerance on the numeric ratio.
    #[arg(long)]
    pub tol: Option<f64>,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Which figure's data to produce: 2, 3, 4, 5, or custom.
    #[arg(long, value_parser = parse_figure)]
    pub figure: Option<Figure>,
    /// Operating mode (custom sweeps only; figures fix their mode).
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Custom sweeps: sweep the (r_c, r_h) grid instead of temperature.
    #[arg(long)]
    pub grid: bool,
    /// Temperature sweeps: lowest T_c/T_h.
    #[arg(long)]
    pub tau_lo: Option<f64>,
    /// Temperature sweeps: highest T_c/T_h.
    #[arg(long)]
    pub tau_hi: Option<f64>,
    /// Temperature sweeps: number of samples (endpoints included).
    #[arg(long)]
    pub steps: Option<u32>,
    /// Temperature sweeps: squeeze pairs as "rc:rh,rc:rh,...".
    #[arg(long)]
    pub pairs: Option<String>,
    /// Grid sweeps: fixed temperature ratio T_c/T_h.
    #[arg(long)]
    pub fixed_tau: Option<f64>,
    /// Grid sweeps: largest squeezing parameter on each axis.
    #[arg(long)]
    pub r_max: Option<f64>,
    /// Grid sweeps: samples per axis (endpoints included).
    #[arg(long)]
    pub grid_steps: Option<u32>,
}

#[derive(Args, Debug)]
pub struct McVerifyArgs {
    /// Reservoir temperature T.
    #[arg(long)]
    pub t: Option<f64>,
    /// Squeezing parameter r.
    #[arg(long)]
    pub r: Option<f64>,
    /// Oscillator frequency omega (the analytic target is omega-free).
    #[arg(long)]
    pub omega: Option<f64>,
    /// Sample count (floor 1000).
    #[arg(long)]
    pub samples: Option<u64>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
#[value(rename_all = "lowercase")]
pub enum ModeArg {
    Engine,
    Fridge,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Engine => Mode::Engine,
            ModeArg::Fridge => Mode::Fridge,
        }
    }
}

/// Sweep family. Figures 2-5 carry their own defaults; `Custom` is fully
/// flag-driven.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
    Custom,
}

pub fn parse_figure(s: &str) -> Result<Figure, String> {
    match s.trim().to_ascii_lowercase().as_str() {
        "2" | "fig2" => Ok(Figure::Fig2),
        "3" | "fig3" => Ok(Figure::Fig3),
        "4" | "fig4" => Ok(Figure::Fig4),
        "5" | "fig5" => Ok(Figure::Fig5),
        "custom" => Ok(Figure::Custom),
        other => Err(format!(
            "unknown figure {other:?}; expected 2, 3, 4, 5, or custom"
        )),
    }
}
