//! `otto sweep`: figure-reproduction data.
//!
//! Temperature sweeps walk `tau = T_c/T_h` for a list of squeeze pairs;
//! grid sweeps walk the `(r_c, r_h)` square at fixed `tau`, row-major
//! with `r_c` outer. Rows where the mode has no operating window carry
//! the `Infeasible` classification and empty merit fields — a NaN never
//! appears in the output.

use crate::args::{Cli, Figure, Format, SweepArgs};
use crate::config::{pick, FileConfig};
use crate::render::{fmt_opt, fmt_sig, round_sig, write_output};
use crate::CliError;
use otto_core::optimum::{
    ca_cop, ca_efficiency, classify_enhancement, engine_optimum_closed, fridge_optimum_closed,
};
use otto_core::{CycleConfig, Enhancement, Mode, SqueezedReservoir};
use rayon::prelude::*;
use serde_json::json;

/// Fig. 2/4 curve defaults: the squeeze pairs discussed alongside each
/// figure.
const FIG2_PAIRS: [(f64, f64); 3] = [(0.0, 0.0), (0.5, 1.0), (1.0, 0.5)];
const FIG4_PAIRS: [(f64, f64); 3] = [(0.0, 0.0), (0.25, 0.5), (0.5, 0.25)];

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub mode: Mode,
    pub kind: SweepKind,
}

#[derive(Debug, Clone)]
pub enum SweepKind {
    Temperature {
        lo: f64,
        hi: f64,
        steps: u32,
        pairs: Vec<(f64, f64)>,
    },
    SqueezeGrid {
        fixed_tau: f64,
        r_max: f64,
        steps: u32,
    },
}

#[derive(Debug, Clone, Copy)]
pub struct SweepRow {
    /// Present for temperature sweeps only.
    pub tau: Option<f64>,
    pub rc: f64,
    pub rh: f64,
    pub ratio_star: Option<f64>,
    pub merit: Option<f64>,
    pub reference: Option<f64>,
    pub classification: Enhancement,
}

fn build_spec(cmd: &SweepArgs, file: &FileConfig) -> Result<SweepSpec, CliError> {
    let figure = cmd
        .figure
        .or(file.figure.map(|f| f.0))
        .ok_or_else(|| CliError::Validation("missing --figure (2, 3, 4, 5, or custom)".into()))?;

    let (default_mode, grid) = match figure {
        Figure::Fig2 => (Some(Mode::Engine), false),
        Figure::Fig3 => (Some(Mode::Engine), true),
        Figure::Fig4 => (Some(Mode::Fridge), false),
        Figure::Fig5 => (Some(Mode::Fridge), true),
        Figure::Custom => (None, cmd.grid),
    };
    let mode = match default_mode {
        Some(m) => m,
        None => cmd
            .mode
            .or(file.mode.map(Into::into))
            .map(Mode::from)
            .ok_or_else(|| {
                CliError::Validation("custom sweeps need --mode engine|fridge".into())
            })?,
    };

    let kind = if grid {
        let fixed_tau_default = match figure {
            Figure::Fig5 => 0.75,
            _ => 0.25,
        };
        let fixed_tau = cmd.fixed_tau.unwrap_or(fixed_tau_default);
        let r_max = pick(cmd.r_max, file.r_max, 1.5);
        let steps = pick(cmd.grid_steps, file.grid_steps, 50);
        if !fixed_tau.is_finite() || fixed_tau <= 0.0 {
            return Err(CliError::Validation(format!(
                "fixed_tau must be positive, got {fixed_tau}"
            )));
        }
        if !r_max.is_finite() || r_max <= 0.0 {
            return Err(CliError::Validation(format!(
                "r_max must be positive, got {r_max}"
            )));
        }
        SweepKind::SqueezeGrid {
            fixed_tau,
            r_max,
            steps,
        }
    } else {
        let hi_default = match mode {
            Mode::Engine => 1.0,
            Mode::Fridge => 0.99,
        };
        let steps_default = match mode {
            Mode::Engine => 100,
            Mode::Fridge => 99,
        };
        let lo = pick(cmd.tau_lo, file.tau_lo, 0.01);
        let hi = pick(cmd.tau_hi, file.tau_hi, hi_default);
        let steps = pick(cmd.steps, file.steps, steps_default);
        if !lo.is_finite() || !hi.is_finite() || lo < 0.0 || lo >= hi || hi > 1.0 {
            return Err(CliError::Validation(format!(
                "tau range must satisfy 0 <= lo < hi <= 1, got [{lo}, {hi}]"
            )));
        }
        let pairs = match &cmd.pairs {
            Some(raw) => parse_pairs(raw)?,
            None => match figure {
                Figure::Fig4 => FIG4_PAIRS.to_vec(),
                Figure::Fig2 => FIG2_PAIRS.to_vec(),
                Figure::Custom => match mode {
                    Mode::Engine => FIG2_PAIRS.to_vec(),
                    Mode::Fridge => FIG4_PAIRS.to_vec(),
                },
                _ => unreachable!("grid figures handled above"),
            },
        };
        SweepKind::Temperature {
            lo,
            hi,
            steps,
            pairs,
        }
    };

    let steps = match &kind {
        SweepKind::Temperature { steps, .. } | SweepKind::SqueezeGrid { steps, .. } => *steps,
    };
    if steps < 2 {
        return Err(CliError::Validation(format!(
            "steps must be at least 2, got {steps}"
        )));
    }
    Ok(SweepSpec { mode, kind })
}

fn parse_pairs(raw: &str) -> Result<Vec<(f64, f64)>, CliError> {
    let mut pairs = Vec::new();
    for item in raw.split(',') {
        let item = item.trim();
        let Some((rc, rh)) = item.split_once(':') else {
            return Err(CliError::Validation(format!(
                "bad squeeze pair {item:?}; expected rc:rh"
            )));
        };
        let parse = |s: &str| -> Result<f64, CliError> {
            s.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Validation(format!("bad squeeze value {s:?}")))
        };
        let (rc, rh) = (parse(rc)?, parse(rh)?);
        if !rc.is_finite() || !rh.is_finite() || rc < 0.0 || rh < 0.0 {
            return Err(CliError::Validation(format!(
                "squeeze parameters must be nonnegative, got {rc}:{rh}"
            )));
        }
        pairs.push((rc, rh));
    }
    if pairs.is_empty() {
        return Err(CliError::Validation("empty squeeze pair list".into()));
    }
    Ok(pairs)
}

/// Endpoint-exact linspace sample.
fn linspace(lo: f64, hi: f64, steps: u32, i: u32) -> f64 {
    if i == steps - 1 {
        hi
    } else {
        lo + (hi - lo) * i as f64 / (steps - 1) as f64
    }
}

fn evaluate(mode: Mode, tau: Option<f64>, grid_tau: f64, rc: f64, rh: f64) -> SweepRow {
    let t_cold = tau.unwrap_or(grid_tau);
    // tau = 0 admits no positive-temperature reservoir; report it as an
    // infeasible row rather than failing the whole sweep
    if t_cold <= 0.0 {
        return SweepRow {
            tau,
            rc,
            rh,
            ratio_star: None,
            merit: None,
            reference: None,
            classification: Enhancement::Infeasible,
        };
    }
    let cfg = CycleConfig::new(
        SqueezedReservoir::new(t_cold, rc).expect("positive tau, nonnegative rc"),
        SqueezedReservoir::new(1.0, rh).expect("unit hot temperature, nonnegative rh"),
        1.0,
        2.0,
    )
    .expect("fixed frequency pair is valid");

    let classification = classify_enhancement(&cfg, mode);
    let reference = match mode {
        Mode::Engine => ca_efficiency(t_cold).ok(),
        Mode::Fridge => ca_cop(t_cold).ok(),
    };
    let (ratio_star, merit) = if classification == Enhancement::Infeasible {
        (None, None)
    } else {
        let opt = match mode {
            Mode::Engine => engine_optimum_closed(&cfg),
            Mode::Fridge => fridge_optimum_closed(&cfg),
        }
        .expect("classification checked feasibility");
        (Some(opt.ratio_star), Some(opt.merit))
    };
    SweepRow {
        tau,
        rc,
        rh,
        ratio_star,
        merit,
        reference,
        classification,
    }
}

pub fn rows(spec: &SweepSpec) -> Vec<SweepRow> {
    let inputs: Vec<(Option<f64>, f64, f64)> = match &spec.kind {
        SweepKind::Temperature {
            lo,
            hi,
            steps,
            pairs,
        } => pairs
            .iter()
            .flat_map(|&(rc, rh)| {
                (0..*steps).map(move |i| (Some(linspace(*lo, *hi, *steps, i)), rc, rh))
            })
            .collect(),
        SweepKind::SqueezeGrid { r_max, steps, .. } => (0..*steps)
            .flat_map(|i| {
                let rc = linspace(0.0, *r_max, *steps, i);
                (0..*steps).map(move |j| (None, rc, linspace(0.0, *r_max, *steps, j)))
            })
            .collect(),
    };
    let grid_tau = match &spec.kind {
        SweepKind::SqueezeGrid { fixed_tau, .. } => *fixed_tau,
        SweepKind::Temperature { .. } => f64::NAN,
    };
    let mode = spec.mode;
    inputs
        .into_par_iter()
        .map(|(tau, rc, rh)| evaluate(mode, tau, grid_tau, rc, rh))
        .collect()
}

pub fn run(cmd: &SweepArgs, cli: &Cli, file: &FileConfig) -> Result<(), CliError> {
    let spec = build_spec(cmd, file)?;
    let rows = rows(&spec);
    let temp_sweep = matches!(spec.kind, SweepKind::Temperature { .. });

    let content = match cli.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut s = String::with_capacity(rows.len() * 64);
            s.push_str(if temp_sweep {
                "tau,rc,rh,ratio_star,merit,reference,classification\n"
            } else {
                "rc,rh,ratio_star,merit,reference,classification\n"
            });
            for row in &rows {
                if let Some(tau) = row.tau {
                    s.push_str(&fmt_sig(tau));
                    s.push(',');
                }
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    fmt_sig(row.rc),
                    fmt_sig(row.rh),
                    fmt_opt(row.ratio_star),
                    fmt_opt(row.merit),
                    fmt_opt(row.reference),
                    row.classification,
                ));
            }
            s
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .iter()
                .map(|row| {
                    let mut v = json!({
                        "rc": round_sig(row.rc),
                        "rh": round_sig(row.rh),
                        "ratio_star": row.ratio_star.map(round_sig),
                        "merit": row.merit.map(round_sig),
                        "reference": row.reference.map(round_sig),
                        "classification": row.classification.to_string(),
                    });
                    if let Some(tau) = row.tau {
                        v["tau"] = json!(round_sig(tau));
                    }
                    v
                })
                .collect();
            let doc = json!({
                "mode": spec.mode.to_string(),
                "kind": if temp_sweep { "temperature" } else { "grid" },
                "rows": rows,
            });
            format!("{doc:#}\n")
        }
        Format::Text => {
            let mut s = String::with_capacity(rows.len() * 80);
            if temp_sweep {
                s.push_str(&format!(
                    "{:>14} {:>10} {:>10} {:>16} {:>16} {:>16} {:>12}\n",
                    "tau", "rc", "rh", "ratio_star", "merit", "reference", "class"
                ));
            } else {
                s.push_str(&format!(
                    "{:>10} {:>10} {:>16} {:>16} {:>16} {:>12}\n",
                    "rc", "rh", "ratio_star", "merit", "reference", "class"
                ));
            }
            for row in &rows {
                if let Some(tau) = row.tau {
                    s.push_str(&format!("{:>14} ", fmt_sig(tau)));
                }
                s.push_str(&format!(
                    "{:>10} {:>10} {:>16} {:>16} {:>16} {:>12}\n",
                    fmt_sig(row.rc),
                    fmt_sig(row.rh),
                    dash(row.ratio_star),
                    dash(row.merit),
                    dash(row.reference),
                    row.classification,
                ));
            }
            s
        }
    };
    write_output(cli.out.as_deref(), &content)
}

fn dash(x: Option<f64>) -> String {
    x.map(fmt_sig).unwrap_or_else(|| "-".into())
}
