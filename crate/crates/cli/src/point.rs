//! `otto point`: evaluate one cycle configuration.

use crate::args::{self, CfgFlags, Cli, Format, PointArgs};
use crate::config::{pick, FileConfig};
use crate::render::{fmt_sig, round_sig, write_output};
use crate::CliError;
use otto_core::{CycleConfig, HeatConvention, Mode, SqueezedReservoir};
use serde_json::json;

/// Build the cycle from flags, config file, and built-in defaults.
pub fn resolve_cycle(flags: &CfgFlags, file: &FileConfig) -> Result<CycleConfig, CliError> {
    let tc = pick(flags.tc, file.tc, args::DEFAULT_TC);
    let th = pick(flags.th, file.th, args::DEFAULT_TH);
    let rc = pick(flags.rc, file.rc, args::DEFAULT_RC);
    let rh = pick(flags.rh, file.rh, args::DEFAULT_RH);
    let wc = pick(flags.wc, file.wc, args::DEFAULT_WC);
    let wh = pick(flags.wh, file.wh, args::DEFAULT_WH);
    let cold = SqueezedReservoir::new(tc, rc)
        .map_err(|e| CliError::Validation(format!("cold reservoir: {e}")))?;
    let hot = SqueezedReservoir::new(th, rh)
        .map_err(|e| CliError::Validation(format!("hot reservoir: {e}")))?;
    Ok(CycleConfig::new(cold, hot, wc, wh)?)
}

pub fn run(cmd: &PointArgs, cli: &Cli, file: &FileConfig) -> Result<(), CliError> {
    let cfg = resolve_cycle(&cmd.cfg, file)?;
    let states = cfg.state_energies();
    let engine = cfg.engine_metrics();
    let fridge = cfg.fridge_metrics();
    let engine_signed = cmd
        .engine_signs
        .then(|| cfg.fridge_metrics_with(HeatConvention::EngineSigned));
    let window_e = cfg.operating_window(Mode::Engine);
    let window_f = cfg.operating_window(Mode::Fridge);

    let content = match cli.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = String::new();
            s.push_str(&format!(
                "config   T_c = {}  r_c = {}  omega_c = {}\n",
                fmt_sig(cfg.cold().temperature()),
                fmt_sig(cfg.cold().squeeze()),
                fmt_sig(cfg.omega_c()),
            ));
            s.push_str(&format!(
                "         T_h = {}  r_h = {}  omega_h = {}\n",
                fmt_sig(cfg.hot().temperature()),
                fmt_sig(cfg.hot().squeeze()),
                fmt_sig(cfg.omega_h()),
            ));
            s.push_str(&format!(
                "states   U_A = {}  U_B = {}  U_C = {}  U_D = {}\n",
                fmt_sig(states.u_a),
                fmt_sig(states.u_b),
                fmt_sig(states.u_c),
                fmt_sig(states.u_d),
            ));
            s.push_str(&format!(
                "engine   Q_h = {}  Q_c = {}  W_total = {}  eta = {}\n",
                fmt_sig(engine.q_h),
                fmt_sig(engine.q_c),
                fmt_sig(engine.w_total),
                fmt_sig(engine.eta),
            ));
            s.push_str(&format!(
                "fridge   Q_c = {}  Q_h = {}  W_in = {}  eps = {}  chi = {}\n",
                fmt_sig(fridge.q_c),
                fmt_sig(fridge.q_h),
                fmt_sig(fridge.w_in),
                fmt_sig(fridge.eps),
                fmt_sig(fridge.chi),
            ));
            if let Some(p) = engine_signed {
                s.push_str(&format!(
                    "  (engine-signed: Q_c = {}  Q_h = {}  W_in = {}  chi = {})\n",
                    fmt_sig(p.q_c),
                    fmt_sig(p.q_h),
                    fmt_sig(p.w_in),
                    fmt_sig(p.chi),
                ));
            }
            s.push_str(&format!(
                "windows  engine ({}, {}) {}  |  fridge ({}, {}) {}\n",
                fmt_sig(window_e.lo),
                fmt_sig(window_e.hi),
                feasibility(window_e.feasible),
                fmt_sig(window_f.lo),
                fmt_sig(window_f.hi),
                feasibility(window_f.feasible),
            ));
            s
        }
        Format::Json => {
            let mut doc = json!({
                "config": {
                    "tc": round_sig(cfg.cold().temperature()),
                    "th": round_sig(cfg.hot().temperature()),
                    "rc": round_sig(cfg.cold().squeeze()),
                    "rh": round_sig(cfg.hot().squeeze()),
                    "wc": round_sig(cfg.omega_c()),
                    "wh": round_sig(cfg.omega_h()),
                },
                "states": {
                    "u_a": round_sig(states.u_a),
                    "u_b": round_sig(states.u_b),
                    "u_c": round_sig(states.u_c),
                    "u_d": round_sig(states.u_d),
                },
                "engine": {
                    "q_h": round_sig(engine.q_h),
                    "q_c": round_sig(engine.q_c),
                    "w_total": round_sig(engine.w_total),
                    "eta": round_sig(engine.eta),
                },
                "fridge": fridge_json(&fridge),
                "windows": {
                    "engine": window_json(&window_e),
                    "fridge": window_json(&window_f),
                },
            });
            if let Some(p) = engine_signed {
                doc["fridge_engine_signed"] = fridge_json(&p);
            }
            format!("{doc:#}\n")
        }
        Format::Csv => {
            let header = "ua,ub,uc,ud,engine_qh,engine_qc,w_total,eta,\
                          fridge_qc,fridge_qh,w_in,eps,chi,\
                          engine_lo,engine_hi,engine_feasible,\
                          fridge_lo,fridge_hi,fridge_feasible";
            let row = [
                fmt_sig(states.u_a),
                fmt_sig(states.u_b),
                fmt_sig(states.u_c),
                fmt_sig(states.u_d),
                fmt_sig(engine.q_h),
                fmt_sig(engine.q_c),
                fmt_sig(engine.w_total),
                fmt_sig(engine.eta),
                fmt_sig(fridge.q_c),
                fmt_sig(fridge.q_h),
                fmt_sig(fridge.w_in),
                fmt_sig(fridge.eps),
                fmt_sig(fridge.chi),
                fmt_sig(window_e.lo),
                fmt_sig(window_e.hi),
                window_e.feasible.to_string(),
                fmt_sig(window_f.lo),
                fmt_sig(window_f.hi),
                window_f.feasible.to_string(),
            ]
            .join(",");
            format!("{header}\n{row}\n")
        }
    };
    write_output(cli.out.as_deref(), &content)
}

fn feasibility(feasible: bool) -> &'static str {
    if feasible {
        "feasible"
    } else {
        "infeasible"
    }
}

fn fridge_json(m: &otto_core::FridgeMetrics) -> serde_json::Value {
    json!({
        "q_c": round_sig(m.q_c),
        "q_h": round_sig(m.q_h),
        "w_in": round_sig(m.w_in),
        "eps": round_sig(m.eps),
        "chi": round_sig(m.chi),
        "convention": match m.convention {
            HeatConvention::PositiveCooling => "positive-cooling",
            HeatConvention::EngineSigned => "engine-signed",
        },
    })
}

fn window_json(w: &otto_core::OperatingWindow) -> serde_json::Value {
    json!({
        "lo": round_sig(w.lo),
        "hi": round_sig(w.hi),
        "feasible": w.feasible,
    })
}
