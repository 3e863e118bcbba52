//! `otto optimize`: maximum-work / maximum-chi operating points.

use crate::args::{self, Cli, Format, ModeArg, OptimizeArgs};
use crate::config::{pick, FileConfig};
use crate::point::resolve_cycle;
use crate::render::{fmt_sig, round_sig, write_output};
use crate::CliError;
use otto_core::optimum::{
    engine_optimum_closed, engine_optimum_numeric, fridge_optimum_closed, fridge_optimum_numeric,
};
use otto_core::{MaximizerSettings, OptimumResult, SolveMethod};
use serde_json::json;

pub fn run(cmd: &OptimizeArgs, cli: &Cli, file: &FileConfig) -> Result<(), CliError> {
    let cfg = resolve_cycle(&cmd.cfg, file)?;
    let tol = pick(cmd.tol, file.tol, args::DEFAULT_TOL);
    let settings = MaximizerSettings {
        tol,
        ..MaximizerSettings::default()
    };
    settings.validate().map_err(CliError::from)?;

    let closed = match cmd.mode {
        ModeArg::Engine => engine_optimum_closed(&cfg)?,
        ModeArg::Fridge => fridge_optimum_closed(&cfg)?,
    };
    let numeric = if cmd.numeric {
        Some(match cmd.mode {
            ModeArg::Engine => engine_optimum_numeric(&cfg, &settings)?,
            ModeArg::Fridge => fridge_optimum_numeric(&cfg, &settings)?,
        })
    } else {
        None
    };

    let merit_label = match cmd.mode {
        ModeArg::Engine => "eta_mp",
        ModeArg::Fridge => "eps_mchi",
    };
    let objective_label = match cmd.mode {
        ModeArg::Engine => "W_total",
        ModeArg::Fridge => "chi",
    };
    let mode_name = match cmd.mode {
        ModeArg::Engine => "engine",
        ModeArg::Fridge => "fridge",
    };

    let content = match cli.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = format!(
                "{mode_name} optimum (closed form)\n  ratio_star = {}\n  {objective_label} = {}\n  {merit_label} = {}\n",
                fmt_sig(closed.ratio_star),
                fmt_sig(closed.objective),
                fmt_sig(closed.merit),
            );
            if let Some(n) = &numeric {
                s.push_str(&format!(
                    "numeric cross-check ({} iterations)\n  ratio_star = {}\n  {objective_label} = {}\n  {merit_label} = {}\n",
                    n.iterations,
                    fmt_sig(n.ratio_star),
                    fmt_sig(n.objective),
                    fmt_sig(n.merit),
                ));
                s.push_str(&format!(
                    "discrepancy\n  ratio = {}\n  merit = {}\n",
                    fmt_sig((closed.ratio_star - n.ratio_star).abs()),
                    fmt_sig((closed.merit - n.merit).abs()),
                ));
            }
            s
        }
        Format::Json => {
            let mut doc = json!({
                "mode": mode_name,
                "closed_form": optimum_json(&closed),
            });
            if let Some(n) = &numeric {
                doc["numeric"] = optimum_json(n);
                doc["discrepancy"] = json!({
                    "ratio_star": round_sig((closed.ratio_star - n.ratio_star).abs()),
                    "merit": round_sig((closed.merit - n.merit).abs()),
                });
            }
            format!("{doc:#}\n")
        }
        Format::Csv => {
            let mut s = String::from("mode,method,ratio_star,objective,merit,iterations\n");
            for opt in std::iter::once(&closed).chain(numeric.as_ref()) {
                s.push_str(&format!(
                    "{mode_name},{},{},{},{},{}\n",
                    method_name(opt.method),
                    fmt_sig(opt.ratio_star),
                    fmt_sig(opt.objective),
                    fmt_sig(opt.merit),
                    opt.iterations,
                ));
            }
            s
        }
    };
    write_output(cli.out.as_deref(), &content)
}

fn method_name(m: SolveMethod) -> &'static str {
    match m {
        SolveMethod::ClosedForm => "closed-form",
        SolveMethod::Numeric => "numeric",
    }
}

fn optimum_json(o: &OptimumResult) -> serde_json::Value {
    json!({
        "ratio_star": round_sig(o.ratio_star),
        "objective": round_sig(o.objective),
        "merit": round_sig(o.merit),
        "method": method_name(o.method),
        "iterations": o.iterations,
    })
}
