//! `otto mc-verify`: Monte Carlo check of the internal-energy law.
//!
//! Estimates `(omega/2) E[x0^2 + p0^2]` from seeded phase-space samples,
//! compares against the analytic `T cosh(2r)`, and reports a PASS/FAIL
//! verdict at the 4-sigma band. FAIL exits with code 4 after printing the
//! record, so the command slots directly into CI.

use crate::args::{self, Cli, Format, McVerifyArgs};
use crate::config::{pick, resolve_seed, FileConfig};
use crate::render::{fmt_sig, round_sig, write_output};
use crate::CliError;
use otto_core::mc::mc_internal_energy;
use otto_core::tolerances::MC_Z_PASS;
use otto_core::SqueezedReservoir;
use serde_json::json;

pub fn run(cmd: &McVerifyArgs, cli: &Cli, file: &FileConfig) -> Result<(), CliError> {
    let t = cmd.t.unwrap_or(args::DEFAULT_MC_T);
    let r = cmd.r.unwrap_or(args::DEFAULT_MC_R);
    let omega = cmd.omega.unwrap_or(args::DEFAULT_MC_OMEGA);
    let n = pick(cmd.samples, file.samples, args::DEFAULT_SAMPLES);
    let seed = resolve_seed(cli.seed, file.seed)?;

    let res = SqueezedReservoir::new(t, r)?;
    let est = mc_internal_energy(&res, omega, n, seed)?;
    let target = res.effective_weight();
    let zscore = (est.mean - target) / est.std_error;
    let pass = zscore.abs() <= MC_Z_PASS;
    let verdict = if pass { "PASS" } else { "FAIL" };

    let content = match cli.format.unwrap_or(Format::Text) {
        Format::Text => format!(
            "T = {}  r = {}  omega = {}  n = {}  seed = {}\n\
             mean      = {}\n\
             std_error = {}\n\
             target    = {}\n\
             |z|       = {}\n\
             verdict   = {verdict}\n",
            fmt_sig(t),
            fmt_sig(r),
            fmt_sig(omega),
            n,
            seed,
            fmt_sig(est.mean),
            fmt_sig(est.std_error),
            fmt_sig(target),
            fmt_sig(zscore.abs()),
        ),
        Format::Json => {
            let doc = json!({
                "t": round_sig(t),
                "r": round_sig(r),
                "omega": round_sig(omega),
                "n": n,
                "seed": seed,
                "mean": round_sig(est.mean),
                "std_error": round_sig(est.std_error),
                "target": round_sig(target),
                "zscore": round_sig(zscore),
                "verdict": verdict,
            });
            format!("{doc:#}\n")
        }
        Format::Csv => format!(
            "t,r,omega,n,seed,mean,std_error,target,zscore,verdict\n{},{},{},{n},{seed},{},{},{},{},{verdict}\n",
            fmt_sig(t),
            fmt_sig(r),
            fmt_sig(omega),
            fmt_sig(est.mean),
            fmt_sig(est.std_error),
            fmt_sig(target),
            fmt_sig(zscore),
        ),
    };
    write_output(cli.out.as_deref(), &content)?;

    if pass {
        Ok(())
    } else {
        Err(CliError::McFail(format!(
            "verification failed: |z| = {:.2} exceeds {MC_Z_PASS}",
            zscore.abs()
        )))
    }
}
