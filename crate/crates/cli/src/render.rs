//! Number formatting and output plumbing.
//!
//! Numbers are rounded to 12 significant digits and printed in the
//! shortest form that round-trips to the rounded value, so emitted files
//! are stable across platforms and runs.

use crate::CliError;
use std::io::Write;
use std::path::Path;

/// Round to 12 significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}")
        .parse()
        .expect("scientific form reparses")
}

/// Shortest decimal string of the 12-significant-digit rounding of `x`.
pub fn fmt_sig(x: f64) -> String {
    debug_assert!(x.is_finite(), "refusing to format {x}");
    let rounded = round_sig(x);
    if rounded == 0.0 {
        "0".to_string()
    } else {
        format!("{rounded}")
    }
}

/// Optional field: empty for `None`, never a NaN token.
pub fn fmt_opt(x: Option<f64>) -> String {
    x.map(fmt_sig).unwrap_or_default()
}

pub fn write_output(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            let stdout = std::io::stdout();
            match stdout.lock().write_all(content.as_bytes()) {
                // a downstream pipe closing early (e.g. `| head`) is a
                // normal way for consumers to stop reading
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
                other => other.map_err(|e| CliError::Io(format!("cannot write to stdout: {e}"))),
            }
        }
    }
}
