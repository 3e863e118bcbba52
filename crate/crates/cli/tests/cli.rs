//! End-to-end tests of the `otto` binary: flag handling, config files,
//! output formats, and the exit-code contract (0 ok, 2 validation,
//! 3 infeasible, 4 MC failure).

use otto_core::optimum::{ca_cop, ca_efficiency, engine_optimum_closed, fridge_optimum_closed};
use otto_core::{CycleConfig, SqueezedReservoir};
use std::io::Write;
use std::process::{Command, Output};

fn otto(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_otto"))
        .args(args)
        .env_remove("OTTO_SEED")
        .output()
        .expect("binary runs")
}

fn otto_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_otto"))
        .args(args)
        .env_remove("OTTO_SEED")
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("json stdout")
}

fn temp_config(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(content.as_bytes()).unwrap();
    file
}

#[test]
fn point_classical_example() {
    let out = otto(&[
        "point", "--tc", "0.25", "--th", "1", "--rc", "0", "--rh", "0", "--wc", "1", "--wh", "2",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["engine"]["w_total"], 0.25);
    assert_eq!(v["engine"]["eta"], 0.5);
    assert_eq!(v["windows"]["engine"]["feasible"], true);
}

#[test]
fn point_degenerate_baths_report_negative_work() {
    let out = otto(&[
        "point", "--tc", "1", "--th", "1", "--rc", "0", "--rh", "0", "--wc", "1", "--wh", "2",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert!(v["engine"]["w_total"].as_f64().unwrap() < 0.0);
    assert_eq!(v["windows"]["engine"]["feasible"], false);
}

#[test]
fn point_rejects_reversed_frequencies() {
    let out = otto(&["point", "--wc", "2", "--wh", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("omega_c must be < omega_h"));
}

#[test]
fn point_engine_signs_flag_exposes_both_conventions() {
    let out = otto(&[
        "point",
        "--tc",
        "0.5",
        "--th",
        "1",
        "--wc",
        "0.3",
        "--wh",
        "1",
        "--engine-signs",
        "--format",
        "json",
    ]);
    let v = json(&out);
    let adopted = v["fridge"]["q_c"].as_f64().unwrap();
    let engine_signed = v["fridge_engine_signed"]["q_c"].as_f64().unwrap();
    assert_eq!(adopted, 0.2);
    assert_eq!(engine_signed, -0.2);
    assert_eq!(v["fridge"]["eps"], v["fridge_engine_signed"]["eps"]);
}

#[test]
fn optimize_engine_classical() {
    let out = otto(&[
        "optimize", "engine", "--tc", "0.25", "--th", "1", "--rc", "0", "--rh", "0", "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["closed_form"]["ratio_star"], 0.5);
    assert_eq!(v["closed_form"]["merit"], 0.5);
}

#[test]
fn optimize_fridge_symmetric_squeeze() {
    let out = otto(&[
        "optimize", "fridge", "--tc", "0.75", "--th", "1", "--rc", "0.3", "--rh", "0.3",
        "--format", "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["closed_form"]["merit"], 1.0);
}

#[test]
fn optimize_infeasible_exits_3() {
    let out = otto(&[
        "optimize", "engine", "--tc", "0.75", "--th", "1", "--rc", "0.5", "--rh", "0.25",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("no operating window: T_c cosh(2r_c) >= T_h cosh(2r_h)"));
}

#[test]
fn optimize_numeric_reports_discrepancy() {
    let out = otto(&[
        "optimize",
        "engine",
        "--tc",
        "0.25",
        "--th",
        "1",
        "--numeric",
        "--tol",
        "1e-10",
        "--format",
        "json",
    ]);
    let v = json(&out);
    assert_eq!(v["numeric"]["method"], "numeric");
    assert!(v["numeric"]["iterations"].as_u64().unwrap() > 0);
    assert!(v["discrepancy"]["ratio_star"].as_f64().unwrap() < 1e-8);
}

#[test]
fn sweep_headers_are_bit_exact() {
    let grid = stdout(&otto(&["sweep", "--figure", "3", "--grid-steps", "2"]));
    assert!(grid.starts_with("rc,rh,ratio_star,merit,reference,classification\n"));
    let temp = stdout(&otto(&["sweep", "--figure", "2", "--steps", "2"]));
    assert!(temp.starts_with("tau,rc,rh,ratio_star,merit,reference,classification\n"));
    let mc = stdout(&otto(&[
        "mc-verify",
        "--samples",
        "1000",
        "--format",
        "csv",
    ]));
    assert!(mc.starts_with("t,r,omega,n,seed,mean,std_error,target,zscore,verdict\n"));
}

#[test]
fn sweep_fig3_diagonal_is_ca_equal() {
    let out = stdout(&otto(&["sweep", "--figure", "3"]));
    let mut diagonal = 0;
    for line in out.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        if fields[0] == fields[1] {
            diagonal += 1;
            assert_eq!(fields[3], "0.5", "diagonal merit in {line}");
            assert_eq!(fields[5], "CAEqual", "diagonal class in {line}");
        }
    }
    assert_eq!(diagonal, 50);
}

#[test]
fn sweep_fig2_endpoint_row_matches_single_reservoir_value() {
    let out = stdout(&otto(&["sweep", "--figure", "2"]));
    let row = out
        .lines()
        .find(|l| l.starts_with("1,0.5,1,"))
        .expect("tau = 1 row for the (0.5, 1) pair");
    let fields: Vec<&str> = row.split(',').collect();
    let merit: f64 = fields[4].parse().unwrap();
    assert!((merit - 0.359_567_121_390_072_3).abs() < 1e-6);
    assert_eq!(fields[6], "Enhanced");
}

#[test]
fn sweep_fig5_enhancement_requires_colder_squeeze() {
    let out = stdout(&otto(&["sweep", "--figure", "5"]));
    let mut enhanced = 0;
    for line in out.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        let (rc, rh): (f64, f64) = (fields[0].parse().unwrap(), fields[1].parse().unwrap());
        if fields[5] == "Enhanced" {
            enhanced += 1;
            assert!(rc > rh, "enhanced cell at rc = {rc}, rh = {rh}");
        }
    }
    assert!(enhanced > 0);
}

#[test]
fn sweep_infeasible_rows_have_empty_merit_and_no_nan_ever() {
    let out = stdout(&otto(&["sweep", "--figure", "5"]));
    assert!(!out.contains("NaN") && !out.contains("nan"));
    let mut infeasible = 0;
    for line in out.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        if fields[5] == "Infeasible" {
            infeasible += 1;
            assert_eq!(fields[2], "", "ratio_star must be empty in {line}");
            assert_eq!(fields[3], "", "merit must be empty in {line}");
        } else {
            assert!(!fields[3].is_empty(), "feasible row lacks merit: {line}");
        }
    }
    assert!(infeasible > 0);
}

#[test]
fn sweep_csv_roundtrips_through_the_library() {
    // re-evaluate every feasible row from the emitted numbers alone
    let out = stdout(&otto(&["sweep", "--figure", "3"]));
    for line in out.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        if fields[5] == "Infeasible" {
            continue;
        }
        let (rc, rh): (f64, f64) = (fields[0].parse().unwrap(), fields[1].parse().unwrap());
        let merit: f64 = fields[3].parse().unwrap();
        let reference: f64 = fields[4].parse().unwrap();
        let cfg = CycleConfig::new(
            SqueezedReservoir::new(0.25, rc).unwrap(),
            SqueezedReservoir::new(1.0, rh).unwrap(),
            1.0,
            2.0,
        )
        .unwrap();
        let opt = engine_optimum_closed(&cfg).unwrap();
        assert!((opt.merit - merit).abs() < 1e-9, "merit mismatch in {line}");
        assert!(
            (ca_efficiency(0.25).unwrap() - reference).abs() < 1e-9,
            "reference mismatch in {line}"
        );
    }

    let out = stdout(&otto(&["sweep", "--figure", "4"]));
    for line in out.lines().skip(1) {
        let fields: Vec<&str> = line.split(',').collect();
        if fields[6] == "Infeasible" {
            continue;
        }
        let tau: f64 = fields[0].parse().unwrap();
        let (rc, rh): (f64, f64) = (fields[1].parse().unwrap(), fields[2].parse().unwrap());
        let merit: f64 = fields[4].parse().unwrap();
        let cfg = CycleConfig::new(
            SqueezedReservoir::new(tau, rc).unwrap(),
            SqueezedReservoir::new(1.0, rh).unwrap(),
            1.0,
            2.0,
        )
        .unwrap();
        let opt = fridge_optimum_closed(&cfg).unwrap();
        assert!((opt.merit - merit).abs() < 1e-9, "merit mismatch in {line}");
        let reference: f64 = fields[5].parse().unwrap();
        assert!((ca_cop(tau).unwrap() - reference).abs() < 1e-9);
    }
}

#[test]
fn sweep_custom_needs_mode() {
    let out = otto(&["sweep", "--figure", "custom"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--mode"));
    let out = otto(&[
        "sweep", "--figure", "custom", "--mode", "fridge", "--steps", "3",
    ]);
    assert!(out.status.success());
}

#[test]
fn sweep_rejects_bad_spec() {
    let out = otto(&["sweep", "--figure", "2", "--steps", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = otto(&[
        "sweep", "--figure", "2", "--tau-lo", "0.9", "--tau-hi", "0.5",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = otto(&["sweep", "--figure", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = otto(&["sweep", "--figure", "2", "--pairs", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_pairs_override() {
    let out = stdout(&otto(&[
        "sweep", "--figure", "2", "--pairs", "0.1:0.2", "--steps", "5",
    ]));
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().skip(1).all(|l| l.contains(",0.1,0.2,")));
}

#[test]
fn config_file_provides_defaults_and_flags_override() {
    let file = temp_config(r#"{"tc": 0.25, "th": 1.0, "rc": 0.0, "rh": 0.0}"#);
    let path = file.path().to_str().unwrap();

    let out = otto(&["point", "--config", path, "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["config"]["tc"], 0.25);

    let out = otto(&["point", "--config", path, "--tc", "0.5", "--format", "json"]);
    let v = json(&out);
    assert_eq!(v["config"]["tc"], 0.5);
}

#[test]
fn empty_config_means_builtin_defaults() {
    let file = temp_config("{}");
    let out = otto(&[
        "point",
        "--config",
        file.path().to_str().unwrap(),
        "--format",
        "json",
    ]);
    let v = json(&out);
    assert_eq!(v["config"]["tc"], 0.25);
    assert_eq!(v["config"]["th"], 1.0);
    assert_eq!(v["config"]["wc"], 1.0);
    assert_eq!(v["config"]["wh"], 2.0);
}

#[test]
fn malformed_config_names_the_field() {
    let file = temp_config(r#"{"tc": "hot"}"#);
    let out = otto(&["point", "--config", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let msg = stderr(&out);
    assert!(
        msg.contains("tc") || msg.contains("line"),
        "diagnostic: {msg}"
    );

    let file = temp_config(r#"{"tcc": 1.0}"#);
    let out = otto(&["point", "--config", file.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("tcc"));
}

#[test]
fn config_seed_and_figure_keys_apply() {
    let file = temp_config(r#"{"figure": 3, "grid_steps": 2, "seed": 11}"#);
    let path = file.path().to_str().unwrap();
    let out = stdout(&otto(&["sweep", "--config", path]));
    assert_eq!(out.lines().count(), 5);
    let out = stdout(&otto(&[
        "mc-verify",
        "--config",
        path,
        "--samples",
        "1000",
        "--format",
        "csv",
    ]));
    assert!(out.lines().nth(1).unwrap().contains(",11,"));
}

#[test]
fn seed_resolution_order() {
    // env fallback
    let out = otto_env(
        &["mc-verify", "--samples", "1000", "--format", "csv"],
        "OTTO_SEED",
        "77",
    );
    assert!(stdout(&out).lines().nth(1).unwrap().contains(",77,"));
    // flag beats env
    let out = otto_env(
        &[
            "mc-verify",
            "--samples",
            "1000",
            "--seed",
            "5",
            "--format",
            "csv",
        ],
        "OTTO_SEED",
        "77",
    );
    assert!(stdout(&out).lines().nth(1).unwrap().contains(",5,"));
    // built-in default is 42
    let out = otto(&["mc-verify", "--samples", "1000", "--format", "csv"]);
    assert!(stdout(&out).lines().nth(1).unwrap().contains(",42,"));
    // invalid env value is a validation error
    let out = otto_env(
        &["mc-verify", "--samples", "1000"],
        "OTTO_SEED",
        "not-a-number",
    );
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mc_verify_passes_on_trivial_target() {
    let out = otto(&[
        "mc-verify",
        "--t",
        "1",
        "--r",
        "0",
        "--omega",
        "1",
        "--samples",
        "1000000",
        "--seed",
        "42",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["target"], 1.0);
    assert_eq!(v["verdict"], "PASS");
    assert!(v["zscore"].as_f64().unwrap().abs() <= 4.0);
}

#[test]
fn mc_verify_passes_on_squeezed_target() {
    let out = otto(&[
        "mc-verify",
        "--t",
        "0.25",
        "--r",
        "1",
        "--omega",
        "1",
        "--samples",
        "1000000",
        "--seed",
        "42",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    // target 0.25 cosh(2), rounded to 12 significant digits
    assert!((v["target"].as_f64().unwrap() - 0.940_548_922_771).abs() < 1e-11);
    assert_eq!(v["verdict"], "PASS");
}

#[test]
fn mc_verify_below_floor_exits_2() {
    let out = otto(&["mc-verify", "--samples", "10"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("below the floor"));
}

#[test]
fn mc_verify_negative_squeeze_exits_2() {
    let out = otto(&["mc-verify", "--r", "-0.5", "--samples", "1000"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn mc_verify_statistical_fluke_exits_4() {
    // seed 25978 at n = 1000 lands 4.3 sigma out; deterministic, so it
    // pins the FAIL path
    let out = otto(&[
        "mc-verify",
        "--t",
        "1",
        "--r",
        "0",
        "--samples",
        "1000",
        "--seed",
        "25978",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stdout(&out).contains("FAIL"));
    assert!(stderr(&out).contains("verification failed"));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let out = otto(&[
        "sweep",
        "--figure",
        "3",
        "--grid-steps",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    let content = std::fs::read_to_string(&path).unwrap();
    assert!(content.starts_with("rc,rh,"));
    assert_eq!(content.lines().count(), 10);
}

#[test]
fn jobs_zero_is_rejected() {
    let out = otto(&["sweep", "--figure", "3", "--jobs", "0"]);
    assert_eq!(out.status.code(), Some(2));
}
