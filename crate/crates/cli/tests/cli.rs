//! End-to-end tests of the `qtr` binary: flags, exit codes, output formats.

use std::io::Write;
use std::process::{Command, Output};

fn qtr(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtr"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn parse_csv(text: &str) -> (Vec<String>, Vec<Vec<f64>>) {
    let mut lines = text.lines();
    let header = lines
        .next()
        .unwrap()
        .split(',')
        .map(str::to_string)
        .collect();
    let rows = lines
        .map(|l| l.split(',').map(|f| f.parse::<f64>().unwrap()).collect())
        .collect();
    (header, rows)
}

const STEADY: &[&str] = &[
    "steady-state",
    "--tc", "1", "--th", "2", "--gc", "1", "--gh", "1", "--lambda", "1",
    "--wc", "1", "--wh", "2",
];

#[test]
fn steady_state_reversible_point() {
    let out = qtr(STEADY);
    assert!(out.status.success(), "{}", stderr(&out));
    let (header, rows) = parse_csv(&stdout(&out));
    assert_eq!(header[0], "p_g");
    let row = &rows[0];
    let idx = |name: &str| header.iter().position(|h| h == name).unwrap();
    // cop = 1, first law, and zero fluxes at ωc/Tc = ωh/Th
    assert_eq!(row[idx("cop")], 1.0);
    assert!(row[idx("qc_dot")].abs() < 1e-15);
    let (qh, qc, p) = (row[idx("qh_dot")], row[idx("qc_dot")], row[idx("power")]);
    assert!((qh - qc - p).abs() <= 1e-12 * qh.abs().max(1e-300));
}

#[test]
fn steady_state_occupation_override_matches_closed_form() {
    let mut args = STEADY.to_vec();
    args.extend(["--nc", "1.0", "--nh", "0.5"]);
    let out = qtr(&args);
    assert!(out.status.success());
    let (header, rows) = parse_csv(&stdout(&out));
    let idx = |name: &str| header.iter().position(|h| h == name).unwrap();
    assert_eq!(rows[0][idx("rho10_re")], 0.0);
    assert!((rows[0][idx("rho10_im")] + 0.019_417_5).abs() < 1e-7);
}

#[test]
fn steady_state_validation_errors_name_the_flag() {
    let out = qtr(&[
        "steady-state", "--tc", "-1", "--th", "2", "--gc", "1", "--gh", "1",
        "--lambda", "1", "--wc", "1", "--wh", "2",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("--tc"));
}

#[test]
fn steady_state_json_records() {
    let mut args = STEADY.to_vec();
    args.extend(["--format", "json"]);
    let out = qtr(&args);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&out).lines().next().unwrap()).unwrap();
    assert_eq!(v["cop"], 1.0);
    assert!(v.get("p_g").is_some());
}

#[test]
fn verify_series_passes_and_exits_zero() {
    let out = qtr(&["verify", "--suite", "series"]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("[PASS]"));
    assert!(text.contains("PASS:"));
}

#[test]
fn verify_unknown_suite_exits_one() {
    let out = qtr(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("unknown suite"));
}

#[test]
fn verify_failure_exits_two() {
    let out = qtr(&["verify", "--suite", "series", "--tol", "1e-12"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).contains("[FAIL]"));
}

#[test]
fn verify_oracle_honors_seed_sources() {
    let out = qtr(&["verify", "--suite", "oracle", "--seed", "42", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["seed"], 42);
    assert_eq!(v["pass"], true);

    let out = Command::new(env!("CARGO_BIN_EXE_qtr"))
        .args(["verify", "--suite", "oracle", "--format", "json"])
        .env("QTR_SEED", "7")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["seed"], 7);
    assert_eq!(v["pass"], true);
}

#[test]
fn figure3_columns_and_limits() {
    let out = qtr(&["figure", "--id", "3", "--lo", "1e-4", "--hi", "20", "--points", "50"]);
    assert!(out.status.success());
    let (header, rows) = parse_csv(&stdout(&out));
    assert_eq!(header, vec!["zeta_C", "R_inf", "R_zero"]);
    assert_eq!(rows.len(), 50);
    // the small-zeta_C end approaches 1 - 1/sqrt(2) and 3/4
    assert!((rows[0][1] - 0.292_893).abs() < 1e-4);
    assert!((rows[0][2] - 0.75).abs() < 1e-4);
}

#[test]
fn figure_writes_file_and_rejects_bad_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig4.csv");
    let out = qtr(&["figure", "--id", "4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("zeta_C,cp_B8_scaled,cp_B9_scaled"));
    assert_eq!(text.lines().count(), 401);

    let out = qtr(&["figure", "--id", "4", "--out", "/nonexistent-dir/f.csv"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn table1_renders_markers() {
    let out = qtr(&["table1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("verified"));
    assert!(text.contains("not computed (companion engine result)"));
    assert!(text.contains("2/3·ζC + 1/9"));
}

#[test]
fn sweep_config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("sweep.conf");
    let mut f = std::fs::File::create(&config).unwrap();
    writeln!(
        f,
        "# strong-coupling gamma scan\nregime=high_t_strong\nobjective=omega\nparam=gamma\nlo=1e-6\nhi=1e6\npoints=11\noptimize=wc\nfix.tau=0.5\nfix.wh=1.0"
    )
    .unwrap();
    let out = qtr(&[
        "sweep", "--config", config.to_str().unwrap(), "--points", "25",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let (header, rows) = parse_csv(&stdout(&out));
    assert_eq!(header, vec!["gamma", "argmax_wc", "omega", "cop"]);
    // flag override wins over the file's 11 points
    assert_eq!(rows.len(), 25);
    // COP confined to the strong-coupling window and nonincreasing
    let (zeta_yc, zeta_p) = (0.689_897_948_556_635_6, 5.0 / 7.0);
    let mut last = f64::INFINITY;
    for row in &rows {
        let cop = row[3];
        assert!(cop >= zeta_yc - 1e-9 && cop <= zeta_p + 1e-9, "cop {cop}");
        assert!(cop <= last + 1e-9);
        last = cop;
    }
}

#[test]
fn sweep_single_point_matches_steady_state() {
    // a degenerate full-regime sweep reproduces the steady-state command
    let out = qtr(&[
        "sweep", "--regime", "full", "--objective", "omega", "--param", "wc",
        "--lo", "0.8", "--hi", "0.8", "--points", "2",
        "--fix", "tc=1", "--fix", "th=2", "--fix", "gc=1", "--fix", "gh=1",
        "--fix", "lambda=1", "--fix", "wh=2",
    ]);
    assert!(out.status.success(), "{}", stderr(&out));
    let (_, rows) = parse_csv(&stdout(&out));
    assert_eq!(rows[0], rows[1]);

    let steady = qtr(&[
        "steady-state", "--tc", "1", "--th", "2", "--gc", "1", "--gh", "1",
        "--lambda", "1", "--wc", "0.8", "--wh", "2",
    ]);
    let (header, srows) = parse_csv(&stdout(&steady));
    let idx = header.iter().position(|h| h == "omega").unwrap();
    assert!((rows[0][1] - srows[0][idx]).abs() <= 1e-12 * srows[0][idx].abs());
}

#[test]
fn sweep_rejects_swept_fixed_conflict() {
    let out = qtr(&[
        "sweep", "--regime", "high_t_strong", "--objective", "omega",
        "--param", "gamma", "--lo", "0.1", "--hi", "1", "--points", "5",
        "--fix", "gamma=1", "--fix", "tau=0.5", "--fix", "wc=0.3", "--fix", "wh=1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("also fixed"));
}

#[test]
fn missing_required_flag_exits_one() {
    let out = qtr(&["steady-state", "--tc", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_exits_zero() {
    let out = qtr(&["--help"]);
    assert!(out.status.success());
}
