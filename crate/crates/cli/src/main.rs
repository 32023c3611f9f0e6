//! `qtr` — steady states, verification suites, parameter sweeps, and figure
//! data for the driven three-level refrigerator.
//!
//! Exit codes: 0 on success (and on passing verification), 1 on validation
//! or I/O errors, 2 when a verification suite fails.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use qtr_cli::figures::{self, FigureId};
use qtr_cli::output::{render, Format};
use qtr_cli::params::{parse_config, ParamName};
use qtr_cli::steady::{self, SteadyStateInputs};
use qtr_cli::suites::{run_suite, Suite};
use qtr_cli::sweep::SweepConfig;
use qtr_cli::{table, DEFAULT_SEED};

use qtr_core::model::{BathSpec, DriveSpec};

#[derive(Parser)]
#[command(
    name = "qtr",
    version,
    about = "Driven three-level refrigerator: steady states, trade-off optimization, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve one operating point and print populations, coherence, and all
    /// figures of merit.
    SteadyState(SteadyStateArgs),
    /// Run a verification suite; exits 2 if any check fails.
    Verify(VerifyArgs),
    /// Emit figure source data (closed-form curves on a zeta_C grid).
    Figure(FigureArgs),
    /// Render the series-expansion comparison table with live verification
    /// markers.
    Table1(Table1Args),
    /// Sweep one parameter, optionally inner-optimizing a frequency at every
    /// grid point.
    Sweep(SweepArgs),
}

#[derive(Args)]
struct SteadyStateArgs {
    /// Cold reservoir temperature
    #[arg(long)]
    tc: f64,
    /// Hot reservoir temperature
    #[arg(long)]
    th: f64,
    /// Cold bath decay rate
    #[arg(long)]
    gc: f64,
    /// Hot bath decay rate
    #[arg(long)]
    gh: f64,
    /// Matter-field coupling
    #[arg(long)]
    lambda: f64,
    /// Cold transition frequency
    #[arg(long)]
    wc: f64,
    /// Hot transition frequency
    #[arg(long)]
    wh: f64,
    /// Override the cold occupation (needs --nh too)
    #[arg(long)]
    nc: Option<f64>,
    /// Override the hot occupation (needs --nc too)
    #[arg(long)]
    nh: Option<f64>,
    /// Output format
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: oracle | low_t | bounds_strong | bounds_weak | series |
    /// cp_ratios | chi_compare
    #[arg(long)]
    suite: String,
    /// Override the suite's headline tolerance
    #[arg(long)]
    tol: Option<f64>,
    /// Seed for randomized draws (overrides QTR_SEED)
    #[arg(long)]
    seed: Option<u64>,
    /// Output format: text | json
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct FigureArgs {
    /// Figure id: 2, 3, or 4
    #[arg(long)]
    id: String,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = figures::DEFAULT_LO)]
    lo: f64,
    #[arg(long, default_value_t = figures::DEFAULT_HI)]
    hi: f64,
    #[arg(long, default_value_t = figures::DEFAULT_POINTS)]
    points: usize,
    /// Grid spacing: log | linear
    #[arg(long, default_value = "log")]
    spacing: String,
    /// Output format
    #[arg(long, default_value = "csv")]
    format: String,
}

#[derive(Args)]
struct Table1Args {
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SweepArgs {
    /// Flat key=value config file; command-line flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    /// Regime: full | low_t | high_t_strong | high_t_weak_inf |
    /// high_t_weak_zero
    #[arg(long)]
    regime: Option<String>,
    /// Objective: omega | chi | cooling_power
    #[arg(long)]
    objective: Option<String>,
    /// Swept parameter name
    #[arg(long)]
    param: Option<String>,
    #[arg(long)]
    lo: Option<f64>,
    #[arg(long)]
    hi: Option<f64>,
    #[arg(long)]
    points: Option<usize>,
    /// Grid spacing: log | linear
    #[arg(long)]
    spacing: Option<String>,
    /// Fix a parameter, e.g. --fix tau=0.5 (repeatable)
    #[arg(long, value_name = "NAME=VALUE")]
    fix: Vec<String>,
    /// Inner-optimize wc or wh at every grid point
    #[arg(long)]
    optimize: Option<String>,
    /// Output format
    #[arg(long)]
    format: Option<String>,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let is_help =
                matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if is_help { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::SteadyState(args) => cmd_steady_state(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Figure(args) => cmd_figure(args),
        Command::Table1(args) => cmd_table1(args),
        Command::Sweep(args) => cmd_sweep(args),
    }
}

fn positive(flag: &str, v: f64) -> Result<f64> {
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        anyhow::bail!("{flag} must be a positive finite number (got {v})")
    }
}

fn cmd_steady_state(args: SteadyStateArgs) -> Result<ExitCode> {
    let baths = BathSpec::new(
        positive("--tc", args.tc)?,
        positive("--th", args.th)?,
        positive("--gc", args.gc)?,
        positive("--gh", args.gh)?,
    )
    .map_err(|e| anyhow::anyhow!("--tc/--th/--gc/--gh: {e}"))?;
    let drive = DriveSpec::new(
        positive("--wc", args.wc)?,
        positive("--wh", args.wh)?,
        positive("--lambda", args.lambda)?,
    )
    .map_err(|e| anyhow::anyhow!("--wc/--wh/--lambda: {e}"))?;
    let occupations = match (args.nc, args.nh) {
        (Some(nc), Some(nh)) => Some((nc, nh)),
        (None, None) => None,
        _ => anyhow::bail!("--nc and --nh must be given together"),
    };
    let row = steady::evaluate(&SteadyStateInputs {
        baths,
        drive,
        occupations,
    })?;
    let format: Format = args.format.parse().map_err(|e: String| anyhow::anyhow!(e))?;
    print!("{}", render(format, &steady::COLUMNS, &[row]));
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let suite = Suite::parse(&args.suite)?;
    let seed = match args.seed {
        Some(s) => s,
        None => match std::env::var("QTR_SEED") {
            Ok(v) => v
                .parse::<u64>()
                .with_context(|| format!("QTR_SEED must be an integer (got `{v}`)"))?,
            Err(_) => DEFAULT_SEED,
        },
    };
    let report = run_suite(suite, args.tol, seed)?;
    match args.format.as_str() {
        "text" => print!("{}", report.render_text()),
        "json" => print!("{}", report.render_json()),
        other => anyhow::bail!("unknown format `{other}` (expected text or json)"),
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(2)
    })
}

fn cmd_figure(args: FigureArgs) -> Result<ExitCode> {
    let id = FigureId::parse(&args.id)?;
    let log_spacing = match args.spacing.as_str() {
        "log" => true,
        "linear" => false,
        other => anyhow::bail!("unknown spacing `{other}` (expected log or linear)"),
    };
    let rows = figures::rows(id, args.lo, args.hi, args.points, log_spacing)?;
    let format: Format = args.format.parse().map_err(|e: String| anyhow::anyhow!(e))?;
    emit(&args.out, &render(format, id.columns(), &rows))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_table1(args: Table1Args) -> Result<ExitCode> {
    emit(&args.out, &table::render())?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_sweep(args: SweepArgs) -> Result<ExitCode> {
    let mut map: BTreeMap<String, String> = match &args.config {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .with_context(|| format!("cannot read config {}", path.display()))?;
            parse_config(&text)?
        }
        None => BTreeMap::new(),
    };
    // command-line flags override file values
    let overrides: [(&str, Option<String>); 8] = [
        ("regime", args.regime),
        ("objective", args.objective),
        ("param", args.param),
        ("lo", args.lo.map(|v| v.to_string())),
        ("hi", args.hi.map(|v| v.to_string())),
        ("points", args.points.map(|v| v.to_string())),
        ("spacing", args.spacing),
        ("optimize", args.optimize),
    ];
    for (key, value) in overrides {
        if let Some(v) = value {
            map.insert(key.to_string(), v);
        }
    }
    if let Some(f) = args.format {
        map.insert("format".to_string(), f);
    }
    for fix in &args.fix {
        let (name, value) = fix
            .split_once('=')
            .with_context(|| format!("--fix expects NAME=VALUE, got `{fix}`"))?;
        name.parse::<ParamName>()?;
        map.insert(format!("fix.{name}"), value.to_string());
    }
    let cfg = SweepConfig::from_map(&map)?;
    let rows = qtr_cli::sweep::run(&cfg)?;
    let columns = cfg.columns();
    let column_refs: Vec<&str> = columns.iter().map(String::as_str).collect();
    let out_path = args.out.or_else(|| map.get("out").map(PathBuf::from));
    emit(&out_path, &render(cfg.format, &column_refs, &rows))?;
    Ok(ExitCode::SUCCESS)
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}
