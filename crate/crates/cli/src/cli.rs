use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::bench::{self, DEFAULT_REPS};
use crate::config::{parse_ladder, parse_order, SuiteConfig};
use crate::convergence;
use crate::error::{exit, CliError, Result};
use crate::report::Report;
use crate::suites;

/// Overrides the directory for output files and the default report location.
pub const OUT_DIR_ENV: &str = "PROCA_LAB_OUT_DIR";
pub const DEFAULT_REPORT: &str = "verify_report.json";

#[derive(Debug, Parser)]
#[command(
    name = "proca-lab",
    version,
    about = "Verification lab for two-potential Proca electrodynamics"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the verification suites and report each property.
    Verify {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Residual norms of known solutions along a spacing ladder.
    Convergence {
        #[arg(long)]
        config: Option<PathBuf>,
        /// Comma-separated spacings, each half the previous.
        #[arg(long)]
        ladder: Option<String>,
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Time Cl(3) against Cl(1,3) products and residual evaluations.
    Bench {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_REPS)]
        reps: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Pretty-print a JSON verification report.
    Report {
        #[arg(long)]
        from: Option<PathBuf>,
    },
}

fn out_dir() -> Option<PathBuf> {
    std::env::var_os(OUT_DIR_ENV)
        .filter(|v| !v.is_empty())
        .map(PathBuf::from)
}

/// Joins relative paths onto the output directory; with no path, falls back
/// to `default_name` inside it.
fn output_path(path: Option<PathBuf>, default_name: &str) -> Option<PathBuf> {
    match (path, out_dir()) {
        (Some(p), Some(dir)) if p.is_relative() => Some(dir.join(p)),
        (Some(p), _) => Some(p),
        (None, Some(dir)) => Some(dir.join(default_name)),
        (None, None) => None,
    }
}

fn load_config(path: Option<&Path>) -> Result<SuiteConfig> {
    match path {
        Some(p) => SuiteConfig::load(p),
        None => Ok(SuiteConfig::default()),
    }
}

fn create(path: &Path) -> Result<std::fs::File> {
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        std::fs::create_dir_all(parent).map_err(|e| CliError::io(parent.display().to_string(), e))?;
    }
    std::fs::File::create(path).map_err(|e| CliError::io(path.display().to_string(), e))
}

fn verify(config: Option<PathBuf>, seed: Option<u64>, json: Option<PathBuf>) -> Result<i32> {
    let mut cfg = load_config(config.as_deref())?;
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let results = suites::run_all(&cfg).map_err(|e| CliError::Config(e.to_string()))?;
    let report = Report::new(cfg.seed, results);
    print!("{}", report.pretty());
    if let Some(path) = output_path(json, DEFAULT_REPORT) {
        create(&path)?;
        report.write(&path)?;
    }
    for f in report.failures() {
        eprintln!("FAIL {}.{}", f.suite, f.property);
    }
    Ok(if report.passed { exit::PASS } else { exit::FAIL })
}

fn run_convergence(
    config: Option<PathBuf>,
    ladder: Option<String>,
    order: Option<String>,
    csv: Option<PathBuf>,
) -> Result<i32> {
    let mut cfg = load_config(config.as_deref())?;
    if let Some(l) = ladder {
        cfg.ladder = parse_ladder(&l)?;
    }
    if let Some(o) = order {
        cfg.order = parse_order(&o)?;
    }
    let rows = convergence::convergence_table(&cfg, &cfg.ladder, cfg.order)
        .map_err(|e| CliError::Config(e.to_string()))?;
    match output_path(csv, "convergence.csv") {
        Some(path) => convergence::write_csv(&rows, create(&path)?)?,
        None => convergence::write_csv(&rows, std::io::stdout().lock())?,
    }
    let mut failed = false;
    for r in rows.iter().filter(|r| !r.accepted) {
        failed = true;
        eprintln!(
            "FAIL {} {} at spacing {}: slope {:.3}",
            r.config, r.equation, r.spacing, r.slope
        );
    }
    Ok(if failed { exit::FAIL } else { exit::PASS })
}

fn run_bench(config: Option<PathBuf>, reps: usize, csv: Option<PathBuf>) -> Result<i32> {
    let cfg = load_config(config.as_deref())?;
    let records = bench::run_bench(cfg.seed, reps)?;
    match output_path(csv, "bench.csv") {
        Some(path) => bench::write_csv(&records, create(&path)?)?,
        None => bench::write_csv(&records, std::io::stdout().lock())?,
    }
    let mut err = std::io::stderr().lock();
    for r in records.iter().filter(|r| r.formalism == bench::Formalism::Sta) {
        let _ = writeln!(
            err,
            "{}: Cl(1,3)/Cl(3) median ratio {:.3}",
            r.operation, r.ratio_to_aps
        );
    }
    Ok(exit::PASS)
}

fn report(from: Option<PathBuf>) -> Result<i32> {
    let path = from
        .or_else(|| out_dir().map(|d| d.join(DEFAULT_REPORT)))
        .ok_or_else(|| CliError::Config(format!("no --from path and {OUT_DIR_ENV} is unset")))?;
    print!("{}", Report::read(&path)?.pretty());
    Ok(exit::PASS)
}

/// Runs one command and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let outcome = match cli.command {
        Command::Verify { config, seed, json } => verify(config, seed, json),
        Command::Convergence {
            config,
            ladder,
            order,
            csv,
        } => run_convergence(config, ladder, order, csv),
        Command::Bench { config, reps, csv } => run_bench(config, reps, csv),
        Command::Report { from } => report(from),
    };
    outcome.unwrap_or_else(|e| {
        eprintln!("error: {e}");
        exit::USAGE
    })
}
