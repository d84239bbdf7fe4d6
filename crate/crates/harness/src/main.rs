use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use schurweyl::config::{parse_grid, ExperimentConfig, SpectrumSource};
use schurweyl::experiments::{self, SearchPlan};
use schurweyl::selftest::{self, Level};
use schurweyl_core::Estimator;

#[derive(Parser)]
#[command(name = "schurweyl", version, about = "Seeded spectrum-entropy estimation experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// One seeded estimate on one spectrum.
    Estimate(Common),
    /// Trials over a (d, n) grid, or a copy-complexity threshold search with --search.
    Sweep {
        #[command(flatten)]
        common: Common,
        /// Search for the smallest n reaching success 2/3 for each d.
        #[arg(long)]
        search: bool,
        /// Trials per probed n in search mode.
        #[arg(long, default_value_t = 200)]
        search_trials: usize,
        /// First n probed in search mode.
        #[arg(long, default_value_t = 4)]
        search_start: usize,
    },
    /// Two-point test error against the uniform spectrum, with the chi-square series.
    Lowerbound {
        #[command(flatten)]
        common: Common,
        /// Estimate the error by sampling even when exact tables are available.
        #[arg(long)]
        monte_carlo: bool,
    },
    /// Runs the invariant suites; exits with 1 on any failure.
    Selftest {
        /// quick or full
        #[arg(default_value = "quick")]
        level: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
    },
}

#[derive(Args)]
struct Common {
    /// Rényi order; 1 selects von Neumann entropy.
    #[arg(long, default_value_t = 2.0)]
    alpha: f64,
    /// Dimension grid, e.g. `8,16,32` or `8..64` (doubling).
    #[arg(long, default_value = "8")]
    d: String,
    /// Copy-number grid, same syntax as --d.
    #[arg(long, default_value = "1000")]
    n: String,
    /// Additive accuracy target in nats.
    #[arg(long, default_value_t = 0.2)]
    eps: f64,
    /// Parameter of the lower-bound spectra (defaults to --eps).
    #[arg(long)]
    spectrum_eps: Option<f64>,
    #[arg(long, default_value_t = 200)]
    trials: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// uniform, lb-int, lb-small, skewed, or a file of probabilities.
    #[arg(long, default_value = "uniform")]
    spectrum: String,
    /// Median-of-k amplification per trial (odd).
    #[arg(long, default_value_t = 1)]
    repeats: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
}

impl Common {
    fn config(&self) -> anyhow::Result<ExperimentConfig> {
        let config = ExperimentConfig {
            alpha: self.alpha,
            d: parse_grid(&self.d)?,
            n: parse_grid(&self.n)?,
            eps: self.eps,
            spectrum_eps: self.spectrum_eps,
            trials: self.trials,
            seed: self.seed,
            spectrum: self.spectrum.parse::<SpectrumSource>()?,
            out: self.out.clone(),
            repeats: self.repeats,
        };
        config.validate()?;
        Ok(config)
    }
}

fn install_threads(threads: Option<usize>) -> anyhow::Result<()> {
    if let Some(t) = threads {
        if t == 0 {
            anyhow::bail!("--threads must be positive");
        }
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global()?;
    }
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Estimate(common) => {
            install_threads(common.threads)?;
            let config = common.config()?;
            let (_, table) = experiments::estimate(&config)?;
            table.write_to(config.out.as_deref())?;
        }
        Command::Sweep { common, search, search_trials, search_start } => {
            install_threads(common.threads)?;
            let config = common.config()?;
            if search {
                let plan = SearchPlan {
                    trials: search_trials,
                    start: search_start,
                    ..SearchPlan::default()
                };
                let estimator = Estimator::for_order(config.alpha)?;
                let result = experiments::threshold_sweep(&config, estimator, &plan)?;
                experiments::threshold_table(&config, &plan, &result).write_to(config.out.as_deref())?;
            } else {
                let (_, table) = experiments::sweep(&config)?;
                table.write_to(config.out.as_deref())?;
            }
        }
        Command::Lowerbound { common, monte_carlo } => {
            install_threads(common.threads)?;
            let config = common.config()?;
            let (_, table) = experiments::lowerbound(&config, monte_carlo)?;
            table.write_to(config.out.as_deref())?;
        }
        Command::Selftest { level, seed, out, threads } => {
            install_threads(threads)?;
            let level: Level = level.parse().map_err(anyhow::Error::msg)?;
            let outcomes = selftest::run(level, seed);
            for o in &outcomes {
                eprintln!(
                    "{} {:<24} cases={:<7} violations={} {}",
                    if o.passed() { "PASS" } else { "FAIL" },
                    o.name,
                    o.cases,
                    o.violations,
                    o.detail
                );
            }
            if let Some(path) = out {
                selftest::report_table(level, seed, &outcomes).write_to(Some(&path))?;
            }
            if outcomes.iter().any(|o| !o.passed()) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
