//! Seeded experiments: single estimates, sweeps over `(d, n)` grids, threshold
//! search for the number of copies, and two-point lower-bound curves.

use std::collections::BTreeMap;

use rayon::prelude::*;
use schurweyl_core::analysis::{aligned_tables, distances, wright_chisq};
use schurweyl_core::estimators::{median_amplified_estimate, renyi_entropy, Estimator};
use schurweyl_core::sampling::{exact_sw_distribution, sample_sw, spectrum_uniform, stream_rng};
use schurweyl_core::symmetric::{schur_eval, schur_ones};
use schurweyl_core::{Partition, Spectrum};

use crate::config::ExperimentConfig;
use crate::output::{fmt_f64, fmt_opt, Table};
use crate::stats::{cell_seed, isotonic_increasing, log_log_slope, wilson_interval};

/// Target success probability for a copy-complexity threshold.
pub const SUCCESS_TARGET: f64 = 2.0 / 3.0;

/// One trial of a sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub experiment: &'static str,
    pub alpha: f64,
    pub d: usize,
    pub n: usize,
    pub trial: usize,
    pub seed: u64,
    pub estimate: f64,
    pub true_value: f64,
    pub abs_error: f64,
    pub valid: bool,
    pub success: bool,
}

/// Success count of one `(d, n)` cell.
#[derive(Clone, Debug, PartialEq)]
pub struct CellSummary {
    pub d: usize,
    pub n: usize,
    pub successes: usize,
    pub trials: usize,
}

impl CellSummary {
    pub fn rate(&self) -> f64 {
        self.successes as f64 / self.trials as f64
    }

    pub fn from_rows(rows: &[SweepRow]) -> Vec<CellSummary> {
        let mut cells: Vec<CellSummary> = Vec::new();
        for r in rows {
            match cells.last_mut() {
                Some(c) if c.d == r.d && c.n == r.n => {
                    c.trials += 1;
                    c.successes += usize::from(r.success);
                }
                _ => cells.push(CellSummary {
                    d: r.d,
                    n: r.n,
                    successes: usize::from(r.success),
                    trials: 1,
                }),
            }
        }
        cells
    }
}

/// Entropy of the spectrum at the order the estimator targets.
pub fn true_entropy(eta: &Spectrum, alpha: f64) -> anyhow::Result<f64> {
    Ok(renyi_entropy(eta.probs(), alpha)?)
}

/// Everything needed to run trials of one estimator on one spectrum.
#[derive(Clone, Debug)]
pub struct Cell<'a> {
    pub eta: &'a Spectrum,
    pub d: usize,
    pub n: usize,
    pub estimator: Estimator,
    pub eps: f64,
    pub repeats: usize,
    pub seed: u64,
    pub true_value: f64,
}

impl Cell<'_> {
    fn seed_for(&self) -> u64 {
        cell_seed(self.seed, &[self.d as u64, self.n as u64])
    }

    /// Runs trials `0..trials` in parallel; rows come back in trial order.
    pub fn run(&self, trials: usize) -> anyhow::Result<Vec<SweepRow>> {
        let seed = self.seed_for();
        (0..trials)
            .into_par_iter()
            .map(|t| {
                let mut rng = stream_rng(seed, t as u64);
                let report =
                    median_amplified_estimate(self.eta, self.n, self.estimator, self.repeats, &mut rng)?;
                let abs_error = (report.entropy_estimate - self.true_value).abs();
                let valid = report.valid && report.entropy_estimate.is_finite();
                Ok(SweepRow {
                    experiment: self.estimator.name(),
                    alpha: self.estimator.order(),
                    d: self.d,
                    n: self.n,
                    trial: t,
                    seed: self.seed,
                    estimate: report.entropy_estimate,
                    true_value: self.true_value,
                    abs_error,
                    valid,
                    success: valid && abs_error <= self.eps,
                })
            })
            .collect()
    }

    pub fn success_count(&self, trials: usize) -> anyhow::Result<usize> {
        Ok(self.run(trials)?.iter().filter(|r| r.success).count())
    }
}

pub const SWEEP_HEADER: [&str; 17] = [
    "record", "experiment", "alpha", "d", "n", "trial", "seed", "estimate", "true_value",
    "abs_error", "valid", "success", "successes", "trials", "success_rate", "wilson_lo",
    "wilson_hi",
];

fn sweep_row_record(r: &SweepRow) -> Vec<String> {
    vec![
        "trial".into(),
        r.experiment.into(),
        fmt_f64(r.alpha),
        r.d.to_string(),
        r.n.to_string(),
        r.trial.to_string(),
        r.seed.to_string(),
        fmt_f64(r.estimate),
        fmt_f64(r.true_value),
        fmt_f64(r.abs_error),
        r.valid.to_string(),
        r.success.to_string(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
    ]
}

fn summary_record(c: &CellSummary, experiment: &str, alpha: f64, seed: u64) -> Vec<String> {
    let (lo, hi) = wilson_interval(c.successes, c.trials);
    let mut row = vec![String::new(); SWEEP_HEADER.len()];
    row[0] = "summary".into();
    row[1] = experiment.into();
    row[2] = fmt_f64(alpha);
    row[3] = c.d.to_string();
    row[4] = c.n.to_string();
    row[6] = seed.to_string();
    row[12] = c.successes.to_string();
    row[13] = c.trials.to_string();
    row[14] = fmt_f64(c.rate());
    row[15] = fmt_f64(lo);
    row[16] = fmt_f64(hi);
    row
}

/// One seeded run; the row layout matches [`sweep`].
pub fn estimate(config: &ExperimentConfig) -> anyhow::Result<(SweepRow, Table)> {
    config.validate()?;
    let d = config.d[0];
    let n = config.n[0];
    let eta = config.spectrum_for(d)?;
    let cell = Cell {
        eta: &eta,
        d: eta.dimension(),
        n,
        estimator: Estimator::for_order(config.alpha)?,
        eps: config.eps,
        repeats: config.repeats,
        seed: config.seed,
        true_value: true_entropy(&eta, config.alpha)?,
    };
    let row = cell.run(1)?.pop().expect("one trial");
    let mut table = Table::new("estimate", config.metadata(), &SWEEP_HEADER);
    table.push(sweep_row_record(&row));
    Ok((row, table))
}

/// Every `(d, n)` cell of the grid, `trials` rows each, followed by one
/// summary row per cell.
pub fn sweep(config: &ExperimentConfig) -> anyhow::Result<(Vec<SweepRow>, Table)> {
    config.validate()?;
    let estimator = Estimator::for_order(config.alpha)?;
    let mut rows = Vec::new();
    for &d in &config.d {
        let eta = config.spectrum_for(d)?;
        let true_value = true_entropy(&eta, config.alpha)?;
        for &n in &config.n {
            let cell = Cell {
                eta: &eta,
                d: eta.dimension(),
                n,
                estimator,
                eps: config.eps,
                repeats: config.repeats,
                seed: config.seed,
                true_value,
            };
            rows.extend(cell.run(config.trials)?);
        }
    }
    let mut table = Table::new("sweep", config.metadata(), &SWEEP_HEADER);
    for r in &rows {
        table.push(sweep_row_record(r));
    }
    for c in CellSummary::from_rows(&rows) {
        table.push(summary_record(&c, estimator.name(), estimator.order(), config.seed));
    }
    Ok((rows, table))
}

/// Threshold search settings.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchPlan {
    /// Trials per probed `n`.
    pub trials: usize,
    /// First `n` probed.
    pub start: usize,
    /// Stop bisecting once the bracket is narrower than this fraction of `n`.
    pub resolution: f64,
    /// Give up when doubling passes this many copies.
    pub max_n: usize,
}

impl Default for SearchPlan {
    fn default() -> Self {
        Self {
            trials: 200,
            start: 4,
            resolution: 0.05,
            max_n: 1 << 24,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Threshold {
    pub d: usize,
    /// Smallest probed `n` whose smoothed success rate reaches the target.
    pub n: usize,
    /// Every probe as `(n, successes, trials)`, sorted by `n`.
    pub probes: Vec<(usize, usize, usize)>,
}

/// Smallest `n` with success probability at least 2/3: doubling until the
/// target is met, then bisection. The reported threshold is read off an
/// isotonic (non-decreasing in `n`) fit to all probes, which smooths out
/// Monte Carlo noise near the target.
pub fn threshold_search(
    eta: &Spectrum,
    estimator: Estimator,
    eps: f64,
    seed: u64,
    plan: &SearchPlan,
) -> anyhow::Result<Threshold> {
    let d = eta.dimension();
    let true_value = true_entropy(eta, estimator.order())?;
    let min_n = match estimator {
        Estimator::IntegralRenyi(a) => a as usize,
        _ => 1,
    };
    let mut probes: BTreeMap<usize, usize> = BTreeMap::new();
    let probe = |n: usize, probes: &mut BTreeMap<usize, usize>| -> anyhow::Result<f64> {
        if let Some(&s) = probes.get(&n) {
            return Ok(s as f64 / plan.trials as f64);
        }
        let cell = Cell {
            eta,
            d,
            n,
            estimator,
            eps,
            repeats: 1,
            seed,
            true_value,
        };
        let s = cell.success_count(plan.trials)?;
        probes.insert(n, s);
        Ok(s as f64 / plan.trials as f64)
    };
    let mut lo = 0usize;
    let mut hi = plan.start.max(min_n);
    while probe(hi, &mut probes)? < SUCCESS_TARGET {
        lo = hi;
        hi *= 2;
        if hi > plan.max_n {
            anyhow::bail!("no n up to {} reaches the success target at d = {d}", plan.max_n);
        }
    }
    while hi - lo > 1 && (hi - lo) as f64 > plan.resolution * hi as f64 {
        let mid = lo + (hi - lo) / 2;
        if mid < min_n {
            lo = mid;
            continue;
        }
        if probe(mid, &mut probes)? >= SUCCESS_TARGET {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let ns: Vec<usize> = probes.keys().copied().collect();
    let rates: Vec<f64> = probes.values().map(|&s| s as f64 / plan.trials as f64).collect();
    let smooth = isotonic_increasing(&rates, &vec![1.0; rates.len()]);
    let n = ns
        .iter()
        .zip(&smooth)
        .find(|(_, &r)| r >= SUCCESS_TARGET)
        .map(|(&n, _)| n)
        .unwrap_or(hi);
    Ok(Threshold {
        d,
        n,
        probes: probes.into_iter().map(|(n, s)| (n, s, plan.trials)).collect(),
    })
}

/// Thresholds across the `d` grid and the fitted slope of `ln n*` against `ln d`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdSweep {
    pub thresholds: Vec<Threshold>,
    pub slope: Option<f64>,
}

pub fn threshold_sweep(
    config: &ExperimentConfig,
    estimator: Estimator,
    plan: &SearchPlan,
) -> anyhow::Result<ThresholdSweep> {
    config.validate()?;
    let mut thresholds = Vec::new();
    for &d in &config.d {
        let eta = config.spectrum_for(d)?;
        thresholds.push(threshold_search(&eta, estimator, config.eps, config.seed, plan)?);
    }
    let xs: Vec<f64> = thresholds.iter().map(|t| t.d as f64).collect();
    let ys: Vec<f64> = thresholds.iter().map(|t| t.n as f64).collect();
    let slope = log_log_slope(&xs, &ys).map(|(s, _)| s);
    Ok(ThresholdSweep { thresholds, slope })
}

pub const SEARCH_HEADER: [&str; 9] = [
    "record", "d", "n", "successes", "trials", "success_rate", "wilson_lo", "wilson_hi", "value",
];

pub fn threshold_table(config: &ExperimentConfig, plan: &SearchPlan, result: &ThresholdSweep) -> Table {
    let mut meta = config.metadata();
    meta.push(format!("search_trials={}", plan.trials));
    meta.push(format!("search_start={}", plan.start));
    meta.push(format!("search_resolution={}", plan.resolution));
    let mut table = Table::new("sweep-search", meta, &SEARCH_HEADER);
    for t in &result.thresholds {
        for &(n, s, trials) in &t.probes {
            let (lo, hi) = wilson_interval(s, trials);
            table.push(vec![
                "probe".into(),
                t.d.to_string(),
                n.to_string(),
                s.to_string(),
                trials.to_string(),
                fmt_f64(s as f64 / trials as f64),
                fmt_f64(lo),
                fmt_f64(hi),
                String::new(),
            ]);
        }
        let mut row = vec![String::new(); SEARCH_HEADER.len()];
        row[0] = "threshold".into();
        row[1] = t.d.to_string();
        row[2] = t.n.to_string();
        row[8] = t.n.to_string();
        table.push(row);
    }
    let mut row = vec![String::new(); SEARCH_HEADER.len()];
    row[0] = "slope".into();
    row[8] = fmt_opt(result.slope);
    table.push(row);
    table
}

/// One row of a two-point lower-bound curve.
#[derive(Clone, Debug, PartialEq)]
pub struct LowerBoundRow {
    pub n: usize,
    pub method: &'static str,
    /// Bayes error `1/2 - TV/2` (exact) or likelihood-ratio classifier error.
    pub error: f64,
    pub std_error: Option<f64>,
    pub tv: Option<f64>,
    pub kl: Option<f64>,
    pub chisq: Option<f64>,
    pub chisq_series: f64,
    pub series_last_layer: f64,
}

pub const LOWERBOUND_HEADER: [&str; 9] = [
    "n", "method", "error", "std_error", "tv", "kl", "chisq", "chisq_series", "series_last_layer",
];

/// Default truncation of the chi-square series.
pub const SERIES_MAX_SIZE: usize = 10;

/// Two-point test between the configured spectrum `η` and the uniform
/// spectrum of the same dimension. `n ≤ 12` uses exact tables; larger `n` (or
/// `monte_carlo = true`) estimate the error of the likelihood-ratio test from
/// `trials` shapes per hypothesis.
pub fn lowerbound(config: &ExperimentConfig, monte_carlo: bool) -> anyhow::Result<(Vec<LowerBoundRow>, Table)> {
    config.validate()?;
    let d = config.d[0];
    let eta = config.spectrum_for(d)?;
    let d = eta.dimension();
    let nu = spectrum_uniform::<f64>(d)?;
    let x: Vec<f64> = eta.probs().iter().map(|p| d as f64 * p - 1.0).collect();
    let mut rows = Vec::new();
    for &n in &config.n {
        let (chisq_series, series_last_layer) = wright_chisq(&x, n, d, SERIES_MAX_SIZE)?;
        let row = if !monte_carlo && n <= schurweyl_core::EXACT_REGIME_LIMIT {
            let a = exact_sw_distribution(&eta, n)?;
            let b = exact_sw_distribution(&nu, n)?;
            let (_, pa, pb) = aligned_tables(&a, &b);
            let dist = distances(&pa, &pb);
            LowerBoundRow {
                n,
                method: "exact",
                error: 0.5 - 0.5 * dist.tv,
                std_error: None,
                tv: Some(dist.tv),
                kl: Some(dist.kl),
                chisq: Some(dist.chisq),
                chisq_series,
                series_last_layer,
            }
        } else {
            let (error, se) = likelihood_ratio_error(&eta, &nu, n, config.trials, config.seed)?;
            LowerBoundRow {
                n,
                method: "monte-carlo",
                error,
                std_error: Some(se),
                tv: None,
                kl: None,
                chisq: None,
                chisq_series,
                series_last_layer,
            }
        };
        rows.push(row);
    }
    let mut table = Table::new("lowerbound", config.metadata(), &LOWERBOUND_HEADER);
    for r in &rows {
        table.push(vec![
            r.n.to_string(),
            r.method.into(),
            fmt_f64(r.error),
            fmt_opt(r.std_error),
            fmt_opt(r.tv),
            fmt_opt(r.kl),
            fmt_opt(r.chisq),
            fmt_f64(r.chisq_series),
            fmt_f64(r.series_last_layer),
        ]);
    }
    Ok((rows, table))
}

/// `ln(SW_η(λ) / SW_ν(λ))` for `ν` uniform; dimensions cancel and the Schur
/// values are taken at `d·η` to stay in floating-point range.
fn log_likelihood_ratio(lambda: &Partition, eta_scaled: &[f64]) -> f64 {
    let d = eta_scaled.len();
    let top = schur_eval(lambda, eta_scaled);
    let bottom = <f64 as schurweyl_core::Scalar>::from_biguint(&schur_ones(lambda, d));
    let ratio: f64 = top / bottom;
    ratio.ln()
}

/// Error of the likelihood-ratio test with equal priors, estimated from
/// `trials` shapes under each hypothesis. Ties count half.
pub fn likelihood_ratio_error(
    eta: &Spectrum,
    nu: &Spectrum,
    n: usize,
    trials: usize,
    seed: u64,
) -> anyhow::Result<(f64, f64)> {
    let d = eta.dimension().max(nu.dimension());
    let scale = |s: &Spectrum| -> Vec<f64> {
        s.padded(d).probs().iter().map(|p| p * d as f64).collect()
    };
    let (eta_scaled, nu_scaled) = (scale(eta), scale(nu));
    let loss = |truth_is_eta: bool, lambda: &Partition| -> f64 {
        let lr = log_likelihood_ratio(lambda, &eta_scaled) - log_likelihood_ratio(lambda, &nu_scaled);
        if lr.abs() < 1e-12 || lr.is_nan() {
            0.5
        } else if (lr > 0.0) == truth_is_eta {
            0.0
        } else {
            1.0
        }
    };
    let s = cell_seed(seed, &[n as u64, 0x1b]);
    let losses: Vec<f64> = (0..2 * trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream_rng(s, t as u64);
            let truth_is_eta = t % 2 == 0;
            let lambda = sample_sw(if truth_is_eta { eta } else { nu }, n, &mut rng)?;
            Ok(loss(truth_is_eta, &lambda))
        })
        .collect::<anyhow::Result<_>>()?;
    let k = losses.len() as f64;
    let mean = losses.iter().sum::<f64>() / k;
    let var = losses.iter().map(|l| (l - mean).powi(2)).sum::<f64>() / (k - 1.0).max(1.0);
    Ok((mean, (var / k).sqrt()))
}
