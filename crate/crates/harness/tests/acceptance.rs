//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.
//!
//! Run with `cargo test --release -p schurweyl --test acceptance`.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use schurweyl::checks::{self, CheckOutcome};
use schurweyl::config::{ExperimentConfig, SpectrumSource};
use schurweyl::experiments::{sweep, threshold_sweep, SearchPlan};
use schurweyl_core::Estimator;

const SEED: u64 = 20240611;

struct Criterion {
    id: usize,
    title: &'static str,
    passed: bool,
    elapsed: Duration,
    lines: Vec<String>,
}

fn run(id: usize, title: &'static str, budget: Duration, body: impl FnOnce() -> (bool, Vec<String>)) -> Criterion {
    let start = Instant::now();
    let (ok, mut lines) = body();
    let elapsed = start.elapsed();
    let in_budget = elapsed <= budget;
    if !in_budget {
        lines.push(format!("runtime {:.1?} exceeds budget {:?}", elapsed, budget));
    }
    Criterion { id, title, passed: ok && in_budget, elapsed, lines }
}

fn outcomes(list: Vec<CheckOutcome>) -> (bool, Vec<String>) {
    let ok = list.iter().all(|o| o.passed());
    let lines = list
        .iter()
        .map(|o| format!("{:<24} cases={:<6} violations={} {}", o.name, o.cases, o.violations, o.detail))
        .collect();
    (ok, lines)
}

/// Slope of threshold-n against d for the integral estimator, restricted to
/// the regime `eps > 1/sqrt(d)`.
fn integral_slopes() -> (bool, Vec<String>) {
    let mut ok = true;
    let mut lines = Vec::new();
    let plan = SearchPlan { trials: 600, ..SearchPlan::default() };
    for eps in [0.2, 0.3] {
        let d: Vec<usize> = [8usize, 16, 32, 64]
            .into_iter()
            .filter(|&d| eps > 1.0 / (d as f64).sqrt())
            .collect();
        let config = ExperimentConfig { alpha: 2.0, d, eps, seed: SEED, ..ExperimentConfig::default() };
        let result = threshold_sweep(&config, Estimator::IntegralRenyi(2), &plan).expect("search succeeds");
        let slope = result.slope.unwrap_or(f64::NAN);
        let good = (slope - 1.0).abs() <= 0.25;
        ok &= good;
        let ns: Vec<(usize, usize)> = result.thresholds.iter().map(|t| (t.d, t.n)).collect();
        lines.push(format!("alpha=2 eps={eps}: thresholds {ns:?} slope {slope:.3} (target 1 +/- 0.25)"));
    }
    (ok, lines)
}

fn eyd_half_slope() -> (bool, Vec<String>) {
    let config = ExperimentConfig {
        alpha: 0.5,
        d: vec![8, 16, 32, 64],
        eps: 0.2,
        seed: SEED,
        spectrum: SpectrumSource::SmallAlphaLb,
        ..ExperimentConfig::default()
    };
    let result = threshold_sweep(&config, Estimator::EydRenyi(0.5), &SearchPlan::default()).expect("search succeeds");
    let slope = result.slope.unwrap_or(f64::NAN);
    let ns: Vec<(usize, usize)> = result.thresholds.iter().map(|t| (t.d, t.n)).collect();
    (
        slope > 2.0,
        vec![format!("eyd alpha=0.5 lb-small eps=0.2: thresholds {ns:?} slope {slope:.3} (must exceed 2)")],
    )
}

fn von_neumann_decay() -> (bool, Vec<String>) {
    let ns = vec![1024usize, 4096, 16384, 65536];
    let mut ok = true;
    let mut lines = Vec::new();
    for spectrum in [SpectrumSource::Uniform, SpectrumSource::Skewed] {
        let config = ExperimentConfig {
            alpha: 1.0,
            d: vec![32],
            n: ns.clone(),
            trials: 200,
            seed: SEED,
            spectrum: spectrum.clone(),
            ..ExperimentConfig::default()
        };
        let (rows, _) = sweep(&config).expect("sweep runs");
        let errors: Vec<f64> = ns
            .iter()
            .map(|&n| {
                let e: Vec<f64> = rows.iter().filter(|r| r.n == n).map(|r| r.abs_error).collect();
                e.iter().sum::<f64>() / e.len() as f64
            })
            .collect();
        let ratios: Vec<f64> = errors.windows(2).map(|w| w[1] / w[0]).collect();
        let good = ratios.iter().all(|&r| r <= 0.5);
        ok &= good;
        lines.push(format!(
            "eyd von Neumann d=32 {spectrum}: mean |error| {errors:.5?} at n={ns:?}, ratios per 4x n {ratios:.3?} (each <= 0.5)"
        ));
    }
    (ok, lines)
}

fn main() -> ExitCode {
    let min = |m: u64| Duration::from_secs(60 * m);
    let criteria = vec![
        run(1, "exact SW normalization", Duration::from_secs(10), || {
            outcomes(vec![checks::sw_normalization(SEED, 20)])
        }),
        run(2, "sampler goodness of fit", Duration::from_secs(60), || {
            outcomes(vec![checks::sampler_gof(SEED, 200_000, &[(4, 2), (5, 3)])])
        }),
        run(3, "unbiasedness of p-sharp", Duration::from_secs(30), || {
            outcomes(vec![checks::unbiasedness(SEED)])
        }),
        run(4, "oracle equivalences", min(10), || {
            outcomes(vec![
                checks::dim_vs_syt(),
                checks::schur_vs_ssyt(SEED),
                checks::characters_vs_inversion(),
                checks::greene_exhaustive(),
                checks::single_cycle_vs_exact(),
            ])
        }),
        run(5, "converse machinery", min(10), || {
            outcomes(vec![
                checks::wright_vs_direct(),
                checks::rising_power_bound(),
                checks::prec_bound(),
                checks::hardy_ramanujan(),
            ])
        }),
        run(6, "inequality battery", min(5), || {
            let cases = 10_000;
            let mut list = vec![
                checks::moment_bounds(SEED, cases),
                checks::muirhead(SEED, cases),
                checks::pinsker_chain(SEED, cases),
                checks::tv_renyi_small(SEED, cases),
                checks::ow_concentration(SEED, 300),
            ];
            list.extend(checks::word_perturbation(SEED, cases));
            list.push(checks::p2_bound(SEED, cases));
            outcomes(list)
        }),
        run(7, "copy-complexity slopes", min(45), || {
            let mut ok = true;
            let mut lines = Vec::new();
            for part in [integral_slopes(), eyd_half_slope(), von_neumann_decay()] {
                ok &= part.0;
                lines.extend(part.1);
            }
            (ok, lines)
        }),
        run(8, "variance-partition structure", min(10), || {
            outcomes(vec![checks::length_partition(), checks::variance_scaling(SEED, 20_000)])
        }),
    ];
    for c in &criteria {
        for line in &c.lines {
            println!("    {line}");
        }
        println!(
            "{} criterion {}: {} ({:.1?})",
            if c.passed { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            c.elapsed
        );
    }
    let failed = criteria.iter().filter(|c| !c.passed).count();
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
