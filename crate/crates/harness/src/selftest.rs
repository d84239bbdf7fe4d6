use crate::checks::{self, CheckOutcome, Scale};
use crate::output::Table;

/// Which suites to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

impl std::str::FromStr for Level {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            other => Err(format!("unknown selftest level {other:?} (quick|full)")),
        }
    }
}

/// Runs every suite at the chosen scale. The full level adds the sampler
/// goodness-of-fit suite and the Monte Carlo variance comparison.
pub fn run(level: Level, seed: u64) -> Vec<CheckOutcome> {
    let scale = match level {
        Level::Quick => Scale::QUICK,
        Level::Full => Scale::FULL,
    };
    let mut out = vec![
        checks::sw_normalization(seed, 20),
        checks::unbiasedness(seed),
        checks::dim_vs_syt(),
        checks::schur_vs_ssyt(seed),
        checks::characters_vs_inversion(),
        checks::greene_exhaustive(),
        checks::single_cycle_vs_exact(),
        checks::wright_vs_direct(),
        checks::rising_power_bound(),
        checks::prec_bound(),
        checks::hardy_ramanujan(),
        checks::moment_bounds(seed, scale.cases),
        checks::muirhead(seed, scale.cases),
        checks::pinsker_chain(seed, scale.cases),
        checks::tv_renyi_small(seed, scale.cases),
        checks::ow_concentration(seed, scale.mc_trials),
    ];
    out.extend(checks::word_perturbation(seed, scale.cases));
    out.extend([
        checks::p2_bound(seed, scale.cases),
        checks::renyi_monotonicity(seed, scale.cases),
        checks::eyd_pinsker(seed, scale.cases),
        checks::shape_majorizes_counts(seed, scale.cases),
        checks::length_partition(),
        checks::variance_scaling(seed, scale.variance_trials),
    ]);
    if level == Level::Full {
        out.push(checks::sampler_gof(
            seed,
            scale.gof_samples,
            &[(3, 2), (4, 2), (4, 3), (5, 3)],
        ));
    }
    out
}

pub fn report_table(level: Level, seed: u64, outcomes: &[CheckOutcome]) -> Table {
    let meta = vec![
        format!("level={}", if level == Level::Quick { "quick" } else { "full" }),
        format!("seed={seed}"),
    ];
    let mut table = Table::new("selftest", meta, &["check", "cases", "violations", "passed", "detail"]);
    for o in outcomes {
        table.push(vec![
            o.name.into(),
            o.cases.to_string(),
            o.violations.to_string(),
            o.passed().to_string(),
            o.detail.clone(),
        ]);
    }
    table
}
