//! Invariant suites run by `selftest` and the acceptance tests. Each check
//! counts its cases and violations instead of stopping at the first failure.

use std::f64::consts::E;

use rand::seq::SliceRandom;
use rand::Rng;
use rayon::prelude::*;
use schurweyl_core::analysis::{
    aligned_tables, distances, moment_bound_violations, p2_bound_check, tv_moment_gap_check,
    two_step_distribution, variance_partition_set, variance_scaling_check, wright_chisq,
    z_statistic, MonteCarloPlan, VarianceMethod,
};
use schurweyl_core::estimators::{eyd_renyi, eyd_von_neumann, integral_renyi_estimate};
use schurweyl_core::oracle::{
    characters_by_inversion, chi_square_direct, lnds_prefix_sums, ssyt_count, syt_count,
};
use schurweyl_core::partitions::{
    dim, falling_power_f64, interlacing_predecessors, majorizes, partition_counts_upto,
    partitions_of, prec_count, rising_power,
};
use schurweyl_core::sampling::{
    exact_sw_distribution, rsk_shape, sample_sw, sample_word, spectrum_uniform, stream_rng,
};
use schurweyl_core::scalar::{approx_eq, ratio_to_f64};
use schurweyl_core::symmetric::{
    character_table, p_sharp, p_sharp_single_cycle, p_sharp_single_cycle_exact,
    power_sum_product, schur_eval,
};
use schurweyl_core::{Partition, Spectrum};

use crate::stats::{chi_square_gof, log_log_slope};

/// Result of one invariant suite.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub violations: usize,
    pub detail: String,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            cases: 0,
            violations: 0,
            detail: String::new(),
        }
    }

    fn record(&mut self, ok: bool) {
        self.cases += 1;
        if !ok {
            self.violations += 1;
        }
    }

    fn note(mut self, detail: String) -> Self {
        self.detail = detail;
        self
    }

    pub fn passed(&self) -> bool {
        self.cases > 0 && self.violations == 0
    }
}

/// Sizes of the randomized suites.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Scale {
    /// Random cases per inequality suite.
    pub cases: usize,
    /// Shapes sampled per goodness-of-fit test.
    pub gof_samples: usize,
    /// Monte Carlo trials per concentration cell.
    pub mc_trials: usize,
    /// Monte Carlo trials for the variance check at `n = 1000`; 0 skips it.
    pub variance_trials: usize,
}

impl Scale {
    pub const QUICK: Scale = Scale {
        cases: 1_000,
        gof_samples: 20_000,
        mc_trials: 60,
        variance_trials: 0,
    };
    pub const FULL: Scale = Scale {
        cases: 10_000,
        gof_samples: 200_000,
        mc_trials: 300,
        variance_trials: 20_000,
    };
}

/// Random spectrum of dimension `d`: flat, exponential weights, sparse or spiked.
pub fn random_spectrum<R: Rng + ?Sized>(d: usize, rng: &mut R) -> Spectrum {
    let kind = rng.random_range(0..4);
    let mut w: Vec<f64> = (0..d)
        .map(|_| -(1.0 - rng.random::<f64>()).ln())
        .collect();
    match kind {
        0 => w.iter_mut().for_each(|x| *x = 1.0 + 0.05 * *x),
        1 => {}
        2 => {
            for x in w.iter_mut().skip(1) {
                if rng.random_bool(0.4) {
                    *x = 0.0;
                }
            }
        }
        _ => w[0] += d as f64 * rng.random::<f64>() * 4.0,
    }
    if w.iter().all(|&x| x == 0.0) {
        w[0] = 1.0;
    }
    let total: f64 = w.iter().sum();
    Spectrum::new(w.into_iter().map(|x| x / total).collect()).expect("normalized weights")
}

pub fn skewed_spectrum(d: usize) -> Spectrum {
    let w: Vec<f64> = (1..=d).map(|i| 1.0 / (i * i) as f64).collect();
    let total: f64 = w.iter().sum();
    Spectrum::new(w.into_iter().map(|x| x / total).collect()).expect("normalized weights")
}

fn sorted_desc(eta: &Spectrum) -> Spectrum {
    let mut p = eta.probs().to_vec();
    p.sort_by(|a, b| b.total_cmp(a));
    Spectrum::new(p).expect("permutation of a spectrum")
}

// ---------------------------------------------------------------- exact tables

/// `Σ_λ dim(λ) s_λ(η) = 1` for `n ≤ 8`, `d ≤ 4`.
pub fn sw_normalization(seed: u64, spectra: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("sw-normalization");
    let mut rng = stream_rng(seed, 101);
    let mut worst = 0.0f64;
    for s in 0..spectra {
        let eta = random_spectrum(s % 4 + 1, &mut rng);
        for n in 1..=8 {
            let total = exact_sw_distribution(&eta, n).expect("n in exact regime").total();
            worst = worst.max((total - 1.0).abs());
            out.record((total - 1.0).abs() <= 1e-9);
        }
    }
    out.note(format!("max |total - 1| = {worst:e}"))
}

/// Shape counts of `samples` sampled shapes in the order of `table`.
fn sample_counts(eta: &Spectrum, n: usize, samples: usize, seed: u64, table: &[Partition]) -> Vec<u64> {
    let shapes: Vec<Partition> = (0..samples)
        .into_par_iter()
        .map(|t| sample_sw(eta, n, &mut stream_rng(seed, t as u64)).expect("valid spectrum"))
        .collect();
    let mut counts = vec![0u64; table.len()];
    for s in shapes {
        let idx = table.iter().position(|l| *l == s).expect("shape in support");
        counts[idx] += 1;
    }
    counts
}

/// Pearson χ² goodness of fit of sampled shapes against exact tables at
/// significance `1e-3`, including permuted spectra against the table of the
/// original ordering.
pub fn sampler_gof(seed: u64, samples: usize, cells: &[(usize, usize)]) -> CheckOutcome {
    let mut out = CheckOutcome::new("sampler-gof");
    let mut min_p = 1.0f64;
    for (idx, &(n, d)) in cells.iter().enumerate() {
        for (k, eta) in [spectrum_uniform::<f64>(d).unwrap(), skewed_spectrum(d)].into_iter().enumerate() {
            let sw = exact_sw_distribution(&eta, n).expect("exact regime");
            let table: Vec<Partition> = sw.entries().iter().map(|(l, _)| l.clone()).collect();
            let probs: Vec<f64> = sw.entries().iter().map(|(_, p)| *p).collect();
            let mut variants = vec![eta.clone()];
            if k == 1 {
                variants.push(eta.reversed());
                let mut shuffled = eta.probs().to_vec();
                shuffled.shuffle(&mut stream_rng(seed, 7 + idx as u64));
                variants.push(Spectrum::new(shuffled).unwrap());
            }
            for (v, variant) in variants.iter().enumerate() {
                let s = crate::stats::cell_seed(seed, &[n as u64, d as u64, k as u64, v as u64]);
                let counts = sample_counts(variant, n, samples, s, &table);
                let gof = chi_square_gof(&counts, &probs);
                min_p = min_p.min(gof.p_value);
                out.record(gof.p_value >= 1e-3);
            }
        }
    }
    out.note(format!("min p-value {min_p:.4}"))
}

/// `E[p♯_μ] = n^{|μ|̲} M_μ(η)` within `1e-8` for `|μ| ≤ 4`, `n ≤ 8`, and
/// `E[M̂_α] = M_α` for the integral estimator.
pub fn unbiasedness(seed: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("unbiasedness");
    let mut rng = stream_rng(seed, 303);
    let mut spectra = vec![spectrum_uniform::<f64>(2).unwrap(), skewed_spectrum(3)];
    spectra.extend((0..4).map(|i| random_spectrum(2 + i % 3, &mut rng)));
    let mut worst = 0.0f64;
    for eta in &spectra {
        for n in 1..=8 {
            let sw = exact_sw_distribution(eta, n).expect("exact regime");
            for r in 1..=4 {
                for mu in partitions_of(r, None) {
                    let mean = sw.expectation(|l| p_sharp(&mu, l));
                    let expect = falling_power_f64(n, r) * power_sum_product(eta.probs(), &mu);
                    worst = worst.max((mean - expect).abs() / expect.abs().max(1.0));
                    out.record(approx_eq(mean, expect, 1e-8, 1e-8));
                }
            }
            for alpha in [2u32, 3] {
                if n < alpha as usize {
                    continue;
                }
                let mean = sw.expectation(|l| {
                    integral_renyi_estimate(l, alpha)
                        .expect("n >= alpha")
                        .moment_estimate
                        .expect("moment reported")
                });
                let m: f64 = eta.probs().iter().map(|p| p.powi(alpha as i32)).sum();
                out.record(approx_eq(mean, m, 1e-8, 1e-8));
            }
        }
    }
    out.note(format!("max scaled deviation {worst:e}"))
}

// ---------------------------------------------------------------- oracles

pub fn dim_vs_syt() -> CheckOutcome {
    let mut out = CheckOutcome::new("dim-vs-syt");
    for n in 0..=10 {
        for lambda in partitions_of(n, None) {
            out.record(dim(&lambda) == syt_count(&lambda).expect("within capacity"));
        }
    }
    out
}

pub fn schur_vs_ssyt(seed: u64) -> CheckOutcome {
    let mut out = CheckOutcome::new("schur-vs-ssyt");
    let mut rng = stream_rng(seed, 404);
    for m in 0..=8 {
        for lambda in partitions_of(m, None) {
            for d in 1..=4 {
                let x: Vec<f64> = (0..d).map(|_| rng.random_range(-1.0..1.5)).collect();
                let fast = schur_eval(&lambda, &x);
                let slow = ssyt_count(&lambda, &x).expect("within capacity");
                out.record(approx_eq(fast, slow, 1e-9, 1e-12));
            }
        }
    }
    out
}

pub fn characters_vs_inversion() -> CheckOutcome {
    let mut out = CheckOutcome::new("characters-vs-inversion");
    for n in 1..=8 {
        let fast = character_table(n);
        let slow = characters_by_inversion(n).expect("within capacity");
        for (a, b) in fast.iter().flatten().zip(slow.iter().flatten()) {
            out.record(a == b);
        }
    }
    out
}

fn words(len: usize, alphabet: u32) -> Vec<Vec<u32>> {
    let mut all: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..len {
        all = all
            .into_iter()
            .flat_map(|w| {
                (1..=alphabet).map(move |a| {
                    let mut v = w.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    all
}

/// Greene's property for every word of length ≤ 8 over alphabets ≤ 3.
pub fn greene_exhaustive() -> CheckOutcome {
    let mut out = CheckOutcome::new("rsk-vs-greene");
    for alphabet in 1..=3u32 {
        for len in 1..=8 {
            let all = words(len, alphabet);
            let ok: Vec<bool> = all
                .par_iter()
                .map(|w| {
                    let shape = rsk_shape(w);
                    let as_usize: Vec<usize> = w.iter().map(|&a| a as usize).collect();
                    let best = lnds_prefix_sums(&as_usize, alphabet as usize).expect("short word");
                    let sums: Vec<usize> = (1..=alphabet as usize)
                        .map(|k| shape.parts().iter().take(k).sum())
                        .collect();
                    sums == best
                })
                .collect();
            ok.into_iter().for_each(|b| out.record(b));
        }
    }
    out
}

/// Closed-form `p♯_(k)` against the exact character path for `n ≤ 12`.
pub fn single_cycle_vs_exact() -> CheckOutcome {
    let mut out = CheckOutcome::new("single-cycle-vs-exact");
    let cases: Vec<(usize, Partition)> = (1..=12)
        .flat_map(|n| partitions_of(n, None).into_iter().flat_map(move |l| (1..=n).map(move |k| (k, l.clone()))))
        .collect();
    let results: Vec<(bool, f64)> = cases
        .par_iter()
        .map(|(k, l)| {
            let fast = p_sharp_single_cycle(*k, l);
            let exact = ratio_to_f64(&p_sharp_single_cycle_exact(*k, l));
            (approx_eq(fast, exact, 1e-9, 1e-9), (fast - exact).abs() / exact.abs().max(1.0))
        })
        .collect();
    let worst = results.iter().map(|r| r.1).fold(0.0, f64::max);
    results.into_iter().for_each(|r| out.record(r.0));
    out.note(format!("max scaled error {worst:e}"))
}

// ---------------------------------------------------------------- converse machinery

/// The chi-square series against direct chi-square of exact tables, `n ≤ 5`, `d ≤ 3`.
pub fn wright_vs_direct() -> CheckOutcome {
    let mut out = CheckOutcome::new("wright-vs-direct");
    let mut worst = 0.0f64;
    for d in 2..=3usize {
        let df = d as f64;
        let mut xs: Vec<Vec<f64>> = Vec::new();
        for eps in [0.1, 0.3] {
            let a = (eps * df).sqrt();
            let mut x = vec![-a / (df - 1.0); d];
            x[0] = a;
            xs.push(x);
        }
        xs.push((0..d).map(|i| if i == 0 { 0.6 } else { -0.6 / (df - 1.0) }).collect());
        xs.push((0..d).map(|i| 0.4 * (i as f64 - (df - 1.0) / 2.0)).collect());
        let mut last = vec![-1.0; d];
        last[0] = df - 1.0;
        xs.push(last);
        for x in xs {
            let eta = Spectrum::new(x.iter().map(|v| (1.0 + v) / df).collect()).unwrap();
            let u = spectrum_uniform::<f64>(d).unwrap();
            for n in 1..=5 {
                let (series, _) = wright_chisq(&x, n, d, 10).expect("valid x");
                let a = exact_sw_distribution(&eta, n).unwrap();
                let b = exact_sw_distribution(&u, n).unwrap();
                let (_, pa, pb) = aligned_tables(&a, &b);
                let direct = chi_square_direct(&pa, &pb).expect("uniform has full support");
                worst = worst.max((series - direct).abs());
                out.record((series - direct).abs() <= 1e-8);
            }
        }
    }
    out.note(format!("max |series - direct| = {worst:e}"))
}

/// `d^{‾μ} ≥ (d/e)^{|μ|}` for all `ℓ(μ) ≤ d ≤ 12`, `|μ| ≤ 12`.
pub fn rising_power_bound() -> CheckOutcome {
    let mut out = CheckOutcome::new("rising-power-bound");
    for m in 1..=12 {
        for d in 1..=12usize {
            for mu in partitions_of(m, Some(d)) {
                let lhs = rising_power(d as f64, &mu);
                let rhs = (d as f64 / E).powi(m as i32);
                out.record(lhs >= rhs * (1.0 - 1e-12));
            }
        }
    }
    out
}

/// `prec(μ)` equals the number of interlacing predecessors (`|μ| ≤ 10`) and
/// `prec(μ) < |μ|^{√(2|μ|)}` for `2 ≤ |μ| ≤ 20`.
pub fn prec_bound() -> CheckOutcome {
    let mut out = CheckOutcome::new("prec-bound");
    for m in 1..=20usize {
        for mu in partitions_of(m, None) {
            let count = prec_count(&mu);
            if m <= 10 {
                out.record(count == schurweyl_core::BigCount::from(interlacing_predecessors(&mu).len()));
            }
            if m >= 2 {
                let lhs: f64 = schurweyl_core::scalar::Scalar::from_biguint(&count);
                out.record(lhs.ln() < (2.0 * m as f64).sqrt() * (m as f64).ln());
            }
        }
    }
    out
}

/// `p(m) < e^{3√m}` for `1 ≤ m ≤ 200`.
pub fn hardy_ramanujan() -> CheckOutcome {
    let mut out = CheckOutcome::new("hardy-ramanujan");
    for (m, p) in partition_counts_upto(200).iter().enumerate().skip(1) {
        let p: f64 = schurweyl_core::scalar::Scalar::from_biguint(p);
        out.record(p.ln() < 3.0 * (m as f64).sqrt());
    }
    out
}

// ---------------------------------------------------------------- inequality battery

/// The power-sum inequalities (i)–(v) on random spectra and orders.
pub fn moment_bounds(seed: u64, cases: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("moment-bounds");
    let mut rng = stream_rng(seed, 601);
    let mut failed: Vec<&'static str> = Vec::new();
    for _ in 0..cases {
        let d = rng.random_range(1..=16);
        let eta = random_spectrum(d, &mut rng);
        let alpha = if rng.random_bool(0.2) {
            rng.random_range(1..=4) as f64
        } else {
            rng.random_range(0.05..4.0)
        };
        let beta = rng.random_range(0.0..=alpha);
        let bad = moment_bound_violations(eta.probs(), alpha, beta, 1e-9);
        out.record(bad.is_empty());
        failed.extend(bad);
    }
    failed.sort_unstable();
    failed.dedup();
    out.note(if failed.is_empty() { String::new() } else { format!("failing items {failed:?}") })
}

/// `M_μ ≥ M_ν` for equal-length `μ ⊵ ν ⊢ m ≤ 8` on random spectra.
pub fn muirhead(seed: u64, cases: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("muirhead");
    let mut rng = stream_rng(seed, 602);
    let shapes: Vec<Vec<Partition>> = (0..=8).map(|m| partitions_of(m, None)).collect();
    while out.cases < cases {
        let eta = random_spectrum(rng.random_range(1..=8), &mut rng);
        let m = rng.random_range(2..=8);
        let mu = &shapes[m][rng.random_range(0..shapes[m].len())];
        let nu = &shapes[m][rng.random_range(0..shapes[m].len())];
        let (mu, nu) = if majorizes(mu, nu).unwrap() { (mu, nu) } else { (nu, mu) };
        if mu.length() != nu.length() || !majorizes(mu, nu).unwrap() {
            continue;
        }
        out.record(power_sum_product(eta.probs(), mu) >= power_sum_product(eta.probs(), nu) - 1e-12);
    }
    out
}

/// `2 tv² ≤ kl ≤ chisq` on random pairs.
pub fn pinsker_chain(seed: u64, cases: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("pinsker-chain");
    let mut rng = stream_rng(seed, 603);
    for _ in 0..cases {
        let d = rng.random_range(2..=12);
        let p = random_spectrum(d, &mut rng);
        let q = loop {
            let q = random_spectrum(d, &mut rng);
            if q.probs().iter().all(|&x| x > 0.0) {
                break q;
            }
        };
        out.record(distances(p.probs(), q.probs()).chain_holds(1e-9));
    }
    out
}

/// The moment gap of distributions far from uniform, on random distributions
/// and on the two-step distributions.
pub fn tv_renyi_small(seed: u64, cases: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("tv-renyi-small");
    let mut rng = stream_rng(seed, 604);
    for c in 0..cases {
        let alpha = [0.25, 0.5, 0.75][c % 3];
        let d = rng.random_range(2..=32);
        let p = random_spectrum(d, &mut rng);
        out.record(tv_moment_gap_check(p.probs(), alpha).expect("alpha in (0,1)"));
    }
    for d in [4usize, 10, 32] {
        for j in 1..d {
            for &frac in &[0.1, 0.5, 0.9, 1.0] {
                let gamma = frac * (1.0 - j as f64 / d as f64);
                let p = two_step_distribution(d, j, gamma).expect("gamma within range");
                for alpha in [0.25, 0.5, 0.75] {
                    out.record(tv_moment_gap_check(&p, alpha).unwrap());
                }
            }
        }
    }
    out
}

/// `|η_i - E[λ_i/n]| ≤ 2√(min(1, η_i d)/n)`: exactly for `n ≤ 10`, and by
/// Monte Carlo with three standard errors of slack up to `n = 10⁴`.
pub fn ow_concentration(seed: u64, mc_trials: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("ow-concentration");
    let mut rng = stream_rng(seed, 605);
    let bound = |eta_i: f64, d: usize, n: usize| 2.0 * (1.0f64.min(eta_i * d as f64) / n as f64).sqrt();
    let mut spectra: Vec<Spectrum> = vec![spectrum_uniform::<f64>(3).unwrap(), skewed_spectrum(4)];
    spectra.extend((0..6).map(|i| sorted_desc(&random_spectrum(2 + i % 3, &mut rng))));
    for eta in &spectra {
        let d = eta.dimension();
        for n in 1..=10 {
            let sw = exact_sw_distribution(eta, n).unwrap();
            for i in 0..d {
                let mean = sw.expectation(|l| l.part(i) as f64 / n as f64);
                out.record((eta.probs()[i] - mean).abs() <= bound(eta.probs()[i], d, n) + 1e-12);
            }
        }
    }
    let mc_spectra = [skewed_spectrum(4), spectrum_uniform::<f64>(8).unwrap(), sorted_desc(&random_spectrum(6, &mut rng))];
    for (k, eta) in mc_spectra.iter().enumerate() {
        let d = eta.dimension();
        for n in [100usize, 1_000, 10_000] {
            let s = crate::stats::cell_seed(seed, &[k as u64, n as u64, 605]);
            let rows: Vec<Vec<f64>> = (0..mc_trials)
                .into_par_iter()
                .map(|t| {
                    let l = sample_sw(eta, n, &mut stream_rng(s, t as u64)).unwrap();
                    (0..d).map(|i| l.part(i) as f64 / n as f64).collect()
                })
                .collect();
            for i in 0..d {
                let vals: Vec<f64> = rows.iter().map(|r| r[i]).collect();
                let mean = vals.iter().sum::<f64>() / vals.len() as f64;
                let se = (schurweyl_core::analysis::sample_variance(&vals) / vals.len() as f64).sqrt();
                out.record((eta.probs()[i] - mean).abs() <= bound(eta.probs()[i], d, n) + 3.0 * se);
            }
        }
    }
    out
}

/// One symbol changed in a word of length `n ∈ {30, 50}` over `d ≤ 4`
/// letters: entropy moves by at most `15 ln n / n`, prefix sums of the shape
/// by at most one, and `Z(λ)` by at most `14/n`.
pub fn word_perturbation(seed: u64, cases: usize) -> Vec<CheckOutcome> {
    let mut entropy = CheckOutcome::new("entropy-lipschitz");
    let mut prefix = CheckOutcome::new("cum-sum-stability");
    let mut zstat = CheckOutcome::new("z-statistic");
    let mut rng = stream_rng(seed, 606);
    let mut worst = (0.0f64, 0.0f64);
    for c in 0..cases {
        let n = if c % 2 == 0 { 30 } else { 50 };
        let d = rng.random_range(2..=4);
        let eta = random_spectrum(d, &mut rng);
        let word = sample_word(&eta, n, &mut rng).unwrap();
        let mut other = word.clone();
        let pos = rng.random_range(0..n);
        let mut symbol = rng.random_range(1..=d as u32);
        while symbol == word[pos] {
            symbol = rng.random_range(1..=d as u32);
        }
        other[pos] = symbol;
        let (a, b) = (rsk_shape(&word), rsk_shape(&other));
        let sa = eyd_von_neumann(&a).unwrap().entropy_estimate;
        let sb = eyd_von_neumann(&b).unwrap().entropy_estimate;
        let nf = n as f64;
        worst.0 = worst.0.max((sa - sb).abs() * nf / nf.ln());
        entropy.record((sa - sb).abs() <= 15.0 * nf.ln() / nf);
        let pa = a.prefix_sums(d);
        let pb = b.prefix_sums(d);
        prefix.record(pa.iter().zip(&pb).all(|(x, y)| (*x as i64 - *y as i64).abs() <= 1));
        let dz = (z_statistic(&a, d) - z_statistic(&b, d)).abs();
        worst.1 = worst.1.max(dz * nf);
        zstat.record(dz <= 14.0 / nf + 1e-12);
    }
    vec![
        entropy.note(format!("max |dS| n/ln n = {:.3}", worst.0)),
        prefix,
        zstat.note(format!("max |dZ| n = {:.3}", worst.1)),
    ]
}

/// Random search for the maximum of the P2 objective stays below `(16/e)√d`.
pub fn p2_bound(seed: u64, samples: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("p2-bound");
    let dims = [4usize, 10, 16, 64];
    let maxima: Vec<f64> = dims
        .par_iter()
        .map(|&d| p2_bound_check(d, samples, &mut stream_rng(seed, 607 + d as u64)).unwrap())
        .collect();
    for (&d, &m) in dims.iter().zip(&maxima) {
        out.record(m <= 16.0 / E * (d as f64).sqrt());
    }
    let xs = [4.0, 16.0, 64.0];
    let ys = [maxima[0], maxima[2], maxima[3]];
    let slope = log_log_slope(&xs, &ys).map(|s| s.0).unwrap_or(f64::NAN);
    out.note(format!("maxima {maxima:.3?}, log-log slope {slope:.3}"))
}

/// Plug-in Rényi entropy is non-increasing in the order, von Neumann at one,
/// and never exceeds `ln ℓ(λ)`.
pub fn renyi_monotonicity(seed: u64, cases: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("renyi-monotone");
    let mut rng = stream_rng(seed, 608);
    for _ in 0..cases {
        let eta = random_spectrum(rng.random_range(1..=8), &mut rng);
        let l = sample_sw(&eta, rng.random_range(1..=200), &mut rng).unwrap();
        let mut prev = f64::INFINITY;
        let mut ok = true;
        for alpha in [0.25, 0.5, 1.0, 2.0, 3.0, 4.0] {
            let s = if alpha == 1.0 {
                eyd_von_neumann(&l).unwrap().entropy_estimate
            } else {
                eyd_renyi(&l, alpha).unwrap().entropy_estimate
            };
            ok &= s <= prev + 1e-12;
            prev = s;
        }
        ok &= eyd_von_neumann(&l).unwrap().entropy_estimate <= (l.length() as f64).ln() + 1e-12;
        out.record(ok);
    }
    out
}

/// For the uniform spectrum `ln d - Ŝ = KL(λ/n ‖ u) ≥ 2 TV(λ/n, u)²`.
pub fn eyd_pinsker(seed: u64, cases: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("eyd-pinsker");
    let mut rng = stream_rng(seed, 609);
    for _ in 0..cases {
        let d = rng.random_range(2..=16);
        let u = spectrum_uniform::<f64>(d).unwrap();
        let l = sample_sw(&u, rng.random_range(1..=300), &mut rng).unwrap();
        let n = l.size() as f64;
        let gap = (d as f64).ln() - eyd_von_neumann(&l).unwrap().entropy_estimate;
        let tv = 0.5 * (0..d).map(|i| (l.part(i) as f64 / n - 1.0 / d as f64).abs()).sum::<f64>();
        out.record(gap >= 2.0 * tv * tv - 1e-12);
    }
    out
}

/// `λ` majorizes the sorted symbol counts of its word.
pub fn shape_majorizes_counts(seed: u64, cases: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("shape-majorizes-counts");
    let mut rng = stream_rng(seed, 610);
    for _ in 0..cases {
        let d = rng.random_range(1..=8);
        let eta = random_spectrum(d, &mut rng);
        let word = sample_word(&eta, rng.random_range(1..=100), &mut rng).unwrap();
        let mut counts = vec![0usize; d];
        for &w in &word {
            counts[w as usize - 1] += 1;
        }
        out.record(majorizes(&rsk_shape(&word), &Partition::from_unsorted(counts)).unwrap());
    }
    out
}

// ---------------------------------------------------------------- variance structure

/// `ℓ(μ) ≤ α - j` and `|μ| = α + j` for every `μ ∈ S_j`, `α ≤ 6`.
pub fn length_partition() -> CheckOutcome {
    let mut out = CheckOutcome::new("length-partition");
    for alpha in 2..=6 {
        for j in 0..alpha {
            for mu in variance_partition_set(alpha, j).expect("valid alpha, j") {
                out.record(mu.length() <= alpha - j && mu.size() == alpha + j);
            }
        }
    }
    out
}

/// The variance of `p♯_(α)` over `n^α (1 + n^{α-1} M_{2α-1})` stays within 4×
/// its `n = 4` value on `n ∈ 4..=10`; with `mc_trials > 0` the Monte Carlo
/// variance at `n = 1000` lies within three bootstrap standard errors of the
/// polynomial fitted to the exact variances.
pub fn variance_scaling(seed: u64, mc_trials: usize) -> CheckOutcome {
    let mut out = CheckOutcome::new("variance-scaling");
    let mut notes = Vec::new();
    let cases = [
        (spectrum_uniform::<f64>(2).unwrap(), 2u32),
        (skewed_spectrum(3), 2),
        (spectrum_uniform::<f64>(3).unwrap(), 3),
    ];
    for (idx, (eta, alpha)) in cases.iter().enumerate() {
        let exact: Vec<usize> = (1..=10).filter(|&n| n >= *alpha as usize).collect();
        let plan = (mc_trials > 0 && idx == 0).then(|| MonteCarloPlan {
            ns: vec![1000],
            trials: mc_trials,
            bootstrap: 200,
            seed,
        });
        let table = variance_scaling_check(eta, *alpha, &exact, plan.as_ref()).expect("valid inputs");
        let at4 = table.rows.iter().find(|r| r.n == 4).expect("n = 4 on grid").ratio;
        for r in table.rows.iter().filter(|r| r.method == VarianceMethod::Exact && r.n >= 4) {
            out.record(r.ratio <= 4.0 * at4);
        }
        notes.push(format!("d={} alpha={alpha} spread {:.3}", eta.dimension(), table.exact_ratio_spread()));
        for r in table.rows.iter().filter(|r| r.method == VarianceMethod::MonteCarlo) {
            let trend = r.trend.expect("trend fitted");
            let se = r.std_error.expect("bootstrap error");
            out.record((r.variance - trend).abs() <= 3.0 * se);
            notes.push(format!("n={} var {:.1} trend {:.1} se {:.1}", r.n, r.variance, trend, se));
        }
    }
    out.note(notes.join("; "))
}
