//! Distances between distributions, two-point testing, the chi-square series
//! against the maximally mixed state, and numeric checks of the inequalities
//! the estimators rely on.

use std::collections::BTreeSet;

use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::estimators::renyi_entropy;
use crate::partitions::{falling_power, partitions_of, rising_power, Partition};
use crate::sampling::{exact_sw_distribution, sample_sw, stream_rng, Spectrum, SwDistribution};
use crate::scalar::Scalar;
use crate::symmetric::{p_sharp_single_cycle, power_sum, schur_eval};

/// Total variation, KL divergence and chi-square distance of `p` from `q`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DistanceTriple {
    pub tv: f64,
    pub kl: f64,
    pub chisq: f64,
}

impl DistanceTriple {
    /// `2 tv² ≤ kl ≤ chisq` up to `slack`.
    pub fn chain_holds(&self, slack: f64) -> bool {
        2.0 * self.tv * self.tv <= self.kl + slack && self.kl <= self.chisq + slack
    }
}

/// Distances of `p` from `q` over a common index set; the shorter input is
/// zero-padded. KL and chi-square are `+∞` when `p` puts mass where `q` has none.
pub fn distances(p: &[f64], q: &[f64]) -> DistanceTriple {
    let len = p.len().max(q.len());
    let at = |v: &[f64], i: usize| v.get(i).copied().unwrap_or(0.0);
    let mut tv = 0.0;
    let mut kl = 0.0;
    let mut chisq = 0.0;
    for i in 0..len {
        let (a, b) = (at(p, i), at(q, i));
        tv += (a - b).abs();
        if a > 0.0 {
            kl += if b > 0.0 { a * (a / b).ln() } else { f64::INFINITY };
        }
        if b > 0.0 {
            chisq += (a - b) * (a - b) / b;
        } else if a > 0.0 {
            chisq = f64::INFINITY;
        }
    }
    DistanceTriple {
        tv: 0.5 * tv,
        kl,
        chisq,
    }
}

/// `Σ (p - q)² / q` in any scalar; `None` when `p` has mass outside the support of `q`.
pub fn chi_square<T: Scalar>(p: &[T], q: &[T]) -> Option<T> {
    let len = p.len().max(q.len());
    let mut total = T::zero();
    for i in 0..len {
        let a = p.get(i).cloned().unwrap_or_else(T::zero);
        let b = q.get(i).cloned().unwrap_or_else(T::zero);
        if b.is_zero() {
            if !a.is_zero() {
                return None;
            }
            continue;
        }
        let diff = a - b.clone();
        total = total + diff.clone() * diff / b;
    }
    Some(total)
}

/// Aligns two Schur–Weyl tables on the union of their supports.
pub fn aligned_tables<T: Scalar>(
    a: &SwDistribution<T>,
    b: &SwDistribution<T>,
) -> (Vec<Partition>, Vec<T>, Vec<T>) {
    let keys: BTreeSet<Partition> = a
        .entries()
        .iter()
        .chain(b.entries())
        .map(|(l, _)| l.clone())
        .collect();
    let keys: Vec<Partition> = keys.into_iter().rev().collect();
    let pa = keys.iter().map(|l| a.probability(l)).collect();
    let pb = keys.iter().map(|l| b.probability(l)).collect();
    (keys, pa, pb)
}

/// Distances between the Schur–Weyl distributions of two spectra at `n` copies.
pub fn sw_distances(eta: &Spectrum<f64>, nu: &Spectrum<f64>, n: usize) -> Result<DistanceTriple> {
    let a = exact_sw_distribution(eta, n)?;
    let b = exact_sw_distribution(nu, n)?;
    let (_, pa, pb) = aligned_tables(&a, &b);
    Ok(distances(&pa, &pb))
}

/// Bayes error of testing `η` against `ν` from one Schur–Weyl sample with
/// equal priors: `1/2 - TV/2`.
pub fn two_point_error(eta: &Spectrum<f64>, nu: &Spectrum<f64>, n: usize) -> Result<f64> {
    let dist = sw_distances(eta, nu, n)?;
    Ok(0.5 - 0.5 * dist.tv)
}

/// Truncated chi-square series between `η_i = (1 + x_i)/d` and the maximally
/// mixed state:
/// `Σ_μ s_μ(x)² n^{|μ|̲} / (d^{‾μ} d^{|μ|})` over `1 ≤ ℓ(μ) ≤ d`,
/// `1 ≤ |μ| ≤ min(max_size, n)`.
///
/// Returns the truncated sum and the total of its last layer
/// (`|μ| = min(max_size, n)`).
pub fn wright_chisq<T: Scalar>(x: &[T], n: usize, d: usize, max_size: usize) -> Result<(T, T)> {
    const MAX_LAYER: usize = 14;
    if x.len() != d {
        return Err(Error::Domain(format!(
            "x has {} entries but d = {d}",
            x.len()
        )));
    }
    if max_size > MAX_LAYER {
        return Err(Error::Domain(format!(
            "max_size {max_size} exceeds {MAX_LAYER}"
        )));
    }
    let tol = T::unit_sum_tolerance() * T::from_usize_exact(d.max(1));
    let sum = x.iter().cloned().fold(T::zero(), |a, b| a + b);
    if sum.abs() > tol {
        return Err(Error::Domain(format!(
            "entries of x must sum to zero, got {}",
            sum.to_f64_lossy()
        )));
    }
    if let Some(bad) = x.iter().find(|&v| v.clone() + T::one() < -tol.clone()) {
        return Err(Error::Domain(format!("entry {bad:?} is below -1")));
    }
    let top = max_size.min(n);
    let dt = T::from_usize_exact(d);
    let mut total = T::zero();
    let mut last = T::zero();
    for m in 1..=top {
        let scale = T::from_biguint(&falling_power(n, m)) / dt.powi_exact(m as u32);
        let mut layer = T::zero();
        for mu in partitions_of(m, Some(d)) {
            let s = schur_eval(&mu, x);
            layer = layer + s.clone() * s / rising_power(dt.clone(), &mu);
        }
        let layer = layer * scale;
        total = total + layer.clone();
        if m == top {
            last = layer;
        }
    }
    Ok((total, last))
}

/// All cycle types of `σ1 ∘ σ2` on `α + j` points, where `σ1` is an
/// `α`-cycle on `{1..α}` and `σ2` an `α`-cycle on `{j+1..j+α}`. Fixed points
/// count as parts equal to one. Sorted in reverse-lexicographic order.
pub fn variance_partition_set(alpha: usize, j: usize) -> Result<Vec<Partition>> {
    if alpha < 2 || j >= alpha {
        return Err(Error::Domain(format!(
            "needs alpha >= 2 and 0 <= j < alpha, got alpha={alpha} j={j}"
        )));
    }
    let points = alpha + j;
    let first: Vec<usize> = (0..alpha).collect();
    let second: Vec<usize> = (j..j + alpha).collect();
    let cycles1 = all_cycles(&first, points);
    let cycles2 = all_cycles(&second, points);
    let mut types = BTreeSet::new();
    for s1 in &cycles1 {
        for s2 in &cycles2 {
            let composed: Vec<usize> = (0..points).map(|p| s1[s2[p]]).collect();
            types.insert(cycle_type(&composed));
        }
    }
    Ok(types.into_iter().rev().collect())
}

/// Every permutation of `0..points` acting as a single cycle on `support` and
/// fixing everything else.
fn all_cycles(support: &[usize], points: usize) -> Vec<Vec<usize>> {
    let (&head, rest) = support.split_first().expect("non-empty support");
    let mut orders = Vec::new();
    let mut rest = rest.to_vec();
    permutations(&mut rest, 0, &mut orders);
    orders
        .into_iter()
        .map(|order| {
            let mut perm: Vec<usize> = (0..points).collect();
            let mut cycle = vec![head];
            cycle.extend(order);
            for w in 0..cycle.len() {
                perm[cycle[w]] = cycle[(w + 1) % cycle.len()];
            }
            perm
        })
        .collect()
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Cycle type of a permutation given in one-line notation.
pub fn cycle_type(perm: &[usize]) -> Partition {
    let mut seen = vec![false; perm.len()];
    let mut lengths = Vec::new();
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut p = start;
        while !seen[p] {
            seen[p] = true;
            p = perm[p];
            len += 1;
        }
        lengths.push(len);
    }
    Partition::from_unsorted(lengths)
}

/// How the variance of `p♯_(α)` was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VarianceMethod {
    Exact,
    MonteCarlo,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VarianceRow {
    pub n: usize,
    pub method: VarianceMethod,
    pub variance: f64,
    /// Bootstrap standard error; `None` for exact rows.
    pub std_error: Option<f64>,
    /// `n^α (1 + n^{α-1} M_{2α-1}(η))`.
    pub bound_term: f64,
    pub ratio: f64,
    /// Polynomial trend fitted to the exact rows, evaluated at `n`.
    pub trend: Option<f64>,
}

/// Monte Carlo part of [`variance_scaling_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct MonteCarloPlan {
    pub ns: Vec<usize>,
    pub trials: usize,
    pub bootstrap: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct VarianceScaling {
    pub alpha: u32,
    pub rows: Vec<VarianceRow>,
    /// Coefficients (constant first) of the degree `2α - 1` polynomial in `n`
    /// fitted to the exact variances; empty if too few exact rows.
    pub trend_coefficients: Vec<f64>,
    /// Largest absolute residual of that fit on the exact rows.
    pub trend_residual: f64,
}

impl VarianceScaling {
    /// `max ratio / min ratio` over the exact rows.
    pub fn exact_ratio_spread(&self) -> f64 {
        let ratios: Vec<f64> = self
            .rows
            .iter()
            .filter(|r| r.method == VarianceMethod::Exact)
            .map(|r| r.ratio)
            .collect();
        let max = ratios.iter().cloned().fold(f64::MIN, f64::max);
        let min = ratios.iter().cloned().fold(f64::MAX, f64::min);
        max / min
    }
}

/// Variance of `p♯_(α)(λ)` under the Schur–Weyl distribution, exactly on
/// `exact_ns` and by Monte Carlo on `plan.ns`, against the scale
/// `n^α (1 + n^{α-1} M_{2α-1})`.
///
/// The exact variance is a polynomial of degree at most `2α - 1` in `n`, so a
/// fit through the exact rows gives a trend the Monte Carlo rows can be
/// compared with.
pub fn variance_scaling_check(
    eta: &Spectrum<f64>,
    alpha: u32,
    exact_ns: &[usize],
    plan: Option<&MonteCarloPlan>,
) -> Result<VarianceScaling> {
    if alpha < 2 {
        return Err(Error::Domain(format!("needs alpha >= 2, got {alpha}")));
    }
    let k = alpha as usize;
    let m_tail = power_sum(eta.probs(), f64::from(2 * alpha - 1))?;
    let bound = |n: usize| {
        let nf = n as f64;
        nf.powi(alpha as i32) * (1.0 + nf.powi(alpha as i32 - 1) * m_tail)
    };
    let mut rows = Vec::new();
    for &n in exact_ns {
        let sw = exact_sw_distribution(eta, n)?;
        let mean = sw.expectation(|l| p_sharp_single_cycle(k, l));
        let second = sw.expectation(|l| p_sharp_single_cycle(k, l).powi(2));
        let variance = (second - mean * mean).max(0.0);
        rows.push(VarianceRow {
            n,
            method: VarianceMethod::Exact,
            variance,
            std_error: None,
            bound_term: bound(n),
            ratio: variance / bound(n),
            trend: None,
        });
    }
    let degree = 2 * k - 1;
    let (coeffs, residual) = if rows.len() > degree {
        let xs: Vec<f64> = rows.iter().map(|r| r.n as f64).collect();
        let ys: Vec<f64> = rows.iter().map(|r| r.variance).collect();
        let coeffs = polyfit(&xs, &ys, degree)?;
        let residual = xs
            .iter()
            .zip(&ys)
            .map(|(&x, &y)| (polyval(&coeffs, x) - y).abs())
            .fold(0.0, f64::max);
        (coeffs, residual)
    } else {
        (Vec::new(), f64::NAN)
    };
    for row in &mut rows {
        if !coeffs.is_empty() {
            row.trend = Some(polyval(&coeffs, row.n as f64));
        }
    }
    if let Some(plan) = plan {
        for (idx, &n) in plan.ns.iter().enumerate() {
            let samples: Vec<f64> = (0..plan.trials)
                .map(|t| {
                    let mut rng = stream_rng(plan.seed ^ (idx as u64) << 40, t as u64);
                    let lambda = sample_sw(eta, n, &mut rng)?;
                    Ok(p_sharp_single_cycle(k, &lambda))
                })
                .collect::<Result<_>>()?;
            let variance = sample_variance(&samples);
            let mut rng = stream_rng(plan.seed ^ 0xB007_5712, idx as u64);
            let std_error = bootstrap_variance_se(&samples, plan.bootstrap, &mut rng);
            rows.push(VarianceRow {
                n,
                method: VarianceMethod::MonteCarlo,
                variance,
                std_error: Some(std_error),
                bound_term: bound(n),
                ratio: variance / bound(n),
                trend: (!coeffs.is_empty()).then(|| polyval(&coeffs, n as f64)),
            });
        }
    }
    Ok(VarianceScaling {
        alpha,
        rows,
        trend_coefficients: coeffs,
        trend_residual: residual,
    })
}

/// Unbiased sample variance.
pub fn sample_variance(xs: &[f64]) -> f64 {
    let n = xs.len() as f64;
    if xs.len() < 2 {
        return 0.0;
    }
    let mean = xs.iter().sum::<f64>() / n;
    xs.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / (n - 1.0)
}

fn bootstrap_variance_se<R: Rng + ?Sized>(xs: &[f64], rounds: usize, rng: &mut R) -> f64 {
    if xs.len() < 2 || rounds < 2 {
        return f64::NAN;
    }
    let mut resample = vec![0.0; xs.len()];
    let stats: Vec<f64> = (0..rounds)
        .map(|_| {
            for slot in resample.iter_mut() {
                *slot = xs[rng.random_range(0..xs.len())];
            }
            sample_variance(&resample)
        })
        .collect();
    sample_variance(&stats).sqrt()
}

/// Least-squares polynomial fit; coefficients constant-term first. The
/// abscissae are rescaled internally to keep the normal equations tame.
pub fn polyfit(xs: &[f64], ys: &[f64], degree: usize) -> Result<Vec<f64>> {
    if xs.len() != ys.len() || xs.len() <= degree {
        return Err(Error::InvalidInput(format!(
            "need more than {degree} points for a degree-{degree} fit, got {}",
            xs.len()
        )));
    }
    let scale = xs.iter().fold(0.0f64, |m, x| m.max(x.abs())).max(1.0);
    let cols = degree + 1;
    let mut ata = vec![vec![0.0; cols]; cols];
    let mut aty = vec![0.0; cols];
    for (&x, &y) in xs.iter().zip(ys) {
        let t = x / scale;
        let powers: Vec<f64> = (0..cols).map(|k| t.powi(k as i32)).collect();
        for r in 0..cols {
            aty[r] += powers[r] * y;
            for c in 0..cols {
                ata[r][c] += powers[r] * powers[c];
            }
        }
    }
    let scaled = solve_linear(ata, aty)?;
    Ok(scaled
        .iter()
        .enumerate()
        .map(|(k, c)| c / scale.powi(k as i32))
        .collect())
}

pub fn polyval(coeffs: &[f64], x: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
}

fn solve_linear(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Result<Vec<f64>> {
    let size = b.len();
    for col in 0..size {
        let pivot = (col..size)
            .max_by(|&r, &s| a[r][col].abs().total_cmp(&a[s][col].abs()))
            .expect("non-empty range");
        if a[pivot][col].abs() < 1e-300 {
            return Err(Error::InvalidInput("singular system".into()));
        }
        a.swap(pivot, col);
        b.swap(pivot, col);
        for r in (col + 1)..size {
            let f = a[r][col] / a[col][col];
            for c in col..size {
                a[r][c] -= f * a[col][c];
            }
            b[r] -= f * b[col];
        }
    }
    let mut x = vec![0.0; size];
    for r in (0..size).rev() {
        let s: f64 = ((r + 1)..size).map(|c| a[r][c] * x[c]).sum();
        x[r] = (b[r] - s) / a[r][r];
    }
    Ok(x)
}

/// `Σ p_i^α ≤ (1 - α(1-α)γ²) d^{1-α}` where `γ` is the total variation
/// distance of `p` from uniform on its `d` entries; `1e-12` relative slack.
pub fn tv_moment_gap_check(p: &[f64], alpha: f64) -> Result<bool> {
    if !(alpha > 0.0 && alpha < 1.0) {
        return Err(Error::Domain(format!("needs 0 < alpha < 1, got {alpha}")));
    }
    let d = p.len() as f64;
    let gamma = 0.5 * p.iter().map(|&x| (x - 1.0 / d).abs()).sum::<f64>();
    let lhs = power_sum(p, alpha)?;
    let cap = d.powf(1.0 - alpha);
    let rhs = (1.0 - alpha * (1.0 - alpha) * gamma * gamma) * cap;
    Ok(lhs <= rhs + 1e-12 * cap)
}

/// Distribution with `j` entries at `1/d + γ/j` and `d - j` entries at
/// `1/d - γ/(d-j)`; requires `j/d ≤ 1 - γ`.
pub fn two_step_distribution(d: usize, j: usize, gamma: f64) -> Result<Vec<f64>> {
    if j == 0 || j >= d {
        return Err(Error::Domain(format!("needs 0 < j < d, got j={j} d={d}")));
    }
    let df = d as f64;
    let low = 1.0 / df - gamma / (df - j as f64);
    if low < -1e-15 || gamma < 0.0 {
        return Err(Error::Domain(format!(
            "gamma = {gamma} too large for j = {j}, d = {d}"
        )));
    }
    let high = 1.0 / df + gamma / j as f64;
    let mut p = vec![low.max(0.0); d];
    for slot in p.iter_mut().take(j) {
        *slot = high;
    }
    Ok(p)
}

/// `Σ x_i log(1/x_i²)` with `0 log(1/0) = 0`.
pub fn p2_objective(x: &[f64]) -> f64 {
    x.iter()
        .filter(|&&v| v != 0.0)
        .map(|&v| -v * (v * v).ln())
        .sum()
}

/// Centers `x` and rescales it onto the sphere `Σ x² = radius²`.
fn project_feasible(x: &mut [f64], radius: f64) {
    let mean = x.iter().sum::<f64>() / x.len() as f64;
    for v in x.iter_mut() {
        *v -= mean;
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if norm > 0.0 {
        for v in x.iter_mut() {
            *v *= radius / norm;
        }
    }
}

/// Random search for the maximum of `Σ x_i log(1/x_i²)` subject to
/// `Σ x_i = 0`, `Σ x_i² ≤ 4`.
///
/// Even-indexed samples are centered standard normals rescaled into the ball.
/// Odd-indexed samples are random two-level points (a block of equal
/// negatives against equal positives, perturbed), which is where the maximum
/// of this objective sits; they make the `√d` growth visible to a finite search.
pub fn p2_bound_check<R: Rng + ?Sized>(d: usize, samples: usize, rng: &mut R) -> Result<f64> {
    if d < 2 {
        return Err(Error::Domain("needs d >= 2".into()));
    }
    let mut best = p2_objective(&vec![0.0; d]);
    let mut x = vec![0.0; d];
    for s in 0..samples {
        if s % 2 == 0 {
            for v in x.iter_mut() {
                *v = rng.sample(StandardNormal);
            }
            let u: f64 = rng.random();
            let radius = if s % 4 == 0 { 2.0 } else { 2.0 * u.powf(1.0 / d as f64) };
            project_feasible(&mut x, radius);
        } else {
            let m = rng.random_range(1..d);
            let ratio: f64 = rng.random_range(0.05..20.0);
            let jitter: f64 = rng.random_range(0.0..0.2);
            for (i, v) in x.iter_mut().enumerate() {
                let base = if i < m { -ratio } else { 1.0 };
                let noise: f64 = rng.sample(StandardNormal);
                *v = base * (1.0 + jitter * noise);
            }
            let radius = 2.0 * rng.random::<f64>().powf(0.1);
            project_feasible(&mut x, radius);
        }
        best = best.max(p2_objective(&x));
    }
    Ok(best)
}

/// `|S_α(η) - S_α(ν)|`, von Neumann at `α = 1`.
pub fn renyi_gap(eta: &Spectrum<f64>, nu: &Spectrum<f64>, alpha: f64) -> Result<f64> {
    Ok((renyi_entropy(eta.probs(), alpha)? - renyi_entropy(nu.probs(), alpha)?).abs())
}

/// `Z(λ) = Σ_{i ≤ d} |λ_i/n - 1/d|`.
pub fn z_statistic(lambda: &Partition, d: usize) -> f64 {
    let n = lambda.size() as f64;
    (0..d)
        .map(|i| (lambda.part(i) as f64 / n - 1.0 / d as f64).abs())
        .sum()
}

/// Items of the power-sum inequality list that fail for `η` at `(α, β)`,
/// with relative slack `tol`. Items whose hypotheses do not hold are skipped.
pub fn moment_bound_violations(eta: &[f64], alpha: f64, beta: f64, tol: f64) -> Vec<&'static str> {
    let d = eta.len() as f64;
    let m = |a: f64| power_sum(eta, a).expect("nonnegative spectrum");
    let le = |a: f64, b: f64| a <= b + tol * a.abs().max(b.abs()).max(1e-300);
    let mut bad = Vec::new();
    let ma = m(alpha);
    if alpha < 1.0 && !(le(1.0, ma) && le(ma, d.powf(1.0 - alpha))) {
        bad.push("(i) alpha<1");
    }
    if alpha > 1.0 && !(le(d.powf(1.0 - alpha), ma) && le(ma, 1.0)) {
        bad.push("(i) alpha>1");
    }
    if alpha > 0.0 && beta >= 0.0 && !le(m(alpha + beta), ma.powf((alpha + beta) / alpha)) {
        bad.push("(ii)");
    }
    if alpha >= 0.0 && !le(m(2.0 * alpha), ma * ma) {
        bad.push("(iii)");
    }
    if alpha > 0.0
        && (0.0..=alpha).contains(&beta)
        && !le(m(alpha - beta), d.powf(beta / alpha) * ma.powf((alpha - beta) / alpha))
    {
        bad.push("(iv)");
    }
    if alpha >= 1.0 && (0.0..=alpha).contains(&beta) {
        if !le(m(alpha + beta), d.powf((alpha - 1.0) * (alpha - beta) / alpha) * ma * ma) {
            bad.push("(v) upper");
        }
        if !le(m(alpha - beta), d.powf(beta) * ma) {
            bad.push("(v) lower");
        }
    }
    bad
}

/// `E[λ_i / n]` under the exact Schur–Weyl distribution, for `i < d`.
pub fn exact_row_means(eta: &Spectrum<f64>, n: usize) -> Result<Vec<f64>> {
    let sw = exact_sw_distribution(eta, n)?;
    let d = eta.dimension();
    Ok((0..d)
        .map(|i| sw.expectation(|l| l.part(i) as f64 / n as f64))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::sampling::{spectrum_integral_lb, spectrum_uniform};
    use crate::scalar::approx_eq;

    #[test]
    fn distance_examples() {
        let p = [0.2, 0.3, 0.5];
        let same = distances(&p, &p);
        assert_eq!((same.tv, same.kl, same.chisq), (0.0, 0.0, 0.0));
        assert_eq!(distances(&[1.0, 0.0], &[0.5, 0.5]).tv, 0.5);
        assert!(approx_eq(distances(&[0.6, 0.4], &[0.5, 0.5]).chisq, 0.04, 1e-12, 0.0));
        let off = distances(&[0.5, 0.5], &[1.0, 0.0]);
        assert!(off.kl.is_infinite() && off.chisq.is_infinite());
        assert!(distances(&[0.6, 0.4], &[0.5, 0.5]).chain_holds(1e-12));
    }

    #[test]
    fn two_point_error_identical_spectra() {
        let u = spectrum_uniform::<f64>(3).unwrap();
        for n in 1..=6 {
            assert!(approx_eq(two_point_error(&u, &u, n).unwrap(), 0.5, 1e-12, 1e-12));
        }
        assert!(two_point_error(&u, &u, 13).is_err());
    }

    #[test]
    fn two_point_error_decreases_with_n() {
        let eta = Spectrum::new(vec![0.9, 0.1]).unwrap();
        let nu = spectrum_uniform::<f64>(2).unwrap();
        let errs: Vec<f64> = (1..=9).map(|n| two_point_error(&eta, &nu, n).unwrap()).collect();
        for w in errs.windows(2) {
            assert!(w[1] <= w[0] + 1e-9, "{errs:?}");
        }
    }

    #[test]
    fn wright_zero_vector() {
        let (total, last) = wright_chisq(&[0.0; 3], 6, 3, 6).unwrap();
        assert_eq!(total, 0.0);
        assert_eq!(last, 0.0);
    }

    #[test]
    fn wright_two_copies_closed_form() {
        // d = 2, x = (t, -t): chi-square of SW at n = 2 is t^4 / 3
        let t = 0.4;
        let (total, _) = wright_chisq(&[t, -t], 2, 2, 10).unwrap();
        assert!(approx_eq(total, t.powi(4) / 3.0, 1e-12, 0.0));
    }

    #[test]
    fn wright_preconditions() {
        assert!(wright_chisq(&[0.5, 0.5], 3, 2, 5).is_err());
        assert!(wright_chisq(&[-1.5, 1.5], 3, 2, 5).is_err());
        assert!(wright_chisq(&[0.5, -0.5], 3, 3, 5).is_err());
        assert!(wright_chisq(&[0.5, -0.5], 3, 2, 15).is_err());
    }

    #[test]
    fn variance_partition_small() {
        let s0 = variance_partition_set(2, 0).unwrap();
        assert!(s0.contains(&partition![1, 1]));
        for alpha in 2..=4 {
            for j in 0..alpha {
                for mu in variance_partition_set(alpha, j).unwrap() {
                    assert_eq!(mu.size(), alpha + j);
                    assert!(mu.length() <= alpha - j);
                }
            }
        }
        assert!(variance_partition_set(1, 0).is_err());
        assert!(variance_partition_set(3, 3).is_err());
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(cycle_type(&[1, 2, 0, 3]), partition![3, 1]);
        assert_eq!(cycle_type(&[0, 1]), partition![1, 1]);
    }

    #[test]
    fn tv_gap_examples() {
        assert!(tv_moment_gap_check(&[0.25; 4], 0.5).unwrap());
        let p = two_step_distribution(10, 3, 0.4).unwrap();
        assert!(approx_eq(p.iter().sum(), 1.0, 1e-12, 0.0));
        assert!(tv_moment_gap_check(&p, 0.5).unwrap());
        assert!(tv_moment_gap_check(&p, 1.5).is_err());
    }

    #[test]
    fn p2_objective_and_search() {
        assert_eq!(p2_objective(&[0.0; 5]), 0.0);
        let best = p2_bound_check(10, 2000, &mut stream_rng(1, 1)).unwrap();
        assert!(best > 0.0 && best <= 16.0 / std::f64::consts::E * 10f64.sqrt());
    }

    #[test]
    fn renyi_gap_examples() {
        let u = spectrum_uniform::<f64>(8).unwrap();
        assert_eq!(renyi_gap(&u, &u, 2.0).unwrap(), 0.0);
        let eta = spectrum_integral_lb(64, 0.2, 2.0).unwrap();
        let u = spectrum_uniform::<f64>(64).unwrap();
        let gap = renyi_gap(&eta, &u, 2.0).unwrap();
        assert!(gap >= (1.0 + 2.0 * 0.2 / 3.0f64).ln());
    }

    #[test]
    fn z_statistic_examples() {
        assert_eq!(z_statistic(&partition![2, 2], 2), 0.0);
        assert!(approx_eq(z_statistic(&partition![4], 2), 1.0, 1e-15, 0.0));
    }

    #[test]
    fn polyfit_recovers_cubic() {
        let xs: Vec<f64> = (1..=8).map(f64::from).collect();
        let ys: Vec<f64> = xs.iter().map(|x| 2.0 - x + 0.5 * x * x * x).collect();
        let c = polyfit(&xs, &ys, 3).unwrap();
        assert!(approx_eq(polyval(&c, 100.0), 2.0 - 100.0 + 0.5e6, 1e-9, 0.0));
    }
}
