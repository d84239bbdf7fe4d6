//! Entropy estimators that act on a sampled Young diagram.
//!
//! All logarithms are natural. Empty rows contribute nothing (`0 log 0 = 0`,
//! `0^α = 0`).

use rand::Rng;

use crate::error::{Error, Result};
use crate::partitions::{falling_power_f64, Partition};
use crate::sampling::{sample_sw, Spectrum};
use crate::scalar::Scalar;
use crate::symmetric::{p_sharp_single_cycle, power_sum};

/// Output of a single estimator run.
#[derive(Clone, Debug, PartialEq)]
pub struct EstimateReport {
    /// Entropy in nats; `NaN` when `valid` is false.
    pub entropy_estimate: f64,
    /// Estimated power sum `M̂_α`; `None` for von Neumann.
    pub moment_estimate: Option<f64>,
    pub valid: bool,
    pub n: usize,
    pub d: usize,
    pub alpha: f64,
}

impl EstimateReport {
    pub fn with_dimension(mut self, d: usize) -> Self {
        self.d = d;
        self
    }
}

/// Which estimator to run on a sampled shape.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Estimator {
    /// Plug-in von Neumann entropy of `λ/n`.
    VonNeumann,
    /// Plug-in Rényi entropy of `λ/n` for `α ≠ 1`.
    EydRenyi(f64),
    /// `p♯_(α)(λ) / n^{α̲}` for integral `α ≥ 2`.
    IntegralRenyi(u32),
}

impl Estimator {
    /// Natural choice for an order: the unbiased moment estimator for
    /// integers `α ≥ 2`, plug-in otherwise.
    pub fn for_order(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::Domain(format!("order must be positive, got {alpha}")));
        }
        if alpha == 1.0 {
            Ok(Estimator::VonNeumann)
        } else if alpha.fract() == 0.0 && alpha >= 2.0 && alpha <= u32::MAX as f64 {
            Ok(Estimator::IntegralRenyi(alpha as u32))
        } else {
            Ok(Estimator::EydRenyi(alpha))
        }
    }

    /// Plug-in estimator at the given order (von Neumann at one).
    pub fn plug_in(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::Domain(format!("order must be positive, got {alpha}")));
        }
        Ok(if alpha == 1.0 {
            Estimator::VonNeumann
        } else {
            Estimator::EydRenyi(alpha)
        })
    }

    pub fn order(&self) -> f64 {
        match *self {
            Estimator::VonNeumann => 1.0,
            Estimator::EydRenyi(a) => a,
            Estimator::IntegralRenyi(a) => f64::from(a),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Estimator::VonNeumann => "eyd-von-neumann",
            Estimator::EydRenyi(_) => "eyd-renyi",
            Estimator::IntegralRenyi(_) => "p-sharp",
        }
    }

    pub fn estimate(&self, lambda: &Partition) -> Result<EstimateReport> {
        match *self {
            Estimator::VonNeumann => eyd_von_neumann(lambda),
            Estimator::EydRenyi(a) => eyd_renyi(lambda, a),
            Estimator::IntegralRenyi(a) => integral_renyi_estimate(lambda, a),
        }
    }
}

/// The empirical Young diagram spectrum `λ_i / n`, zero-padded to `pad_to`.
pub fn eyd_distribution<T: Scalar>(
    lambda: &Partition,
    n: usize,
    pad_to: Option<usize>,
) -> Result<Spectrum<T>> {
    if lambda.size() != n {
        return Err(Error::SizeMismatch {
            left: lambda.size(),
            right: n,
        });
    }
    if n == 0 {
        return Err(Error::InvalidInput("empty diagram".into()));
    }
    let total = T::from_usize_exact(n);
    let probs = lambda
        .parts()
        .iter()
        .map(|&p| T::from_usize_exact(p) / total.clone())
        .collect();
    let spectrum = Spectrum::new(probs)?;
    Ok(match pad_to {
        Some(d) => spectrum.padded(d),
        None => spectrum,
    })
}

/// Shannon entropy in nats.
pub fn shannon_entropy(probs: &[f64]) -> f64 {
    probs
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| -p * p.ln())
        .sum()
}

/// Rényi entropy `log(M_α) / (1 - α)`; Shannon entropy at `α = 1`.
pub fn renyi_entropy(probs: &[f64], alpha: f64) -> Result<f64> {
    if alpha == 1.0 {
        return Ok(shannon_entropy(probs));
    }
    let m = power_sum(probs, alpha)?;
    Ok(m.ln() / (1.0 - alpha))
}

fn nonempty(lambda: &Partition) -> Result<usize> {
    match lambda.size() {
        0 => Err(Error::InvalidInput("empty diagram".into())),
        n => Ok(n),
    }
}

/// `Ŝ = Σ (λ_i/n) log(n/λ_i)`.
pub fn eyd_von_neumann(lambda: &Partition) -> Result<EstimateReport> {
    let n = nonempty(lambda)?;
    let nf = n as f64;
    let entropy = lambda
        .parts()
        .iter()
        .map(|&p| {
            let q = p as f64 / nf;
            q * (nf / p as f64).ln()
        })
        .sum();
    Ok(EstimateReport {
        entropy_estimate: entropy,
        moment_estimate: None,
        valid: true,
        n,
        d: lambda.length(),
        alpha: 1.0,
    })
}

/// `log(M̂_α) / (1 - α)` with `M̂_α = Σ (λ_i/n)^α`.
pub fn eyd_renyi(lambda: &Partition, alpha: f64) -> Result<EstimateReport> {
    if alpha == 1.0 {
        return Err(Error::InvalidInput(
            "order 1 is the von Neumann entropy; use eyd_von_neumann".into(),
        ));
    }
    if !(alpha > 0.0) || !alpha.is_finite() {
        return Err(Error::Domain(format!("order must be positive, got {alpha}")));
    }
    let n = nonempty(lambda)?;
    let nf = n as f64;
    let moment: f64 = lambda
        .parts()
        .iter()
        .map(|&p| (p as f64 / nf).powf(alpha))
        .sum();
    Ok(EstimateReport {
        entropy_estimate: moment.ln() / (1.0 - alpha),
        moment_estimate: Some(moment),
        valid: true,
        n,
        d: lambda.length(),
        alpha,
    })
}

/// Unbiased moment estimate `M̂_α = p♯_(α)(λ) / n^{α̲}` and the entropy
/// `log(M̂_α) / (1 - α)`. A nonpositive moment gives `valid = false`.
pub fn integral_renyi_estimate(lambda: &Partition, alpha: u32) -> Result<EstimateReport> {
    if alpha < 2 {
        return Err(Error::Domain(format!(
            "integral estimator needs alpha >= 2, got {alpha}"
        )));
    }
    let n = lambda.size();
    let k = alpha as usize;
    if n < k {
        return Err(Error::InsufficientCopies { n, needed: k });
    }
    let moment = p_sharp_single_cycle(k, lambda) / falling_power_f64(n, k);
    let valid = moment > 0.0;
    let entropy = if valid {
        moment.ln() / (1.0 - f64::from(alpha))
    } else {
        f64::NAN
    };
    Ok(EstimateReport {
        entropy_estimate: entropy,
        moment_estimate: Some(moment),
        valid,
        n,
        d: lambda.length(),
        alpha: f64::from(alpha),
    })
}

/// Median of `repeats` independent runs, each on a fresh shape drawn with `n`
/// copies. Invalid runs are dropped; with an even number of valid runs the two
/// middle values are averaged. All runs invalid gives an invalid report.
pub fn median_amplified_estimate<T: Scalar, R: Rng + ?Sized>(
    eta: &Spectrum<T>,
    n: usize,
    estimator: Estimator,
    repeats: usize,
    rng: &mut R,
) -> Result<EstimateReport> {
    if repeats == 0 || repeats % 2 == 0 {
        return Err(Error::InvalidInput(format!(
            "repeats must be odd, got {repeats}"
        )));
    }
    let mut runs = Vec::with_capacity(repeats);
    for _ in 0..repeats {
        let lambda = sample_sw(eta, n, rng)?;
        runs.push(estimator.estimate(&lambda)?);
    }
    if repeats == 1 {
        return Ok(runs.pop().expect("one run").with_dimension(eta.dimension()));
    }
    let mut entropies: Vec<f64> = runs
        .iter()
        .filter(|r| r.valid)
        .map(|r| r.entropy_estimate)
        .collect();
    let mut moments: Vec<f64> = runs
        .iter()
        .filter(|r| r.valid)
        .filter_map(|r| r.moment_estimate)
        .collect();
    let report = EstimateReport {
        entropy_estimate: median(&mut entropies).unwrap_or(f64::NAN),
        moment_estimate: if matches!(estimator, Estimator::VonNeumann) {
            None
        } else {
            Some(median(&mut moments).unwrap_or(f64::NAN))
        },
        valid: !entropies.is_empty(),
        n,
        d: eta.dimension(),
        alpha: estimator.order(),
    };
    Ok(report)
}

/// Median with the two middle values averaged for even lengths.
pub fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    Some(if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    })
}
