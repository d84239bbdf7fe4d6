use std::path::PathBuf;
use std::str::FromStr;

use schurweyl_core::sampling::{spectrum_integral_lb, spectrum_small_alpha_lb, spectrum_uniform};
use schurweyl_core::Spectrum;
use thiserror::Error;

/// Invalid command-line or file configuration. Maps to exit code 2.
#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("{0}")]
    Invalid(String),
    #[error("spectrum: {0}")]
    Spectrum(#[from] schurweyl_core::Error),
}

/// Where the true spectrum of an experiment comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum SpectrumSource {
    /// `1/d` everywhere.
    Uniform,
    /// One heavy entry against a flat tail, the integral-order lower-bound pair.
    IntegralLb,
    /// `d + 1` entries: one near one and `d` tiny ones.
    SmallAlphaLb,
    /// Entries proportional to `1/i²`.
    Skewed,
    /// Whitespace-separated probabilities; ignores the `d` grid.
    File(PathBuf),
}

impl FromStr for SpectrumSource {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "uniform" => Self::Uniform,
            "lb-int" => Self::IntegralLb,
            "lb-small" => Self::SmallAlphaLb,
            "skewed" => Self::Skewed,
            "" => return Err(ConfigError::Invalid("empty spectrum name".into())),
            path => Self::File(PathBuf::from(path)),
        })
    }
}

impl std::fmt::Display for SpectrumSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Uniform => f.write_str("uniform"),
            Self::IntegralLb => f.write_str("lb-int"),
            Self::SmallAlphaLb => f.write_str("lb-small"),
            Self::Skewed => f.write_str("skewed"),
            Self::File(p) => write!(f, "{}", p.display()),
        }
    }
}

impl SpectrumSource {
    /// Builds the spectrum for dimension `d`. `eps` and `alpha` parametrize the
    /// lower-bound constructions.
    pub fn build(&self, d: usize, eps: f64, alpha: f64) -> Result<Spectrum, ConfigError> {
        Ok(match self {
            Self::Uniform => spectrum_uniform(d)?,
            Self::IntegralLb => spectrum_integral_lb(d, eps, alpha)?,
            Self::SmallAlphaLb => spectrum_small_alpha_lb(d, eps, alpha)?,
            Self::Skewed => skewed(d)?,
            Self::File(path) => Spectrum::load(path)?,
        })
    }
}

fn skewed(d: usize) -> Result<Spectrum, ConfigError> {
    if d == 0 {
        return Err(ConfigError::Invalid("d must be positive".into()));
    }
    let weights: Vec<f64> = (1..=d).map(|i| 1.0 / (i * i) as f64).collect();
    let total: f64 = weights.iter().sum();
    Ok(Spectrum::new(weights.into_iter().map(|w| w / total).collect())?)
}

/// Settings shared by the experiment commands.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub alpha: f64,
    pub d: Vec<usize>,
    pub n: Vec<usize>,
    pub eps: f64,
    /// Parameter of the lower-bound spectrum constructions; defaults to `eps`.
    pub spectrum_eps: Option<f64>,
    pub trials: usize,
    pub seed: u64,
    pub spectrum: SpectrumSource,
    pub out: Option<PathBuf>,
    /// Median-of-`repeats` amplification per trial (odd).
    pub repeats: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            alpha: 2.0,
            d: vec![8],
            n: vec![1000],
            eps: 0.2,
            spectrum_eps: None,
            trials: 200,
            seed: 1,
            spectrum: SpectrumSource::Uniform,
            out: None,
            repeats: 1,
        }
    }
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(ConfigError::Invalid(format!("alpha must be positive, got {}", self.alpha)));
        }
        if self.d.is_empty() || self.d.contains(&0) {
            return Err(ConfigError::Invalid("d grid must be nonempty and positive".into()));
        }
        if self.n.is_empty() || self.n.contains(&0) {
            return Err(ConfigError::Invalid("n grid must be nonempty and positive".into()));
        }
        if !(self.eps > 0.0 && self.eps.is_finite()) {
            return Err(ConfigError::Invalid(format!("eps must be positive, got {}", self.eps)));
        }
        if self.trials == 0 {
            return Err(ConfigError::Invalid("trials must be at least 1".into()));
        }
        if self.repeats % 2 == 0 {
            return Err(ConfigError::Invalid(format!("repeats must be odd, got {}", self.repeats)));
        }
        Ok(())
    }

    pub fn spectrum_for(&self, d: usize) -> Result<Spectrum, ConfigError> {
        self.spectrum
            .build(d, self.spectrum_eps.unwrap_or(self.eps), self.alpha)
    }

    /// `key=value` lines echoed into CSV metadata. Thread counts are left out so
    /// output does not depend on them.
    pub fn metadata(&self) -> Vec<String> {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        let mut lines = vec![
            format!("alpha={}", self.alpha),
            format!("d={}", join(&self.d)),
            format!("n={}", join(&self.n)),
            format!("eps={}", self.eps),
            format!("trials={}", self.trials),
            format!("seed={}", self.seed),
            format!("spectrum={}", self.spectrum),
            format!("repeats={}", self.repeats),
        ];
        if let Some(e) = self.spectrum_eps {
            lines.push(format!("spectrum_eps={e}"));
        }
        lines
    }
}

/// Parses `8,16,32` or a doubling range `8..64`.
pub fn parse_grid(s: &str) -> Result<Vec<usize>, ConfigError> {
    let bad = || ConfigError::Invalid(format!("bad grid {s:?}"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo == 0 || hi < lo {
            return Err(bad());
        }
        let mut grid = Vec::new();
        let mut v = lo;
        while v <= hi {
            grid.push(v);
            v *= 2;
        }
        return Ok(grid);
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grids() {
        assert_eq!(parse_grid("8,16,32").unwrap(), vec![8, 16, 32]);
        assert_eq!(parse_grid("8..64").unwrap(), vec![8, 16, 32, 64]);
        assert!(parse_grid("a").is_err());
        assert!(parse_grid("9..3").is_err());
    }

    #[test]
    fn spectrum_names() {
        assert_eq!("uniform".parse::<SpectrumSource>().unwrap(), SpectrumSource::Uniform);
        assert_eq!(
            "x.txt".parse::<SpectrumSource>().unwrap(),
            SpectrumSource::File("x.txt".into())
        );
        let s = SpectrumSource::Skewed.build(3, 0.1, 2.0).unwrap();
        assert!(s.probs()[0] > s.probs()[2]);
    }

    #[test]
    fn validation() {
        let mut c = ExperimentConfig::default();
        assert!(c.validate().is_ok());
        c.trials = 0;
        assert!(c.validate().is_err());
        let c = ExperimentConfig { eps: -1.0, ..Default::default() };
        assert!(c.validate().is_err());
        let c = ExperimentConfig { repeats: 2, ..Default::default() };
        assert!(c.validate().is_err());
    }
}
