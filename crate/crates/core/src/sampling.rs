//! Spectra, i.i.d. words, the RSK shape of a word, and exact Schur–Weyl
//! distributions for small `n`.
//!
//! Weak Schur sampling is simulated classically: draw `n` symbols i.i.d. from
//! the spectrum and keep the shape of the RSK insertion tableau. By Greene's
//! theorem the first `k` rows of that shape sum to the longest total length of
//! `k` disjoint non-decreasing subsequences of the word.

use std::path::Path;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::partitions::{dim, partitions_of, Partition};
use crate::scalar::{Real, Scalar};
use crate::symmetric::schur_eval;

/// Largest `n` for which [`exact_sw_distribution`] enumerates by default.
pub const EXACT_REGIME_LIMIT: usize = 12;

/// A probability vector over `[d]`. Entries need not be sorted.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T = f64> {
    probs: Vec<T>,
}

impl<T: Scalar> Spectrum<T> {
    /// Nonnegative entries summing to one within [`Scalar::unit_sum_tolerance`].
    pub fn new(probs: Vec<T>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidSpectrum("no entries".into()));
        }
        if let Some(bad) = probs.iter().find(|p| **p < T::zero()) {
            return Err(Error::InvalidSpectrum(format!("negative entry {bad:?}")));
        }
        let total = probs.iter().cloned().fold(T::zero(), |a, b| a + b);
        if (total.clone() - T::one()).abs() > T::unit_sum_tolerance() {
            return Err(Error::InvalidSpectrum(format!(
                "entries sum to {}, expected 1",
                total.to_f64_lossy()
            )));
        }
        Ok(Self { probs })
    }

    pub fn probs(&self) -> &[T] {
        &self.probs
    }

    pub fn dimension(&self) -> usize {
        self.probs.len()
    }

    /// Zero-padded copy with at least `d` entries.
    pub fn padded(&self, d: usize) -> Self {
        let mut probs = self.probs.clone();
        while probs.len() < d {
            probs.push(T::zero());
        }
        Self { probs }
    }

    pub fn to_f64(&self) -> Spectrum<f64> {
        Spectrum {
            probs: self.probs.iter().map(Scalar::to_f64_lossy).collect(),
        }
    }

    /// Same multiset, entries reversed.
    pub fn reversed(&self) -> Self {
        let mut probs = self.probs.clone();
        probs.reverse();
        Self { probs }
    }
}

impl Spectrum<f64> {
    /// Whitespace-separated probabilities. The sum must be within `1e-9` of one;
    /// the result is renormalized.
    pub fn parse_text(text: &str) -> Result<Self> {
        let probs = text
            .split_whitespace()
            .map(|t| {
                t.parse::<f64>()
                    .map_err(|e| Error::InvalidSpectrum(format!("bad entry {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if probs.is_empty() {
            return Err(Error::InvalidSpectrum("no entries".into()));
        }
        if let Some(bad) = probs.iter().find(|p| !p.is_finite() || **p < 0.0) {
            return Err(Error::InvalidSpectrum(format!("invalid entry {bad}")));
        }
        let total: f64 = probs.iter().sum();
        if (total - 1.0).abs() > 1e-9 {
            return Err(Error::InvalidSpectrum(format!(
                "entries sum to {total}, expected 1 within 1e-9"
            )));
        }
        Self::new(probs.into_iter().map(|p| p / total).collect())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidSpectrum(format!("{}: {e}", path.display())))?;
        Self::parse_text(&text)
    }
}

/// `(1/d, ..., 1/d)`, the maximally mixed spectrum.
pub fn spectrum_uniform<T: Scalar>(d: usize) -> Result<Spectrum<T>> {
    if d == 0 {
        return Err(Error::Domain("dimension must be positive".into()));
    }
    let p = T::one() / T::from_usize_exact(d);
    Ok(Spectrum {
        probs: vec![p; d],
    })
}

/// One heavy entry `(1 + (εd)^{1/α}) / d`, the other `d - 1` entries equal to
/// `(1 - (εd)^{1/α}/(d-1)) / d`. Requires `(εd)^{1/α} < d - 1`.
pub fn spectrum_integral_lb<T: Real>(d: usize, eps: T, alpha: T) -> Result<Spectrum<T>> {
    if d < 2 {
        return Err(Error::Domain("needs d >= 2".into()));
    }
    if !(eps >= T::zero()) || !(alpha > T::one()) {
        return Err(Error::Domain(format!(
            "needs eps >= 0 and alpha > 1, got eps={eps:?} alpha={alpha:?}"
        )));
    }
    let df = T::from_usize_exact(d);
    let spike = (eps * df).powf(T::one() / alpha);
    let dm1 = df - T::one();
    if !(spike < dm1) {
        return Err(Error::Domain(format!(
            "(eps d)^(1/alpha) = {spike:?} must be below d - 1 = {d}-1"
        )));
    }
    let head = (T::one() + spike) / df;
    let tail = (T::one() - spike / dm1) / df;
    let mut probs = vec![tail; d];
    probs[0] = head;
    Ok(Spectrum { probs })
}

/// The `(d+1)`-dimensional spectrum with `ν_1 = 1 - ε/d^{1/α-1}` and
/// `ν_i = ε/d^{1/α}` otherwise. Requires `α < 1` and `ε < d^{1/α-1}`.
pub fn spectrum_small_alpha_lb<T: Real>(d: usize, eps: T, alpha: T) -> Result<Spectrum<T>> {
    if d == 0 {
        return Err(Error::Domain("needs d >= 1".into()));
    }
    if !(alpha > T::zero() && alpha < T::one()) || !(eps >= T::zero()) {
        return Err(Error::Domain(format!(
            "needs 0 < alpha < 1 and eps >= 0, got eps={eps:?} alpha={alpha:?}"
        )));
    }
    let df = T::from_usize_exact(d);
    let inv = T::one() / alpha;
    let cap = df.powf(inv - T::one());
    if !(eps < cap) {
        return Err(Error::Domain(format!(
            "eps = {eps:?} must be below d^(1/alpha - 1) = {cap:?}"
        )));
    }
    let head = T::one() - eps / cap;
    let tail = eps / df.powf(inv);
    let mut probs = vec![tail; d + 1];
    probs[0] = head;
    Ok(Spectrum { probs })
}

/// Seeded counter-based generator; stream `stream` of `seed` is independent
/// of every other stream and of scheduling order.
pub fn stream_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

fn symbol_sampler<T: Scalar>(eta: &Spectrum<T>) -> Result<WeightedIndex<f64>> {
    let weights: Vec<f64> = eta.probs.iter().map(Scalar::to_f64_lossy).collect();
    WeightedIndex::new(&weights).map_err(|e| Error::InvalidSpectrum(e.to_string()))
}

/// `n` i.i.d. symbols from `η`, as values in `1..=d`.
pub fn sample_word<T: Scalar, R: Rng + ?Sized>(
    eta: &Spectrum<T>,
    n: usize,
    rng: &mut R,
) -> Result<Vec<u32>> {
    let sampler = symbol_sampler(eta)?;
    Ok((0..n).map(|_| sampler.sample(rng) as u32 + 1).collect())
}

/// Row-insertion state of an RSK insertion tableau; the recording tableau is
/// not kept.
#[derive(Clone, Debug, Default)]
pub struct RowInsertion {
    rows: Vec<Vec<u32>>,
}

impl RowInsertion {
    pub fn new() -> Self {
        Self::default()
    }

    /// Inserts `x`, bumping the leftmost entry strictly greater than it in each row.
    pub fn insert(&mut self, mut x: u32) {
        for row in &mut self.rows {
            let pos = row.partition_point(|&y| y <= x);
            if pos == row.len() {
                row.push(x);
                return;
            }
            std::mem::swap(&mut row[pos], &mut x);
        }
        self.rows.push(vec![x]);
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("insertion rows are weakly decreasing in length")
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

/// Shape of the RSK insertion tableau of `word`.
pub fn rsk_shape(word: &[u32]) -> Partition {
    let mut tableau = RowInsertion::new();
    for &x in word {
        tableau.insert(x);
    }
    tableau.shape()
}

/// One draw from the Schur–Weyl distribution: the RSK shape of an i.i.d. word.
pub fn sample_sw<T: Scalar, R: Rng + ?Sized>(
    eta: &Spectrum<T>,
    n: usize,
    rng: &mut R,
) -> Result<Partition> {
    let sampler = symbol_sampler(eta)?;
    let mut tableau = RowInsertion::new();
    for _ in 0..n {
        tableau.insert(sampler.sample(rng) as u32 + 1);
    }
    Ok(tableau.shape())
}

/// Exact distribution over partitions of `n`: `SW(λ) = dim(λ) s_λ(η)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SwDistribution<T = f64> {
    n: usize,
    d: usize,
    table: Vec<(Partition, T)>,
}

impl<T: Scalar> SwDistribution<T> {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Entries in reverse-lexicographic order of the partitions.
    pub fn entries(&self) -> &[(Partition, T)] {
        &self.table
    }

    /// Zero for partitions absent from the table.
    pub fn probability(&self, lambda: &Partition) -> T {
        self.table
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(T::zero)
    }

    pub fn total(&self) -> T {
        self.table
            .iter()
            .map(|(_, p)| p.clone())
            .fold(T::zero(), |a, b| a + b)
    }

    /// `E[f(λ)]`.
    pub fn expectation<F: FnMut(&Partition) -> T>(&self, mut f: F) -> T {
        self.table
            .iter()
            .map(|(l, p)| p.clone() * f(l))
            .fold(T::zero(), |a, b| a + b)
    }
}

/// [`exact_sw_distribution_with_limit`] at [`EXACT_REGIME_LIMIT`].
pub fn exact_sw_distribution<T: Scalar>(eta: &Spectrum<T>, n: usize) -> Result<SwDistribution<T>> {
    exact_sw_distribution_with_limit(eta, n, EXACT_REGIME_LIMIT)
}

/// Enumerates `λ ⊢ n` with `ℓ(λ) ≤ d`; longer shapes have probability zero and are omitted.
pub fn exact_sw_distribution_with_limit<T: Scalar>(
    eta: &Spectrum<T>,
    n: usize,
    limit: usize,
) -> Result<SwDistribution<T>> {
    if n > limit {
        return Err(Error::Capacity {
            what: "copies n for exact Schur-Weyl enumeration",
            value: n,
            limit,
        });
    }
    let d = eta.dimension();
    let table = partitions_of(n, Some(d))
        .into_iter()
        .map(|lambda| {
            let p = T::from_biguint(&dim(&lambda)) * schur_eval(&lambda, eta.probs());
            (lambda, p)
        })
        .collect();
    Ok(SwDistribution { n, d, table })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::scalar::approx_eq;
    use crate::Rational;
    use num_bigint::BigInt;
    use num_traits::One;

    #[test]
    fn uniform_spectra() {
        assert_eq!(spectrum_uniform::<f64>(1).unwrap().probs(), &[1.0]);
        assert_eq!(spectrum_uniform::<f64>(4).unwrap().probs(), &[0.25; 4]);
        assert!(spectrum_uniform::<f64>(0).is_err());
        let exact = spectrum_uniform::<Rational>(3).unwrap();
        assert_eq!(exact.probs()[0], Rational::new(BigInt::from(1), BigInt::from(3)));
    }

    #[test]
    fn integral_lb_spectrum() {
        let s = spectrum_integral_lb(16, 0.5, 2.0).unwrap();
        assert!(approx_eq(s.probs()[0], (1.0 + 8f64.sqrt()) / 16.0, 1e-15, 0.0));
        assert!(approx_eq(s.probs().iter().sum(), 1.0, 1e-14, 0.0));
        let flat = spectrum_integral_lb(16, 0.0, 2.0).unwrap();
        assert!(flat.probs().iter().all(|&p| p == 1.0 / 16.0));
        assert!(spectrum_integral_lb(4, 3.0, 2.0).is_err());
    }

    #[test]
    fn small_alpha_lb_spectrum() {
        let s = spectrum_small_alpha_lb(4, 0.2, 0.5).unwrap();
        assert_eq!(s.dimension(), 5);
        assert!(approx_eq(s.probs()[0], 0.95, 1e-15, 0.0));
        assert!(s.probs()[1..].iter().all(|&p| p == s.probs()[1]));
        assert!(approx_eq(s.probs().iter().sum(), 1.0, 1e-14, 0.0));
        assert!(spectrum_small_alpha_lb(4, 4.5, 0.5).is_err());
    }

    #[test]
    fn spectrum_validation() {
        assert!(Spectrum::new(vec![0.5, 0.6]).is_err());
        assert!(Spectrum::new(vec![-0.1, 1.1]).is_err());
        assert!(Spectrum::<f64>::new(vec![]).is_err());
        let s = Spectrum::parse_text("0.25 0.25\n0.5").unwrap();
        assert_eq!(s.dimension(), 3);
        assert!(Spectrum::parse_text("0.3 0.3").is_err());
        assert!(Spectrum::parse_text("0.5 abc").is_err());
    }

    #[test]
    fn point_mass_word_is_constant() {
        let eta = Spectrum::new(vec![1.0]).unwrap();
        let mut rng = stream_rng(7, 0);
        assert_eq!(sample_word(&eta, 50, &mut rng).unwrap(), vec![1; 50]);
    }

    #[test]
    fn words_are_seed_deterministic() {
        let eta = Spectrum::new(vec![0.2, 0.3, 0.5]).unwrap();
        let a = sample_word(&eta, 100, &mut stream_rng(11, 3)).unwrap();
        let b = sample_word(&eta, 100, &mut stream_rng(11, 3)).unwrap();
        let c = sample_word(&eta, 100, &mut stream_rng(11, 4)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn empirical_frequencies_concentrate() {
        let probs = vec![0.1, 0.2, 0.3, 0.4];
        let eta = Spectrum::new(probs.clone()).unwrap();
        let n = 100_000;
        let word = sample_word(&eta, n, &mut stream_rng(1, 0)).unwrap();
        for (i, &p) in probs.iter().enumerate() {
            let freq = word.iter().filter(|&&x| x == i as u32 + 1).count() as f64 / n as f64;
            assert!((freq - p).abs() <= 4.0 * (p / n as f64).sqrt(), "symbol {i}: {freq}");
        }
    }

    #[test]
    fn rsk_examples() {
        assert_eq!(rsk_shape(&[1, 1, 2]), partition![3]);
        assert_eq!(rsk_shape(&[2, 1]), partition![1, 1]);
        assert_eq!(rsk_shape(&[1, 2, 1]), partition![2, 1]);
        assert_eq!(rsk_shape(&[3, 2, 1]), partition![1, 1, 1]);
        assert_eq!(rsk_shape(&[]), Partition::empty());
    }

    #[test]
    fn sample_sw_matches_rsk_of_sampled_word() {
        let eta = Spectrum::new(vec![0.5, 0.3, 0.2]).unwrap();
        for t in 0..20 {
            let word = sample_word(&eta, 40, &mut stream_rng(5, t)).unwrap();
            let shape = sample_sw(&eta, 40, &mut stream_rng(5, t)).unwrap();
            assert_eq!(rsk_shape(&word), shape);
        }
        let one = sample_sw(&eta, 1, &mut stream_rng(0, 0)).unwrap();
        assert_eq!(one, partition![1]);
    }

    #[test]
    fn exact_distribution_small_cases() {
        let eta = spectrum_uniform::<f64>(3).unwrap();
        let sw = exact_sw_distribution(&eta, 1).unwrap();
        assert_eq!(sw.entries().len(), 1);
        assert!(approx_eq(sw.probability(&partition![1]), 1.0, 1e-15, 0.0));

        let eta = spectrum_uniform::<Rational>(2).unwrap();
        let sw = exact_sw_distribution(&eta, 2).unwrap();
        assert_eq!(sw.probability(&partition![2]), Rational::new(3.into(), 4.into()));
        assert_eq!(sw.probability(&partition![1, 1]), Rational::new(1.into(), 4.into()));
        assert_eq!(sw.total(), Rational::one());

        let eta = spectrum_uniform::<f64>(2).unwrap();
        let sw = exact_sw_distribution(&eta, 4).unwrap();
        assert!(sw.entries().iter().all(|(l, _)| l.length() <= 2));
        assert_eq!(sw.probability(&partition![2, 1, 1]), 0.0);
    }

    #[test]
    fn exact_distribution_capacity() {
        let eta = spectrum_uniform::<f64>(2).unwrap();
        assert!(matches!(
            exact_sw_distribution(&eta, 13),
            Err(Error::Capacity { .. })
        ));
        assert!(exact_sw_distribution_with_limit(&eta, 13, 13).is_ok());
    }
}
