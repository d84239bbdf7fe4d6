//! Partitions, symmetric functions and characters of the symmetric group,
//! weak Schur sampling, and estimators for the von Neumann and Rényi
//! entropies of a quantum state's spectrum.
//!
//! Numeric code is generic over [`Scalar`], implemented for `f32`, `f64` and
//! exact big rationals. The aliases below fix the common choices.

pub mod analysis;
pub mod error;
pub mod estimators;
pub mod oracle;
pub mod partitions;
pub mod sampling;
pub mod scalar;
pub mod symmetric;

pub use error::{Error, Result};
pub use estimators::{EstimateReport, Estimator};
pub use partitions::Partition;
pub use sampling::{Spectrum, SwDistribution, EXACT_REGIME_LIMIT};
pub use scalar::{Real, Scalar};

/// Exact nonnegative counts (dimensions, tableaux, factorials).
pub type BigCount = num_bigint::BigUint;
/// Exact signed integers (character values).
pub type SignedCount = num_bigint::BigInt;
/// Exact rationals.
pub type Rational = num_rational::BigRational;

pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
pub type ExactSpectrum = Spectrum<Rational>;
pub type SwDistribution64 = SwDistribution<f64>;
pub type ExactSwDistribution = SwDistribution<Rational>;
