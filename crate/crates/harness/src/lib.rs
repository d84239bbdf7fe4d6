//! Experiment driver for `schurweyl-core`: seeded single estimates,
//! copy-complexity sweeps, two-point lower-bound curves and a self-test
//! battery, all writing CSV.

pub mod checks;
pub mod config;
pub mod experiments;
pub mod output;
pub mod selftest;
pub mod stats;

pub use config::{ConfigError, ExperimentConfig, SpectrumSource};
