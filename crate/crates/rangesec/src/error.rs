//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("antenna index {index} out of range 1..={n_t}")]
    IndexOutOfRange { index: usize, n_t: usize },

    #[error("invalid receiver location: {0}")]
    InvalidLocation(String),

    #[error("{name} must be positive, got {value}")]
    NonPositive { name: &'static str, value: f64 },

    #[error("invalid link budget: {0}")]
    InvalidBudget(String),

    #[error("invalid FDA configuration: {0}")]
    InvalidFda(String),

    #[error("beamformer squared norm {norm_sq} deviates from 1 by more than 1e-9")]
    UnnormalizedBeamformer { norm_sq: f64 },

    #[error("precoder squared norm {norm_sq} deviates from n_t = {n_t} beyond tolerance")]
    UnnormalizedPrecoder { norm_sq: f64, n_t: usize },

    #[error("snr must be non-negative, got {0}")]
    NegativeSnr(f64),

    #[error("zero vector passed to {0}")]
    ZeroVector(&'static str),

    #[error(
        "hybrid decomposition infeasible: {count} entries exceed sqrt(2/n_t) \
         (first offenders: {first:?})"
    )]
    Infeasible { count: usize, first: Vec<usize> },

    #[error("invalid optimizer configuration: {0}")]
    InvalidOptimizer(String),

    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
