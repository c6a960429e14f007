//! Frequency-diverse-array models.
//!
//! Two views of the same array live here. `traditional_af` is the snapshot
//! array factor of the FDA security literature, which appears range-dependent
//! and is kept, clearly labeled, for comparison plots: the range dependence
//! rides on `t - r/c` only, so it travels with the wavefront instead of
//! separating receivers. `synchronized_received_amplitude` tracks one symbol
//! from emission to reception; for receivers at a shared angle the
//! array-factor term is then identical at every range, and a frequency offset
//! is exactly a time-varying phase on the precoder
//! (`equivalent_phase_precoder`).
//!
//! The per-symbol amplitude keeps the signal model at one complex sample per
//! symbol: the common factor `sqrt(P/T_s) * s_n` is stripped, leaving the
//! path gain, the emission-time carrier phase and the array-factor sum.

use num_complex::Complex64;

use crate::channel::LinkBudget;
use crate::error::{Error, Result};
use crate::geometry::{self, ReceiverLocation, UpaGeometry};
use crate::SPEED_OF_LIGHT;

const TAU: f64 = std::f64::consts::TAU;

/// Array geometry plus per-element carrier offsets and the symbol period.
#[derive(Debug, Clone)]
pub struct FdaConfig {
    geometry: UpaGeometry,
    offsets_hz: Vec<f64>,
    symbol_time_s: f64,
}

impl FdaConfig {
    /// Offsets must stay small against the carrier: `max |df_i| <= 1e-3 f0`.
    pub fn new(geometry: UpaGeometry, offsets_hz: Vec<f64>, symbol_time_s: f64) -> Result<Self> {
        if offsets_hz.len() != geometry.n_t() {
            return Err(Error::InvalidFda(format!(
                "offset vector length {} does not match n_t = {}",
                offsets_hz.len(),
                geometry.n_t()
            )));
        }
        let max_off = offsets_hz.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if max_off > 1e-3 * geometry.carrier_hz() {
            return Err(Error::InvalidFda(format!(
                "max |offset| {} exceeds 1e-3 * f0 = {}",
                max_off,
                1e-3 * geometry.carrier_hz()
            )));
        }
        if !(symbol_time_s > 0.0) || !symbol_time_s.is_finite() {
            return Err(Error::InvalidFda(format!(
                "symbol time must be finite and > 0, got {symbol_time_s}"
            )));
        }
        Ok(Self {
            geometry,
            offsets_hz,
            symbol_time_s,
        })
    }

    /// Linear chirp `df_i = (i-1) * slope_hz`, the conventional schedule.
    pub fn linear_chirp(geometry: UpaGeometry, slope_hz: f64, symbol_time_s: f64) -> Result<Self> {
        let offsets = (0..geometry.n_t()).map(|i| i as f64 * slope_hz).collect();
        Self::new(geometry, offsets, symbol_time_s)
    }

    pub fn geometry(&self) -> &UpaGeometry {
        &self.geometry
    }

    pub fn offsets_hz(&self) -> &[f64] {
        &self.offsets_hz
    }

    pub fn symbol_time_s(&self) -> f64 {
        self.symbol_time_s
    }

    /// Same array with all offsets zeroed.
    pub fn without_offsets(&self) -> Self {
        Self {
            geometry: self.geometry.clone(),
            offsets_hz: vec![0.0; self.offsets_hz.len()],
            symbol_time_s: self.symbol_time_s,
        }
    }
}

/// Precoder weights sampled at one instant, normalized to `sum |w_i|^2 = n_t`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrecoderSnapshot {
    weights: Vec<Complex64>,
}

impl PrecoderSnapshot {
    pub fn new(weights: Vec<Complex64>) -> Result<Self> {
        let n_t = weights.len();
        let norm_sq: f64 = weights.iter().map(|w| w.norm_sqr()).sum();
        if n_t == 0 || (norm_sq - n_t as f64).abs() > 1e-9 * n_t as f64 {
            return Err(Error::UnnormalizedPrecoder { norm_sq, n_t });
        }
        Ok(Self { weights })
    }

    pub fn all_one(n_t: usize) -> Self {
        Self {
            weights: vec![Complex64::new(1.0, 0.0); n_t],
        }
    }

    pub fn weights(&self) -> &[Complex64] {
        &self.weights
    }

    pub fn norm_sq(&self) -> f64 {
        self.weights.iter().map(|w| w.norm_sqr()).sum()
    }
}

/// Snapshot array factor of the traditional FDA model with all-one precoding:
///
/// ```text
/// AF(t, theta, r) = sum_i exp{ j 2 pi [ df_i (t - r/c) + (f0 + df_i) i d sin(theta) / c ] }
/// ```
///
/// Along a light cone `t - r/c = const` the value is range-invariant, which
/// is the flaw in reading its range dependence as a security gain.
pub fn traditional_af(cfg: &FdaConfig, t_s: f64, angle_rad: f64, range_m: f64) -> Complex64 {
    let f0 = cfg.geometry().carrier_hz();
    let d = cfg.geometry().spacing_m();
    let retarded = t_s - range_m / SPEED_OF_LIGHT;
    let sin_th = angle_rad.sin();
    cfg.offsets_hz()
        .iter()
        .enumerate()
        .map(|(k, &df)| {
            let i = (k + 1) as f64;
            let phase = TAU * (df * retarded + (f0 + df) * i * d * sin_th / SPEED_OF_LIGHT);
            Complex64::from_polar(1.0, phase)
        })
        .sum()
}

/// Secrecy rate of the traditional snapshot model (unclamped, base 2). Kept
/// only to reproduce the refuted range-security curves; the synchronized
/// model below supersedes it.
pub fn traditional_secrecy_rate(
    cfg: &FdaConfig,
    t_s: f64,
    angle_rad: f64,
    r_b_m: f64,
    r_e_m: f64,
    budget: &LinkBudget,
) -> Result<f64> {
    let f0 = cfg.geometry().carrier_hz();
    let af_b = traditional_af(cfg, t_s, angle_rad, r_b_m).norm_sqr();
    let af_e = traditional_af(cfg, t_s, angle_rad, r_e_m).norm_sqr();
    let alpha_b = crate::channel::path_gain(f0, r_b_m)?;
    let alpha_e = crate::channel::path_gain(f0, r_e_m)?;
    let snr_b = crate::channel::received_snr(budget, af_b, alpha_b);
    let snr_e = crate::channel::received_snr(budget, af_e, alpha_e);
    Ok((1.0 + snr_b).log2() - (1.0 + snr_e).log2())
}

/// Array-factor term of the symbol-synchronized model for symbol `n0`:
///
/// ```text
/// sum_i w_i(n0 Ts) exp{ j 2 pi [ f0 L_p(i, theta)/c - df_i n0 Ts ] }
/// ```
///
/// Range never enters, so receivers sharing an angle see the same value.
pub fn array_factor_term(
    cfg: &FdaConfig,
    precoder: &PrecoderSnapshot,
    symbol_index: i64,
    angle_rad: f64,
) -> Complex64 {
    array_factor_term_opts(cfg, precoder, symbol_index, angle_rad, false)
}

/// [`array_factor_term`] with the second-order `df_i L_p/c` phase retained;
/// the default drops it, and the flag exists to measure the size of that
/// approximation.
pub fn array_factor_term_opts(
    cfg: &FdaConfig,
    precoder: &PrecoderSnapshot,
    symbol_index: i64,
    angle_rad: f64,
    keep_second_order: bool,
) -> Complex64 {
    let geom = cfg.geometry();
    let f0 = geom.carrier_hz();
    let t0 = symbol_index as f64 * cfg.symbol_time_s();
    precoder
        .weights()
        .iter()
        .zip(cfg.offsets_hz())
        .enumerate()
        .map(|(k, (w, &df))| {
            let idx = geom.antenna_index(k + 1).expect("index in range");
            let residual = geometry::farfield_residual(geom, &idx, angle_rad);
            let mut phase = TAU * (f0 * residual / SPEED_OF_LIGHT - df * t0);
            if keep_second_order {
                phase += TAU * df * residual / SPEED_OF_LIGHT;
            }
            w * Complex64::from_polar(1.0, phase)
        })
        .sum()
}

/// Per-symbol received complex amplitude at `loc`, with the common symbol
/// factor stripped: `alpha * exp(-j 2 pi f0 n0 Ts) * array_factor_term`.
pub fn synchronized_received_amplitude(
    cfg: &FdaConfig,
    precoder: &PrecoderSnapshot,
    symbol_index: i64,
    loc: &ReceiverLocation,
    alpha: f64,
) -> Complex64 {
    let t0 = symbol_index as f64 * cfg.symbol_time_s();
    let carrier = Complex64::from_polar(1.0, -TAU * cfg.geometry().carrier_hz() * t0);
    alpha * carrier * array_factor_term(cfg, precoder, symbol_index, loc.angle_rad)
}

/// The FDA/phase-shifter equivalence: offsets fold into the precoder as
/// `w_i(t) -> w_i(t) exp(-j 2 pi df_i t)`. Evaluating the mapped precoder
/// with all offsets zeroed reproduces the offset array symbol by symbol.
pub fn equivalent_phase_precoder(
    cfg: &FdaConfig,
    base: &PrecoderSnapshot,
    t_s: f64,
) -> PrecoderSnapshot {
    let weights = base
        .weights()
        .iter()
        .zip(cfg.offsets_hz())
        .map(|(w, &df)| w * Complex64::from_polar(1.0, -TAU * df * t_s))
        .collect();
    // unit-modulus rotation preserves the norm
    PrecoderSnapshot { weights }
}

/// Cauchy-Schwarz ceiling on the squared array-factor magnitude for a given
/// precoder norm: `n_t * sum |w_i|^2`.
pub fn array_factor_bound_sq(precoder: &PrecoderSnapshot) -> f64 {
    precoder.weights().len() as f64 * precoder.norm_sq()
}

/// Precoder achieving the ceiling for symbol `n0` at `angle_rad`: each weight
/// cancels its element's phase, so the terms add coherently.
pub fn matched_precoder(cfg: &FdaConfig, symbol_index: i64, angle_rad: f64) -> PrecoderSnapshot {
    let geom = cfg.geometry();
    let f0 = geom.carrier_hz();
    let t0 = symbol_index as f64 * cfg.symbol_time_s();
    let weights = cfg
        .offsets_hz()
        .iter()
        .enumerate()
        .map(|(k, &df)| {
            let idx = geom.antenna_index(k + 1).expect("index in range");
            let residual = geometry::farfield_residual(geom, &idx, angle_rad);
            let phase = TAU * (f0 * residual / SPEED_OF_LIGHT - df * t0);
            Complex64::from_polar(1.0, -phase)
        })
        .collect();
    PrecoderSnapshot { weights }
}
